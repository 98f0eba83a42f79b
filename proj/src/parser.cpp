#include "ginwb/parser.hpp"

#include <cctype>

namespace ginwb {

namespace {

class Cursor {
public:
    Cursor(std::string_view text, int line, int column)
        : text_(text), line_(line), column_(column) {}

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) advance();
    }

    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool accept(char c) {
        skip_ws();
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    long parse_uint(const char* what) {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1000000000L) fail("number too large");
            advance();
        }
        return v;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(line_, column_, message);
    }

private:
    void advance() {
        ++pos_;
        ++column_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_;
    int column_;
};

// term := [rational] factor*; returns false when the cursor sits on a term
// separator / end instead of a term
Term parse_term(Cursor& cur, int arity) {
    Rat coeff(1);
    bool have_coeff = false;
    cur.skip_ws();
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        long num = cur.parse_uint("coefficient");
        long den = 1;
        if (cur.accept('/')) {
            den = cur.parse_uint("denominator");
            if (den == 0) cur.fail("zero denominator");
        }
        coeff = Rat(num, den);
        coeff.canonicalize();
        have_coeff = true;
    }
    Monomial mono = Monomial::one(arity);
    bool have_factor = false;
    while (true) {
        cur.skip_ws();
        if (cur.peek() != 'x') break;
        cur.accept('x');
        long index = cur.parse_uint("variable index");
        if (index < 1 || index > arity)
            cur.fail("variable index x" + std::to_string(index) + " out of range (arity " +
                     std::to_string(arity) + ")");
        long exp = 1;
        if (cur.accept('^')) exp = cur.parse_uint("exponent");
        if (exp > kMaxExponent) cur.fail("exponent too large (max 255)");
        mono = mono.times_variable(static_cast<int>(index) - 1, static_cast<int>(exp));
        have_factor = true;
    }
    if (!have_coeff && !have_factor) cur.fail("expected a term");
    return {mono, coeff};
}

} // namespace

Polynomial parse_polynomial(std::string_view text, int arity, int line, int column) {
    Cursor cur(text, line, column);
    std::vector<Term> terms;
    bool negative = false;
    if (cur.accept('-'))
        negative = true;
    else
        cur.accept('+');
    while (true) {
        Term t = parse_term(cur, arity);
        if (negative) t.coeff = -t.coeff;
        terms.push_back(std::move(t));
        if (cur.done()) break;
        if (cur.accept('+'))
            negative = false;
        else if (cur.accept('-'))
            negative = true;
        else
            cur.fail("expected '+' or '-' between terms");
    }
    return Polynomial::from_terms(arity, std::move(terms));
}

namespace {

struct Unit {
    std::string_view text;
    int line;
    int column;
};

std::vector<Unit> split_units(std::string_view text) {
    std::vector<Unit> units;
    int line = 1, column = 1;
    std::size_t start = 0;
    int start_line = 1, start_column = 1;
    auto flush = [&](std::size_t end) {
        std::string_view u = text.substr(start, end - start);
        // skip units that are entirely whitespace
        bool blank = true;
        for (char c : u)
            if (c != ' ' && c != '\t' && c != '\r') blank = false;
        if (!blank) units.push_back({u, start_line, start_column});
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == ';' || c == '\n') {
            flush(i);
            if (c == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
            start = i + 1;
            start_line = line;
            start_column = column;
        } else {
            ++column;
        }
    }
    flush(text.size());
    return units;
}

int scan_max_index(std::string_view text) {
    int max_index = 0;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] != 'x') continue;
        std::size_t j = i + 1;
        long v = 0;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
            v = v * 10 + (text[j] - '0');
            if (v > 1000) break;
            ++j;
        }
        if (j > i + 1) max_index = std::max(max_index, static_cast<int>(v));
    }
    return max_index;
}

} // namespace

std::pair<std::vector<Polynomial>, int> parse_forms(std::string_view text,
                                                    std::optional<int> arity) {
    int n;
    if (arity) {
        n = *arity;
        if (n < 1 || n > kMaxArity)
            throw invalid_argument("arity must be between 1 and " + std::to_string(kMaxArity));
    } else {
        n = scan_max_index(text);
        if (n < 1) throw ParseError(1, 1, "no variables found; cannot infer arity");
        if (n > kMaxArity)
            throw ParseError(1, 1, "variable index " + std::to_string(n) +
                                       " exceeds the supported arity " + std::to_string(kMaxArity));
    }
    std::vector<Polynomial> forms;
    for (const Unit& u : split_units(text))
        forms.push_back(parse_polynomial(u.text, n, u.line, u.column));
    if (forms.empty()) throw ParseError(1, 1, "no polynomials in input");
    return {std::move(forms), n};
}

} // namespace ginwb
