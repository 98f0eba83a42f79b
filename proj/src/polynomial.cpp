#include "ginwb/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

namespace ginwb {

Polynomial::Polynomial(int arity) : arity_(arity) {
    if (arity < 1 || arity > kMaxArity)
        throw invalid_argument("arity must be between 1 and " + std::to_string(kMaxArity));
}

Polynomial Polynomial::constant(int arity, Rat value) {
    Polynomial p(arity);
    if (value != 0) p.terms_.push_back({Monomial::one(arity), std::move(value)});
    return p;
}

Polynomial Polynomial::from_monomial(const Monomial& m, Rat coeff) {
    Polynomial p(m.arity());
    if (coeff != 0) p.terms_.push_back({m, std::move(coeff)});
    return p;
}

Polynomial Polynomial::from_terms(int arity, std::vector<Term> terms) {
    Polynomial p(arity);
    std::unordered_map<std::uint64_t, Rat> acc;
    acc.reserve(terms.size());
    for (auto& t : terms) {
        if (t.mono.arity() != arity)
            throw arity_mismatch("term arity does not match polynomial arity");
        acc[t.mono.packed()] += t.coeff;
    }
    p.terms_.reserve(acc.size());
    for (auto& [bits, c] : acc)
        if (c != 0) p.terms_.push_back({Monomial::from_packed(bits, arity), std::move(c)});
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return revlex_greater(a.mono, b.mono); });
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw Error(ErrorKind::zero_polynomial, "zero polynomial has no leading monomial");
    return terms_.front().mono;
}

const Rat& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw Error(ErrorKind::zero_polynomial, "zero polynomial has no leading coefficient");
    return terms_.front().coeff;
}

Rat Polynomial::coefficient_of(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) {
                                   return revlex_greater(t.mono, key);
                               });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Rat(0);
}

void Polynomial::require_same_arity(const Polynomial& other) const {
    if (arity_ != other.arity_)
        throw arity_mismatch("polynomials have different arity (" + std::to_string(arity_) +
                             " vs " + std::to_string(other.arity_) + ")");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    require_same_arity(other);
    Polynomial r(arity_);
    r.terms_.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() && b != other.terms_.end()) {
        switch (revlex_compare(a->mono, b->mono)) {
        case Ordering::greater:
            r.terms_.push_back(*a++);
            break;
        case Ordering::less:
            r.terms_.push_back(*b++);
            break;
        case Ordering::equal: {
            Rat c = a->coeff + b->coeff;
            if (c != 0) r.terms_.push_back({a->mono, std::move(c)});
            ++a;
            ++b;
            break;
        }
        }
    }
    r.terms_.insert(r.terms_.end(), a, terms_.end());
    r.terms_.insert(r.terms_.end(), b, other.terms_.end());
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(arity_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Rat& scalar) const {
    Polynomial r(arity_);
    if (scalar == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * scalar});
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rat& coeff) const {
    Polynomial r(arity_);
    if (coeff == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono.times(m), t.coeff * coeff});
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_same_arity(other);
    // accumulate keyed by the packed exponents, then sort once
    std::unordered_map<std::uint64_t, Rat> acc;
    acc.reserve(terms_.size() * other.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : other.terms_) acc[a.mono.times(b.mono).packed()] += a.coeff * b.coeff;
    Polynomial r(arity_);
    r.terms_.reserve(acc.size());
    for (auto& [bits, c] : acc)
        if (c != 0) r.terms_.push_back({Monomial::from_packed(bits, arity_), std::move(c)});
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& x, const Term& y) { return revlex_greater(x.mono, y.mono); });
    return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (arity_ != other.arity_ || terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == other.terms_[i].mono) || terms_[i].coeff != other.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::monic() const {
    const Rat& lc = leading_coefficient();
    Polynomial r(arity_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff / lc});
    return r;
}

Polynomial Polynomial::substitute_zero(std::span<const int> vars) const {
    Polynomial r(arity_);
    for (const auto& t : terms_) {
        bool vanishes = false;
        for (int v : vars) {
            if (v < 0 || v >= arity_) throw invalid_argument("variable index out of range");
            if (t.mono.exponent(v) > 0) {
                vanishes = true;
                break;
            }
        }
        if (!vanishes) r.terms_.push_back(t);
    }
    return r;
}

Rat Polynomial::evaluate(std::span<const Rat> point) const {
    if (static_cast<int>(point.size()) != arity_)
        throw arity_mismatch("evaluation point has wrong arity");
    Rat total(0);
    for (const auto& t : terms_) {
        Rat v = t.coeff;
        for (int i = 0; i < arity_; ++i) {
            for (int e = 0; e < t.mono.exponent(i); ++e) v *= point[static_cast<std::size_t>(i)];
        }
        total += v;
    }
    return total;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        Rat c = t.coeff;
        bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) s += "-";
            first = false;
        } else {
            s += negative ? " - " : " + ";
        }
        bool unit = (c == 1) && !t.mono.is_one();
        if (!unit) {
            s += rat_str(c);
            if (!t.mono.is_one()) s += ' ';
        }
        if (!t.mono.is_one()) s += t.mono.str();
    }
    return s;
}

} // namespace ginwb
