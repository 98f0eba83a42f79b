#include "ginwb/monomial.hpp"

namespace ginwb {

Ordering revlex_compare(const Monomial& u, const Monomial& v) {
    u.require_same_arity(v);
    if (u.degree() != v.degree())
        return u.degree() < v.degree() ? Ordering::less : Ordering::greater;
    for (int i = u.arity() - 1; i >= 0; --i) {
        int du = u.exponent(i);
        int dv = v.exponent(i);
        if (du != dv) return du > dv ? Ordering::less : Ordering::greater;
    }
    return Ordering::equal;
}

namespace {

void enumerate_rec(int arity, int var, int remaining, std::array<int, kMaxArity>& exps,
                   std::vector<Monomial>& out) {
    if (var == 0) {
        exps[0] = remaining;
        out.push_back(Monomial::from_exponents(std::span<const int>(exps.data(),
                                                                    static_cast<std::size_t>(arity))));
        return;
    }
    // ascending exponent of the last variable yields descending revlex
    for (int e = 0; e <= remaining; ++e) {
        exps[static_cast<std::size_t>(var)] = e;
        enumerate_rec(arity, var - 1, remaining - e, exps, out);
    }
    exps[static_cast<std::size_t>(var)] = 0;
}

} // namespace

std::vector<Monomial> enumerate_degree_monomials(int arity, int degree) {
    if (arity < 1 || arity > kMaxArity)
        throw invalid_argument("arity must be between 1 and " + std::to_string(kMaxArity));
    if (degree < 0 || degree > kMaxExponent)
        throw invalid_argument("degree out of range [0, 255]");
    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(monomial_count(arity, degree)));
    std::array<int, kMaxArity> exps{};
    enumerate_rec(arity, arity - 1, degree, exps, out);
    return out;
}

std::int64_t binomial(std::int64_t a, std::int64_t b) {
    if (b < 0 || a < b) return 0;
    b = std::min(b, a - b);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        r = r * (a - b + i) / i; // exact at each step: r is C(a-b+i, i)
    }
    return r;
}

std::int64_t monomial_count(int arity, int degree) {
    return binomial(degree + arity - 1, arity - 1);
}

std::string Monomial::str() const {
    if (degree_ == 0) return "1";
    std::string s;
    for (int i = 0; i < arity_; ++i) {
        int e = exps_[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (!s.empty()) s += ' ';
        s += 'x';
        s += std::to_string(i + 1);
        if (e > 1) {
            s += '^';
            s += std::to_string(e);
        }
    }
    return s;
}

} // namespace ginwb
