#pragma once

#include <span>
#include <vector>

#include "ginwb/monomial_ideal.hpp"
#include "ginwb/polynomial.hpp"

namespace ginwb {

/// A degree-truncated Groebner basis for the revlex order: every S-polynomial
/// of degree <= degree_bound reduces to zero, generators are monic and
/// inter-reduced (no leading monomial divides another).
class GroebnerBasis {
public:
    const std::vector<Polynomial>& generators() const { return gens_; }
    int arity() const { return arity_; }
    int degree_bound() const { return degree_bound_; }
    std::span<const std::uint64_t> leading_packed() const { return lm_packed_; }
    const Monomial& leading(std::size_t i) const { return gens_[i].leading_monomial(); }

private:
    friend GroebnerBasis buchberger_truncated(std::vector<Polynomial> gens, int bound);

    GroebnerBasis(int arity, int bound) : arity_(arity), degree_bound_(bound) {}

    int arity_;
    int degree_bound_;
    std::vector<Polynomial> gens_;
    std::vector<std::uint64_t> lm_packed_;
};

/// Remainder of f on division by G: no term of the result is divisible by a
/// leading monomial of G, and f - result lies in the ideal of G.
/// Throws when deg f exceeds the basis degree bound.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

/// Like normal_form, also returning the cofactors q such that
/// f = sum_i q[i] * G.generators()[i] + remainder (exactly).
std::pair<Polynomial, std::vector<Polynomial>> normal_form_with_certificate(
    const Polynomial& f, const GroebnerBasis& G);

/// Buchberger's algorithm for homogeneous input, processing S-pairs in
/// increasing degree and discarding everything above the bound, so leading
/// monomials of the result generate the initial ideal in all degrees <= bound.
GroebnerBasis buchberger_truncated(std::vector<Polynomial> gens, int bound);

/// minimal monomial generators of the leading-term ideal (all of degree <= bound)
MonomialIdeal initial_ideal(const GroebnerBasis& G);

} // namespace ginwb
