#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ginwb/monomial.hpp"
#include "ginwb/rational.hpp"

namespace ginwb {

struct Term {
    Monomial mono;
    Rat coeff;
};

/// Sparse polynomial with exact rational coefficients. Terms are kept sorted
/// in strictly decreasing revlex order with no zero coefficients, so the
/// leading monomial is terms().front() and reduction scans are ordered.
class Polynomial {
public:
    explicit Polynomial(int arity);

    static Polynomial zero(int arity) { return Polynomial(arity); }
    static Polynomial constant(int arity, Rat value);
    static Polynomial from_monomial(const Monomial& m, Rat coeff = 1);
    static Polynomial from_terms(int arity, std::vector<Term> terms); // normalizes

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }

    /// max degree over terms; -1 for the zero polynomial
    int degree() const;
    bool is_homogeneous() const;

    const Monomial& leading_monomial() const; // throws on zero
    const Rat& leading_coefficient() const;   // throws on zero

    Rat coefficient_of(const Monomial& m) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rat& scalar) const;
    bool operator==(const Polynomial& other) const;

    Polynomial times_term(const Monomial& m, const Rat& coeff) const;
    Polynomial monic() const; // divide by leading coefficient; throws on zero

    /// substitute 0 for every variable whose index appears in vars
    Polynomial substitute_zero(std::span<const int> vars) const;

    Rat evaluate(std::span<const Rat> point) const;

    std::string str() const;

private:
    void require_same_arity(const Polynomial& other) const;

    int arity_;
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Rat& scalar, const Polynomial& p) { return p * scalar; }

} // namespace ginwb
