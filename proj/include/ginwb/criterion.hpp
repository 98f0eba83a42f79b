#pragma once

#include <vector>

#include "ginwb/coord_change.hpp"
#include "ginwb/linalg.hpp"
#include "ginwb/polynomial.hpp"

namespace ginwb {

/// The n x n matrix of coefficients of the n revlex-greatest degree-d
/// monomials in the transformed forms, together with its determinant. A
/// nonzero determinant at a specialization certifies that the degree-d piece
/// of the generic initial ideal is the revlex segment.
struct CoefficientMatrix {
    RatMatrix entries;
    Rat delta;
};

/// entries(i, j) = coefficient of the (j+1)-th revlex degree-d monomial in
/// forms[i] transformed by C
CoefficientMatrix coefficient_matrix(const std::vector<Polynomial>& forms,
                                     const CoordinateChange& C);

/// n x N matrix of the input forms in the full degree-d monomial basis
/// (columns in revlex-descending order); forms[i] = sum_k B(i,k) u_k
RatMatrix coefficient_rows(const std::vector<Polynomial>& forms);

/// N x n matrix whose (k, l) entry is the coefficient of the (l+1)-th revlex
/// monomial in the transform of the (k+1)-th revlex monomial, by direct
/// expansion
RatMatrix transform_coefficients(int n, int d, const CoordinateChange& C);

/// The same (k, l) coefficient through the closed multinomial formula: a sum
/// over tuples of multi-indices t_1..t_n with |t_i| = alpha_k[i] and
/// sum t_i = alpha_l of iterated binomials times prod_i c_i^{t_i}.
/// Enumeration prunes partial sums that exceed the target multi-index.
/// Indices are 0-based positions in the revlex-descending degree-d list.
Rat transform_coefficient_formula(int k, int l, const CoordinateChange& C, int n, int d);

/// sum over n-element index subsets of products of the two n x n minors;
/// equals det(B * G)
Rat cauchy_binet_delta(const RatMatrix& B, const RatMatrix& G);

struct SpecializationRatios {
    /// observed constants r_l with column l equal to r_l times column 0 after
    /// collapsing every column of C onto its first; positive integers, but no
    /// closed form is asserted
    std::vector<Rat> ratios;
    bool all_determined;
};

struct Lemma17Report {
    /// first column of the coefficient matrix, which must equal each form
    /// evaluated at the first column of C
    std::vector<Rat> first_column;
    SpecializationRatios specialization;
};

/// Verifies both identities and returns the data; a violation raises
/// ErrorKind::check_failure (it signals an extraction bug, not bad input).
Lemma17Report lemma17_checks(const std::vector<Polynomial>& forms, const CoordinateChange& C);

} // namespace ginwb
