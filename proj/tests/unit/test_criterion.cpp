#include <doctest.h>

#include "ginwb/criterion.hpp"
#include "ginwb/gin.hpp"
#include "ginwb/parser.hpp"
#include "ginwb/rng.hpp"

using namespace ginwb;

namespace {
std::vector<Polynomial> forms(const std::string& text, int arity) {
    return parse_forms(text, arity).first;
}

RatMatrix random_rat_matrix(SplitMix64& rng, int rows, int cols) {
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = Rat(rng.next_in_range(-5, 5));
    return m;
}
} // namespace

TEST_CASE("coefficient matrix at the identity and degenerate inputs") {
    // the first n revlex monomials as forms give the identity matrix
    auto monomials = enumerate_degree_monomials(3, 2);
    std::vector<Polynomial> segment;
    for (int i = 0; i < 3; ++i) segment.push_back(Polynomial::from_monomial(monomials[i]));
    CoefficientMatrix A = coefficient_matrix(segment, CoordinateChange::identity(3));
    CHECK(A.entries == RatMatrix::identity(3));
    CHECK(A.delta == 1);

    // repeated rows force a zero determinant
    auto dup = forms("x1^2 + x2^2; x1^2 + x2^2; x3^2", 3);
    CHECK(coefficient_matrix(dup, random_change(3, 3, 10)).delta == 0);
}

TEST_CASE("pure powers certify the segment at a random specialization") {
    auto gens = forms("x1^3; x2^3; x3^3", 3);
    CoordinateChange C = random_change(3, 42, 100);
    CoefficientMatrix A = coefficient_matrix(gens, C);
    CHECK(A.delta != 0);
    // a_11 = c_11^d and the quoted g-values below pin the conventions
    CHECK(A.entries.at(0, 0) == C.entry(0, 0) * C.entry(0, 0) * C.entry(0, 0));
}

TEST_CASE("closed formula for the transform coefficients") {
    int n = 3, d = 3;
    CoordinateChange C = random_change(n, 9, 20);
    auto monomials = enumerate_degree_monomials(n, d);
    int N = static_cast<int>(monomials.size());

    // identity change fixes every monomial
    CoordinateChange id = CoordinateChange::identity(n);
    for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l)
            CHECK(transform_coefficient_formula(k, l, id, n, d) == (k == l ? 1 : 0));

    // g_{11} = c_11^d
    CHECK(transform_coefficient_formula(0, 0, C, n, d) ==
          C.entry(0, 0) * C.entry(0, 0) * C.entry(0, 0));
    // u_{k_2} = x2^d, u_2 = x1^(d-1) x2: coefficient d * c_21^(d-1) * c_22
    int k2 = static_cast<int>(binomial(2 + d - 1, d)) - 1;
    CHECK(monomials[static_cast<std::size_t>(k2)] == Monomial::variable(n, 1, d));
    CHECK(transform_coefficient_formula(k2, 1, C, n, d) ==
          Rat(d) * C.entry(1, 0) * C.entry(1, 0) * C.entry(1, 1));

    // full agreement with direct expansion
    RatMatrix G = transform_coefficients(n, d, C);
    for (int k = 0; k < N; ++k)
        for (int l = 0; l < n; ++l)
            CHECK(transform_coefficient_formula(k, l, C, n, d) == G.at(k, l));
}

TEST_CASE("matrix factorization a = B G, column by column") {
    auto gens = forms("x1^2 + 2 x2 x3 - x3^2; x2^2 - x1 x3; 3 x3^2 + x1 x2", 3);
    CoordinateChange C = random_change(3, 17, 30);
    CoefficientMatrix A = coefficient_matrix(gens, C);
    RatMatrix B = coefficient_rows(gens);
    RatMatrix G = transform_coefficients(3, 2, C);
    RatMatrix product = B * G;
    CHECK(product == A.entries);
}

TEST_CASE("Cauchy-Binet expansion equals det(B G)") {
    SplitMix64 rng(71);
    // the square case collapses to det(B) det(G)
    RatMatrix B0 = random_rat_matrix(rng, 3, 3);
    RatMatrix G0 = random_rat_matrix(rng, 3, 3);
    CHECK(cauchy_binet_delta(B0, G0) == determinant(B0) * determinant(G0));

    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + static_cast<int>(rng.next() % 3);
        int N = n + static_cast<int>(rng.next() % (13 - n));
        RatMatrix B = random_rat_matrix(rng, n, N);
        RatMatrix G = random_rat_matrix(rng, N, n);
        CHECK(cauchy_binet_delta(B, G) == determinant(B * G));
    }
}

TEST_CASE("the two delta routes agree on real input") {
    auto gens = forms("x1^2; x2^2", 2);
    CoordinateChange C = random_change(2, 5, 40);
    CoefficientMatrix A = coefficient_matrix(gens, C);
    RatMatrix B = coefficient_rows(gens);
    RatMatrix G = transform_coefficients(2, 2, C);
    CHECK(cauchy_binet_delta(B, G) == A.delta);
}

TEST_CASE("the non-regular triple never certifies: delta is identically zero there") {
    // under the triangular kind no transform of (x1^2, x1 x2, x1 x3) reaches
    // x2^2, so the third column of the coefficient matrix stays zero
    auto gens = forms("x1^2; x1 x2; x1 x3", 3);
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        CoordinateChange C = random_change(3, seed, 100, ChangeKind::triangular);
        CHECK(coefficient_matrix(gens, C).delta == 0);
    }
}

TEST_CASE("first-column evaluation and the collapse ratios") {
    auto gens = forms("x1^2; x2^2", 2);
    CoordinateChange C = random_change(2, 13, 25);
    Lemma17Report report = lemma17_checks(gens, C);
    CHECK(report.first_column[0] == C.entry(0, 0) * C.entry(0, 0));
    CHECK(report.first_column[1] == C.entry(1, 0) * C.entry(1, 0));
    REQUIRE(report.specialization.ratios.size() == 2);
    CHECK(report.specialization.ratios[0] == 1);
    CHECK(report.specialization.ratios[1] == 2); // (c x1 + c x2)^2: x1 x2 carries twice x1^2

    SplitMix64 rng(83);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 2 + static_cast<int>(rng.next() % 2);
        int d = 2 + static_cast<int>(rng.next() % 2);
        std::vector<Polynomial> random_forms;
        for (int i = 0; i < n; ++i) {
            std::vector<Term> terms;
            for (const auto& m : enumerate_degree_monomials(n, d))
                terms.push_back({m, Rat(rng.next_in_range(-4, 4))});
            Polynomial f = Polynomial::from_terms(n, std::move(terms));
            if (f.is_zero()) f = Polynomial::from_monomial(Monomial::variable(n, i, d));
            random_forms.push_back(std::move(f));
        }
        CoordinateChange D = random_change(n, rng.next(), 20);
        Lemma17Report r = lemma17_checks(random_forms, D);
        CHECK(r.specialization.ratios.front() == 1);
        for (const auto& ratio : r.specialization.ratios)
            if (ratio != 0) CHECK(is_integer(ratio));
    }
}
