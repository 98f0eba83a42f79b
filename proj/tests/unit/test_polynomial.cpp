#include <doctest.h>

#include "ginwb/parser.hpp"
#include "ginwb/polynomial.hpp"

using namespace ginwb;

namespace {
Polynomial P(const std::string& text, int arity) { return parse_polynomial(text, arity); }
} // namespace

TEST_CASE("ring arithmetic basics") {
    Polynomial f = P("x1 + x2", 2);
    Polynomial g = P("x1 - x2", 2);
    CHECK(f * g == P("x1^2 - x2^2", 2));
    CHECK((f + f * Rat(-1)).is_zero());
    CHECK(f - f == Polynomial::zero(2));
    CHECK((f * Rat(0)).is_zero());
    CHECK(P("2 x1", 2) * P("1/2", 2) == P("x1", 2));
}

TEST_CASE("substituting zero kills exactly the terms that use the variable") {
    // c12 x1^2 + x1 x2 with x2 = x3 = x4 = 0 keeps only the pure-x1 term
    Polynomial f = P("5/7 x1^2 + x1 x2", 4);
    std::vector<int> vars{1, 2, 3};
    CHECK(f.substitute_zero(vars) == P("5/7 x1^2", 4));
    CHECK(P("x2 x3", 4).substitute_zero(vars).is_zero());
}

TEST_CASE("leading monomial under revlex") {
    Polynomial f = P("3 x1^2 + x1 x2", 4);
    CHECK(f.leading_monomial() == Monomial::variable(4, 0, 2));
    CHECK(f.leading_coefficient() == 3);
    CHECK(P("x2^2 + x1 x3", 4).leading_monomial() == Monomial::variable(4, 1, 2));
    CHECK(P("x4^9", 4).leading_monomial() == Monomial::variable(4, 3, 9));
    CHECK_THROWS_AS(Polynomial::zero(2).leading_monomial(), Error);
}

TEST_CASE("homogeneity and degree") {
    CHECK(P("x1^2 + x2 x3", 3).is_homogeneous());
    CHECK(!P("x1^2 + x2", 3).is_homogeneous());
    CHECK(P("x1^2 + x2", 3).degree() == 2);
    CHECK(Polynomial::zero(3).degree() == -1);
    CHECK(Polynomial::zero(3).is_homogeneous());
}

TEST_CASE("evaluation") {
    Polynomial f = P("x1^2 + 2 x1 x2", 2);
    std::vector<Rat> point{Rat(3), Rat(1, 2)};
    CHECK(f.evaluate(point) == Rat(12)); // 9 + 2*3*(1/2)
}

TEST_CASE("coefficient lookup and monic") {
    Polynomial f = P("4 x1^2 - 2 x2^2", 2);
    CHECK(f.coefficient_of(Monomial::variable(2, 0, 2)) == 4);
    CHECK(f.coefficient_of(Monomial::variable(2, 1, 2)) == -2);
    CHECK(f.coefficient_of(Monomial::variable(2, 0, 1)) == 0);
    CHECK(f.monic() == P("x1^2 - 1/2 x2^2", 2));
}

TEST_CASE("text form uses the input grammar") {
    Polynomial f = P("x1^2 + 3/2 x2 x3 - x4^2", 4);
    CHECK(f.str() == "x1^2 + 3/2 x2 x3 - x4^2");
    CHECK(parse_polynomial(f.str(), 4) == f);
    CHECK(Polynomial::zero(2).str() == "0");
    CHECK(P("-x1", 2).str() == "-x1");
}
