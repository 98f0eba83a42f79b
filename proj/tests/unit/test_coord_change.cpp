#include <doctest.h>

#include "ginwb/coord_change.hpp"
#include "ginwb/gin.hpp"
#include "ginwb/parser.hpp"
#include "ginwb/rng.hpp"

using namespace ginwb;

namespace {
Polynomial P(const std::string& text, int arity) { return parse_polynomial(text, arity); }
} // namespace

TEST_CASE("triangular substitution sends x2 to x2 plus a multiple of x1") {
    // rows: (1,0,0), (c,1,0), (a,b,1): image of x2 is c x1 + x2
    RatMatrix m = RatMatrix::identity(3);
    m.at(1, 0) = Rat(5, 3);
    m.at(2, 0) = Rat(-2);
    m.at(2, 1) = Rat(7);
    CoordinateChange C(m, ChangeKind::triangular);

    CHECK(C.apply(P("x1 x2", 3)) == P("5/3 x1^2 + x1 x2", 3));
    CHECK(C.apply(P("x1 x3", 3)) == P("-2 x1^2 + 7 x1 x2 + x1 x3", 3));
    CHECK(C.determinant() == 1);
}

TEST_CASE("identity substitution is the identity") {
    CoordinateChange id = CoordinateChange::identity(4);
    Polynomial f = P("x1^2 + 3/2 x2 x3 - x4^2", 4);
    CHECK(id.apply(f) == f);
}

TEST_CASE("inverse change undoes the substitution exactly") {
    SplitMix64 rng(31);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 2 + static_cast<int>(rng.next() % 3);
        CoordinateChange C = random_change(n, rng.next(), 6);
        std::vector<Term> terms;
        auto monomials = enumerate_degree_monomials(n, 2 + static_cast<int>(rng.next() % 2));
        for (const auto& m : monomials)
            if (rng.next() % 2) terms.push_back({m, Rat(rng.next_in_range(-5, 5))});
        Polynomial f = Polynomial::from_terms(n, std::move(terms));
        Polynomial g = C.apply(f);
        CHECK(C.inverse().apply(g) == f);
        // degree and homogeneity are preserved
        CHECK(g.degree() == f.degree());
        CHECK(g.is_homogeneous() == f.is_homogeneous());
    }
}

TEST_CASE("construction rejects singular and malformed matrices") {
    RatMatrix sing(2, 2);
    sing.at(0, 0) = 1;
    sing.at(0, 1) = 2;
    sing.at(1, 0) = 2;
    sing.at(1, 1) = 4;
    CHECK_THROWS_AS((void)CoordinateChange(sing, ChangeKind::general), Error);

    RatMatrix bad = RatMatrix::identity(2);
    bad.at(0, 1) = 3; // upper entry not allowed for the triangular kind
    CHECK_THROWS_AS((void)CoordinateChange(bad, ChangeKind::triangular), Error);
}

TEST_CASE("random_change is deterministic and invertible") {
    CoordinateChange a = random_change(4, 99, 10);
    CoordinateChange b = random_change(4, 99, 10);
    CHECK(a.entries() == b.entries());
    CHECK(a.determinant() != 0);

    CoordinateChange t = random_change(3, 5, 10, ChangeKind::triangular);
    for (int i = 0; i < 3; ++i) {
        CHECK(t.entry(i, i) == 1);
        for (int j = i + 1; j < 3; ++j) CHECK(t.entry(i, j) == 0);
    }
    CHECK(t.determinant() == 1);
}
