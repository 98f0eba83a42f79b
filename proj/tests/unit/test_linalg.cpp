#include <doctest.h>

#include "ginwb/linalg.hpp"
#include "ginwb/rng.hpp"
#include "support/oracle.hpp"

using namespace ginwb;

namespace {

RatMatrix random_matrix(SplitMix64& rng, int rows, int cols, int denominators = 1) {
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            long num = rng.next_in_range(-9, 9);
            long den = denominators > 1 ? rng.next_in_range(1, denominators) : 1;
            Rat q(num, den);
            q.canonicalize();
            m.at(i, j) = q;
        }
    return m;
}

// low-rank by construction: product of thin factors
RatMatrix rank_deficient(SplitMix64& rng, int n, int inner) {
    return random_matrix(rng, n, inner) * random_matrix(rng, inner, n);
}

} // namespace

TEST_CASE("determinant: tiny closed forms") {
    RatMatrix m(2, 2);
    m.at(0, 0) = 3;
    m.at(0, 1) = Rat(1, 2);
    m.at(1, 0) = -2;
    m.at(1, 1) = 5;
    CHECK(determinant(m) == Rat(16));
    CHECK(determinant(RatMatrix::identity(4)) == 1);
    RatMatrix z(3, 3);
    CHECK(determinant(z) == 0);
}

TEST_CASE("fraction-free rank agrees with Gaussian rank") {
    SplitMix64 rng(17);
    for (int iter = 0; iter < 120; ++iter) {
        int rows = 1 + static_cast<int>(rng.next() % 7);
        int cols = 1 + static_cast<int>(rng.next() % 7);
        RatMatrix m = random_matrix(rng, rows, cols, 4);
        CHECK(rank(m) == oracle::rank_gauss(m));
    }
    for (int iter = 0; iter < 60; ++iter) {
        int n = 2 + static_cast<int>(rng.next() % 5);
        int inner = 1 + static_cast<int>(rng.next() % n);
        RatMatrix m = rank_deficient(rng, n, inner);
        CHECK(rank(m) == oracle::rank_gauss(m));
        CHECK(rank(m) <= inner);
    }
}

TEST_CASE("inverse round-trips and detects singularity") {
    SplitMix64 rng(23);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 1 + static_cast<int>(rng.next() % 5);
        RatMatrix m = random_matrix(rng, n, n, 3);
        auto inv = inverse(m);
        if (determinant(m) == 0) {
            CHECK(!inv.has_value());
        } else {
            REQUIRE(inv.has_value());
            CHECK(m * *inv == RatMatrix::identity(n));
        }
    }
}
