#include <doctest.h>

#include "ginwb/gin.hpp"
#include "ginwb/groebner.hpp"
#include "ginwb/parser.hpp"
#include "ginwb/rng.hpp"
#include "support/oracle.hpp"

using namespace ginwb;
using oracle::monomial_list;

namespace {

Polynomial P(const std::string& text, int arity) { return parse_polynomial(text, arity); }

std::vector<Polynomial> forms(const std::string& text, int arity) {
    return parse_forms(text, arity).first;
}

std::vector<Polynomial> random_homogeneous(SplitMix64& rng, int n, int count, int max_degree) {
    std::vector<Polynomial> out;
    for (int i = 0; i < count; ++i) {
        int d = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_degree));
        std::vector<Term> terms;
        for (const auto& m : enumerate_degree_monomials(n, d))
            if (rng.next() % 3 != 0) terms.push_back({m, Rat(rng.next_in_range(-6, 6))});
        Polynomial p = Polynomial::from_terms(n, std::move(terms));
        if (!p.is_zero()) out.push_back(std::move(p));
    }
    return out;
}

} // namespace

TEST_CASE("normal form") {
    GroebnerBasis G = buchberger_truncated(forms("x1^2; x1 x2", 2), 6);
    CHECK(normal_form(P("x1^2", 2), G).is_zero());
    CHECK(normal_form(P("x2^3", 2), G) == P("x2^3", 2)); // no leading term divides
    CHECK_THROWS_AS(normal_form(P("x1^7", 2), G), Error);

    // one division step by hand: x1^2 x2 + x2^3 minus x2 (x1^2 - x2^2) = 2 x2^3
    GroebnerBasis H = buchberger_truncated({P("x1^2 - x2^2", 2)}, 4);
    CHECK(normal_form(P("x1^2 x2 + x2^3", 2), H) == P("2 x2^3", 2));
}

TEST_CASE("normal form certificate writes f as a combination plus remainder") {
    SplitMix64 rng(41);
    for (int iter = 0; iter < 20; ++iter) {
        int n = 2 + static_cast<int>(rng.next() % 2);
        auto gens = random_homogeneous(rng, n, 2, 3);
        if (gens.empty()) continue;
        GroebnerBasis G = buchberger_truncated(gens, 7);
        auto test_polys = random_homogeneous(rng, n, 1, 6);
        if (test_polys.empty()) continue;
        auto [remainder, cofactors] = normal_form_with_certificate(test_polys[0], G);
        Polynomial recombined = remainder;
        for (std::size_t i = 0; i < cofactors.size(); ++i)
            recombined = recombined + cofactors[i] * G.generators()[i];
        CHECK(recombined == test_polys[0]);
        // membership soundness: a combination of the generators reduces to zero
        Polynomial member = Polynomial::zero(n);
        for (const auto& g : G.generators()) member = member + g.times_term(Monomial::one(n), Rat(2));
        if (member.degree() <= G.degree_bound() && member.is_homogeneous())
            CHECK(normal_form(member, G).is_zero());
    }
}

TEST_CASE("buchberger on monomial and principal inputs") {
    GroebnerBasis mono_basis = buchberger_truncated(forms("x1^2; x2^2", 2), 5);
    CHECK(initial_ideal(mono_basis).min_generators() == monomial_list("x1^2; x2^2", 2));

    GroebnerBasis single = buchberger_truncated({P("3 x1 x2 + x3^2", 3)}, 5);
    CHECK(single.generators().size() == 1);
    CHECK(single.generators()[0].leading_coefficient() == 1);
    CHECK(initial_ideal(single).min_generators() == monomial_list("x1 x2", 3));

    CHECK_THROWS_AS(buchberger_truncated({}, 4), Error);
    CHECK_THROWS_AS(buchberger_truncated({P("x1 + 1", 2)}, 4), Error);
}

TEST_CASE("the n=2 pair acquires x2^3, confirmed by the Macaulay oracle") {
    auto gens = forms("x1^2 + x2^2; x1 x2", 2);
    MonomialIdeal expected = oracle::macaulay_initial_ideal(gens, 4);
    CHECK(expected.min_generators() == monomial_list("x1^2; x1 x2; x2^3", 2));
    GroebnerBasis G = buchberger_truncated(gens, 4);
    CHECK(initial_ideal(G) == expected);
}

TEST_CASE("buchberger agrees with the Macaulay oracle on random ideals") {
    SplitMix64 rng(43);
    int checked = 0;
    for (int iter = 0; iter < 30; ++iter) {
        int n = 2 + static_cast<int>(rng.next() % 2);
        auto gens = random_homogeneous(rng, n, 2 + static_cast<int>(rng.next() % 2), 3);
        if (gens.empty()) continue;
        int bound = 6;
        GroebnerBasis G = buchberger_truncated(gens, bound);
        MonomialIdeal fast = initial_ideal(G);
        MonomialIdeal slow = oracle::macaulay_initial_ideal(gens, bound);
        CHECK(fast == slow);
        ++checked;
    }
    CHECK(checked >= 20);
}

TEST_CASE("truncation consistency: a larger bound never changes low degrees") {
    auto gens = forms("x1^2 + x2 x3; x2^2 - x1 x3; x3^2", 3);
    MonomialIdeal small = initial_ideal(buchberger_truncated(gens, 4));
    MonomialIdeal large = initial_ideal(buchberger_truncated(gens, 7));
    for (const auto& g : small.min_generators())
        CHECK(large.contains(g));
    for (const auto& g : large.min_generators())
        if (g.degree() <= 4) CHECK(small.contains(g));
}

TEST_CASE("initial-ideal Hilbert function is invariant under coordinate changes") {
    auto gens = forms("x1^2 + x2 x3; x2^2 - x1 x3; x3^2 + x1 x2", 3);
    int bound = 7;
    auto h0 = hilbert_from_ideal(initial_ideal(buchberger_truncated(gens, bound)), bound);
    for (std::uint64_t seed : {1u, 2u}) {
        CoordinateChange C = random_change(3, seed, 50);
        std::vector<Polynomial> moved;
        for (const auto& g : gens) moved.push_back(C.apply(g));
        auto h = hilbert_from_ideal(initial_ideal(buchberger_truncated(moved, bound)), bound);
        CHECK(same_hilbert_function(h, h0));
    }
}
