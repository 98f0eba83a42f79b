#include "ginwb/reconstructor.hpp"

#include <algorithm>

#include "ginwb/lefschetz.hpp"

namespace ginwb {

bool lefschetz_feasible(const ReconstructionState& state, const Monomial& candidate) {
    int n = state.n;
    int k = state.degree;
    int b_max = candidate.exponent(n - 1);
    for (int b = 1; b <= b_max; ++b) {
        Monomial cofactor = Monomial::variable(n, n - 1, b).quotient_of(candidate);
        if (state.ideal.contains(cofactor)) continue; // already zero in the quotient
        if (state.dimensions.at(k - b) <= state.dimensions.at(k)) return false;
    }
    return true;
}

namespace {

struct Search {
    int n;
    int d;
    int bound;
    HilbertTable dims;
    std::vector<MonomialIdeal> completed;

    // enumerate Borel-closed subsets of `candidates` (revlex descending) of
    // exactly `needed` elements; the moves m -> m*x_i/x_j with i < j point to
    // revlex-greater monomials, so each candidate may be included only when
    // every move landing in the candidate list was included before it
    void choose(const std::vector<Monomial>& candidates, std::size_t pos, int needed,
                std::vector<bool>& chosen, const std::vector<Monomial>& gens,
                const std::vector<Monomial>& piece, int degree) {
        if (needed == 0) {
            std::vector<Monomial> next_gens = gens;
            std::vector<Monomial> next_piece = piece;
            for (std::size_t i = 0; i < candidates.size(); ++i)
                if (chosen[i]) {
                    next_gens.push_back(candidates[i]);
                    next_piece.push_back(candidates[i]);
                }
            descend(std::move(next_gens), std::move(next_piece), degree + 1);
            return;
        }
        if (candidates.size() - pos < static_cast<std::size_t>(needed)) return;
        // include candidates[pos] if its Borel moves allow it
        bool can_include = true;
        const Monomial& m = candidates[pos];
        for (int j = 1; j < n && can_include; ++j) {
            if (m.exponent(j) == 0) continue;
            for (int i = 0; i < j && can_include; ++i) {
                Monomial up = Monomial::variable(n, j).quotient_of(m.times_variable(i));
                auto it = std::lower_bound(candidates.begin(), candidates.end(), up,
                                           revlex_greater);
                if (it != candidates.end() && *it == up) {
                    std::size_t idx = static_cast<std::size_t>(it - candidates.begin());
                    if (!chosen[idx]) can_include = false;
                } // otherwise the move lands in the shadow, which is fine
            }
        }
        if (can_include) {
            chosen[pos] = true;
            choose(candidates, pos + 1, needed - 1, chosen, gens, piece, degree);
            chosen[pos] = false;
        }
        choose(candidates, pos + 1, needed, chosen, gens, piece, degree);
    }

    void descend(std::vector<Monomial> gens, std::vector<Monomial> piece, int degree) {
        if (degree > bound) {
            completed.emplace_back(n, std::move(gens), bound);
            return;
        }
        std::vector<Monomial> shad = shadow(piece, n);
        std::int64_t target = binomial(degree + n - 1, n - 1) - dims.at(degree);
        std::int64_t deficit = target - static_cast<std::int64_t>(shad.size());
        if (deficit < 0) return; // overshoot: dead branch
        if (deficit == 0) {
            descend(std::move(gens), std::move(shad), degree + 1);
            return;
        }
        ReconstructionState state{n, d, degree, MonomialIdeal(n, gens), dims};
        std::vector<Monomial> candidates;
        for (const auto& m : enumerate_degree_monomials(n, degree)) {
            if (state.ideal.contains(m)) continue;
            if (!lefschetz_feasible(state, m)) continue;
            candidates.push_back(m);
        }
        if (static_cast<std::int64_t>(candidates.size()) < deficit) return;
        std::vector<bool> chosen(candidates.size(), false);
        choose(candidates, 0, static_cast<int>(deficit), chosen, gens, shad, degree);
    }
};

} // namespace

std::vector<MonomialIdeal> reconstruct(int n, int d, const ReconstructionOptions& options) {
    if (n < 2 || n > kMaxArity) throw invalid_argument("n must be between 2 and 8");
    if (d < 2) throw invalid_argument("d must be at least 2");
    int bound = n * (d - 1) + 1;
    if (bound > kMaxExponent) throw invalid_argument("n(d-1)+1 exceeds the supported degree range");

    std::vector<Monomial> initial;
    if (options.initial) {
        initial = *options.initial;
        if (static_cast<int>(initial.size()) != n)
            throw invalid_argument("initial set must contain exactly n monomials");
        for (const auto& m : initial)
            if (m.arity() != n || m.degree() != d)
                throw invalid_argument("initial set must consist of degree-d monomials");
        MonomialIdeal seed(n, initial);
        if (seed.min_generators().size() != initial.size() || !is_strongly_stable(seed))
            throw invalid_argument("initial set must be strongly stable without repetitions");
    } else {
        std::vector<Monomial> all = enumerate_degree_monomials(n, d);
        initial.assign(all.begin(), all.begin() + n);
    }

    Search search{n, d, bound, ci_hilbert_table(n, d), {}};
    std::sort(initial.begin(), initial.end(), revlex_greater);
    search.descend(initial, initial, d + 1);

    if (search.completed.empty())
        throw Error(ErrorKind::infeasible_state,
                    "no generator selection meets the Hilbert deficits: the initial set is "
                    "inconsistent");

    // full verification gate
    std::vector<MonomialIdeal> verified;
    HilbertTable expected = ci_hilbert_table(n, d);
    for (auto& ideal : search.completed) {
        if (!same_hilbert_function(hilbert_from_ideal(ideal, bound), expected)) continue;
        if (!is_strongly_stable(ideal)) continue;
        GradedQuotient quotient = GradedQuotient::from_monomial_ideal(ideal);
        if (!check_lefschetz(quotient, LefschetzKind::strong).holds) continue;
        verified.push_back(std::move(ideal));
    }

    // canonical order and deduplication: at the first generator difference the
    // ideal with the revlex-greater generator comes first
    auto ideal_before = [](const MonomialIdeal& a, const MonomialIdeal& b) {
        const auto& ga = a.min_generators();
        const auto& gb = b.min_generators();
        for (std::size_t i = 0; i < std::min(ga.size(), gb.size()); ++i) {
            if (ga[i] == gb[i]) continue;
            return generator_order(ga[i], gb[i]);
        }
        return ga.size() < gb.size();
    };
    std::sort(verified.begin(), verified.end(), ideal_before);
    verified.erase(std::unique(verified.begin(), verified.end()), verified.end());
    return verified;
}

} // namespace ginwb
