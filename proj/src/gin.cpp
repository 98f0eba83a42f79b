#include "ginwb/gin.hpp"

#include "ginwb/rng.hpp"

namespace ginwb {

CoordinateChange random_change(int n, std::uint64_t seed, long coeff_bound, ChangeKind kind) {
    if (coeff_bound < 2) throw invalid_argument("coeff_bound must be at least 2");
    SplitMix64 rng(seed);
    while (true) {
        RatMatrix m(n, n);
        if (kind == ChangeKind::triangular) {
            for (int i = 0; i < n; ++i) {
                m.at(i, i) = 1;
                for (int j = 0; j < i; ++j)
                    m.at(i, j) = Rat(rng.next_in_range(-coeff_bound, coeff_bound));
            }
        } else {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    m.at(i, j) = Rat(rng.next_in_range(-coeff_bound, coeff_bound));
        }
        if (determinant(m) != 0) return CoordinateChange(std::move(m), kind);
        // singular draw: resample (terminates with probability 1)
    }
}

GinResult compute_gin(const std::vector<Polynomial>& gens, const GinOptions& options) {
    if (gens.empty()) throw invalid_argument("compute_gin requires at least one generator");
    if (options.trials < 1) throw invalid_argument("trials must be at least 1");
    int n = gens.front().arity();
    int max_deg = 0;
    bool equigenerated = true;
    for (const auto& g : gens) {
        if (g.arity() != n) throw arity_mismatch("generators have mixed arity");
        if (g.is_zero() || !g.is_homogeneous())
            throw invalid_argument("compute_gin requires nonzero homogeneous generators");
        if (g.degree() != gens.front().degree()) equigenerated = false;
        max_deg = std::max(max_deg, g.degree());
    }
    int bound;
    if (options.degree_bound) {
        bound = *options.degree_bound;
        if (bound < max_deg) throw invalid_argument("degree bound is below a generator degree");
    } else if (equigenerated) {
        bound = n * (gens.front().degree() - 1) + 1; // one past the (n,d) socle
    } else {
        throw invalid_argument(
            "generators of mixed degrees need an explicit degree bound");
    }

    std::vector<std::uint64_t> seeds;
    std::vector<MonomialIdeal> trial_ideals;
    seeds.reserve(static_cast<std::size_t>(options.trials));
    for (int t = 0; t < options.trials; ++t) {
        std::uint64_t trial_seed = options.seed + static_cast<std::uint64_t>(t);
        seeds.push_back(trial_seed);
        CoordinateChange change = random_change(n, trial_seed, options.coeff_bound, options.kind);
        std::vector<Polynomial> transformed;
        transformed.reserve(gens.size());
        for (const auto& g : gens) transformed.push_back(change.apply(g));
        GroebnerBasis basis = buchberger_truncated(std::move(transformed), bound);
        trial_ideals.push_back(initial_ideal(basis));
    }

    for (std::size_t t = 1; t < trial_ideals.size(); ++t)
        if (!(trial_ideals[t] == trial_ideals[0]))
            throw DisagreementError(std::move(trial_ideals), std::move(seeds));

    GinResult result{std::move(trial_ideals[0]),
                     options.trials,
                     std::move(seeds),
                     true,
                     false,
                     HilbertTable{}};
    result.borel = is_strongly_stable(result.ideal);
    result.hilbert = hilbert_from_ideal(result.ideal, bound);

    if (options.expect_ci) {
        if (!equigenerated || static_cast<int>(gens.size()) != n)
            throw invalid_argument(
                "expect_ci requires n forms of one degree in n variables");
        HilbertTable expected = ci_hilbert_table(n, gens.front().degree());
        if (!same_hilbert_function(result.hilbert, expected)) {
            int k = 0;
            while (result.hilbert.at(k) == expected.at(k)) ++k;
            throw Error(ErrorKind::not_regular_sequence,
                        "quotient Hilbert function deviates from the complete intersection "
                        "series at degree " +
                            std::to_string(k) + " (got " + std::to_string(result.hilbert.at(k)) +
                            ", expected " + std::to_string(expected.at(k)) +
                            "): the input is not a regular sequence");
        }
    }
    return result;
}

} // namespace ginwb
