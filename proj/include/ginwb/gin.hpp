#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ginwb/coord_change.hpp"
#include "ginwb/groebner.hpp"
#include "ginwb/hilbert.hpp"
#include "ginwb/monomial_ideal.hpp"

namespace ginwb {

struct GinOptions {
    int trials = 3;
    std::uint64_t seed = 42;
    long coeff_bound = 10000;
    std::optional<int> degree_bound; // default n(d-1)+1 for n-variable degree-d input
    ChangeKind kind = ChangeKind::general;
    bool expect_ci = false; // validate the quotient against the (n,d) product series
};

struct GinResult {
    MonomialIdeal ideal;
    int trials_used;
    std::vector<std::uint64_t> seeds;
    bool agreed;
    bool borel;
    HilbertTable hilbert;
};

/// Thrown when independent random specializations produce different initial
/// ideals; retry with a larger coefficient bound or more trials.
class DisagreementError : public Error {
public:
    DisagreementError(std::vector<MonomialIdeal> trial_ideals, std::vector<std::uint64_t> seeds)
        : Error(ErrorKind::disagreement_across_trials,
                "random specializations disagree on the initial ideal; raise the "
                "coefficient bound or the number of trials"),
          trial_ideals_(std::move(trial_ideals)),
          seeds_(std::move(seeds)) {}

    const std::vector<MonomialIdeal>& trial_ideals() const { return trial_ideals_; }
    const std::vector<std::uint64_t>& seeds() const { return seeds_; }

private:
    std::vector<MonomialIdeal> trial_ideals_;
    std::vector<std::uint64_t> seeds_;
};

/// Random invertible change of coordinates, deterministic in the seed.
/// General kind: entries uniform in [-coeff_bound, coeff_bound], resampled
/// until the determinant is nonzero. Triangular kind: unit diagonal with
/// random entries below it, so the image of x_i adds earlier variables.
CoordinateChange random_change(int n, std::uint64_t seed, long coeff_bound,
                               ChangeKind kind = ChangeKind::general);

/// Generic initial ideal by random specialization: each trial transforms the
/// generators by an independent random change, runs truncated Buchberger and
/// extracts the initial ideal. All trials must agree (DisagreementError
/// otherwise); the consensus ideal is returned with a Borel check and its
/// Hilbert table. With expect_ci set, a quotient whose Hilbert function is
/// not the (n,d) product series raises ErrorKind::not_regular_sequence.
GinResult compute_gin(const std::vector<Polynomial>& gens, const GinOptions& options = {});

} // namespace ginwb
