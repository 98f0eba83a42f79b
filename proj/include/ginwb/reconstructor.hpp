#pragma once

#include <optional>
#include <vector>

#include "ginwb/hilbert.hpp"
#include "ginwb/monomial_ideal.hpp"

namespace ginwb {

/// Snapshot of the degree-by-degree search: all generator choices below
/// `degree` are settled and the dimension targets come from the (n,d)
/// complete intersection table.
struct ReconstructionState {
    int n;
    int d;
    int degree; // the degree currently being decided
    MonomialIdeal ideal;
    HilbertTable dimensions;
};

/// A candidate generator x_n^b * m may be added only when no multiplication
/// map .x_n^b that the dimension table forces to be injective would acquire a
/// kernel: for every b >= 1 dividing out of the candidate, the cofactor must
/// already lie in the ideal whenever dim A_{degree-b} <= dim A_degree.
/// This is a necessary condition; completed candidates still face a full
/// strong-Lefschetz verification.
bool lefschetz_feasible(const ReconstructionState& state, const Monomial& candidate);

struct ReconstructionOptions {
    /// degree-d generators to start from; default is the revlex segment of
    /// size n. Must be exactly n monomials forming a strongly stable set.
    std::optional<std::vector<Monomial>> initial;
};

/// Rebuild every monomial ideal with the (n,d) complete intersection Hilbert
/// function that is strongly stable and keeps x_n a strong Lefschetz element,
/// degree by degree: at each degree the deficit against the target count is
/// filled from feasible candidates, with Borel closure forcing chunks of
/// choices to be made atomically. Branches where the deficit cannot be met
/// die; if no branch completes, ErrorKind::infeasible_state is raised.
/// Completed candidates are kept only if they pass the full verification
/// (Hilbert table, strong stability, SLP with x_n).
std::vector<MonomialIdeal> reconstruct(int n, int d,
                                       const ReconstructionOptions& options = {});

} // namespace ginwb
