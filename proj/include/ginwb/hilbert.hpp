#pragma once

#include <cstdint>
#include <vector>

#include "ginwb/monomial_ideal.hpp"

namespace ginwb {

/// Hilbert function values H(0), H(1), ... of a graded quotient.
struct HilbertTable {
    int arity = 0;
    std::vector<std::int64_t> values;

    std::int64_t at(int k) const {
        return (k >= 0 && k < static_cast<int>(values.size()))
                   ? values[static_cast<std::size_t>(k)]
                   : 0;
    }

    /// largest degree with a nonzero value, or -1 when everything vanishes
    int socle_degree() const {
        for (int k = static_cast<int>(values.size()) - 1; k >= 0; --k)
            if (values[static_cast<std::size_t>(k)] != 0) return k;
        return -1;
    }
};

/// equal as functions (trailing zeros ignored)
bool same_hilbert_function(const HilbertTable& a, const HilbertTable& b);

/// H(S/J, k) for an (n,d) complete intersection: the coefficient of t^k in
/// (1 + t + ... + t^(d-1))^n. Degrees past n(d-1) give 0; degrees at or above
/// ceil(n(d-1)/2) are delegated to the reflected degree n(d-1) - k.
std::int64_t ci_hilbert(int n, int d, int k);

/// number of degree-k monomials in any ideal with the (n,d) complete
/// intersection Hilbert function: C(k+n-1, n-1) - ci_hilbert(n, d, k)
std::int64_t ci_ideal_size(int n, int d, int k);

/// the whole table H(0)..H(n(d-1))
HilbertTable ci_hilbert_table(int n, int d);

/// independent oracle: coefficients of (1 + t + ... + t^(d-1))^n by repeated
/// convolution
std::vector<std::int64_t> series_oracle(int n, int d);

/// H(k) = C(k+n-1, n-1) - |J_k| for k = 0..up_to, by counting
HilbertTable hilbert_from_ideal(const MonomialIdeal& ideal, int up_to);

} // namespace ginwb
