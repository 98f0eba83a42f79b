#include "ginwb/hilbert.hpp"

#include <algorithm>

namespace ginwb {

bool same_hilbert_function(const HilbertTable& a, const HilbertTable& b) {
    int top = std::max(static_cast<int>(a.values.size()), static_cast<int>(b.values.size()));
    for (int k = 0; k < top; ++k)
        if (a.at(k) != b.at(k)) return false;
    return true;
}

namespace {

void check_ci_args(int n, int d, int k) {
    if (n < 1) throw invalid_argument("n must be at least 1");
    if (d < 2) throw invalid_argument("d must be at least 2");
    if (k < 0) throw invalid_argument("degree must be non-negative");
}

// coefficient of t^k in ((1 - t^d) / (1 - t))^n, as the full
// inclusion-exclusion sum; valid for 0 <= k <= n(d-1)
std::int64_t ci_hilbert_sum(int n, int d, int k) {
    std::int64_t total = 0;
    for (int i = 0; i * d <= k; ++i) {
        std::int64_t term = binomial(n, i) * binomial(k - static_cast<std::int64_t>(i) * d + n - 1, n - 1);
        total += (i % 2 == 0) ? term : -term;
    }
    return total;
}

} // namespace

std::int64_t ci_hilbert(int n, int d, int k) {
    check_ci_args(n, d, k);
    std::int64_t socle = static_cast<std::int64_t>(n) * (d - 1);
    if (k > socle) return 0;
    // symmetry H(k) = H(socle - k) folds the upper half onto the lower cases
    if (2 * static_cast<std::int64_t>(k) >= socle + 1) return ci_hilbert(n, d, static_cast<int>(socle - k));
    if (k <= d - 1) return binomial(k + n - 1, n - 1);
    return ci_hilbert_sum(n, d, k);
}

std::int64_t ci_ideal_size(int n, int d, int k) {
    check_ci_args(n, d, k);
    return binomial(k + n - 1, n - 1) - ci_hilbert(n, d, k);
}

HilbertTable ci_hilbert_table(int n, int d) {
    int socle = n * (d - 1);
    HilbertTable t;
    t.arity = n;
    t.values.reserve(static_cast<std::size_t>(socle) + 1);
    for (int k = 0; k <= socle; ++k) t.values.push_back(ci_hilbert(n, d, k));
    return t;
}

std::vector<std::int64_t> series_oracle(int n, int d) {
    if (n < 1 || d < 1) throw invalid_argument("series_oracle requires n >= 1, d >= 1");
    std::vector<std::int64_t> acc{1};
    std::vector<std::int64_t> factor(static_cast<std::size_t>(d), 1);
    for (int i = 0; i < n; ++i) {
        std::vector<std::int64_t> next(acc.size() + factor.size() - 1, 0);
        for (std::size_t a = 0; a < acc.size(); ++a)
            for (std::size_t b = 0; b < factor.size(); ++b) next[a + b] += acc[a] * factor[b];
        acc = std::move(next);
    }
    return acc;
}

HilbertTable hilbert_from_ideal(const MonomialIdeal& ideal, int up_to) {
    if (up_to < 0) throw invalid_argument("degree must be non-negative");
    HilbertTable t;
    t.arity = ideal.arity();
    t.values.reserve(static_cast<std::size_t>(up_to) + 1);
    for (int k = 0; k <= up_to; ++k)
        t.values.push_back(monomial_count(ideal.arity(), k) - ideal.graded_piece_size(k));
    return t;
}

} // namespace ginwb
