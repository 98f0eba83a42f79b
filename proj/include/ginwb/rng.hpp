#pragma once

#include <cstdint>

namespace ginwb {

// splitmix64: deterministic, splittable, tiny state. Trial i of a randomized
// computation seeds its own generator with (seed + i) so runs are reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi]; modulo bias is irrelevant here, determinism is not
    long next_in_range(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

private:
    std::uint64_t state_;
};

} // namespace ginwb
