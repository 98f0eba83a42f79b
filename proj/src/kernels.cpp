#include "ginwb/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace ginwb::kernels {

namespace {

inline bool divides_packed(std::uint64_t gen, std::uint64_t query) {
    const auto* g = reinterpret_cast<const std::uint8_t*>(&gen);
    const auto* q = reinterpret_cast<const std::uint8_t*>(&query);
    for (int b = 0; b < 8; ++b)
        if (g[b] > q[b]) return false;
    return true;
}

std::size_t find_divisor_scalar(std::uint64_t query, const std::uint64_t* gens,
                                std::size_t count) {
    for (std::size_t i = 0; i < count; ++i)
        if (divides_packed(gens[i], query)) return i;
    return npos;
}

std::size_t mark_divisible_scalar(const std::uint64_t* queries, std::size_t query_count,
                                  const std::uint64_t* gens, std::size_t gen_count,
                                  std::uint8_t* out) {
    std::size_t marked = 0;
    for (std::size_t i = 0; i < query_count; ++i) {
        bool hit = find_divisor_scalar(queries[i], gens, gen_count) != npos;
        out[i] = hit ? 1 : 0;
        marked += hit ? 1 : 0;
    }
    return marked;
}

void add_exponents_scalar(const std::uint64_t* in, std::size_t count,
                          std::uint64_t addend, std::uint64_t* out) {
    const auto* a = reinterpret_cast<const std::uint8_t*>(&addend);
    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t v = in[i];
        auto* b = reinterpret_cast<std::uint8_t*>(&v);
        for (int j = 0; j < 8; ++j) b[j] = static_cast<std::uint8_t>(b[j] + a[j]);
        out[i] = v;
    }
}

const Ops kScalar{"scalar", find_divisor_scalar, mark_divisible_scalar, add_exponents_scalar};

} // namespace

const Ops& scalar_ops() noexcept { return kScalar; }

const Ops* select(std::string_view name) noexcept {
    if (name == "scalar") return &kScalar;
    if (name == "avx2") return avx2_available() ? &avx2_ops() : nullptr;
    return nullptr;
}

const Ops& active() noexcept {
    static const Ops* chosen = [] {
        if (const char* env = std::getenv("GINWB_KERNEL")) {
            if (const Ops* o = select(env)) return o;
            // unknown or unavailable request: fall back to the portable kernel
            return &kScalar;
        }
        return avx2_available() ? &avx2_ops() : &kScalar;
    }();
    return *chosen;
}

} // namespace ginwb::kernels
