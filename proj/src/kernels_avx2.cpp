#include "ginwb/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define GINWB_X86 1
#include <immintrin.h>
#else
#define GINWB_X86 0
#endif

namespace ginwb::kernels {

#if GINWB_X86

namespace {

// Four packed monomials per 256-bit vector. gen | query holds exactly when
// min_epu8(gen, query) == gen in every byte of the 8-byte lane.
inline std::uint32_t divisor_lane_mask(__m256i gens4, __m256i query4) {
    __m256i mn = _mm256_min_epu8(gens4, query4);
    __m256i eq = _mm256_cmpeq_epi8(mn, gens4);
    return static_cast<std::uint32_t>(_mm256_movemask_epi8(eq));
}

std::size_t find_divisor_avx2(std::uint64_t query, const std::uint64_t* gens,
                              std::size_t count) {
    const __m256i q4 = _mm256_set1_epi64x(static_cast<long long>(query));
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256i g4 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(gens + i));
        std::uint32_t mask = divisor_lane_mask(g4, q4);
        if (mask == 0) continue;
        for (int lane = 0; lane < 4; ++lane)
            if (((mask >> (8 * lane)) & 0xffu) == 0xffu) return i + static_cast<std::size_t>(lane);
    }
    for (; i < count; ++i) {
        __m128i g = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(gens + i));
        __m128i q = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(&query));
        __m128i mn = _mm_min_epu8(g, q);
        __m128i eq = _mm_cmpeq_epi8(mn, g);
        if ((static_cast<std::uint32_t>(_mm_movemask_epi8(eq)) & 0xffu) == 0xffu) return i;
    }
    return npos;
}

std::size_t mark_divisible_avx2(const std::uint64_t* queries, std::size_t query_count,
                                const std::uint64_t* gens, std::size_t gen_count,
                                std::uint8_t* out) {
    std::size_t marked = 0;
    for (std::size_t i = 0; i < query_count; ++i) {
        bool hit = find_divisor_avx2(queries[i], gens, gen_count) != npos;
        out[i] = hit ? 1 : 0;
        marked += hit ? 1 : 0;
    }
    return marked;
}

void add_exponents_avx2(const std::uint64_t* in, std::size_t count,
                        std::uint64_t addend, std::uint64_t* out) {
    const __m256i a4 = _mm256_set1_epi64x(static_cast<long long>(addend));
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
        v = _mm256_add_epi8(v, a4);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
    }
    for (; i < count; ++i) {
        __m128i v = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(in + i));
        __m128i a = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(&addend));
        v = _mm_add_epi8(v, a);
        out[i] = static_cast<std::uint64_t>(_mm_cvtsi128_si64(v));
    }
}

const Ops kAvx2{"avx2", find_divisor_avx2, mark_divisible_avx2, add_exponents_avx2};

} // namespace

bool avx2_available() noexcept {
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
}

const Ops& avx2_ops() noexcept { return kAvx2; }

#else // !GINWB_X86

bool avx2_available() noexcept { return false; }
const Ops& avx2_ops() noexcept { return scalar_ops(); }

#endif

} // namespace ginwb::kernels
