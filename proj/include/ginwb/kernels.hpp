#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace ginwb::kernels {

// Batch operations on packed monomials (8 exponent bytes in a uint64_t).
// These are the inner loops of divisor searches, graded-piece enumeration and
// shadow computation. A scalar reference implementation always exists; an
// AVX2 variant is selected at runtime when the CPU supports it. The two are
// equivalence-tested against each other.

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct Ops {
    const char* name;

    // index of the first element of gens[0..count) that divides query
    // (componentwise <= on the 8 exponent bytes), or npos
    std::size_t (*find_divisor)(std::uint64_t query, const std::uint64_t* gens,
                                std::size_t count);

    // out[i] = 1 if some gen divides queries[i], else 0; returns how many were marked
    std::size_t (*mark_divisible)(const std::uint64_t* queries, std::size_t query_count,
                                  const std::uint64_t* gens, std::size_t gen_count,
                                  std::uint8_t* out);

    // out[i] = in[i] + addend, bytewise; caller guarantees no byte overflows
    void (*add_exponents)(const std::uint64_t* in, std::size_t count,
                          std::uint64_t addend, std::uint64_t* out);
};

const Ops& scalar_ops() noexcept;

bool avx2_available() noexcept;
const Ops& avx2_ops() noexcept; // valid only when avx2_available()

// nullptr when the name is unknown or names an unavailable variant
const Ops* select(std::string_view name) noexcept;

// runtime-selected table; GINWB_KERNEL=scalar|avx2 overrides (consulted once)
const Ops& active() noexcept;

} // namespace ginwb::kernels
