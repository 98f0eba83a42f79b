#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

#include "ginwb/errors.hpp"

namespace ginwb {

inline constexpr int kMaxArity = 8;
inline constexpr int kMaxExponent = 255;

enum class Ordering { less, equal, greater };

/// A monomial in a fixed number of variables, stored as a packed exponent
/// vector (one byte per variable, unused slots zero) with the total degree
/// cached. The packed form doubles as the wire format for the batch kernels.
class Monomial {
public:
    Monomial() = default;

    static Monomial one(int arity) {
        check_arity(arity);
        Monomial m;
        m.arity_ = static_cast<std::uint8_t>(arity);
        return m;
    }

    static Monomial variable(int arity, int index, int exponent = 1) {
        Monomial m = one(arity);
        m.set_exponent(index, exponent);
        return m;
    }

    static Monomial from_exponents(std::span<const int> exps) {
        check_arity(static_cast<int>(exps.size()));
        Monomial m;
        m.arity_ = static_cast<std::uint8_t>(exps.size());
        for (int i = 0; i < m.arity_; ++i) m.set_exponent(i, exps[i]);
        return m;
    }

    static Monomial from_packed(std::uint64_t bits, int arity) {
        check_arity(arity);
        Monomial m;
        m.arity_ = static_cast<std::uint8_t>(arity);
        std::memcpy(m.exps_.data(), &bits, sizeof(bits));
        int deg = 0;
        for (int i = 0; i < arity; ++i) deg += m.exps_[i];
        for (int i = arity; i < kMaxArity; ++i)
            if (m.exps_[i] != 0)
                throw invalid_argument("packed monomial has nonzero exponent beyond arity");
        m.degree_ = static_cast<std::uint16_t>(deg);
        return m;
    }

    int arity() const { return arity_; }
    int degree() const { return degree_; }
    int exponent(int i) const { return exps_[static_cast<std::size_t>(i)]; }
    bool is_one() const { return degree_ == 0; }

    std::uint64_t packed() const {
        std::uint64_t bits;
        std::memcpy(&bits, exps_.data(), sizeof(bits));
        return bits;
    }

    Monomial times(const Monomial& other) const {
        require_same_arity(other);
        Monomial r = *this;
        for (int i = 0; i < arity_; ++i) r.bump(i, other.exps_[i]);
        return r;
    }

    Monomial times_variable(int index, int amount = 1) const {
        Monomial r = *this;
        if (index < 0 || index >= arity_) throw invalid_argument("variable index out of range");
        r.bump(index, amount);
        return r;
    }

    // componentwise <=; the scalar reference for the batch kernels
    bool divides(const Monomial& m) const {
        require_same_arity(m);
        for (int i = 0; i < arity_; ++i)
            if (exps_[i] > m.exps_[i]) return false;
        return true;
    }

    // exact quotient; pre: this->divides(m) is false -> throws
    Monomial quotient_of(const Monomial& m) const {
        require_same_arity(m);
        Monomial r = one(arity_);
        for (int i = 0; i < arity_; ++i) {
            if (exps_[i] > m.exps_[i])
                throw invalid_argument("monomial quotient is not exact");
            r.exps_[i] = static_cast<std::uint8_t>(m.exps_[i] - exps_[i]);
        }
        r.degree_ = static_cast<std::uint16_t>(m.degree_ - degree_);
        return r;
    }

    Monomial lcm_with(const Monomial& other) const {
        require_same_arity(other);
        Monomial r = one(arity_);
        int deg = 0;
        for (int i = 0; i < arity_; ++i) {
            r.exps_[i] = exps_[i] > other.exps_[i] ? exps_[i] : other.exps_[i];
            deg += r.exps_[i];
        }
        r.degree_ = static_cast<std::uint16_t>(deg);
        return r;
    }

    bool operator==(const Monomial& other) const {
        return arity_ == other.arity_ && packed() == other.packed();
    }

    std::string str() const;

    void require_same_arity(const Monomial& other) const {
        if (arity_ != other.arity_)
            throw arity_mismatch("monomials have different arity (" +
                                 std::to_string(arity_) + " vs " +
                                 std::to_string(other.arity_) + ")");
    }

private:
    static void check_arity(int n) {
        if (n < 1 || n > kMaxArity)
            throw invalid_argument("arity must be between 1 and " + std::to_string(kMaxArity));
    }

    void set_exponent(int i, int e) {
        if (e < 0 || e > kMaxExponent)
            throw invalid_argument("exponent out of range [0, 255]");
        degree_ = static_cast<std::uint16_t>(degree_ - exps_[static_cast<std::size_t>(i)] + e);
        exps_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
    }

    void bump(int i, int amount) {
        int e = exps_[static_cast<std::size_t>(i)] + amount;
        if (e > kMaxExponent) throw invalid_argument("exponent overflow (max 255)");
        exps_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
        degree_ = static_cast<std::uint16_t>(degree_ + amount);
    }

    std::array<std::uint8_t, kMaxArity> exps_{};
    std::uint8_t arity_ = 0;
    std::uint16_t degree_ = 0;
};

/// Reverse lexicographic comparison. Higher total degree is greater; within
/// one degree u > v exactly when the last nonzero entry of exps(u) - exps(v)
/// is negative.
Ordering revlex_compare(const Monomial& u, const Monomial& v);

inline bool revlex_less(const Monomial& u, const Monomial& v) {
    return revlex_compare(u, v) == Ordering::less;
}
inline bool revlex_greater(const Monomial& u, const Monomial& v) {
    return revlex_compare(u, v) == Ordering::greater;
}

/// All monomials of the given degree, strictly decreasing in revlex.
/// The first element is x1^d, the second x1^(d-1)x2.
std::vector<Monomial> enumerate_degree_monomials(int arity, int degree);

/// Number of monomials of the given degree: C(degree + arity - 1, arity - 1).
std::int64_t monomial_count(int arity, int degree);

/// Binomial coefficient with the convention C(a, b) = 0 for a < b or b < 0.
std::int64_t binomial(std::int64_t a, std::int64_t b);

} // namespace ginwb
