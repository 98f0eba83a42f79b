#pragma once

#include <optional>
#include <vector>

#include "ginwb/monomial.hpp"

namespace ginwb {

/// A monomial ideal given by its minimal generators. Generators are kept in
/// canonical order (degree ascending, revlex descending within a degree) and
/// mirrored into a packed array for the batch divisibility kernels.
class MonomialIdeal {
public:
    /// Normalizes: removes generators divisible by another generator.
    MonomialIdeal(int arity, std::vector<Monomial> generators,
                  std::optional<int> degree_bound = std::nullopt);

    static MonomialIdeal zero(int arity) { return MonomialIdeal(arity, {}); }

    int arity() const { return arity_; }
    const std::vector<Monomial>& min_generators() const { return gens_; }
    std::optional<int> degree_bound() const { return degree_bound_; }
    bool is_zero() const { return gens_.empty(); }

    bool contains(const Monomial& m) const;

    /// all degree-k monomials divisible by some generator, revlex descending
    std::vector<Monomial> graded_piece(int k) const;

    /// |graded_piece(k)| without materializing the list
    std::int64_t graded_piece_size(int k) const;

    /// equality of minimal generator sets; the degree bound is metadata
    bool operator==(const MonomialIdeal& other) const;

private:
    int arity_;
    std::vector<Monomial> gens_;
    std::vector<std::uint64_t> packed_;
    std::optional<int> degree_bound_;
};

/// canonical order used everywhere generators are listed
inline bool generator_order(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return revlex_greater(a, b);
}

/// Shad(M) = {x_1..x_n} * M for a set of monomials of one degree
std::vector<Monomial> shadow(const std::vector<Monomial>& monomials, int arity);

/// true iff for every generator m, every x_j | m and every i < j the swap
/// m * x_i / x_j stays in the ideal
bool is_strongly_stable(const MonomialIdeal& ideal);

/// true iff the set of degree-k monomials of the ideal is an initial segment
/// of the revlex order on that degree
bool is_revlex_segment(const MonomialIdeal& ideal, int k);

} // namespace ginwb
