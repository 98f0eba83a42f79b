#include "ginwb/monomial_ideal.hpp"

#include <algorithm>

#include "ginwb/kernels.hpp"

namespace ginwb {

MonomialIdeal::MonomialIdeal(int arity, std::vector<Monomial> generators,
                             std::optional<int> degree_bound)
    : arity_(arity), degree_bound_(degree_bound) {
    if (arity < 1 || arity > kMaxArity)
        throw invalid_argument("arity must be between 1 and " + std::to_string(kMaxArity));
    for (const auto& g : generators)
        if (g.arity() != arity) throw arity_mismatch("generator arity does not match ideal arity");
    std::sort(generators.begin(), generators.end(), generator_order);
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    // a generator is redundant iff an earlier (lower-degree) one divides it
    for (const auto& g : generators) {
        if (kernels::active().find_divisor(g.packed(), packed_.data(), packed_.size()) !=
            kernels::npos)
            continue;
        gens_.push_back(g);
        packed_.push_back(g.packed());
    }
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.arity() != arity_) throw arity_mismatch("monomial arity does not match ideal arity");
    return kernels::active().find_divisor(m.packed(), packed_.data(), packed_.size()) !=
           kernels::npos;
}

std::vector<Monomial> MonomialIdeal::graded_piece(int k) const {
    std::vector<Monomial> all = enumerate_degree_monomials(arity_, k);
    std::vector<std::uint64_t> queries(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) queries[i] = all[i].packed();
    std::vector<std::uint8_t> hit(all.size());
    kernels::active().mark_divisible(queries.data(), queries.size(), packed_.data(),
                                     packed_.size(), hit.data());
    std::vector<Monomial> piece;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (hit[i]) piece.push_back(all[i]);
    return piece;
}

std::int64_t MonomialIdeal::graded_piece_size(int k) const {
    std::vector<Monomial> all = enumerate_degree_monomials(arity_, k);
    std::vector<std::uint64_t> queries(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) queries[i] = all[i].packed();
    std::vector<std::uint8_t> hit(all.size());
    return static_cast<std::int64_t>(kernels::active().mark_divisible(
        queries.data(), queries.size(), packed_.data(), packed_.size(), hit.data()));
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
    return arity_ == other.arity_ && gens_ == other.gens_;
}

std::vector<Monomial> shadow(const std::vector<Monomial>& monomials, int arity) {
    if (monomials.empty()) return {};
    int degree = monomials.front().degree();
    std::vector<std::uint64_t> packed;
    packed.reserve(monomials.size());
    for (const auto& m : monomials) {
        if (m.arity() != arity) throw arity_mismatch("shadow input arity mismatch");
        if (m.degree() != degree)
            throw invalid_argument("shadow input must be monomials of one degree");
        for (int i = 0; i < arity; ++i)
            if (m.exponent(i) >= kMaxExponent) throw invalid_argument("exponent overflow (max 255)");
        packed.push_back(m.packed());
    }
    std::vector<std::uint64_t> bumped(packed.size());
    std::vector<std::uint64_t> out;
    out.reserve(packed.size() * static_cast<std::size_t>(arity));
    for (int v = 0; v < arity; ++v) {
        std::uint64_t addend = Monomial::variable(arity, v).packed();
        kernels::active().add_exponents(packed.data(), packed.size(), addend, bumped.data());
        out.insert(out.end(), bumped.begin(), bumped.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::vector<Monomial> result;
    result.reserve(out.size());
    for (std::uint64_t bits : out) result.push_back(Monomial::from_packed(bits, arity));
    std::sort(result.begin(), result.end(), revlex_greater);
    return result;
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
    int n = ideal.arity();
    for (const auto& m : ideal.min_generators()) {
        for (int j = 1; j < n; ++j) {
            if (m.exponent(j) == 0) continue;
            for (int i = 0; i < j; ++i) {
                Monomial swapped =
                    Monomial::variable(n, j).quotient_of(m.times_variable(i));
                if (!ideal.contains(swapped)) return false;
            }
        }
    }
    return true;
}

bool is_revlex_segment(const MonomialIdeal& ideal, int k) {
    std::vector<Monomial> all = enumerate_degree_monomials(ideal.arity(), k);
    bool seen_gap = false;
    for (const auto& m : all) {
        bool in = ideal.contains(m);
        if (in && seen_gap) return false;
        if (!in) seen_gap = true;
    }
    return true;
}

} // namespace ginwb
