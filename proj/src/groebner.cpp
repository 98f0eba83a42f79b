#include "ginwb/groebner.hpp"

#include <algorithm>

#include "ginwb/kernels.hpp"

namespace ginwb {

namespace {

struct Reduction {
    Polynomial remainder;
    std::vector<Polynomial> cofactors; // empty when not tracking
};

Reduction reduce(const Polynomial& f, const std::vector<Polynomial>& gens,
                 std::span<const std::uint64_t> lms, bool certificate) {
    int n = f.arity();
    Polynomial work = f;
    Polynomial remainder = Polynomial::zero(n);
    std::vector<Polynomial> cof;
    if (certificate) cof.assign(gens.size(), Polynomial::zero(n));
    while (!work.is_zero()) {
        const Monomial& lm = work.leading_monomial();
        std::size_t idx = kernels::active().find_divisor(lm.packed(), lms.data(), lms.size());
        if (idx == kernels::npos) {
            // leading term is irreducible: move it to the remainder
            Polynomial head = Polynomial::from_monomial(lm, work.leading_coefficient());
            remainder = remainder + head;
            work = work - head;
            continue;
        }
        const Polynomial& g = gens[idx];
        Monomial shift = g.leading_monomial().quotient_of(lm);
        Rat factor = work.leading_coefficient() / g.leading_coefficient();
        work = work - g.times_term(shift, factor);
        if (certificate) cof[idx] = cof[idx] + Polynomial::from_monomial(shift, factor);
    }
    return {std::move(remainder), std::move(cof)};
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
};

// processing order: degree ascending, then revlex-ascending lcm, then indices
bool pair_before(const Pair& a, const Pair& b) {
    Ordering o = revlex_compare(a.lcm, b.lcm);
    if (o != Ordering::equal) return o == Ordering::less;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
}

class PairQueue {
public:
    // Gebauer-Moeller update for a new basis element with index s
    void add_element(std::size_t s, const std::vector<Monomial>& lms, int bound) {
        const Monomial& lt = lms[s];
        // chain criterion on surviving old pairs
        std::erase_if(pending_, [&](const Pair& p) {
            if (!lt.divides(p.lcm)) return false;
            return !(lms[p.i].lcm_with(lt) == p.lcm) && !(lms[p.j].lcm_with(lt) == p.lcm);
        });
        // candidate new pairs (i, s)
        std::vector<Pair> fresh;
        fresh.reserve(s);
        for (std::size_t i = 0; i < s; ++i) fresh.push_back({i, s, lms[i].lcm_with(lt)});
        std::vector<bool> drop(fresh.size(), false);
        // keep only minimal lcms
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || drop[a]) continue;
                if (drop[b]) continue;
                if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm))
                    drop[a] = true;
            }
        // among equal minimal lcms keep one representative, unless some pair in
        // the group is coprime, in which case the whole group goes
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            bool coprime_group = false;
            for (std::size_t b = a; b < fresh.size(); ++b) {
                if (drop[b] || !(fresh[b].lcm == fresh[a].lcm)) continue;
                if (b > a) drop[b] = true;
                if (fresh[b].lcm.degree() == lms[fresh[b].i].degree() + lt.degree())
                    coprime_group = true;
            }
            if (coprime_group) drop[a] = true;
        }
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a] || fresh[a].lcm.degree() > bound) continue;
            pending_.push_back(std::move(fresh[a]));
        }
    }

    bool empty() const { return pending_.empty(); }

    Pair pop_min() {
        auto it = std::min_element(pending_.begin(), pending_.end(), pair_before);
        Pair p = std::move(*it);
        pending_.erase(it);
        return p;
    }

private:
    std::vector<Pair> pending_;
};

} // namespace

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    if (f.arity() != G.arity()) throw arity_mismatch("polynomial arity does not match basis");
    if (f.degree() > G.degree_bound())
        throw Error(ErrorKind::degree_bound_exceeded,
                    "degree " + std::to_string(f.degree()) + " exceeds basis bound " +
                        std::to_string(G.degree_bound()));
    return reduce(f, G.generators(), G.leading_packed(), false).remainder;
}

std::pair<Polynomial, std::vector<Polynomial>> normal_form_with_certificate(
    const Polynomial& f, const GroebnerBasis& G) {
    if (f.arity() != G.arity()) throw arity_mismatch("polynomial arity does not match basis");
    if (f.degree() > G.degree_bound())
        throw Error(ErrorKind::degree_bound_exceeded,
                    "degree " + std::to_string(f.degree()) + " exceeds basis bound " +
                        std::to_string(G.degree_bound()));
    Reduction r = reduce(f, G.generators(), G.leading_packed(), true);
    return {std::move(r.remainder), std::move(r.cofactors)};
}

GroebnerBasis buchberger_truncated(std::vector<Polynomial> gens, int bound) {
    std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
    if (gens.empty())
        throw invalid_argument("buchberger_truncated requires at least one nonzero generator");
    int n = gens.front().arity();
    for (const auto& g : gens) {
        if (g.arity() != n) throw arity_mismatch("generators have mixed arity");
        if (!g.is_homogeneous())
            throw invalid_argument("buchberger_truncated requires homogeneous generators");
        if (g.degree() > bound)
            throw invalid_argument("degree bound is below a generator degree");
    }

    std::vector<Polynomial> basis;
    std::vector<Monomial> lms;
    std::vector<std::uint64_t> lm_packed;
    PairQueue queue;

    auto add = [&](Polynomial p) {
        p = p.monic();
        lms.push_back(p.leading_monomial());
        lm_packed.push_back(lms.back().packed());
        basis.push_back(std::move(p));
        queue.add_element(basis.size() - 1, lms, bound);
    };

    // seed with the inputs, inter-reducing as we go
    std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return revlex_greater(a.leading_monomial(), b.leading_monomial());
    });
    for (auto& g : gens) {
        Polynomial r = reduce(g, basis, lm_packed, false).remainder;
        if (!r.is_zero()) add(std::move(r));
    }
    if (basis.empty())
        throw invalid_argument("buchberger_truncated requires at least one nonzero generator");

    while (!queue.empty()) {
        Pair p = queue.pop_min();
        Monomial ui = lms[p.i].quotient_of(p.lcm);
        Monomial uj = lms[p.j].quotient_of(p.lcm);
        Polynomial spoly =
            basis[p.i].times_term(ui, Rat(1)) - basis[p.j].times_term(uj, Rat(1));
        Polynomial r = reduce(spoly, basis, lm_packed, false).remainder;
        if (!r.is_zero()) add(std::move(r));
    }

    // minimalize: drop elements whose leading monomial another one divides
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j)
            if (j != i && lms[j].divides(lms[i]) && !(i < j && lms[i] == lms[j]))
                redundant = true;
        if (!redundant) keep.push_back(i);
    }
    std::vector<Polynomial> minimal;
    minimal.reserve(keep.size());
    for (std::size_t i : keep) minimal.push_back(std::move(basis[i]));
    std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
        return generator_order(a.leading_monomial(), b.leading_monomial());
    });

    // tail-reduce to the unique reduced basis (within the bound)
    std::vector<std::uint64_t> packed(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i)
        packed[i] = minimal[i].leading_monomial().packed();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            std::vector<std::uint64_t> others_packed;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) {
                    others.push_back(minimal[j]);
                    others_packed.push_back(packed[j]);
                }
            Polynomial r = reduce(minimal[i], others, others_packed, false).remainder;
            if (!(r == minimal[i])) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
    }

    GroebnerBasis G(n, bound);
    G.gens_ = std::move(minimal);
    G.lm_packed_.reserve(G.gens_.size());
    for (const auto& g : G.gens_) G.lm_packed_.push_back(g.leading_monomial().packed());
    return G;
}

MonomialIdeal initial_ideal(const GroebnerBasis& G) {
    std::vector<Monomial> lms;
    lms.reserve(G.generators().size());
    for (const auto& g : G.generators()) lms.push_back(g.leading_monomial());
    return MonomialIdeal(G.arity(), std::move(lms), G.degree_bound());
}

} // namespace ginwb
