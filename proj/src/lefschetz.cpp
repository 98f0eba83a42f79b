#include "ginwb/lefschetz.hpp"

#include <algorithm>

#include "ginwb/rng.hpp"

namespace ginwb {

const std::vector<Monomial> GradedQuotient::kEmpty;

namespace {

// Artinian exactly when the ideal contains a pure power of every variable,
// i.e. has a pure-power minimal generator per variable.
std::optional<int> artinian_degree_bound(const MonomialIdeal& ideal) {
    int n = ideal.arity();
    int sum = 0;
    for (int v = 0; v < n; ++v) {
        int best = -1;
        for (const auto& g : ideal.min_generators()) {
            bool pure = g.exponent(v) == g.degree();
            if (pure && g.degree() > 0) {
                best = g.degree();
                break; // generators are degree-sorted
            }
        }
        if (best < 0) return std::nullopt;
        sum += best - 1;
    }
    return sum; // socle degree is at most sum
}

} // namespace

GradedQuotient::GradedQuotient(MonomialIdeal ideal, std::optional<GroebnerBasis> basis, int cap)
    : ideal_(std::move(ideal)), groebner_(std::move(basis)), max_degree_(cap) {
    if (max_degree_ < 0 || max_degree_ > 200)
        throw invalid_argument("degree cap out of range [0, 200]");
    bases_.reserve(static_cast<std::size_t>(max_degree_) + 1);
    for (int k = 0; k <= max_degree_; ++k) {
        std::vector<Monomial> all = enumerate_degree_monomials(arity(), k);
        std::vector<Monomial> standard;
        for (const auto& m : all)
            if (!ideal_.contains(m)) standard.push_back(m);
        if (standard.empty()) {
            // S_k inside the ideal forces S_{k+1} inside as well
            artinian_ = true;
            break;
        }
        bases_.push_back(std::move(standard));
    }
}

GradedQuotient GradedQuotient::from_monomial_ideal(MonomialIdeal ideal,
                                                   std::optional<int> degree_cap) {
    int cap;
    if (degree_cap) {
        cap = *degree_cap;
    } else {
        auto bound = artinian_degree_bound(ideal);
        if (!bound)
            throw invalid_argument(
                "quotient is not Artinian (no pure power of every variable); "
                "supply a degree cap");
        cap = *bound + 1;
    }
    return GradedQuotient(std::move(ideal), std::nullopt, cap);
}

GradedQuotient GradedQuotient::from_groebner(GroebnerBasis basis) {
    int cap = basis.degree_bound();
    MonomialIdeal lead = initial_ideal(basis);
    return GradedQuotient(std::move(lead), std::move(basis), cap);
}

int GradedQuotient::socle_degree() const {
    if (!artinian_) throw invalid_argument("socle degree requires an Artinian quotient");
    return static_cast<int>(bases_.size()) - 1;
}

int GradedQuotient::dimension(int t) const {
    if (t < 0 || t >= static_cast<int>(bases_.size())) return 0;
    return static_cast<int>(bases_[static_cast<std::size_t>(t)].size());
}

const std::vector<Monomial>& GradedQuotient::basis(int t) const {
    if (t < 0 || t >= static_cast<int>(bases_.size())) return kEmpty;
    return bases_[static_cast<std::size_t>(t)];
}

RatMatrix GradedQuotient::multiplication_matrix(const Polynomial& g, int t) const {
    if (g.arity() != arity()) throw arity_mismatch("element arity does not match quotient");
    if (g.is_zero() || !g.is_homogeneous())
        throw invalid_argument("multiplication element must be nonzero homogeneous");
    int s = g.degree();
    const auto& source = basis(t);
    const auto& target = basis(t + s);
    RatMatrix m(static_cast<int>(target.size()), static_cast<int>(source.size()));
    if (target.empty() || source.empty()) return m;
    auto target_index = [&](const Monomial& mono) -> int {
        auto it = std::lower_bound(target.begin(), target.end(), mono, revlex_greater);
        if (it != target.end() && *it == mono) return static_cast<int>(it - target.begin());
        return -1;
    };
    for (std::size_t col = 0; col < source.size(); ++col) {
        Polynomial image = Polynomial::from_monomial(source[col]) * g;
        if (groebner_) image = normal_form(image, *groebner_);
        for (const auto& term : image.terms()) {
            if (!groebner_ && ideal_.contains(term.mono)) continue;
            int row = target_index(term.mono);
            if (row < 0) throw Error(ErrorKind::check_failure, "image term outside target basis");
            m.at(row, static_cast<int>(col)) += term.coeff;
        }
    }
    return m;
}

SemiregularReport is_semiregular(const GradedQuotient& quotient, const Polynomial& g) {
    if (g.is_zero() || !g.is_homogeneous())
        throw invalid_argument("semiregularity is about nonzero homogeneous elements");
    int s = g.degree();
    if (s == 0) return {true, std::nullopt, quotient.artinian()}; // scalar: every map an isomorphism
    int top = quotient.artinian() ? quotient.socle_degree() : quotient.max_degree() - s;
    for (int t = 0; t <= top; ++t) {
        int dim_source = quotient.dimension(t);
        int dim_target = quotient.dimension(t + s);
        if (dim_source == 0) continue;
        int need = std::min(dim_source, dim_target);
        if (need == 0) continue; // the zero map onto a zero space is surjective
        RatMatrix m = quotient.multiplication_matrix(g, t);
        if (rank(m) < need) return {false, t, true};
    }
    return {true, std::nullopt, quotient.artinian()};
}

LefschetzVerdict check_lefschetz(const GradedQuotient& quotient, LefschetzKind kind,
                                 std::optional<Polynomial> element, std::uint64_t seed) {
    if (!quotient.artinian())
        throw invalid_argument("Lefschetz checks require an Artinian quotient");
    int n = quotient.arity();
    WitnessKind witness_kind;
    Polynomial ell = Polynomial::zero(n);
    if (element) {
        ell = std::move(*element);
        if (ell.is_zero() || !ell.is_homogeneous() || ell.degree() != 1)
            throw invalid_argument("Lefschetz element must be a nonzero linear form");
        witness_kind = WitnessKind::given;
    } else if (quotient.monomial_backed()) {
        ell = Polynomial::from_monomial(Monomial::variable(n, n - 1));
        witness_kind = WitnessKind::xn_monomial;
    } else {
        SplitMix64 rng(seed);
        std::vector<Term> terms;
        for (int i = 0; i < n; ++i) {
            long c = 0;
            while (c == 0) c = rng.next_in_range(-100, 100);
            terms.push_back({Monomial::variable(n, i), Rat(c)});
        }
        ell = Polynomial::from_terms(n, std::move(terms));
        witness_kind = WitnessKind::random;
    }

    LefschetzVerdict verdict{kind, true, ell, std::nullopt, witness_kind};
    int top_power = kind == LefschetzKind::weak ? 1 : quotient.socle_degree();
    Polynomial power = Polynomial::constant(n, 1);
    for (int b = 1; b <= top_power; ++b) {
        power = power * ell;
        SemiregularReport r = is_semiregular(quotient, power);
        if (!r.holds) {
            verdict.holds = false;
            verdict.witness = std::make_pair(b, *r.first_failure_degree);
            return verdict;
        }
    }
    return verdict;
}

} // namespace ginwb
