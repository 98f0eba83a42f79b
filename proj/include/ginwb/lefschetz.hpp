#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ginwb/groebner.hpp"
#include "ginwb/hilbert.hpp"
#include "ginwb/linalg.hpp"
#include "ginwb/monomial_ideal.hpp"

namespace ginwb {

/// A graded quotient S/I with a standard-monomial basis in every degree.
/// Monomial-ideal backed: basis of degree k = degree-k monomials outside the
/// ideal. Groebner backed: same standard monomials of the initial ideal, with
/// multiplication read off through normal forms.
class GradedQuotient {
public:
    /// For a non-Artinian quotient a degree cap must be supplied; falsity of
    /// semiregularity witnessed below the cap is still decisive.
    static GradedQuotient from_monomial_ideal(MonomialIdeal ideal,
                                              std::optional<int> degree_cap = std::nullopt);
    static GradedQuotient from_groebner(GroebnerBasis basis);

    int arity() const { return ideal_.arity(); }
    int max_degree() const { return max_degree_; }
    bool artinian() const { return artinian_; }
    int socle_degree() const; // requires artinian()
    bool monomial_backed() const { return !groebner_.has_value(); }

    int dimension(int t) const;
    const std::vector<Monomial>& basis(int t) const;

    /// matrix of multiplication by g from the degree-t basis to the
    /// degree-(t + deg g) basis; rows index the target basis
    RatMatrix multiplication_matrix(const Polynomial& g, int t) const;

private:
    GradedQuotient(MonomialIdeal ideal, std::optional<GroebnerBasis> basis, int cap);

    MonomialIdeal ideal_; // the monomial ideal, or the initial ideal of the basis
    std::optional<GroebnerBasis> groebner_;
    int max_degree_;
    bool artinian_ = false;
    std::vector<std::vector<Monomial>> bases_;
    static const std::vector<Monomial> kEmpty;
};

struct SemiregularReport {
    bool holds;
    std::optional<int> first_failure_degree;
    bool complete; // false when the quotient was only examined up to a cap
};

/// g is semiregular when every multiplication map A_t -> A_{t+deg g} has full
/// rank min(dim A_t, dim A_{t+deg g}).
SemiregularReport is_semiregular(const GradedQuotient& quotient, const Polynomial& g);

enum class LefschetzKind { weak, strong };
enum class WitnessKind { xn_monomial, given, random };

struct LefschetzVerdict {
    LefschetzKind kind;
    bool holds;
    Polynomial element;
    /// (power b, degree t) of the first failing map, present iff !holds
    std::optional<std::pair<int, int>> witness;
    WitnessKind witness_kind;

    /// A failed random witness does not refute the property (the definition
    /// quantifies existentially over linear forms); a failed x_n witness on a
    /// monomial-backed quotient is decisive.
    bool decisive() const { return holds || witness_kind != WitnessKind::random; }
};

/// Weak: the element itself must be semiregular. Strong: every power
/// element^b for 1 <= b <= socle degree. Default element: x_n for a
/// monomial-backed quotient, otherwise a seeded random linear form.
LefschetzVerdict check_lefschetz(const GradedQuotient& quotient, LefschetzKind kind,
                                 std::optional<Polynomial> element = std::nullopt,
                                 std::uint64_t seed = 42);

} // namespace ginwb
