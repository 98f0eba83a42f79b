#include "ginwb/criterion.hpp"

#include <algorithm>

namespace ginwb {

namespace {

void validate_forms(const std::vector<Polynomial>& forms, int n) {
    if (static_cast<int>(forms.size()) != n)
        throw invalid_argument("expected exactly n forms in n variables");
    int d = forms.front().degree();
    for (const auto& f : forms) {
        if (f.arity() != n) throw arity_mismatch("form arity mismatch");
        if (f.is_zero() || !f.is_homogeneous() || f.degree() != d)
            throw invalid_argument("forms must be nonzero homogeneous of one degree");
    }
}

} // namespace

CoefficientMatrix coefficient_matrix(const std::vector<Polynomial>& forms,
                                     const CoordinateChange& C) {
    int n = C.dimension();
    validate_forms(forms, n);
    int d = forms.front().degree();
    std::vector<Monomial> monomials = enumerate_degree_monomials(n, d);
    RatMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        Polynomial transformed = C.apply(forms[static_cast<std::size_t>(i)]);
        for (int j = 0; j < n; ++j)
            a.at(i, j) = transformed.coefficient_of(monomials[static_cast<std::size_t>(j)]);
    }
    Rat delta = determinant(a);
    return {std::move(a), std::move(delta)};
}

RatMatrix coefficient_rows(const std::vector<Polynomial>& forms) {
    if (forms.empty()) throw invalid_argument("no forms given");
    int n = forms.front().arity();
    validate_forms(forms, n);
    int d = forms.front().degree();
    std::vector<Monomial> monomials = enumerate_degree_monomials(n, d);
    RatMatrix b(n, static_cast<int>(monomials.size()));
    for (int i = 0; i < n; ++i)
        for (std::size_t k = 0; k < monomials.size(); ++k)
            b.at(i, static_cast<int>(k)) =
                forms[static_cast<std::size_t>(i)].coefficient_of(monomials[k]);
    return b;
}

RatMatrix transform_coefficients(int n, int d, const CoordinateChange& C) {
    if (C.dimension() != n) throw arity_mismatch("coordinate change dimension mismatch");
    std::vector<Monomial> monomials = enumerate_degree_monomials(n, d);
    RatMatrix g(static_cast<int>(monomials.size()), n);
    for (std::size_t k = 0; k < monomials.size(); ++k) {
        Polynomial image = C.apply(Polynomial::from_monomial(monomials[k]));
        for (int l = 0; l < n; ++l)
            g.at(static_cast<int>(k), l) = image.coefficient_of(monomials[static_cast<std::size_t>(l)]);
    }
    return g;
}

namespace {

struct FormulaContext {
    int n;
    const Monomial* source; // alpha_k
    const CoordinateChange* change;
    std::vector<int> remaining; // target minus the partial column sums
    Rat total = 0;
};

void enumerate_rows(FormulaContext& ctx, int row, const Rat& weight);

// choose the row composition componentwise, pruning as soon as a column
// over-commits; weight carries the iterated binomials C(left, e) and the
// matching powers of the row entries as the parts are fixed
void enumerate_composition(FormulaContext& ctx, int row, int var, int left, const Rat& weight) {
    auto part_factor = [&](int e, int from) {
        Rat factor(binomial(from, e));
        for (int p = 0; p < e; ++p) factor *= ctx.change->entry(row, var);
        return factor;
    };
    if (var == ctx.n - 1) {
        if (left > ctx.remaining[static_cast<std::size_t>(var)]) return;
        Rat w = weight * part_factor(left, left); // C(left, left) = 1, entry powers remain
        if (w == 0) return;
        ctx.remaining[static_cast<std::size_t>(var)] -= left;
        enumerate_rows(ctx, row + 1, w);
        ctx.remaining[static_cast<std::size_t>(var)] += left;
        return;
    }
    int cap = std::min(left, ctx.remaining[static_cast<std::size_t>(var)]);
    for (int e = 0; e <= cap; ++e) {
        Rat w = weight * part_factor(e, left);
        if (w == 0) continue;
        ctx.remaining[static_cast<std::size_t>(var)] -= e;
        enumerate_composition(ctx, row, var + 1, left - e, w);
        ctx.remaining[static_cast<std::size_t>(var)] += e;
    }
}

void enumerate_rows(FormulaContext& ctx, int row, const Rat& weight) {
    if (row == ctx.n) {
        for (int v : ctx.remaining)
            if (v != 0) return;
        ctx.total += weight;
        return;
    }
    enumerate_composition(ctx, row, 0, ctx.source->exponent(row), weight);
}

} // namespace

Rat transform_coefficient_formula(int k, int l, const CoordinateChange& C, int n, int d) {
    std::vector<Monomial> monomials = enumerate_degree_monomials(n, d);
    if (k < 0 || l < 0 || k >= static_cast<int>(monomials.size()) ||
        l >= static_cast<int>(monomials.size()))
        throw invalid_argument("monomial index out of range");
    if (C.dimension() != n) throw arity_mismatch("coordinate change dimension mismatch");
    FormulaContext ctx;
    ctx.n = n;
    ctx.source = &monomials[static_cast<std::size_t>(k)];
    ctx.change = &C;
    ctx.remaining.resize(static_cast<std::size_t>(n));
    const Monomial& target = monomials[static_cast<std::size_t>(l)];
    for (int j = 0; j < n; ++j) ctx.remaining[static_cast<std::size_t>(j)] = target.exponent(j);
    enumerate_rows(ctx, 0, Rat(1));
    return ctx.total;
}

Rat cauchy_binet_delta(const RatMatrix& B, const RatMatrix& G) {
    int n = B.rows();
    int N = B.cols();
    if (G.rows() != N || G.cols() != n)
        throw invalid_argument("Cauchy-Binet shapes must be n x N and N x n");
    if (N < n) return Rat(0);
    std::vector<int> subset(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) subset[static_cast<std::size_t>(i)] = i;
    Rat total(0);
    while (true) {
        RatMatrix bm(n, n), gm(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                bm.at(r, c) = B.at(r, subset[static_cast<std::size_t>(c)]);
                gm.at(r, c) = G.at(subset[static_cast<std::size_t>(r)], c);
            }
        total += determinant(bm) * determinant(gm);
        // next n-subset of {0..N-1} in lexicographic order
        int i = n - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == N - n + i) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
    return total;
}

Lemma17Report lemma17_checks(const std::vector<Polynomial>& forms, const CoordinateChange& C) {
    int n = C.dimension();
    validate_forms(forms, n);
    int d = forms.front().degree();
    std::vector<Monomial> monomials = enumerate_degree_monomials(n, d);

    Lemma17Report report;
    CoefficientMatrix A = coefficient_matrix(forms, C);
    std::vector<Rat> first_column_point;
    for (int i = 0; i < n; ++i) first_column_point.push_back(C.entry(i, 0));
    for (int i = 0; i < n; ++i) {
        Rat direct = forms[static_cast<std::size_t>(i)].evaluate(first_column_point);
        if (A.entries.at(i, 0) != direct)
            throw Error(ErrorKind::check_failure,
                        "first-column identity failed: coefficient extraction disagrees with "
                        "evaluation at the first column");
        report.first_column.push_back(std::move(direct));
    }

    // collapse every column onto the first and compare column l with column 0
    RatMatrix collapsed(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) collapsed.at(i, j) = C.entry(i, 0);
    RatMatrix specialized(n, n);
    for (int i = 0; i < n; ++i) {
        Polynomial transformed = apply_substitution(forms[static_cast<std::size_t>(i)], collapsed);
        for (int l = 0; l < n; ++l)
            specialized.at(i, l) = transformed.coefficient_of(monomials[static_cast<std::size_t>(l)]);
    }
    report.specialization.all_determined = true;
    for (int l = 0; l < n; ++l) {
        Rat ratio(0);
        bool found = false;
        for (int i = 0; i < n; ++i) {
            const Rat& base = specialized.at(i, 0);
            const Rat& value = specialized.at(i, l);
            if (base == 0) {
                if (value != 0)
                    throw Error(ErrorKind::check_failure,
                                "specialization identity failed: zero base with nonzero column");
                continue;
            }
            Rat r = value / base;
            if (found && r != ratio)
                throw Error(ErrorKind::check_failure,
                            "specialization identity failed: ratio varies across rows");
            ratio = std::move(r);
            found = true;
        }
        if (found && (!is_integer(ratio) || ratio <= 0))
            throw Error(ErrorKind::check_failure,
                        "specialization identity failed: ratio is not a positive integer");
        if (!found) report.specialization.all_determined = false;
        report.specialization.ratios.push_back(std::move(ratio));
    }
    return report;
}

} // namespace ginwb
