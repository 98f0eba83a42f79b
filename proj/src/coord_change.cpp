#include "ginwb/coord_change.hpp"

#include <map>

namespace ginwb {

Polynomial apply_substitution(const Polynomial& f, const RatMatrix& entries) {
    int n = f.arity();
    if (entries.rows() != n || entries.cols() != n)
        throw arity_mismatch("substitution matrix dimension does not match polynomial arity");
    // linear images of the variables
    std::vector<Polynomial> image;
    image.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<Term> terms;
        for (int j = 0; j < n; ++j)
            if (entries.at(i, j) != 0) terms.push_back({Monomial::variable(n, j), entries.at(i, j)});
        image.push_back(Polynomial::from_terms(n, std::move(terms)));
    }
    // powers of the images are shared across all terms of f
    std::map<std::pair<int, int>, Polynomial> powers;
    auto power = [&](int var, int e) -> const Polynomial& {
        for (int k = 1; k <= e; ++k) {
            auto key = std::make_pair(var, k);
            if (powers.contains(key)) continue;
            Polynomial p = k == 1 ? image[static_cast<std::size_t>(var)]
                                  : powers.at({var, k - 1}) * image[static_cast<std::size_t>(var)];
            powers.emplace(key, std::move(p));
        }
        return powers.at({var, e});
    };
    Polynomial result = Polynomial::zero(n);
    for (const auto& t : f.terms()) {
        Polynomial prod = Polynomial::constant(n, t.coeff);
        for (int i = 0; i < n; ++i) {
            int e = t.mono.exponent(i);
            if (e > 0) prod = prod * power(i, e);
        }
        result = result + prod;
    }
    return result;
}

CoordinateChange::CoordinateChange(RatMatrix entries, ChangeKind kind)
    : entries_(std::move(entries)), kind_(kind), det_(0) {
    if (entries_.rows() != entries_.cols())
        throw invalid_argument("coordinate change matrix must be square");
    if (kind_ == ChangeKind::triangular) {
        int n = entries_.rows();
        for (int i = 0; i < n; ++i) {
            if (entries_.at(i, i) != 1)
                throw invalid_argument("triangular change must have unit diagonal");
            for (int j = i + 1; j < n; ++j)
                if (entries_.at(i, j) != 0)
                    throw invalid_argument("triangular change: image of x_i may only involve x_1..x_i");
        }
    }
    det_ = ginwb::determinant(entries_);
    if (det_ == 0)
        throw Error(ErrorKind::singular_matrix, "coordinate change matrix is singular");
}

CoordinateChange CoordinateChange::identity(int n) {
    return CoordinateChange(RatMatrix::identity(n), ChangeKind::triangular);
}

CoordinateChange CoordinateChange::inverse() const {
    auto inv = ginwb::inverse(entries_);
    // always present: the determinant is nonzero by construction
    return CoordinateChange(std::move(*inv), ChangeKind::general);
}

Polynomial CoordinateChange::apply(const Polynomial& f) const {
    return apply_substitution(f, entries_);
}

} // namespace ginwb
