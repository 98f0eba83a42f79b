#pragma once

#include "ginwb/linalg.hpp"
#include "ginwb/polynomial.hpp"

namespace ginwb {

enum class ChangeKind { general, triangular };

/// Apply the substitution x_i -> sum_j entries(i,j) x_j to f and expand.
/// Does not require the matrix to be invertible (the criterion module
/// evaluates deliberately degenerate specializations).
Polynomial apply_substitution(const Polynomial& f, const RatMatrix& entries);

/// An invertible linear change of coordinates x_i -> sum_j c_ij x_j.
/// The triangular kind is unit triangular: the image of x_i is x_i plus a
/// combination of the earlier variables x_1..x_{i-1}, so x_1 is fixed and
/// later variables pick up earlier ones.
class CoordinateChange {
public:
    explicit CoordinateChange(RatMatrix entries, ChangeKind kind = ChangeKind::general);

    static CoordinateChange identity(int n);

    int dimension() const { return entries_.rows(); }
    ChangeKind kind() const { return kind_; }
    const RatMatrix& entries() const { return entries_; }
    const Rat& entry(int i, int j) const { return entries_.at(i, j); }
    const Rat& determinant() const { return det_; }

    CoordinateChange inverse() const;

    Polynomial apply(const Polynomial& f) const;

private:
    RatMatrix entries_;
    ChangeKind kind_;
    Rat det_;
};

} // namespace ginwb
