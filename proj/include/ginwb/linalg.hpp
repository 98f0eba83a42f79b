#pragma once

#include <optional>
#include <vector>

#include "ginwb/errors.hpp"
#include "ginwb/rational.hpp"

namespace ginwb {

class RatMatrix {
public:
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw invalid_argument("matrix dimensions must be non-negative");
    }

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    RatMatrix operator*(const RatMatrix& other) const;
    bool operator==(const RatMatrix& other) const;

private:
    int rows_;
    int cols_;
    std::vector<Rat> a_;
};

/// determinant by exact Gaussian elimination; square matrices only
Rat determinant(const RatMatrix& m);

/// rank by fraction-free (Bareiss) elimination: rows are scaled to integers
/// and every intermediate division is exact
int rank(const RatMatrix& m);

std::optional<RatMatrix> inverse(const RatMatrix& m);

} // namespace ginwb
