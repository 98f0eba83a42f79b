#include "ginwb/linalg.hpp"

namespace ginwb {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
    if (cols_ != other.rows_) throw invalid_argument("matrix product shape mismatch");
    RatMatrix r(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < other.cols_; ++j) r.at(i, j) += v * other.at(k, j);
        }
    return r;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != other.at(i, j)) return false;
    return true;
}

Rat determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw invalid_argument("determinant of a non-square matrix");
    int n = m.rows();
    RatMatrix w = m;
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (w.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != col) {
            for (int j = col; j < n; ++j) std::swap(w.at(pivot, j), w.at(col, j));
            det = -det;
        }
        det *= w.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (w.at(r, col) == 0) continue;
            Rat factor = w.at(r, col) / w.at(col, col);
            for (int j = col; j < n; ++j) w.at(r, j) -= factor * w.at(col, j);
        }
    }
    return det;
}

int rank(const RatMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    // clear denominators rowwise; rank is unchanged
    std::vector<Int> w(static_cast<std::size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i) {
        Int scale(1);
        for (int j = 0; j < cols; ++j) {
            const Int& den = m.at(i, j).get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
            scale = scale / g * den;
        }
        for (int j = 0; j < cols; ++j) {
            const Rat& q = m.at(i, j);
            w[static_cast<std::size_t>(i) * cols + j] = q.get_num() * (scale / q.get_den());
        }
    }
    auto e = [&](int i, int j) -> Int& { return w[static_cast<std::size_t>(i) * cols + j]; };

    // Bareiss one-step elimination; each division by the previous pivot is exact
    Int prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (e(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < cols; ++j) std::swap(e(pivot, j), e(r, j));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                e(i, j) = (e(i, j) * e(r, c) - e(i, c) * e(r, j)) / prev;
            e(i, c) = 0;
        }
        prev = e(r, c);
        ++r;
    }
    return r;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw invalid_argument("inverse of a non-square matrix");
    int n = m.rows();
    RatMatrix w = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (w.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(pivot, j), w.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rat p = w.at(col, col);
        for (int j = 0; j < n; ++j) {
            w.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || w.at(r, col) == 0) continue;
            Rat factor = w.at(r, col);
            for (int j = 0; j < n; ++j) {
                w.at(r, j) -= factor * w.at(col, j);
                inv.at(r, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

} // namespace ginwb
