#include "padelab/linear_algebra.hpp"

#include "padelab/errors.hpp"

#include <utility>

namespace padelab {

Matrix Matrix::without_column(std::size_t skip) const {
    Matrix out(rows_, cols_ - 1);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0, k = 0; c < cols_; ++c)
            if (c != skip) out(r, k++) = (*this)(r, c);
    return out;
}

GaussianRational determinant(Matrix a) {
    if (a.rows() != a.cols()) throw PreconditionError("determinant of a non-square matrix");
    std::size_t n = a.rows();
    GaussianRational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return {};
        if (pivot != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(a(pivot, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        GaussianRational inv = a(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            GaussianRational factor = a(r, col) * inv;
            for (std::size_t c = col + 1; c < n; ++c) a(r, c) -= factor * a(col, c);
        }
    }
    return det;
}

std::optional<std::vector<GaussianRational>> solve(Matrix a, std::vector<GaussianRational> b) {
    std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw PreconditionError("solve needs a square system");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(a(pivot, c), a(col, c));
            std::swap(b[pivot], b[col]);
        }
        GaussianRational inv = a(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            GaussianRational factor = a(r, col) * inv;
            for (std::size_t c = col + 1; c < n; ++c) a(r, c) -= factor * a(col, c);
            b[r] -= factor * b[col];
        }
    }
    std::vector<GaussianRational> x(n);
    for (std::size_t r = n; r-- > 0;) {
        GaussianRational acc = b[r];
        for (std::size_t c = r + 1; c < n; ++c) acc -= a(r, c) * x[c];
        x[r] = acc / a(r, r);
    }
    return x;
}

std::optional<std::vector<GaussianRational>> kernel_vector(Matrix a) {
    std::size_t rows = a.rows();
    std::size_t cols = a.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    std::size_t free_col = cols;
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) {
            if (free_col == cols) free_col = col;
            continue;
        }
        if (pivot != row)
            for (std::size_t c = 0; c < cols; ++c) std::swap(a(pivot, c), a(row, c));
        GaussianRational inv = a(row, col).inverse();
        for (std::size_t c = col; c < cols; ++c) a(row, c) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            GaussianRational factor = a(r, col);
            for (std::size_t c = col; c < cols; ++c) a(r, c) -= factor * a(row, c);
        }
        pivot_cols.push_back(col);
        if (++row == rows) {
            if (free_col == cols && col + 1 < cols) free_col = col + 1;
            break;
        }
    }
    if (free_col == cols) return std::nullopt;
    // Reduced row echelon form: x_free = 1, pivots read off their rows.
    std::vector<GaussianRational> x(cols);
    x[free_col] = GaussianRational(1);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
        if (pivot_cols[r] > free_col) continue;
        x[pivot_cols[r]] = -a(r, free_col);
    }
    return x;
}

}  // namespace padelab
