#ifndef PADELAB_LINEAR_ALGEBRA_HPP
#define PADELAB_LINEAR_ALGEBRA_HPP

#include "padelab/gaussian_rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace padelab {

/// Row-major dense matrix over the Gaussian rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Copy without column `skip`.
    Matrix without_column(std::size_t skip) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
};

/// Determinant by Gaussian elimination with first-nonzero pivoting. 0x0 gives 1.
GaussianRational determinant(Matrix a);

/// Unique solution of a x = b for square a, or nullopt when a is singular.
std::optional<std::vector<GaussianRational>> solve(Matrix a, std::vector<GaussianRational> b);

/// A nonzero vector in the kernel of a, or nullopt when the kernel is trivial.
std::optional<std::vector<GaussianRational>> kernel_vector(Matrix a);

}  // namespace padelab

#endif
