#ifndef ORTHOIEQ_LINALG_HPP
#define ORTHOIEQ_LINALG_HPP

// Dense linear algebra over the two scalar fields. Exact matrices use
// fraction-free (Bareiss) elimination for determinants and plain Gaussian
// elimination for solves; complex matrices use pivoted LU.

#include "orthoieq/numeric.hpp"

#include <cstddef>
#include <vector>

namespace orthoieq {

template <Field F>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Copy without row r and column c.
    Matrix minor(std::size_t r, std::size_t c) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<F> data_;
};

/// Determinant of a square matrix; the empty matrix has determinant 1.
template <Field F>
F determinant(const Matrix<F>& a);

/// Reciprocal 1-norm condition number, 0 for a singular matrix.
/// Exact matrices report 1 when nonsingular.
template <Field F>
Real reciprocal_condition(const Matrix<F>& a);

/// Solves A x = b. Throws SingularSystemError when A is singular (exactly,
/// or with reciprocal condition <= 10^(15-p) in floating point).
template <Field F>
std::vector<F> solve_linear(const Matrix<F>& a, const std::vector<F>& b);

/// Threshold below which a floating-point system counts as singular.
Real singularity_threshold();

}  // namespace orthoieq

#endif  // ORTHOIEQ_LINALG_HPP
