#ifndef ORTHOIEQ_HANKEL_HPP
#define ORTHOIEQ_HANKEL_HPP

// Degree-n polynomial solutions of P(x) = <P(y) P(x + y)> from the moments
// of w. The solution is characterized by <x^k P_n> = delta_{k,0} for
// k = 0..n, i.e. B_n a = e_0 with the Hankel matrix B_n[k][j] = m_{k+j}.

#include "orthoieq/linalg.hpp"
#include "orthoieq/moment_sequence.hpp"
#include "orthoieq/polynomial.hpp"

#include <cstddef>

namespace orthoieq {

/// size x size matrix with entries m_{k + j + offset}. B_n is
/// hankel_matrix(m, n + 1, 0); C_n is hankel_matrix(m, n, 1).
template <Field F>
Matrix<F> hankel_matrix(const MomentSequence<F>& m, std::size_t size, std::size_t offset);

template <Field F>
struct HankelCondition {
    F determinant;
    /// Reciprocal 1-norm condition number of B_n (1 for a nonsingular exact matrix).
    Real reciprocal_condition;
    bool valid = false;
};

/// det B_n and whether it is usable: nonzero in exact mode, reciprocal
/// condition above 10^(15-p) in floating point.
template <Field F>
HankelCondition<F> hankel_condition(const MomentSequence<F>& m, std::size_t n);

/// Solves B_n a = e_0. Throws SingularHankelError, DegenerateDegreeError
/// (vanishing leading coefficient) or InsufficientMomentsError.
template <Field F>
Polynomial<F> solve_polynomial(const MomentSequence<F>& m, std::size_t n);

/// P_n = det A_n / det B_n with det A_n expanded along its first row
/// (1, x, ..., x^n).
template <Field F>
Polynomial<F> polynomial_via_determinants(const MomentSequence<F>& m, std::size_t n);

/// G_n = <x P_n^2> = det C_n det C_{n+1} / (det B_n)^2. Needs m_0..m_{2n+1}.
template <Field F>
F normalization(const MomentSequence<F>& m, std::size_t n);

}  // namespace orthoieq

#endif  // ORTHOIEQ_HANKEL_HPP
