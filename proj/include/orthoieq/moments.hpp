#ifndef ORTHOIEQ_MOMENTS_HPP
#define ORTHOIEQ_MOMENTS_HPP

#include "orthoieq/expression.hpp"
#include "orthoieq/moment_sequence.hpp"
#include "orthoieq/quadrature.hpp"
#include "orthoieq/weight.hpp"

#include <cstddef>
#include <vector>

namespace orthoieq {

/// m_0..m_{count-1} of a normalized weight.
///
/// Presets are analytic (Gamma/Beta ratios, exact when the parameters are
/// rational), contours use the closed form, expressions use quadrature.
/// Exact mode accepts presets only (ModeError otherwise).
template <Field F>
MomentSequence<F> moments(const Weight& w, std::size_t count);

/// Quadrature moments of any real weight, including presets (for
/// cross-checking the analytic route).
MomentSequence<Complex> quadrature_moments(const Weight& w, std::size_t count, const QuadratureOptions& options);

/// m_0 = 1 and m_n = (1 - (-1)^n) / (n c) with c = i pi (2 winding + 1).
MomentSequence<Complex> contour_moments(int winding, std::size_t count);

template <Field F>
struct GeneralizedMoments {
    /// values[k][j] = <f(x)^k x^j>.
    std::vector<std::vector<F>> values;
    /// Zero when computed by exact contraction.
    Real max_error{0};
    bool by_quadrature = false;

    const F& at(std::size_t k, std::size_t j) const { return values.at(k).at(j); }
};

/// <f^k x^j> for k <= kmax, j <= jmax. Polynomial f is contracted against the
/// moments exactly; anything else goes through quadrature (Float only).
/// Throws ConstantFunctionError when f is constant on the interval.
template <Field F>
GeneralizedMoments<F> generalized_moments(const Weight& w, const Expression& f, std::size_t kmax, std::size_t jmax);

/// Throws ConstantFunctionError when f does not vary over the interval.
void require_nonconstant(const Weight& w, const Expression& f);

/// <x^j g(P(x))> for j = 0..jmax by quadrature; P must have real coefficients.
std::vector<Real> composed_moments(const Weight& w, const Expression& g, const Polynomial<Complex>& p,
                                   std::size_t jmax, Real& max_error);

}  // namespace orthoieq

#endif  // ORTHOIEQ_MOMENTS_HPP
