#ifndef ORTHOIEQ_QUADRATURE_HPP
#define ORTHOIEQ_QUADRATURE_HPP

// Double-exponential (tanh-sinh) quadrature for vector-valued integrands on
// finite, semi-infinite, and infinite intervals.
//
// Semi-infinite ranges are first remapped with x = alpha + u/(1-u); the real
// line is split at 0. Endpoint exponents decide how far the trapezoid sum
// runs toward each end: an algebraic singularity d^s is followed until
// d^(1+s) drops below the working precision.

#include "orthoieq/expression.hpp"
#include "orthoieq/numeric.hpp"
#include "orthoieq/weight.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace orthoieq {

struct QuadratureOptions {
    /// Relative-dominant target: |estimate| <= tolerance * max(1, |value|).
    Real tolerance;
    int max_level = 12;
    /// Only the first `checked` entries must converge; later ones are rough
    /// companions (scales, magnitudes).
    std::size_t checked = static_cast<std::size_t>(-1);
};

/// Default options: tolerance 10^(10-p).
QuadratureOptions default_quadrature_options();

struct QuadratureResult {
    std::vector<Real> values;
    /// |S_l - S_{l-1}| for the final level l; an upper bound in practice.
    std::vector<Real> errors;
    int level = 0;
    std::size_t evaluations = 0;
};

/// Integrand writes `dims` values at the point. Non-finite output drops the
/// node and stops the sweep on that side.
using VectorIntegrand = std::function<void(const EvalPoint&, std::vector<Real>&)>;

/// Throws QuadratureError (worst entry) when the target is not met by
/// options.max_level.
QuadratureResult integrate(const Interval& interval, const EndpointExponents& exponents, std::size_t dims,
                           const VectorIntegrand& f, const QuadratureOptions& options);

}  // namespace orthoieq

#endif  // ORTHOIEQ_QUADRATURE_HPP
