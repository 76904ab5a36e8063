#ifndef ORTHOIEQ_REFERENCE_HPP
#define ORTHOIEQ_REFERENCE_HPP

// Classical orthogonal polynomials from their three-term recurrences, in
// exact arithmetic, for cross-checking solver output.

#include "orthoieq/numeric.hpp"
#include "orthoieq/polynomial.hpp"

#include <cstddef>

namespace orthoieq::reference {

/// Generalized Laguerre L_n^(gamma), orthogonal for x^gamma e^-x on (0, inf),
/// with L_n(0) = binomial(n + gamma, n). Requires gamma >= 1.
Polynomial<Rational> laguerre(std::size_t n, const Rational& gamma);

/// Monic G_n(p, q, x), orthogonal on (0, 1) for (1-x)^(p-q) x^(q-1).
/// Requires q > 0 and p - q > -1.
Polynomial<Rational> jacobi_G(std::size_t n, const Rational& p, const Rational& q);

/// U_n(2x - 1), orthogonal on (0, 1) for sqrt(x (1 - x)).
Polynomial<Rational> chebyshev_U_star(std::size_t n);

/// Legendre P_n via Bonnet's recurrence.
Polynomial<Rational> legendre(std::size_t n);

}  // namespace orthoieq::reference

namespace orthoieq {

/// c with p = c q. Throws DegreeMismatchError or NotProportionalError
/// (first offending index). Float comparison uses relative tolerance tol.
template <Field F>
F match_up_to_scale(const Polynomial<F>& p, const Polynomial<F>& q, const Real& tol);

}  // namespace orthoieq

#endif  // ORTHOIEQ_REFERENCE_HPP
