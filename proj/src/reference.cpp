#include "orthoieq/reference.hpp"

#include "orthoieq/errors.hpp"

#include <algorithm>

namespace orthoieq::reference {

namespace {

using P = Polynomial<Rational>;

P linear(const Rational& c0, const Rational& c1) { return P({c0, c1}); }

}  // namespace

Polynomial<Rational> laguerre(std::size_t n, const Rational& gamma) {
    if (gamma < 1) throw ConfigError("laguerre requires gamma >= 1");
    P prev = P::constant(Rational(1));
    if (n == 0) return prev;
    P cur = linear(1 + gamma, Rational(-1));
    for (std::size_t k = 1; k < n; ++k) {
        // (k+1) L_{k+1} = (2k + 1 + gamma - x) L_k - (k + gamma) L_{k-1}
        P next = linear(2 * Rational(k) + 1 + gamma, Rational(-1)) * cur - prev * Rational(k + gamma);
        next *= Rational(1, k + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial<Rational> jacobi_G(std::size_t n, const Rational& p, const Rational& q) {
    if (!(q > 0) || !(p - q > -1)) throw ConfigError("jacobi_G requires q > 0 and p - q > -1");
    // Monic Jacobi recurrence on [-1, 1] with a = p - q, b = q - 1, carried to
    // [0, 1] by t = 2x - 1.
    const Rational a = p - q;
    const Rational b = q - 1;
    auto diag = [&](std::size_t k) -> Rational {
        if (k == 0) return (b - a) / (a + b + 2);
        const Rational s = 2 * Rational(k) + a + b;
        return (b * b - a * a) / (s * (s + 2));
    };
    auto offdiag = [&](std::size_t k) -> Rational {
        const Rational s = 2 * Rational(k) + a + b;
        if (k == 1) return 4 * (1 + a) * (1 + b) / (s * s * (s + 1));
        return 4 * Rational(k) * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1) * (s - 1));
    };
    P prev = P::constant(Rational(1));
    if (n == 0) return prev;
    P cur = linear(-(1 + diag(0)) / 2, Rational(1));
    for (std::size_t k = 1; k < n; ++k) {
        P next = linear(-(1 + diag(k)) / 2, Rational(1)) * cur - prev * Rational(offdiag(k) / 4);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial<Rational> chebyshev_U_star(std::size_t n) {
    const P t = linear(Rational(-1), Rational(2));
    P prev = P::constant(Rational(1));
    if (n == 0) return prev;
    P cur = t * Rational(2);
    for (std::size_t k = 1; k < n; ++k) {
        P next = t * cur * Rational(2) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial<Rational> legendre(std::size_t n) {
    P prev = P::constant(Rational(1));
    if (n == 0) return prev;
    P cur = P::monomial(1);
    for (std::size_t k = 1; k < n; ++k) {
        // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
        P next = P::monomial(1) * cur * Rational(2 * k + 1) - prev * Rational(k);
        next *= Rational(1, k + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace orthoieq::reference

namespace orthoieq {

template <Field F>
F match_up_to_scale(const Polynomial<F>& p, const Polynomial<F>& q, const Real& tol) {
    if (p.degree() != q.degree()) {
        throw DegreeMismatchError("degrees differ: " + std::to_string(p.degree()) + " vs " +
                                  std::to_string(q.degree()));
    }
    if (is_zero(q.leading())) throw DegreeMismatchError("reference polynomial has a zero leading coefficient");
    const F c = p.leading() / q.leading();
    if constexpr (is_exact_v<F>) {
        for (std::size_t k = 0; k <= p.degree(); ++k) {
            if (p[k] != c * q[k]) throw NotProportionalError("coefficient " + std::to_string(k) + " breaks proportionality", k);
        }
    } else {
        Real scale(0);
        for (std::size_t k = 0; k <= p.degree(); ++k) scale = std::max({scale, abs(p[k]), abs(c * q[k])});
        for (std::size_t k = 0; k <= p.degree(); ++k) {
            if (abs(p[k] - c * q[k]) > tol * scale) {
                throw NotProportionalError("coefficient " + std::to_string(k) + " breaks proportionality", k);
            }
        }
    }
    return c;
}

template Rational match_up_to_scale(const Polynomial<Rational>&, const Polynomial<Rational>&, const Real&);
template Complex match_up_to_scale(const Polynomial<Complex>&, const Polynomial<Complex>&, const Real&);

}  // namespace orthoieq
