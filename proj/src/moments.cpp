#include "orthoieq/moments.hpp"

#include "orthoieq/errors.hpp"

#include <algorithm>

namespace orthoieq {

namespace {

// m_n = prod_{i<n} (a + i) / (a + b + i): normalized Beta(a, b) moments on (0, 1).
std::vector<Rational> beta_moments(const Rational& a, const Rational& b, std::size_t count) {
    std::vector<Rational> m;
    m.reserve(count);
    Rational current(1);
    for (std::size_t n = 0; n < count; ++n) {
        m.push_back(current);
        current *= (a + n) / (a + b + n);
    }
    return m;
}

std::vector<Rational> preset_moments(const Preset& p, std::size_t count) {
    return std::visit(
        [count](const auto& v) -> std::vector<Rational> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, preset::Laguerre>) {
                std::vector<Rational> m;
                Rational current(1);
                for (std::size_t n = 0; n < count; ++n) {
                    m.push_back(current);
                    current *= v.gamma + n;
                }
                return m;
            } else if constexpr (std::is_same_v<T, preset::JacobiAdd>) {
                return beta_moments(v.q - 1, v.p - v.q + 1, count);
            } else if constexpr (std::is_same_v<T, preset::ChebyshevU2Add>) {
                return beta_moments(Rational(1, 2), Rational(3, 2), count);
            } else if constexpr (std::is_same_v<T, preset::JacobiMult>) {
                return beta_moments(v.q, v.p - v.q, count);
            } else if constexpr (std::is_same_v<T, preset::ChebyshevU2Mult>) {
                return beta_moments(Rational(3, 2), Rational(1, 2), count);
            } else {
                std::vector<Rational> m;
                for (std::size_t n = 0; n < count; ++n) m.push_back(n % 2 == 0 ? Rational(1, n + 1) : Rational(0));
                return m;
            }
        },
        p);
}

void require_normalized(const Weight& w) {
    if (!w.is_normalized()) throw ConfigError("moments require a normalized weight");
}

Real real_normalization(const Weight& w) {
    require_normalized(w);
    if (w.normalization->imag() != 0) throw ConfigError("weight is not real");
    return w.normalization->real();
}

// Interior sample abscissae over a finite stand-in for the interval.
std::vector<Real> interior_samples(const Interval& iv, int count) {
    Real lo = iv.alpha.is_finite() ? Real(iv.alpha.value()) : (iv.beta.is_finite() ? Real(iv.beta.value()) - 20 : Real(-10));
    Real hi = iv.beta.is_finite() ? Real(iv.beta.value()) : lo + 20;
    std::vector<Real> xs;
    for (int i = 0; i < count; ++i) xs.push_back(lo + (hi - lo) * (Real(i) + Real(1) / 2) / count);
    return xs;
}

}  // namespace

MomentSequence<Complex> contour_moments(int winding, std::size_t count) {
    if (winding < 0) throw ConfigError("winding number must be >= 0");
    MomentSequence<Complex> m;
    m.source = MomentSource::Contour;
    m.winding = winding;
    m.weight_id = "contour(winding=" + std::to_string(winding) + ")";
    const Complex c(Real(0), pi() * (2 * winding + 1));
    for (std::size_t n = 0; n < count; ++n) {
        if (n == 0) {
            m.values.emplace_back(1);
        } else if (n % 2 == 0) {
            m.values.emplace_back(0);
        } else {
            m.values.push_back(Complex(Real(Rational(2, n))) / c);
        }
    }
    return m;
}

MomentSequence<Complex> quadrature_moments(const Weight& w, std::size_t count, const QuadratureOptions& options) {
    const Real divisor = real_normalization(w);
    const auto raw = w.raw_expression();
    if (!raw) throw ConfigError("weight has no real body to integrate");
    auto integrand = [&](const EvalPoint& pt, std::vector<Real>& vals) {
        Real v = evaluate(*raw, pt);
        for (std::size_t n = 0; n < count; ++n) {
            vals[n] = v;
            v *= pt.x;
        }
    };
    QuadratureResult q = integrate(w.interval, w.exponents, count, integrand, options);
    MomentSequence<Complex> m;
    m.source = MomentSource::Quadrature;
    m.weight_id = w.id();
    for (std::size_t n = 0; n < count; ++n) {
        m.values.emplace_back(q.values[n] / divisor);
        m.errors.push_back(q.errors[n] / bmp::abs(divisor));
    }
    return m;
}

template <Field F>
MomentSequence<F> moments(const Weight& w, std::size_t count) {
    require_normalized(w);
    if (const auto* p = std::get_if<Preset>(&w.body)) {
        MomentSequence<Rational> exact = make_moments(preset_moments(*p, count), w.id());
        if constexpr (is_exact_v<F>) {
            return exact;
        } else {
            return to_float(exact);
        }
    }
    if constexpr (is_exact_v<F>) {
        throw ModeError("exact moments are only available for preset weights");
    } else {
        if (const auto* c = std::get_if<ContourWeight>(&w.body)) return contour_moments(c->winding, count);
        return quadrature_moments(w, count, default_quadrature_options());
    }
}

void require_nonconstant(const Weight& w, const Expression& f) {
    if (auto poly = to_polynomial(f)) {
        if (poly->trimmed().degree() == 0) throw ConstantFunctionError("f is constant");
        return;
    }
    if (w.is_contour()) return;
    Real lo = std::numeric_limits<Real>::infinity();
    Real hi = -std::numeric_limits<Real>::infinity();
    Real scale(1);
    for (const Real& x : interior_samples(w.interval, 17)) {
        Real v = evaluate(f, x);
        if (!bmp::isfinite(v)) continue;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        scale = std::max(scale, bmp::abs(v));
    }
    if (!(hi - lo > precision_tolerance(10) * scale)) throw ConstantFunctionError("f is constant on the interval");
}

template <Field F>
GeneralizedMoments<F> generalized_moments(const Weight& w, const Expression& f, std::size_t kmax, std::size_t jmax) {
    require_nonconstant(w, f);
    GeneralizedMoments<F> out;
    out.values.assign(kmax + 1, std::vector<F>(jmax + 1, F(0)));

    if (auto poly = to_polynomial(f)) {
        const Polynomial<Rational> fr = poly->trimmed();
        const std::size_t count = fr.degree() * kmax + jmax + 1;
        MomentSequence<F> m = moments<F>(w, count);
        Polynomial<F> fk = Polynomial<F>::constant(F(1));
        Polynomial<F> ff;
        if constexpr (is_exact_v<F>) {
            ff = fr;
        } else {
            ff = to_float(fr);
        }
        for (std::size_t k = 0; k <= kmax; ++k) {
            for (std::size_t j = 0; j <= jmax; ++j) out.values[k][j] = inner_moment(fk, j, m);
            fk = fk * ff;
        }
        out.max_error = m.max_error() * std::max<std::size_t>(1, count);
        return out;
    }

    if constexpr (is_exact_v<F>) {
        throw ModeError("non-polynomial f requires floating-point quadrature");
    } else {
        const Real divisor = real_normalization(w);
        const auto raw = w.raw_expression();
        if (!raw) throw ConfigError("contour weights support polynomial f only");
        const std::size_t cols = jmax + 1;
        auto integrand = [&](const EvalPoint& pt, std::vector<Real>& vals) {
            const Real wx = evaluate(*raw, pt);
            const Real fx = evaluate(f, pt);
            Real fk = wx;
            for (std::size_t k = 0; k <= kmax; ++k) {
                Real v = fk;
                for (std::size_t j = 0; j < cols; ++j) {
                    vals[k * cols + j] = v;
                    v *= pt.x;
                }
                fk *= fx;
            }
        };
        QuadratureResult q =
            integrate(w.interval, w.exponents, (kmax + 1) * cols, integrand, default_quadrature_options());
        out.by_quadrature = true;
        for (std::size_t k = 0; k <= kmax; ++k) {
            for (std::size_t j = 0; j < cols; ++j) {
                out.values[k][j] = Complex(q.values[k * cols + j] / divisor);
                out.max_error = std::max(out.max_error, q.errors[k * cols + j] / bmp::abs(divisor));
            }
        }
        return out;
    }
}

std::vector<Real> composed_moments(const Weight& w, const Expression& g, const Polynomial<Complex>& p,
                                   std::size_t jmax, Real& max_error) {
    const Real divisor = real_normalization(w);
    const auto raw = w.raw_expression();
    if (!raw) throw ConfigError("contour weights support polynomial f only");
    std::vector<Real> coeffs;
    for (const auto& a : p.coeffs()) {
        if (a.imag() != 0) throw ConfigError("quadrature of f[P(x)] requires a polynomial with real coefficients");
        coeffs.push_back(a.real());
    }
    auto integrand = [&](const EvalPoint& pt, std::vector<Real>& vals) {
        Real px = coeffs.back();
        for (std::size_t k = coeffs.size() - 1; k-- > 0;) px = px * pt.x + coeffs[k];
        Real v = evaluate(*raw, pt) * evaluate(g, px);
        for (std::size_t j = 0; j <= jmax; ++j) {
            vals[j] = v;
            v *= pt.x;
        }
    };
    QuadratureResult q = integrate(w.interval, w.exponents, jmax + 1, integrand, default_quadrature_options());
    std::vector<Real> out;
    max_error = Real(0);
    for (std::size_t j = 0; j <= jmax; ++j) {
        out.push_back(q.values[j] / divisor);
        max_error = std::max(max_error, q.errors[j] / bmp::abs(divisor));
    }
    return out;
}

template MomentSequence<Rational> moments(const Weight&, std::size_t);
template MomentSequence<Complex> moments(const Weight&, std::size_t);
template GeneralizedMoments<Rational> generalized_moments(const Weight&, const Expression&, std::size_t, std::size_t);
template GeneralizedMoments<Complex> generalized_moments(const Weight&, const Expression&, std::size_t, std::size_t);

}  // namespace orthoieq
