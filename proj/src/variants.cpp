#include "orthoieq/variants.hpp"

#include "orthoieq/errors.hpp"
#include "orthoieq/linalg.hpp"
#include "orthoieq/moments.hpp"

#include <algorithm>
#include <random>

namespace orthoieq {

namespace {

template <Field F>
Polynomial<F> lift(const Polynomial<Rational>& p) {
    if constexpr (is_exact_v<F>) {
        return p;
    } else {
        return to_float(p);
    }
}

template <Field F>
Magnitude<F> residual_of(const F& a, const F& b) {
    return magnitude(a - b);
}

template <Field F>
bool negligible(const F& v, const Real& scale) {
    if constexpr (is_exact_v<F>) {
        return v == 0;
    } else {
        return abs(v) <= singularity_threshold() * scale;
    }
}

template <Field F>
Real coefficient_scale(const std::vector<F>& a) {
    Real s(0);
    for (const auto& c : a) s = std::max(s, magnitude_real(c));
    return s;
}

template <Field F>
Real one_norm(const Polynomial<F>& p) {
    Real s(0);
    for (const auto& c : p.coeffs()) s += magnitude_real(c);
    return s;
}

// Image of P under y -> <P(y) P(x + s(y))> given h_j = <P(y) s(y)^j>.
template <Field F>
Polynomial<F> shift_image(const Polynomial<F>& p, const std::vector<F>& h) {
    const std::size_t n = p.degree();
    std::vector<F> out(n + 1, F(0));
    for (unsigned k = 0; k <= n; ++k) {
        if (is_zero(p[k])) continue;
        for (unsigned i = 0; i <= k; ++i) out[i] += p[k] * from_rational<F>(Rational(binomial(k, i))) * h[k - i];
    }
    return Polynomial<F>(std::move(out));
}

// h_j = <g(P(y)) y^j>, j = 0..jmax, exactly when g is a polynomial.
template <Field F>
std::vector<F> composed_values(const Polynomial<F>& p, const Expression& g, const Weight& w, std::size_t jmax,
                               Real& error) {
    error = Real(0);
    if (auto gp = to_polynomial(g)) {
        const Polynomial<F> composed = compose(lift<F>(*gp), p);
        const MomentSequence<F> m = moments<F>(w, composed.degree() + jmax + 1);
        std::vector<F> out;
        for (std::size_t j = 0; j <= jmax; ++j) out.push_back(inner_moment(composed, j, m));
        error = m.max_error() * one_norm(composed);
        return out;
    }
    if constexpr (is_exact_v<F>) {
        throw ModeError("non-polynomial f requires floating-point quadrature");
    } else {
        std::vector<Complex> out;
        for (auto& v : composed_moments(w, g, p, jmax, error)) out.emplace_back(std::move(v));
        return out;
    }
}

template <Field F>
F sample_point(const Rational& lo, const Rational& hi, const Rational& u) {
    return from_rational<F>(lo + (hi - lo) * u);
}

}  // namespace

template <Field F>
std::string describe(const EquationForm<F>& f) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, form::Additive>) {
                return "additive";
            } else if constexpr (std::is_same_v<T, form::Multiplicative>) {
                std::string s = "multiplicative{";
                for (std::size_t i = 0; i < v.pattern.size(); ++i) s += (i ? "," : "") + std::to_string(v.pattern[i]);
                return s + "}";
            } else if constexpr (std::is_same_v<T, form::LinearShift<F>>) {
                if constexpr (is_exact_v<F>) {
                    return "shift(a=" + v.a.str() + ",b=" + v.b.str() + ")";
                } else {
                    return "shift(a=" + to_string(v.a, 17) + ",b=" + to_string(v.b, 17) + ")";
                }
            } else if constexpr (std::is_same_v<T, form::Functional>) {
                return "functional(f=" + print(v.f) + ")";
            } else {
                return "arbitrary-f(f=" + print(v.f) + ")";
            }
        },
        f);
}

template <Field F>
std::vector<F> default_samples(const Weight& w, std::uint64_t seed) {
    const Interval& iv = w.interval;
    const Rational lo = iv.alpha.is_finite() ? iv.alpha.value()
                                             : (iv.beta.is_finite() ? Rational(iv.beta.value() - 10) : Rational(-10));
    const Rational hi = iv.beta.is_finite() ? iv.beta.value() : Rational(lo + 10);
    std::vector<F> xs{from_rational<F>(lo), from_rational<F>((lo + hi) / 2), from_rational<F>(hi)};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 4; ++i) {
        const std::uint64_t bits = rng() >> 44;  // 20 bits
        xs.push_back(sample_point<F>(lo, hi, Rational(Integer(bits), Integer(1u << 20))));
    }
    return xs;
}

template <Field F>
VerificationReport<F> verify(const Polynomial<F>& p, const Weight& w, const EquationForm<F>& eq,
                             const std::vector<F>& samples) {
    if (samples.empty()) throw ConfigError("verification needs at least one sample point");
    const std::size_t n = p.degree();
    Real quad_error(0);

    Polynomial<F> image = std::visit(
        [&](const auto& v) -> Polynomial<F> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, form::Additive>) {
                return additive_image(p, F(0), F(1), moments<F>(w, 2 * n + 1));
            } else if constexpr (std::is_same_v<T, form::LinearShift<F>>) {
                if (is_zero(v.b)) throw ConfigError("linear-shift coefficient b must be nonzero");
                return additive_image(p, v.a, v.b, moments<F>(w, 2 * n + 1));
            } else if constexpr (std::is_same_v<T, form::Multiplicative>) {
                return multiplicative_image(p, moments<F>(w, 2 * n + 1));
            } else if constexpr (std::is_same_v<T, form::Functional>) {
                const GeneralizedMoments<F> gm = generalized_moments<F>(w, v.f, n, n);
                std::vector<F> h(n + 1, F(0));
                for (std::size_t j = 0; j <= n; ++j) {
                    for (std::size_t l = 0; l <= n; ++l) h[j] += p[l] * gm.at(j, l);
                }
                quad_error = gm.max_error * one_norm(p);
                return shift_image(p, h);
            } else {
                return shift_image(p, composed_values(p, v.f, w, n, quad_error));
            }
        },
        eq);

    VerificationReport<F> report{eq, samples, {}, Magnitude<F>(0), Real(0), false};
    Real p_scale(1);
    Real bound(0);
    for (const F& x : samples) {
        const F lhs = eval(p, x);
        const F rhs = eval(image, x);
        Magnitude<F> r = residual_of(lhs, rhs);
        if (r > report.max_residual) report.max_residual = r;
        report.residuals.push_back(std::move(r));
        p_scale = std::max(p_scale, magnitude_real(lhs));
        // Quadrature error in h_j propagates through sum_k |a_k| (1 + |x|)^k.
        Real growth(0);
        Real power(1);
        const Real base = 1 + magnitude_real(x);
        for (std::size_t k = 0; k <= n; ++k) {
            growth += magnitude_real(p[k]) * power;
            power *= base;
        }
        bound = std::max(bound, quad_error * growth);
    }
    report.quadrature_error_bound = bound;
    if constexpr (is_exact_v<F>) {
        report.pass = report.max_residual == 0;
    } else {
        report.pass = report.max_residual <= std::max(10 * bound, precision_tolerance(10) * p_scale);
    }
    return report;
}

std::vector<std::size_t> parity_pattern(std::size_t n) {
    std::vector<std::size_t> s;
    for (std::size_t k = n % 2; k + 2 <= n; k += 2) s.push_back(k);
    return s;
}

std::vector<std::size_t> full_pattern(std::size_t n) {
    std::vector<std::size_t> s(n);
    for (std::size_t k = 0; k < n; ++k) s[k] = k;
    return s;
}

template <Field F>
Polynomial<F> solve_multiplicative(const MomentSequence<F>& m, std::size_t n, const std::vector<std::size_t>& pattern) {
    std::vector<std::size_t> support = pattern;
    std::sort(support.begin(), support.end());
    if (std::adjacent_find(support.begin(), support.end()) != support.end()) {
        throw ConfigError("pattern has repeated indices");
    }
    if (!support.empty() && support.back() >= n) throw ConfigError("pattern indices must lie in 0..n-1");
    support.push_back(n);
    require_moments(m, 2 * n + 1, "multiplicative solve");

    const std::size_t r = support.size();
    Matrix<F> a(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) a(i, j) = m[support[i] + support[j]];
    }
    const std::vector<F> sol = solve_linear(a, std::vector<F>(r, F(1)));
    const Real scale = coefficient_scale(sol);
    std::vector<F> coeffs(n + 1, F(0));
    for (std::size_t i = 0; i < r; ++i) {
        if (negligible(sol[i], scale)) {
            throw InconsistentPatternError("coefficient " + std::to_string(support[i]) +
                                           " assumed nonzero but solves to zero");
        }
        coeffs[support[i]] = sol[i];
    }
    return Polynomial<F>(std::move(coeffs));
}

template <Field F>
PatternEnumeration<F> enumerate_multiplicative(const MomentSequence<F>& m, std::size_t n) {
    if (n == 0 || n >= 63) throw ConfigError("pattern enumeration needs 1 <= n < 63");
    PatternEnumeration<F> out;
    std::vector<Polynomial<F>> distinct;
    const Real tol = precision_tolerance(10);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        PatternOutcome<F> outcome;
        for (std::size_t k = 0; k < n; ++k) {
            if (mask & (std::uint64_t{1} << k)) outcome.pattern.push_back(k);
        }
        try {
            Polynomial<F> p = solve_multiplicative(m, n, outcome.pattern);
            const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const Polynomial<F>& q) {
                for (std::size_t k = 0; k <= n; ++k) {
                    if (!close(p[k], q[k], tol)) return false;
                }
                return true;
            });
            if (!seen) distinct.push_back(p);
            outcome.solution = std::move(p);
        } catch (const InconsistentPatternError& e) {
            outcome.failure = std::string("inconsistent: ") + e.what();
        } catch (const SingularSystemError& e) {
            outcome.failure = std::string("singular: ") + e.what();
        }
        out.outcomes.push_back(std::move(outcome));
    }
    out.distinct_solutions = distinct.size();
    return out;
}

template <Field F>
std::vector<F> parity_measure_moments(const MomentSequence<F>& m, std::size_t count) {
    if (count == 0) return {};
    require_moments(m, count + 2, "parity measure moments");
    std::vector<F> mu;
    for (std::size_t n = 0; n < count; ++n) mu.push_back(n % 2 == 0 ? F(m[n] - m[n + 2]) : F(0));
    return mu;
}

template <Field F>
Polynomial<F> solve_linear_shift(const MomentSequence<F>& m, std::size_t n, const F& a, const F& b) {
    if (is_zero(b)) throw ConfigError("linear-shift coefficient b must be nonzero");
    require_moments(m, 2 * n + 1, "linear-shift solve");
    Matrix<F> sys(n + 1, n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        const Polynomial<F> shift = affine_power(a, b, k);
        for (std::size_t j = 0; j <= n; ++j) sys(k, j) = inner_moment(shift, j, m);
    }
    std::vector<F> rhs(n + 1, F(0));
    rhs[0] = F(1);
    std::vector<F> coeffs = solve_linear(sys, rhs);
    if (negligible(coeffs[n], coefficient_scale(coeffs))) {
        throw DegenerateDegreeError("linear-shift solution of degree " + std::to_string(n) +
                                    " has a vanishing leading coefficient");
    }
    return Polynomial<F>(std::move(coeffs));
}

template <Field F>
Polynomial<F> solve_functional(const Weight& w, const Expression& f, std::size_t n) {
    const GeneralizedMoments<F> gm = generalized_moments<F>(w, f, n, n);
    Matrix<F> sys(n + 1, n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t j = 0; j <= n; ++j) sys(k, j) = gm.at(k, j);
    }
    std::vector<F> rhs(n + 1, F(0));
    rhs[0] = F(1);
    std::vector<F> coeffs = solve_linear(sys, rhs);
    if (negligible(coeffs[n], coefficient_scale(coeffs))) {
        throw DegenerateDegreeError("functional solution of degree " + std::to_string(n) +
                                    " has a vanishing leading coefficient");
    }
    return Polynomial<F>(std::move(coeffs));
}

template <Field F>
OrthogonalityCheck<F> check_functional_orthogonality(const Polynomial<F>& pn, const Polynomial<F>& pm,
                                                     const Weight& w, const Expression& f) {
    if (pm.degree() >= pn.degree()) throw ConfigError("functional orthogonality needs deg Pm < deg Pn");
    const GeneralizedMoments<F> gm = generalized_moments<F>(w, f, pm.degree() + 1, pn.degree());
    OrthogonalityCheck<F> out{F(0), Real(0), false};
    Real scale(0);
    for (std::size_t i = 0; i <= pm.degree(); ++i) {
        for (std::size_t j = 0; j <= pn.degree(); ++j) {
            const F term = pm[i] * pn[j] * gm.at(i + 1, j);
            scale += magnitude_real(term);
            out.value += term;
        }
    }
    if constexpr (is_exact_v<F>) {
        out.within_tolerance = out.value == 0;
    } else {
        out.tolerance = precision_tolerance(10) * std::max(Real(1), scale) +
                        10 * gm.max_error * one_norm(pm) * one_norm(pn);
        out.within_tolerance = abs(out.value) <= out.tolerance;
    }
    return out;
}

template <Field F>
ArbitraryFReport<F> check_arbitrary_f(const Polynomial<F>& p, const Expression& f, const Weight& w, std::size_t n) {
    ArbitraryFReport<F> out;
    Real error(0);
    out.values = composed_values(p, f, w, n, error);
    out.quadrature_error_bound = error;
    out.pass = true;
    for (std::size_t k = 0; k <= n; ++k) {
        const F target = F(k == 0 ? 1 : 0);
        Magnitude<F> dev = residual_of(out.values[k], target);
        if constexpr (is_exact_v<F>) {
            if (dev != 0) out.pass = false;
        } else {
            if (dev > precision_tolerance(10) * std::max(Real(1), abs(out.values[k])) + 10 * error) out.pass = false;
        }
        out.deviations.push_back(std::move(dev));
    }
    return out;
}

#define ORTHOIEQ_INSTANTIATE(F)                                                                              \
    template std::string describe(const EquationForm<F>&);                                                  \
    template std::vector<F> default_samples(const Weight&, std::uint64_t);                                  \
    template VerificationReport<F> verify(const Polynomial<F>&, const Weight&, const EquationForm<F>&,      \
                                          const std::vector<F>&);                                            \
    template Polynomial<F> solve_multiplicative(const MomentSequence<F>&, std::size_t,                      \
                                                const std::vector<std::size_t>&);                           \
    template PatternEnumeration<F> enumerate_multiplicative(const MomentSequence<F>&, std::size_t);         \
    template std::vector<F> parity_measure_moments(const MomentSequence<F>&, std::size_t);                  \
    template Polynomial<F> solve_linear_shift(const MomentSequence<F>&, std::size_t, const F&, const F&);   \
    template Polynomial<F> solve_functional(const Weight&, const Expression&, std::size_t);                 \
    template OrthogonalityCheck<F> check_functional_orthogonality(const Polynomial<F>&, const Polynomial<F>&, \
                                                                  const Weight&, const Expression&);        \
    template ArbitraryFReport<F> check_arbitrary_f(const Polynomial<F>&, const Expression&, const Weight&, std::size_t);

ORTHOIEQ_INSTANTIATE(Rational)
ORTHOIEQ_INSTANTIATE(Complex)

#undef ORTHOIEQ_INSTANTIATE

}  // namespace orthoieq
