#include "orthoieq/quadrature.hpp"

#include "orthoieq/errors.hpp"

#include <algorithm>

namespace orthoieq {

namespace {

enum class SegmentKind { Finite, Upper, Lower };

struct Segment {
    SegmentKind kind;
    Rational a;  // Finite, Upper
    Rational b;  // Finite, Lower
    Real left_exponent;
    Real right_exponent;
};

std::vector<Segment> split(const Interval& interval, const EndpointExponents& ex) {
    const auto& lo = interval.alpha;
    const auto& hi = interval.beta;
    if (lo.is_finite() && hi.is_finite()) {
        return {Segment{SegmentKind::Finite, lo.value(), hi.value(), ex.at_alpha, ex.at_beta}};
    }
    if (lo.is_finite()) return {Segment{SegmentKind::Upper, lo.value(), Rational(0), ex.at_alpha, Real(0)}};
    if (hi.is_finite()) return {Segment{SegmentKind::Lower, Rational(0), hi.value(), Real(0), ex.at_beta}};
    return {Segment{SegmentKind::Lower, Rational(0), Rational(0), Real(0), Real(0)},
            Segment{SegmentKind::Upper, Rational(0), Rational(0), Real(0), Real(0)}};
}

// Largest |t| worth visiting toward an end with local behaviour d^s.
Real sweep_limit(const Real& exponent) {
    const Real digits = Real(current_precision() + 10);
    Real strength = Real(1) + exponent;
    if (strength < Real(1) / 64) strength = Real(1) / 64;
    const Real v_max = digits / (2 * strength * bmp::log10(bmp::exp(Real(1))));
    Real t = bmp::asinh(2 * v_max / pi());
    return std::clamp(t, Real(1), Real(12));
}

class Sweep {
public:
    Sweep(const Segment& seg, std::size_t dims, const VectorIntegrand& f)
        : seg_(seg), dims_(dims), f_(f), scratch_(dims), half_pi_(pi() / 2),
          t_left_(sweep_limit(seg.left_exponent)), t_right_(sweep_limit(seg.right_exponent)) {}

    // Adds sum over nodes t = start + k*step, |t| within the sweep limits, of
    // f(x(t)) dx/dt into acc.
    void accumulate(const Real& start, const Real& step, std::vector<Real>& acc, std::size_t& evals) {
        for (Real t = start; t <= t_right_; t += step) visit(t, acc, evals);
        for (Real t = start - step; t >= -t_left_; t -= step) visit(t, acc, evals);
    }

private:
    void visit(const Real& t, std::vector<Real>& acc, std::size_t& evals) {
        const Real v = half_pi_ * bmp::sinh(t);
        const Real e = bmp::exp(-2 * bmp::abs(v));
        const Real near = e / (1 + e);
        const Real far = 1 / (1 + e);
        const Real& u = t < 0 ? near : far;
        const Real& one_minus_u = t < 0 ? far : near;
        const Real du_dt = 2 * half_pi_ * bmp::cosh(t) * u * one_minus_u;

        EvalPoint p;
        Real dx_du;
        switch (seg_.kind) {
            case SegmentKind::Finite: {
                const Real length(Rational(seg_.b - seg_.a));
                p.from_alpha = length * u;
                p.to_beta = length * one_minus_u;
                p.alpha = seg_.a;
                p.beta = seg_.b;
                p.x = t < 0 ? Real(seg_.a) + *p.from_alpha : Real(seg_.b) - *p.to_beta;
                dx_du = length;
                break;
            }
            case SegmentKind::Upper: {
                const Real y = u / one_minus_u;
                p.alpha = seg_.a;
                p.from_alpha = y;
                p.x = Real(seg_.a) + y;
                dx_du = 1 / (one_minus_u * one_minus_u);
                break;
            }
            case SegmentKind::Lower: {
                const Real y = one_minus_u / u;
                p.beta = seg_.b;
                p.to_beta = y;
                p.x = Real(seg_.b) - y;
                dx_du = 1 / (u * u);
                break;
            }
        }
        const Real jac = dx_du * du_dt;
        if (jac == 0 || !bmp::isfinite(jac)) return;
        ++evals;
        f_(p, scratch_);
        for (std::size_t d = 0; d < dims_; ++d) {
            if (!bmp::isfinite(scratch_[d])) return;
        }
        for (std::size_t d = 0; d < dims_; ++d) acc[d] += scratch_[d] * jac;
    }

    const Segment& seg_;
    std::size_t dims_;
    const VectorIntegrand& f_;
    std::vector<Real> scratch_;
    Real half_pi_;
    Real t_left_;
    Real t_right_;
};

}  // namespace

QuadratureOptions default_quadrature_options() { return QuadratureOptions{precision_tolerance(10), 12}; }

QuadratureResult integrate(const Interval& interval, const EndpointExponents& exponents, std::size_t dims,
                           const VectorIntegrand& f, const QuadratureOptions& options) {
    constexpr int kMinLevel = 3;
    QuadratureResult result;
    result.values.assign(dims, Real(0));
    result.errors.assign(dims, Real(0));

    for (const Segment& seg : split(interval, exponents)) {
        Sweep sweep(seg, dims, f);
        // raw[d] holds the plain node sum; the level-l estimate is raw * h.
        std::vector<Real> raw(dims, Real(0));
        sweep.accumulate(Real(0), Real(1), raw, result.evaluations);
        std::vector<Real> previous = raw;
        std::vector<Real> diff(dims, Real(0));
        Real h(1);
        bool converged = false;
        int level = 0;
        while (level < options.max_level) {
            ++level;
            h /= 2;
            sweep.accumulate(h, 2 * h, raw, result.evaluations);
            converged = level >= kMinLevel;
            for (std::size_t d = 0; d < dims; ++d) {
                Real estimate = raw[d] * h;
                diff[d] = bmp::abs(estimate - previous[d]);
                previous[d] = std::move(estimate);
                if (d < options.checked && diff[d] > options.tolerance * std::max(Real(1), bmp::abs(previous[d]))) converged = false;
            }
            if (converged) break;
        }
        if (!converged) {
            std::size_t worst = 0;
            Real worst_ratio(-1);
            for (std::size_t d = 0; d < std::min(dims, options.checked); ++d) {
                Real ratio = diff[d] / std::max(Real(1), bmp::abs(previous[d]));
                if (ratio > worst_ratio) {
                    worst_ratio = ratio;
                    worst = d;
                }
            }
            throw QuadratureError("quadrature did not converge (entry " + std::to_string(worst) +
                                      ", estimate " + to_decimal(diff[worst], 6) + ")",
                                  worst);
        }
        for (std::size_t d = 0; d < dims; ++d) {
            result.values[d] += previous[d];
            result.errors[d] += diff[d];
        }
        result.level = std::max(result.level, level);
    }
    return result;
}

}  // namespace orthoieq
