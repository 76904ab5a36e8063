#include "orthoieq/weight.hpp"

#include "orthoieq/errors.hpp"
#include "orthoieq/quadrature.hpp"

#include <stdexcept>

namespace orthoieq {

ExtendedReal ExtendedReal::infinity(int sign) {
    ExtendedReal e;
    e.sign_ = sign < 0 ? -1 : 1;
    return e;
}

ExtendedReal ExtendedReal::parse(const std::string& text) {
    if (text == "inf" || text == "+inf" || text == "infinity" || text == "+infinity") return infinity(1);
    if (text == "-inf" || text == "-infinity") return infinity(-1);
    return ExtendedReal(parse_rational(text));
}

const Rational& ExtendedReal::value() const {
    if (sign_ != 0) throw std::logic_error("ExtendedReal::value on an infinite endpoint");
    return value_;
}

Real ExtendedReal::to_real() const {
    if (sign_ > 0) return std::numeric_limits<Real>::infinity();
    if (sign_ < 0) return -std::numeric_limits<Real>::infinity();
    return Real(value_);
}

std::string ExtendedReal::str() const {
    if (sign_ > 0) return "inf";
    if (sign_ < 0) return "-inf";
    return value_.str();
}

bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.sign_ != 0 || b.sign_ != 0) return a.sign_ < b.sign_ || (a.sign_ == 0 && b.sign_ > 0);
    return a.value_ < b.value_;
}

Interval::Interval(ExtendedReal a, ExtendedReal b) : alpha(std::move(a)), beta(std::move(b)) {
    if (!(alpha < beta)) throw ConfigError("interval requires alpha < beta, got (" + alpha.str() + ", " + beta.str() + ")");
}

namespace {

std::string rational_text(const Rational& q) { return "(" + q.str() + ")"; }

struct PresetInfo {
    Interval interval;
    std::string body;
    Rational exp_alpha;
    Rational exp_beta;
};

PresetInfo info(const Preset& p) {
    const Interval unit(Rational(0), Rational(1));
    return std::visit(
        [&](const auto& v) -> PresetInfo {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, preset::Laguerre>) {
                return {Interval(Rational(0), ExtendedReal::infinity(1)),
                        "x^" + rational_text(v.gamma - 1) + "*exp(-x)", v.gamma - 1, Rational(0)};
            } else if constexpr (std::is_same_v<T, preset::JacobiAdd>) {
                return {unit, "x^" + rational_text(v.q - 2) + "*(1-x)^" + rational_text(v.p - v.q), v.q - 2,
                        v.p - v.q};
            } else if constexpr (std::is_same_v<T, preset::ChebyshevU2Add>) {
                return {unit, "(1-x)^(1/2)*x^(-1/2)", Rational(-1, 2), Rational(1, 2)};
            } else if constexpr (std::is_same_v<T, preset::JacobiMult>) {
                return {unit, "(1-x)^" + rational_text(v.p - v.q - 1) + "*x^" + rational_text(v.q - 1), v.q - 1,
                        v.p - v.q - 1};
            } else if constexpr (std::is_same_v<T, preset::ChebyshevU2Mult>) {
                return {unit, "x^(1/2)*(1-x)^(-1/2)", Rational(1, 2), Rational(-1, 2)};
            } else {
                return {Interval(Rational(-1), Rational(1)), "1", Rational(0), Rational(0)};
            }
        },
        p);
}

void validate(const Preset& p) {
    std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, preset::Laguerre>) {
                if (v.gamma < 1) throw ConfigError("laguerre preset requires gamma >= 1");
            } else if constexpr (std::is_same_v<T, preset::JacobiAdd>) {
                if (!(v.q > 1) || !(v.p - v.q > -1)) throw ConfigError("jacobi-add preset requires q > 1 and p - q > -1");
            } else if constexpr (std::is_same_v<T, preset::JacobiMult>) {
                if (!(v.p - v.q > 0) || !(v.q > 0)) throw ConfigError("jacobi-mult preset requires p - q > 0 and q > 0");
            }
        },
        p);
}

Real beta_function(const Real& a, const Real& b) { return bmp::tgamma(a) * bmp::tgamma(b) / bmp::tgamma(a + b); }

Real preset_divisor(const Preset& p) {
    return std::visit(
        [](const auto& v) -> Real {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, preset::Laguerre>) {
                return bmp::tgamma(Real(v.gamma));
            } else if constexpr (std::is_same_v<T, preset::JacobiAdd>) {
                return beta_function(Real(v.q - 1), Real(v.p - v.q + 1));
            } else if constexpr (std::is_same_v<T, preset::JacobiMult>) {
                return beta_function(Real(v.q), Real(v.p - v.q));
            } else if constexpr (std::is_same_v<T, preset::UniformSymmetric>) {
                return Real(2);
            } else {
                return pi() / 2;  // Beta(1/2, 3/2)
            }
        },
        p);
}

bool endpoint_is(const ExtendedReal& e, const Rational& c) { return e.is_finite() && e.value() == c; }

// Power-law exponent of e at alpha and beta, read off products, quotients,
// constant powers and sqrt of the atoms x, x - c, c - x.
EndpointExponents detect(const Expression& e, const Interval& iv) {
    using K = Expression::Kind;
    EndpointExponents out;
    switch (e.kind()) {
        case K::Variable:
            if (endpoint_is(iv.alpha, 0)) out.at_alpha = 1;
            if (endpoint_is(iv.beta, 0)) out.at_beta = 1;
            return out;
        case K::Subtract: {
            const Expression& l = e.lhs();
            const Expression& r = e.rhs();
            if (l.kind() == K::Variable && r.kind() == K::Number) {
                if (endpoint_is(iv.alpha, r.value())) out.at_alpha = 1;
                if (endpoint_is(iv.beta, r.value())) out.at_beta = 1;
            } else if (r.kind() == K::Variable && l.kind() == K::Number) {
                if (endpoint_is(iv.alpha, l.value())) out.at_alpha = 1;
                if (endpoint_is(iv.beta, l.value())) out.at_beta = 1;
            }
            return out;
        }
        case K::Multiply:
        case K::Divide: {
            EndpointExponents a = detect(e.lhs(), iv);
            EndpointExponents b = detect(e.rhs(), iv);
            const int sign = e.kind() == K::Multiply ? 1 : -1;
            out.at_alpha = a.at_alpha + sign * b.at_alpha;
            out.at_beta = a.at_beta + sign * b.at_beta;
            return out;
        }
        case K::Power: {
            auto s = constant_value(e.rhs());
            if (!s) return out;
            EndpointExponents base = detect(e.lhs(), iv);
            out.at_alpha = base.at_alpha * *s;
            out.at_beta = base.at_beta * *s;
            return out;
        }
        case K::Call:
            if (e.function() == Expression::Function::Sqrt) {
                EndpointExponents base = detect(e.lhs(), iv);
                out.at_alpha = base.at_alpha / 2;
                out.at_beta = base.at_beta / 2;
            }
            return out;
        default: return out;
    }
}

void check_exponents(const EndpointExponents& ex) {
    if (ex.at_alpha <= -1 || ex.at_beta <= -1) {
        throw IntegrabilityError("weight has a non-integrable endpoint singularity (exponents " +
                                 to_decimal(ex.at_alpha, 6) + ", " + to_decimal(ex.at_beta, 6) + ")");
    }
}

// x |w(x)| must decay toward an infinite end.
void check_tail(const Expression& raw, const Interval& iv) {
    auto probe = [&](int sign, const Real& anchor) {
        auto r = [&](int e) {
            Real x = anchor + sign * pow10(e);
            return bmp::abs(x * evaluate(raw, x));
        };
        const Real near = r(12);
        const Real far = r(24);
        if (!bmp::isfinite(near) || !bmp::isfinite(far)) {
            if (bmp::isinf(far)) throw IntegrabilityError("weight grows without bound toward infinity");
            return;
        }
        if (far == 0) return;
        if (!(far < near && far < Real(1) / 100)) {
            throw IntegrabilityError("weight does not decay fast enough toward infinity");
        }
    };
    if (iv.beta.infinity_sign() > 0) probe(1, iv.alpha.is_finite() ? Real(iv.alpha.value()) : Real(0));
    if (iv.alpha.infinity_sign() < 0) probe(-1, iv.beta.is_finite() ? Real(iv.beta.value()) : Real(0));
}

}  // namespace

std::string preset_name(const Preset& p) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, preset::Laguerre>) {
                return "laguerre(gamma=" + v.gamma.str() + ")";
            } else if constexpr (std::is_same_v<T, preset::JacobiAdd>) {
                return "jacobi-add(p=" + v.p.str() + ",q=" + v.q.str() + ")";
            } else if constexpr (std::is_same_v<T, preset::ChebyshevU2Add>) {
                return "chebyshev-u2-add";
            } else if constexpr (std::is_same_v<T, preset::JacobiMult>) {
                return "jacobi-mult(p=" + v.p.str() + ",q=" + v.q.str() + ")";
            } else if constexpr (std::is_same_v<T, preset::ChebyshevU2Mult>) {
                return "chebyshev-u2-mult";
            } else {
                return "uniform-symmetric";
            }
        },
        p);
}

std::optional<Expression> Weight::raw_expression() const {
    if (const auto* e = std::get_if<Expression>(&body)) return *e;
    if (const auto* p = std::get_if<Preset>(&body)) return parse_expression(info(*p).body);
    return std::nullopt;
}

std::string Weight::id() const {
    if (const auto* p = std::get_if<Preset>(&body)) return preset_name(*p);
    if (const auto* c = std::get_if<ContourWeight>(&body)) return "contour(winding=" + std::to_string(c->winding) + ")";
    return "expr(" + print(std::get<Expression>(body)) + " on (" + interval.alpha.str() + "," + interval.beta.str() +
           "))";
}

Weight make_preset(const Preset& p) {
    validate(p);
    PresetInfo pi_ = info(p);
    Weight w{pi_.interval, p, std::nullopt, {Real(pi_.exp_alpha), Real(pi_.exp_beta)}};
    return normalize(w);
}

Weight make_contour(int winding) {
    if (winding < 0) throw ConfigError("winding number must be >= 0");
    Weight w{Interval(Rational(-1), Rational(1)), ContourWeight{winding}, std::nullopt, {}};
    return normalize(w);
}

Weight parse_weight(const std::string& text, const Interval& interval) {
    if (text.empty()) throw ParseError("syntax error: empty expression", 1);
    Expression e = parse_expression(text);
    EndpointExponents ex = detect(e, interval);
    check_exponents(ex);
    return Weight{interval, std::move(e), std::nullopt, std::move(ex)};
}

Weight normalize(const Weight& w) {
    Weight out = w;
    if (const auto* c = std::get_if<ContourWeight>(&w.body)) {
        out.normalization = Complex(Real(0), pi() * (2 * c->winding + 1));
        return out;
    }
    if (const auto* p = std::get_if<Preset>(&w.body)) {
        out.normalization = Complex(preset_divisor(*p));
        return out;
    }
    const Expression& raw = std::get<Expression>(w.body);
    check_exponents(w.exponents);
    check_tail(raw, w.interval);
    auto integrand = [&](const EvalPoint& pt, std::vector<Real>& vals) {
        vals[0] = evaluate(raw, pt);
        vals[1] = bmp::abs(vals[0]);
    };
    // |w| may have interior kinks; it only sets the scale for the zero test.
    QuadratureOptions opts = default_quadrature_options();
    opts.checked = 1;
    QuadratureResult q = integrate(w.interval, w.exponents, 2, integrand, opts);
    const Real& total = q.values[0];
    if (bmp::abs(total) <= std::max(10 * q.errors[0], precision_tolerance(10) * q.values[1])) {
        throw NormalizationError("weight integral is numerically zero (" + to_decimal(total, 6) + ")");
    }
    out.normalization = Complex(total);
    return out;
}

Real evaluate_weight(const Weight& w, const EvalPoint& point) {
    if (w.is_contour()) throw ConfigError("contour weights have no pointwise real values");
    if (!w.normalization) throw ConfigError("weight must be normalized before evaluation");
    return evaluate(*w.raw_expression(), point) / w.normalization->real();
}

}  // namespace orthoieq
