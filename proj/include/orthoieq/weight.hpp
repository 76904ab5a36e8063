#ifndef ORTHOIEQ_WEIGHT_HPP
#define ORTHOIEQ_WEIGHT_HPP

#include "orthoieq/expression.hpp"
#include "orthoieq/numeric.hpp"

#include <optional>
#include <string>
#include <variant>

namespace orthoieq {

/// Rational endpoint or +/- infinity.
class ExtendedReal {
public:
    ExtendedReal() = default;
    ExtendedReal(Rational value) : value_(std::move(value)) {}  // NOLINT
    static ExtendedReal infinity(int sign);
    /// Accepts "inf", "+inf", "-inf", "infinity" or a rational literal.
    static ExtendedReal parse(const std::string& text);

    bool is_finite() const noexcept { return sign_ == 0; }
    int infinity_sign() const noexcept { return sign_; }
    /// Finite value; throws std::logic_error on an infinite endpoint.
    const Rational& value() const;
    Real to_real() const;
    std::string str() const;

    friend bool operator<(const ExtendedReal& a, const ExtendedReal& b);
    friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
        return a.sign_ == b.sign_ && (a.sign_ != 0 || a.value_ == b.value_);
    }

private:
    Rational value_;
    int sign_ = 0;
};

struct Interval {
    ExtendedReal alpha;
    ExtendedReal beta;

    /// Throws ConfigError unless alpha < beta.
    Interval(ExtendedReal a, ExtendedReal b);
    bool finite() const { return alpha.is_finite() && beta.is_finite(); }
};

namespace preset {

struct Laguerre {
    Rational gamma;
};
struct JacobiAdd {
    Rational p;
    Rational q;
};
struct ChebyshevU2Add {};
struct JacobiMult {
    Rational p;
    Rational q;
};
struct ChebyshevU2Mult {};
struct UniformSymmetric {};

}  // namespace preset

using Preset = std::variant<preset::Laguerre, preset::JacobiAdd, preset::ChebyshevU2Add, preset::JacobiMult,
                            preset::ChebyshevU2Mult, preset::UniformSymmetric>;

std::string preset_name(const Preset& p);

/// Path from -1 to 1 in the complex plane making `winding` extra positive
/// turns around the origin; w(x) = 1 / (c x) with c = i pi (2 winding + 1).
struct ContourWeight {
    int winding = 0;
};

/// Power-law exponents at alpha and beta (0 when regular).
struct EndpointExponents {
    Real at_alpha{0};
    Real at_beta{0};
};

struct Weight {
    Interval interval;
    std::variant<Preset, Expression, ContourWeight> body;
    /// Divisor applied to the raw body; empty until normalized.
    std::optional<Complex> normalization;
    EndpointExponents exponents;

    bool is_normalized() const { return normalization.has_value(); }
    bool is_contour() const { return std::holds_alternative<ContourWeight>(body); }
    bool is_preset() const { return std::holds_alternative<Preset>(body); }
    /// The raw (unnormalized) body as an expression; contour weights have none.
    std::optional<Expression> raw_expression() const;
    /// Short human-readable descriptor.
    std::string id() const;
};

/// Validates parameter ranges and returns the normalized preset weight.
Weight make_preset(const Preset& p);

/// Normalized contour weight; winding must be >= 0.
Weight make_contour(int winding);

/// Parses w(x) on an interval. Records power-law exponents found as factors
/// x^s, (x - alpha)^s, (beta - x)^s, sqrt(...) of those, or bare x.
/// Throws ParseError, UnknownIdentifierError, or IntegrabilityError when a
/// detected exponent is <= -1.
Weight parse_weight(const std::string& text, const Interval& interval);

/// Divides the body by its integral. Presets use closed-form Gamma/Beta
/// values; expressions use quadrature. Throws IntegrabilityError for
/// divergent integrals and NormalizationError for a vanishing one.
Weight normalize(const Weight& w);

/// Normalized w(x) at a real point; contour weights are rejected.
Real evaluate_weight(const Weight& w, const EvalPoint& point);

}  // namespace orthoieq

#endif  // ORTHOIEQ_WEIGHT_HPP
