#ifndef ORTHOIEQ_NUMERIC_HPP
#define ORTHOIEQ_NUMERIC_HPP

// Scalar regimes used throughout the library: exact rationals (GMP) and
// complex numbers built on variable-precision MPFR reals.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <concepts>
#include <string>
#include <type_traits>
#include <variant>

namespace orthoieq {

namespace bmp = boost::multiprecision;

using Integer = bmp::number<bmp::gmp_int, bmp::et_off>;
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;
using Real = bmp::number<bmp::mpfr_float_backend<0>, bmp::et_off>;

inline constexpr unsigned kDefaultPrecision = 50;
inline constexpr unsigned kMinimumPrecision = 16;

/// Sets the working precision (decimal digits) for every Real created while
/// the context is alive and restores the previous precision on destruction.
///
/// The underlying MPFR default is process-wide, so contexts must be used from
/// one thread at a time.
class PrecisionContext {
public:
    explicit PrecisionContext(unsigned digits);
    ~PrecisionContext();

    PrecisionContext(const PrecisionContext&) = delete;
    PrecisionContext& operator=(const PrecisionContext&) = delete;

    unsigned digits() const noexcept { return digits_; }

private:
    unsigned digits_;
    unsigned previous_;
};

/// Throws ConfigError when p < 16.
PrecisionContext with_precision(unsigned p);

/// Precision (decimal digits) currently in force.
unsigned current_precision();

/// 10^e at the current precision.
Real pow10(int e);

/// The tolerance 10^(shift - p) for the current precision p.
Real precision_tolerance(int shift);

class Complex {
public:
    Complex() : re_(0), im_(0) {}
    Complex(Real re) : re_(std::move(re)), im_(0) {}  // NOLINT: implicit widening is intended
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit Complex(const Rational& q) : re_(q), im_(0) {}
    Complex(int v) : re_(v), im_(0) {}  // NOLINT

    const Real& real() const noexcept { return re_; }
    const Real& imag() const noexcept { return im_; }

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator-(const Complex& a) { return Complex(-a.re_, -a.im_); }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

private:
    Real re_;
    Real im_;
};

Real abs(const Complex& z);
Complex conj(const Complex& z);
/// The imaginary unit.
Complex imag_unit();
Real pi();

template <class F>
concept Field = std::same_as<F, Rational> || std::same_as<F, Complex>;

template <Field F>
inline constexpr bool is_exact_v = std::same_as<F, Rational>;

/// |value| in the natural magnitude type of a field: Rational stays exact.
template <Field F>
using Magnitude = std::conditional_t<is_exact_v<F>, Rational, Real>;

inline Rational magnitude(const Rational& q) { return bmp::abs(q); }
inline Real magnitude(const Complex& z) { return abs(z); }

/// Magnitude as a float regardless of field; used for pivoting and scaling.
inline Real magnitude_real(const Rational& q) { return Real(bmp::abs(q)); }
inline Real magnitude_real(const Complex& z) { return abs(z); }

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const Complex& z) { return z.real() == 0 && z.imag() == 0; }

template <Field F>
F from_rational(const Rational& q) {
    if constexpr (is_exact_v<F>) {
        return q;
    } else {
        return Complex(q);
    }
}

template <Field F>
F from_int(long long v) {
    return from_rational<F>(Rational(v));
}

Complex to_complex(const Rational& q);
inline const Complex& to_complex(const Complex& z) { return z; }

/// Decimal rendering with `digits` significant digits; "-0" is normalized to "0".
std::string to_decimal(const Real& x, unsigned digits);
std::string to_string(const Rational& q);
std::string to_string(const Complex& z, unsigned digits);

/// Exact rational for a decimal literal such as "1.25", "-3", "2e-4", or "1/3".
/// Throws ConfigError on malformed input.
Rational parse_rational(const std::string& text);

enum class Mode { Exact, Float };

/// A value in one of the two regimes. Conversion Exact -> Float is allowed;
/// Float -> Exact is rejected with ModeError.
class Scalar {
public:
    Scalar() : value_(Rational(0)) {}
    Scalar(Rational q) : value_(std::move(q)) {}  // NOLINT
    Scalar(Complex z);                             // NOLINT

    Mode mode() const noexcept { return value_.index() == 0 ? Mode::Exact : Mode::Float; }
    /// Precision of a Float scalar in decimal digits; 0 for Exact.
    unsigned precision() const noexcept { return precision_; }

    const Rational& exact() const;
    Complex to_float() const;

private:
    std::variant<Rational, Complex> value_;
    unsigned precision_ = 0;
};

/// Exact scalars compare exactly (tol ignored); otherwise
/// |a - b| <= tol * max(1, |a|, |b|).
bool scalar_eq(const Scalar& a, const Scalar& b, const Real& tol);

/// Relative-dominant closeness for already-typed values.
bool close(const Complex& a, const Complex& b, const Real& tol);
inline bool close(const Rational& a, const Rational& b, const Real&) { return a == b; }

}  // namespace orthoieq

#endif  // ORTHOIEQ_NUMERIC_HPP
