#include "orthoieq/numeric.hpp"

#include "orthoieq/errors.hpp"

#include <algorithm>
#include <cctype>

namespace orthoieq {

PrecisionContext::PrecisionContext(unsigned digits)
    : digits_(digits), previous_(Real::default_precision()) {
    if (digits < kMinimumPrecision) {
        throw ConfigError("precision must be at least " + std::to_string(kMinimumPrecision) +
                          " digits, got " + std::to_string(digits));
    }
    Real::default_precision(digits);
}

PrecisionContext::~PrecisionContext() { Real::default_precision(previous_); }

PrecisionContext with_precision(unsigned p) { return PrecisionContext(p); }

unsigned current_precision() { return Real::default_precision(); }

Real pow10(int e) { return bmp::pow(Real(10), e); }

Real precision_tolerance(int shift) {
    return pow10(shift - static_cast<int>(current_precision()));
}

Complex& Complex::operator+=(const Complex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Complex& Complex::operator*=(const Complex& o) {
    if (im_ == 0 && o.im_ == 0) {
        re_ *= o.re_;
        return *this;
    }
    Real re = re_ * o.re_ - im_ * o.im_;
    Real im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    if (o.im_ == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    // Smith's algorithm avoids overflow in the denominator.
    if (bmp::abs(o.re_) >= bmp::abs(o.im_)) {
        Real r = o.im_ / o.re_;
        Real d = o.re_ + r * o.im_;
        Real re = (re_ + im_ * r) / d;
        Real im = (im_ - re_ * r) / d;
        re_ = std::move(re);
        im_ = std::move(im);
    } else {
        Real r = o.re_ / o.im_;
        Real d = o.im_ + r * o.re_;
        Real re = (re_ * r + im_) / d;
        Real im = (im_ * r - re_) / d;
        re_ = std::move(re);
        im_ = std::move(im);
    }
    return *this;
}

Real abs(const Complex& z) {
    if (z.imag() == 0) return bmp::abs(z.real());
    if (z.real() == 0) return bmp::abs(z.imag());
    return bmp::hypot(z.real(), z.imag());
}

Complex conj(const Complex& z) { return Complex(z.real(), -z.imag()); }

Complex imag_unit() { return Complex(Real(0), Real(1)); }

Real pi() { return boost::math::constants::pi<Real>(); }

Complex to_complex(const Rational& q) { return Complex(q); }

std::string to_decimal(const Real& x, unsigned digits) {
    if (x == 0) return "0";
    return x.str(static_cast<std::streamsize>(digits));
}

std::string to_string(const Rational& q) { return q.str(); }

std::string to_string(const Complex& z, unsigned digits) {
    if (z.imag() == 0) return to_decimal(z.real(), digits);
    std::string im = to_decimal(bmp::abs(z.imag()), digits);
    if (z.real() == 0) return (z.imag() < 0 ? "-" : "") + im + "i";
    return to_decimal(z.real(), digits) + (z.imag() < 0 ? " - " : " + ") + im + "i";
}

namespace {

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(const std::string& input) {
    std::string text = input;
    text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }),
               text.end());
    auto fail = [&]() -> Rational { throw ConfigError("malformed number '" + input + "'"); };
    if (text.empty()) return fail();

    if (auto slash = text.find('/'); slash != std::string::npos) {
        Rational num = parse_rational(text.substr(0, slash));
        Rational den = parse_rational(text.substr(slash + 1));
        if (den == 0) throw ConfigError("zero denominator in '" + input + "'");
        return num / den;
    }

    bool negative = false;
    std::size_t pos = 0;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string mantissa = text.substr(pos);
    long exponent = 0;
    if (auto e = mantissa.find_first_of("eE"); e != std::string::npos) {
        std::string exp_text = mantissa.substr(e + 1);
        mantissa = mantissa.substr(0, e);
        std::string digits = exp_text;
        if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) digits = digits.substr(1);
        if (!all_digits(digits) || digits.size() > 6) return fail();
        exponent = std::stol(exp_text);
    }
    std::string int_part = mantissa;
    std::string frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string::npos) {
        int_part = mantissa.substr(0, dot);
        frac_part = mantissa.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) return fail();
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
        return fail();
    }
    // A leading zero would make the digit string octal.
    std::string digits = int_part + frac_part;
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
    Integer numerator(digits.empty() ? std::string("0") : digits);
    exponent -= static_cast<long>(frac_part.size());
    Rational value(numerator);
    Integer scale = bmp::pow(Integer(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0) {
        value /= Rational(scale);
    } else {
        value *= Rational(scale);
    }
    return negative ? Rational(-value) : value;
}

Scalar::Scalar(Complex z) : value_(std::move(z)), precision_(current_precision()) {}

const Rational& Scalar::exact() const {
    if (const auto* q = std::get_if<Rational>(&value_)) return *q;
    throw ModeError("cannot convert a floating-point scalar to an exact rational");
}

Complex Scalar::to_float() const {
    if (const auto* q = std::get_if<Rational>(&value_)) return Complex(*q);
    return std::get<Complex>(value_);
}

bool close(const Complex& a, const Complex& b, const Real& tol) {
    Real scale = std::max({Real(1), abs(a), abs(b)});
    return abs(a - b) <= tol * scale;
}

bool scalar_eq(const Scalar& a, const Scalar& b, const Real& tol) {
    if (a.mode() == Mode::Exact && b.mode() == Mode::Exact) return a.exact() == b.exact();
    return close(a.to_float(), b.to_float(), tol);
}

}  // namespace orthoieq
