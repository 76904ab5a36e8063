#ifndef ORTHOIEQ_TESTS_SUPPORT_HPP
#define ORTHOIEQ_TESTS_SUPPORT_HPP

#include "orthoieq/numeric.hpp"
#include "orthoieq/polynomial.hpp"

#include <random>
#include <vector>

namespace testing {

using orthoieq::Complex;
using orthoieq::Integer;
using orthoieq::Rational;
using orthoieq::Real;

inline Rational rat(long long num, long long den = 1) { return Rational(Integer(num), Integer(den)); }

inline Complex cplx(const Rational& re, const Rational& im = Rational(0)) { return Complex(Real(re), Real(im)); }

/// Uniform rationals num/den with |num| <= 40, 1 <= den <= 12.
class RationalSource {
public:
    explicit RationalSource(std::uint64_t seed) : rng_(seed) {}
    Rational next() {
        std::uniform_int_distribution<int> num(-40, 40);
        std::uniform_int_distribution<int> den(1, 12);
        return rat(num(rng_), den(rng_));
    }

private:
    std::mt19937_64 rng_;
};

/// Largest coefficientwise |a - b| / max(1, |b|).
inline Real max_relative_gap(const orthoieq::Polynomial<Complex>& a, const orthoieq::Polynomial<Complex>& b) {
    Real worst(0);
    const std::size_t n = std::max(a.degree(), b.degree());
    for (std::size_t k = 0; k <= n; ++k) {
        const Complex x = k <= a.degree() ? a[k] : Complex(0);
        const Complex y = k <= b.degree() ? b[k] : Complex(0);
        worst = std::max(worst, orthoieq::abs(x - y) / std::max(Real(1), orthoieq::abs(y)));
    }
    return worst;
}

}  // namespace testing

#endif  // ORTHOIEQ_TESTS_SUPPORT_HPP
