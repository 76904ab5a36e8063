#include "orthoieq/errors.hpp"
#include "orthoieq/hankel.hpp"
#include "orthoieq/moments.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace orthoieq;
using testing::rat;
using P = Polynomial<Rational>;

namespace {

MomentSequence<Rational> random_moments(testing::RationalSource& src, std::size_t count) {
    std::vector<Rational> m{rat(1)};
    while (m.size() < count) m.push_back(src.next());
    return make_moments(m);
}

// Closed forms for the first solutions and normalization factors in terms of
// m_1..m_5 with m_0 = 1.
P closed_p1(const MomentSequence<Rational>& m) {
    const Rational d = m[2] - m[1] * m[1];
    return P({m[2] / d, -m[1] / d});
}

P closed_p2(const MomentSequence<Rational>& m) {
    const Rational d = m[4] * (m[2] - m[1] * m[1]) - m[3] * m[3] + 2 * m[1] * m[2] * m[3] - m[2] * m[2] * m[2];
    return P({(m[2] * m[4] - m[3] * m[3]) / d, (m[2] * m[3] - m[1] * m[4]) / d, (m[1] * m[3] - m[2] * m[2]) / d});
}

Rational closed_g(const MomentSequence<Rational>& m, std::size_t n) {
    const Rational c2 = m[1] * m[3] - m[2] * m[2];
    if (n == 0) return m[1];
    if (n == 1) return m[1] * c2 / ((m[2] - m[1] * m[1]) * (m[2] - m[1] * m[1]));
    const Rational d = m[4] * (m[2] - m[1] * m[1]) - m[3] * m[3] + 2 * m[1] * m[2] * m[3] - m[2] * m[2] * m[2];
    const Rational c3 = m[1] * m[3] * m[5] - m[2] * m[2] * m[5] - m[1] * m[4] * m[4] + 2 * m[2] * m[3] * m[4] -
                        m[3] * m[3] * m[3];
    return c2 * c3 / (d * d);
}

std::vector<Preset> additive_presets() {
    return {preset::Laguerre{rat(1)}, preset::Laguerre{rat(2)}, preset::Laguerre{rat(5, 2)},
            preset::JacobiAdd{rat(3), rat(2)}, preset::ChebyshevU2Add{}};
}

}  // namespace

TEST_CASE("first solutions and normalizations match their closed forms") {
    testing::RationalSource src(2024);
    for (int trial = 0; trial < 10; ++trial) {
        const auto m = random_moments(src, 6);
        CHECK(solve_polynomial(m, 0) == P({rat(1)}));
        CHECK(solve_polynomial(m, 1) == closed_p1(m));
        CHECK(solve_polynomial(m, 2) == closed_p2(m));
        CHECK(polynomial_via_determinants(m, 2) == closed_p2(m));
        for (std::size_t n = 0; n <= 2; ++n) CHECK(normalization(m, n) == closed_g(m, n));
    }
}

TEST_CASE("Laguerre gamma = 1 worked example") {
    const auto m = moments<Rational>(make_preset(preset::Laguerre{rat(1)}), 4);
    CHECK(solve_polynomial(m, 1) == P({rat(2), rat(-1)}));
    CHECK(normalization(m, 1) == 2);
    CHECK(hankel_condition(m, 1).determinant == 1);
}

TEST_CASE("Chebyshev first-degree solution") {
    const auto m = moments<Rational>(make_preset(preset::ChebyshevU2Add{}), 3);
    CHECK(solve_polynomial(m, 1) == P({rat(2), rat(-4)}));
}

TEST_CASE("linear conditions, orthogonality and G_n hold exactly") {
    for (const Preset& pr : additive_presets()) {
        const Weight w = make_preset(pr);
        INFO(w.id());
        const auto m = moments<Rational>(w, 20);
        std::vector<P> sols;
        for (std::size_t n = 0; n <= 8; ++n) {
            const P p = solve_polynomial(m, n);
            for (std::size_t k = 0; k <= n; ++k) CHECK(inner_moment(p, k, m) == (k == 0 ? 1 : 0));
            for (const P& q : sols) CHECK(orthogonality(p, q, m) == 0);
            CHECK(orthogonality(p, p, m) == normalization(m, n));
            CHECK(polynomial_via_determinants(m, n) == p);
            sols.push_back(p);
        }
    }
}

TEST_CASE("float solutions satisfy the linear conditions") {
    PrecisionContext ctx(50);
    for (const Preset& pr : additive_presets()) {
        const Weight w = make_preset(pr);
        INFO(w.id());
        const auto m = moments<Complex>(w, 20);
        for (std::size_t n = 0; n <= 8; ++n) {
            const auto p = solve_polynomial(m, n);
            for (std::size_t k = 0; k <= n; ++k) {
                CHECK(abs(inner_moment(p, k, m) - Complex(k == 0 ? 1 : 0)) <= pow10(-35));
            }
        }
    }
}

TEST_CASE("routes agree in float mode") {
    PrecisionContext ctx(50);
    const auto m = moments<Complex>(make_preset(preset::Laguerre{rat(1)}), 22);
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(testing::max_relative_gap(solve_polynomial(m, n), polynomial_via_determinants(m, n)) <= pow10(-35));
    }
}

TEST_CASE("a dependent moment sequence is singular") {
    const auto m = make_moments<Rational>({rat(1), rat(3), rat(9), rat(5)});
    CHECK_FALSE(hankel_condition(m, 1).valid);
    CHECK_THROWS_AS(solve_polynomial(m, 1), SingularHankelError);
    CHECK_THROWS_AS(polynomial_via_determinants(m, 1), SingularHankelError);
    PrecisionContext ctx(50);
    CHECK_THROWS_AS(solve_polynomial(to_float(m), 1), SingularHankelError);
}

TEST_CASE("ill-conditioned but valid systems are accepted") {
    PrecisionContext ctx(50);
    // cond(B_8) is about 1e16 for gamma = 1, well inside 50 digits.
    const auto m = moments<Complex>(make_preset(preset::Laguerre{rat(1)}), 17);
    const auto c = hankel_condition(m, 8);
    CHECK(c.valid);
    CHECK(c.reciprocal_condition < pow10(-10));
}

TEST_CASE("float near-singularity is detected") {
    PrecisionContext ctx(30);
    // m_2 - m_1^2 = 1e-40 is below the working precision.
    const Complex eps(pow10(-40));
    const auto m = make_moments<Complex>({Complex(1), Complex(1), Complex(1) + eps, Complex(1)});
    CHECK_FALSE(hankel_condition(m, 1).valid);
    CHECK_THROWS_AS(solve_polynomial(m, 1), SingularHankelError);
}

TEST_CASE("odd degrees of the symmetric uniform weight are degenerate") {
    const auto m = moments<Rational>(make_preset(preset::UniformSymmetric{}), 10);
    CHECK(solve_polynomial(m, 2) == P({rat(9, 4), rat(0), rat(-15, 4)}));
    CHECK_THROWS_AS(solve_polynomial(m, 1), DegenerateDegreeError);
    CHECK_THROWS_AS(solve_polynomial(m, 3), DegenerateDegreeError);
}

TEST_CASE("moment requirements") {
    const auto m = make_moments<Rational>({rat(1), rat(1), rat(2)});
    CHECK_NOTHROW(solve_polynomial(m, 1));
    CHECK_THROWS_AS(normalization(m, 1), InsufficientMomentsError);
    CHECK_THROWS_AS(solve_polynomial(m, 2), InsufficientMomentsError);
}

TEST_CASE("hankel matrix layout") {
    const auto m = make_moments<Rational>({rat(1), rat(2), rat(3), rat(4), rat(5)});
    const auto b = hankel_matrix(m, 2, 1);
    CHECK(b(0, 0) == 2);
    CHECK(b(0, 1) == 3);
    CHECK(b(1, 0) == 3);
    CHECK(b(1, 1) == 4);
}
