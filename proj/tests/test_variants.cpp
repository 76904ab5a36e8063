#include "orthoieq/errors.hpp"
#include "orthoieq/hankel.hpp"
#include "orthoieq/moments.hpp"
#include "orthoieq/variants.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace orthoieq;
using testing::rat;
using P = Polynomial<Rational>;

namespace {

Weight laguerre1() { return make_preset(preset::Laguerre{rat(1)}); }

// w = 1 on (0, 1): m_n = 1 / (n + 1).
MomentSequence<Rational> unit_uniform(std::size_t count) {
    std::vector<Rational> m;
    for (std::size_t n = 0; n < count; ++n) m.push_back(rat(1, static_cast<long long>(n + 1)));
    return make_moments(m, "uniform(0,1)");
}

Weight unit_uniform_weight() { return normalize(parse_weight("1", Interval(rat(0), rat(1)))); }

std::vector<Rational> points(std::initializer_list<long long> xs) {
    std::vector<Rational> out;
    for (long long x : xs) out.push_back(rat(x));
    return out;
}

}  // namespace

TEST_CASE("verify: Laguerre P1 satisfies the additive equation exactly") {
    const auto rep = verify<Rational>(P({rat(2), rat(-1)}), laguerre1(), form::Additive{}, points({0, 1, 5}));
    CHECK(rep.pass);
    CHECK(rep.max_residual == 0);
    CHECK(rep.residuals.size() == 3);
}

TEST_CASE("verify: 3x solves the multiplicative equation for the symmetric uniform weight") {
    const Weight w = make_preset(preset::UniformSymmetric{});
    const auto rep = verify<Rational>(P({rat(0), rat(3)}), w, form::Multiplicative{{}}, points({-1, 0, 2}));
    CHECK(rep.pass);
    CHECK(rep.max_residual == 0);
}

TEST_CASE("verify: the constant solution") {
    PrecisionContext ctx(50);
    const Weight w = normalize(parse_weight("exp(-(x^2))", Interval(ExtendedReal::infinity(-1), ExtendedReal::infinity(1))));
    const Polynomial<Complex> one({Complex(1)});
    const auto samples = default_samples<Complex>(w);
    CHECK(verify(one, w, EquationForm<Complex>{form::Additive{}}, samples).pass);
    CHECK(verify(one, w, EquationForm<Complex>{form::Multiplicative{{}}}, samples).pass);
    CHECK(verify(one, w, EquationForm<Complex>{form::Functional{parse_expression("sin(x)")}}, samples).pass);
    CHECK(verify(one, w, EquationForm<Complex>{form::ArbitraryF{parse_expression("x^3")}}, samples).pass);
}

TEST_CASE("verify: a perturbed coefficient fails") {
    const auto rep = verify<Rational>(P({rat(2), rat(-1) + rat(1, 1000)}), laguerre1(), form::Additive{},
                                      default_samples<Rational>(laguerre1()));
    CHECK_FALSE(rep.pass);
    CHECK(rep.max_residual > 0);
    PrecisionContext ctx(50);
    const auto frep = verify(Polynomial<Complex>({Complex(2), Complex(Real("-0.999999"))}), laguerre1(),
                             EquationForm<Complex>{form::Additive{}}, default_samples<Complex>(laguerre1()));
    CHECK_FALSE(frep.pass);
}

TEST_CASE("verify: float solver output on every additive preset") {
    PrecisionContext ctx(50);
    const std::vector<Preset> presets{preset::Laguerre{rat(1)}, preset::Laguerre{rat(5, 2)},
                                      preset::JacobiAdd{rat(3), rat(2)}, preset::ChebyshevU2Add{}};
    for (const Preset& pr : presets) {
        const Weight w = make_preset(pr);
        INFO(w.id());
        const auto m = moments<Complex>(w, 18);
        const auto samples = default_samples<Complex>(w);
        for (std::size_t n = 0; n <= 8; ++n) {
            const auto rep = verify(solve_polynomial(m, n), w, EquationForm<Complex>{form::Additive{}}, samples);
            CHECK(rep.pass);
            CHECK(rep.max_residual <= precision_tolerance(12));
        }
    }
}

TEST_CASE("verify rejects an empty sample list") {
    CHECK_THROWS_AS(verify<Rational>(P({rat(1)}), laguerre1(), form::Additive{}, {}), ConfigError);
}

TEST_CASE("default samples are reproducible and finite") {
    const Weight w = laguerre1();
    const auto a = default_samples<Rational>(w);
    CHECK(a.size() == 7);
    CHECK(a == default_samples<Rational>(w));
    CHECK(a != default_samples<Rational>(w, 99));
    CHECK(a[0] == 0);
    CHECK(a[2] == 10);
    for (std::size_t i = 3; i < 7; ++i) CHECK((a[i] >= 0 && a[i] <= 10));
    const auto s = default_samples<Rational>(make_preset(preset::UniformSymmetric{}));
    CHECK(s[0] == -1);
    CHECK(s[1] == 0);
    CHECK(s[2] == 1);
}

TEST_CASE("multiplicative: full and sparse patterns on the unit uniform weight") {
    const auto m = unit_uniform(5);
    // a + b/2 = 1, a/2 + b/3 = 1.
    CHECK(solve_multiplicative(m, 1, full_pattern(1)) == P({rat(-2), rat(6)}));
    // Only a_1: b <x^2> = b/3 = 1.
    CHECK(solve_multiplicative(m, 1, {}) == P({rat(0), rat(3)}));
    CHECK(solve_multiplicative(m, 0, {}) == P({rat(1)}));
}

TEST_CASE("multiplicative: symmetric uniform parity solution of degree 1") {
    const auto m = moments<Rational>(make_preset(preset::UniformSymmetric{}), 5);
    CHECK(solve_multiplicative(m, 1, parity_pattern(1)) == P({rat(0), rat(3)}));
}

TEST_CASE("multiplicative: self-inconsistent and malformed patterns") {
    // For m = (1, 1, 2) the full pattern at n = 1 forces a_1 = 0.
    const auto m = moments<Rational>(laguerre1(), 5);
    CHECK_THROWS_AS(solve_multiplicative(m, 1, full_pattern(1)), InconsistentPatternError);
    CHECK_THROWS_AS(solve_multiplicative(m, 2, {0, 0}), ConfigError);
    CHECK_THROWS_AS(solve_multiplicative(m, 2, {2}), ConfigError);
}

TEST_CASE("multiplicative: enumeration") {
    const auto m = unit_uniform(13);
    const auto one = enumerate_multiplicative(m, 1);
    REQUIRE(one.outcomes.size() == 2);
    CHECK(one.outcomes[0].pattern.empty());
    CHECK(*one.outcomes[0].solution == P({rat(0), rat(3)}));
    CHECK(*one.outcomes[1].solution == P({rat(-2), rat(6)}));
    CHECK(one.distinct_solutions == 2);
    const auto three = enumerate_multiplicative(m, 3);
    CHECK(three.outcomes.size() == 8);
    std::size_t solved = 0;
    for (const auto& o : three.outcomes) {
        if (o.solution) {
            ++solved;
            for (std::size_t k = 0; k < 3; ++k) {
                const bool listed = std::find(o.pattern.begin(), o.pattern.end(), k) != o.pattern.end();
                CHECK(listed == !is_zero((*o.solution)[k]));
            }
        } else {
            CHECK_FALSE(o.failure.empty());
        }
    }
    CHECK(three.distinct_solutions == solved);
    // Failures are data, not exceptions.
    const auto lag = enumerate_multiplicative(moments<Rational>(laguerre1(), 5), 1);
    CHECK_FALSE(lag.outcomes[1].solution.has_value());
    CHECK_THROWS_AS(enumerate_multiplicative(m, 0), ConfigError);
}

TEST_CASE("multiplicative: full-pattern solutions are orthogonal under (1-x) w") {
    auto check_family = [](const MomentSequence<Rational>& m) {
        std::vector<P> sols;
        for (std::size_t n = 0; n <= 6; ++n) {
            const P p = solve_multiplicative(m, n, full_pattern(n));
            for (const P& q : sols) {
                const P g = p * q * P({rat(1), rat(-1)});
                Rational s(0);
                for (std::size_t k = 0; k <= g.degree(); ++k) s += g[k] * m[k];
                CHECK(s == 0);
            }
            sols.push_back(p);
        }
    };
    check_family(unit_uniform(15));
    check_family(moments<Rational>(make_preset(preset::JacobiMult{rat(3), rat(2)}), 15));
    check_family(moments<Rational>(make_preset(preset::ChebyshevU2Mult{}), 15));
}

TEST_CASE("multiplicative: parity class on the symmetric uniform weight") {
    const auto m = moments<Rational>(make_preset(preset::UniformSymmetric{}), 20);
    std::vector<P> sols;
    for (std::size_t n = 0; n <= 7; ++n) {
        const P p = solve_multiplicative(m, n, parity_pattern(n));
        for (std::size_t k = 0; k <= n; ++k) {
            if ((n - k) % 2 == 1) CHECK(p[k] == 0);
        }
        for (std::size_t j = 0; j < sols.size(); ++j) {
            if ((n - j) % 2 != 0) continue;
            // Same parity: orthogonal under (1 - x^2) w.
            const P g = p * sols[j] * P({rat(1), rat(0), rat(-1)});
            Rational s(0);
            for (std::size_t k = 0; k <= g.degree(); ++k) s += g[k] * m[k];
            CHECK(s == 0);
        }
        sols.push_back(p);
    }
}

TEST_CASE("parity measure moments") {
    const auto m = moments<Rational>(make_preset(preset::UniformSymmetric{}), 8);
    const auto mu = parity_measure_moments(m, 5);
    REQUIRE(mu.size() == 5);
    CHECK(mu[0] == rat(2, 3));
    CHECK(mu[2] == rat(2, 15));
    CHECK(mu[1] == 0);
    CHECK(mu[3] == 0);
    // Odd entries vanish even when the odd moments do not.
    const auto lag = parity_measure_moments(moments<Rational>(laguerre1(), 8), 5);
    CHECK(lag[1] == 0);
    CHECK(lag[0] == -1);
    CHECK_THROWS_AS(parity_measure_moments(m, 8), InsufficientMomentsError);
}

TEST_CASE("linear shift") {
    const auto lm = moments<Rational>(laguerre1(), 18);
    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(solve_linear_shift(lm, n, rat(0), rat(1)) == solve_polynomial(lm, n));
        CHECK(solve_linear_shift(lm, n, rat(0), rat(2)) == solve_polynomial(lm, n));
        CHECK(solve_linear_shift(lm, n, rat(0), rat(-3, 7)) == solve_polynomial(lm, n));
    }
    const auto um = unit_uniform(15);
    CHECK(solve_linear_shift(um, 1, rat(1), rat(-1)) == P({rat(-2), rat(6)}));
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(solve_linear_shift(um, n, rat(1), rat(-1)) == solve_multiplicative(um, n, full_pattern(n)));
    }
    CHECK_THROWS_AS(solve_linear_shift(um, 1, rat(1), rat(0)), ConfigError);
    // For Laguerre, <(1 - x) P> = 0 and <P> = 1 force a_1 = 0.
    CHECK_THROWS_AS(solve_linear_shift(lm, 1, rat(1), rat(-1)), DegenerateDegreeError);
}

TEST_CASE("linear shift conditions and verification") {
    PrecisionContext ctx(50);
    const Weight w = make_preset(preset::JacobiAdd{rat(3), rat(2)});
    const auto m = moments<Complex>(w, 16);
    const Complex a(Real("0.5"), Real("0.25"));
    const Complex b(Real(2));
    for (std::size_t n = 0; n <= 5; ++n) {
        const auto p = solve_linear_shift(m, n, a, b);
        for (unsigned k = 0; k <= n; ++k) {
            CHECK(abs(shifted_inner(p, k, a, b, m) - Complex(k == 0 ? 1 : 0)) <= pow10(-40));
        }
        CHECK(verify(p, w, EquationForm<Complex>{form::LinearShift<Complex>{a, b}}, default_samples<Complex>(w)).pass);
    }
}

TEST_CASE("functional argument") {
    const Weight w = laguerre1();
    const Expression sq = parse_expression("x^2");
    CHECK(solve_functional<Rational>(w, sq, 1) == P({rat(3, 2), rat(-1, 2)}));
    CHECK(solve_functional<Rational>(w, sq, 0) == P({rat(1)}));
    const auto m = moments<Rational>(w, 12);
    for (std::size_t n = 0; n <= 5; ++n) {
        CHECK(solve_functional<Rational>(w, parse_expression("x"), n) == solve_polynomial(m, n));
    }
    CHECK_THROWS_AS(solve_functional<Rational>(w, parse_expression("4"), 1), ConstantFunctionError);
    const auto rep = verify<Rational>(P({rat(3, 2), rat(-1, 2)}), w, form::Functional{sq}, points({0, 1, 7}));
    CHECK(rep.pass);
    CHECK(rep.max_residual == 0);
}

TEST_CASE("functional orthogonality") {
    const Weight w = laguerre1();
    const Expression sq = parse_expression("x^2");
    std::vector<P> sols;
    for (std::size_t n = 0; n <= 4; ++n) sols.push_back(solve_functional<Rational>(w, sq, n));
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t k = 0; k < n; ++k) {
            const auto c = check_functional_orthogonality(sols[n], sols[k], w, sq);
            CHECK(c.value == 0);
            CHECK(c.within_tolerance);
        }
    }
    CHECK_THROWS_AS(check_functional_orthogonality(sols[1], sols[2], w, sq), ConfigError);
}

TEST_CASE("functional argument with a non-polynomial f") {
    PrecisionContext ctx(50);
    const Weight w = laguerre1();
    const Expression f = parse_expression("sqrt(x)");
    std::vector<Polynomial<Complex>> sols;
    for (std::size_t n = 0; n <= 3; ++n) sols.push_back(solve_functional<Complex>(w, f, n));
    const auto g = generalized_moments<Complex>(w, f, 3, 3);
    for (std::size_t n = 0; n <= 3; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            Complex s(0);
            for (std::size_t j = 0; j <= n; ++j) s += sols[n][j] * g.at(k, j);
            CHECK(abs(s - Complex(k == 0 ? 1 : 0)) <= pow10(-35));
        }
        for (std::size_t k = 0; k < n; ++k) CHECK(check_functional_orthogonality(sols[n], sols[k], w, f).within_tolerance);
    }
    CHECK(verify(sols[2], w, EquationForm<Complex>{form::Functional{f}}, default_samples<Complex>(w)).pass);
}

TEST_CASE("arbitrary f is reported, not solved") {
    const Weight w = laguerre1();
    const Expression id = parse_expression("x");
    const auto m = moments<Rational>(w, 12);
    for (std::size_t n = 0; n <= 4; ++n) CHECK(check_arbitrary_f(solve_polynomial(m, n), id, w, n).pass);
    const auto bad = check_arbitrary_f(P({rat(0), rat(1)}), id, w, 1);
    CHECK_FALSE(bad.pass);
    CHECK(bad.values[0] == 1);
    CHECK(bad.values[1] == 2);
    const auto constant = check_arbitrary_f(P({rat(1)}), parse_expression("x^2"), w, 0);
    CHECK(constant.values[0] == 1);
    CHECK(constant.pass);
}

TEST_CASE("arbitrary f by quadrature") {
    PrecisionContext ctx(50);
    const Weight w = make_preset(preset::ChebyshevU2Add{});
    const auto p = solve_polynomial(moments<Complex>(w, 8), 3);
    const auto rep = check_arbitrary_f(p, parse_expression("x*exp(0)"), w, 3);
    CHECK(rep.pass);
    const auto off = check_arbitrary_f(p, parse_expression("exp(x)"), w, 3);
    CHECK_FALSE(off.pass);
    CHECK(verify(p, w, EquationForm<Complex>{form::ArbitraryF{parse_expression("sin(x)+x-sin(x)")}},
                 default_samples<Complex>(w))
              .pass);
}

TEST_CASE("equation descriptions") {
    CHECK(describe<Rational>(form::Additive{}) == "additive");
    CHECK(describe<Rational>(form::Multiplicative{{0, 2}}) == "multiplicative{0,2}");
    CHECK(describe<Rational>(form::LinearShift<Rational>{rat(1), rat(-1)}) == "shift(a=1,b=-1)");
    CHECK(describe<Rational>(form::Functional{parse_expression("x^2")}) == "functional(f=x^2)");
}

TEST_CASE("expression weight on the unit interval matches hand-built moments") {
    PrecisionContext ctx(50);
    const Weight w = unit_uniform_weight();
    const auto m = moments<Complex>(w, 9);
    const auto exact = unit_uniform(9);
    for (std::size_t n = 0; n < 9; ++n) CHECK(abs(m[n] - Complex(exact[n])) <= pow10(-40));
    const auto p = solve_multiplicative(m, 1, full_pattern(1));
    CHECK(testing::max_relative_gap(p, Polynomial<Complex>({Complex(-2), Complex(6)})) <= pow10(-38));
}
