#ifndef ORTHOIEQ_VARIANTS_HPP
#define ORTHOIEQ_VARIANTS_HPP

// Generalized integral equations and the verifier that substitutes a
// candidate polynomial into any of them:
//
//   additive         P(x) = <P(y) P(x + y)>
//   multiplicative   P(x) = <P(y) P(x y)>
//   linear shift     P(x) = <P(y) P(x + a + b y)>,   b != 0
//   functional       P(x) = <P(y) P(x + f(y))>
//   arbitrary f      P(x) = <f(P(y)) P(x + y)>
//
// where <g> = integral of w(y) g(y) over the weight's interval.

#include "orthoieq/expression.hpp"
#include "orthoieq/moment_sequence.hpp"
#include "orthoieq/polynomial.hpp"
#include "orthoieq/weight.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace orthoieq {

namespace form {

struct Additive {};

/// Indices (subset of 0..n-1) of coefficients assumed nonzero besides a_n.
struct Multiplicative {
    std::vector<std::size_t> pattern;
};

template <Field F>
struct LinearShift {
    F a;
    F b;
};

struct Functional {
    Expression f;
};

struct ArbitraryF {
    Expression f;
};

}  // namespace form

template <Field F>
using EquationForm =
    std::variant<form::Additive, form::Multiplicative, form::LinearShift<F>, form::Functional, form::ArbitraryF>;

template <Field F>
std::string describe(const EquationForm<F>& f);

template <Field F>
struct VerificationReport {
    EquationForm<F> form;
    std::vector<F> samples;
    /// |P(x) - right-hand side| per sample.
    std::vector<Magnitude<F>> residuals;
    Magnitude<F> max_residual;
    Real quadrature_error_bound{0};
    bool pass = false;
};

/// Seven reproducible sample points: the (finite stand-ins for the) interval
/// ends, its midpoint, and four points drawn from `seed`.
template <Field F>
std::vector<F> default_samples(const Weight& w, std::uint64_t seed = 20240601);

/// Substitutes P into the chosen equation. Additive, shift and
/// multiplicative right-hand sides are finite moment sums; functional and
/// arbitrary-f forms use quadrature unless f is a polynomial.
/// Exact pass means every residual is 0; otherwise
/// max_residual <= max(10 * quadrature bound, 10^(10-p) max(1, |P| on samples)).
template <Field F>
VerificationReport<F> verify(const Polynomial<F>& p, const Weight& w, const EquationForm<F>& form,
                             const std::vector<F>& samples);

/// {n-2, n-4, ...}: the alternating-parity pattern.
std::vector<std::size_t> parity_pattern(std::size_t n);
/// {0, ..., n-1}.
std::vector<std::size_t> full_pattern(std::size_t n);

/// Solves <x^k P> = 1 for k in pattern + {n} with coefficients supported on
/// the same indices. Throws SingularSystemError, or InconsistentPatternError
/// when a coefficient assumed nonzero comes out zero.
template <Field F>
Polynomial<F> solve_multiplicative(const MomentSequence<F>& m, std::size_t n, const std::vector<std::size_t>& pattern);

template <Field F>
struct PatternOutcome {
    std::vector<std::size_t> pattern;
    std::optional<Polynomial<F>> solution;
    std::string failure;
};

template <Field F>
struct PatternEnumeration {
    std::vector<PatternOutcome<F>> outcomes;
    std::size_t distinct_solutions = 0;
};

/// Tries all 2^n patterns; failures are recorded, not thrown.
template <Field F>
PatternEnumeration<F> enumerate_multiplicative(const MomentSequence<F>& m, std::size_t n);

/// mu_n = (1/2) <x^n - x^{n+2}> (1 + (-1)^n) for n = 0..N.
template <Field F>
std::vector<F> parity_measure_moments(const MomentSequence<F>& m, std::size_t count);

/// Solves <(a + b x)^k P> = delta_{k,0}, k = 0..n.
template <Field F>
Polynomial<F> solve_linear_shift(const MomentSequence<F>& m, std::size_t n, const F& a, const F& b);

/// Solves <f(x)^k P> = delta_{k,0}, k = 0..n.
template <Field F>
Polynomial<F> solve_functional(const Weight& w, const Expression& f, std::size_t n);

template <Field F>
struct OrthogonalityCheck {
    F value;
    Real tolerance{0};
    bool within_tolerance = false;
};

/// <f(x) Pn(x) Pm(f(x))> for deg Pm < deg Pn.
template <Field F>
OrthogonalityCheck<F> check_functional_orthogonality(const Polynomial<F>& pn, const Polynomial<F>& pm,
                                                     const Weight& w, const Expression& f);

template <Field F>
struct ArbitraryFReport {
    /// <x^k f(P(x))>, k = 0..n.
    std::vector<F> values;
    std::vector<Magnitude<F>> deviations;
    Real quadrature_error_bound{0};
    bool pass = false;
};

/// Reports how far <x^k f(P)> is from delta_{k,0}; does not solve for P.
template <Field F>
ArbitraryFReport<F> check_arbitrary_f(const Polynomial<F>& p, const Expression& f, const Weight& w, std::size_t n);

}  // namespace orthoieq

#endif  // ORTHOIEQ_VARIANTS_HPP
