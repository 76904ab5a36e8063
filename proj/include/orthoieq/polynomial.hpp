#ifndef ORTHOIEQ_POLYNOMIAL_HPP
#define ORTHOIEQ_POLYNOMIAL_HPP

// Polynomials in the monomial basis and their moment contractions.
//
// Every inner product here is a finite sum over moments; products are formed
// by exact coefficient convolution first, so no quadrature error enters.

#include "orthoieq/moment_sequence.hpp"
#include "orthoieq/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace orthoieq {

template <Field F>
class Polynomial {
public:
    /// The zero polynomial.
    Polynomial() : coeffs_{F(0)} {}
    /// Ascending coefficients a_0..a_n. An empty list is the zero polynomial.
    explicit Polynomial(std::vector<F> coeffs);
    Polynomial(std::initializer_list<F> coeffs) : Polynomial(std::vector<F>(coeffs)) {}

    static Polynomial constant(F c) { return Polynomial(std::vector<F>{std::move(c)}); }
    static Polynomial monomial(std::size_t k, F c = F(1));

    /// Formal degree: index of the last stored coefficient.
    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const F& operator[](std::size_t k) const { return coeffs_.at(k); }
    const F& leading() const { return coeffs_.back(); }
    const std::vector<F>& coeffs() const noexcept { return coeffs_; }

    /// Copy with trailing zero coefficients removed (keeps at least a_0).
    Polynomial trimmed() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const F& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const F& c) { return a *= c; }
    friend Polynomial operator*(const F& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    static Polynomial multiply(const Polynomial& a, const Polynomial& b);

    std::vector<F> coeffs_;
};

/// Exact binomial coefficient.
Integer binomial(unsigned n, unsigned k);

Polynomial<Complex> to_float(const Polynomial<Rational>& p);

/// Horner evaluation.
template <Field F>
F eval(const Polynomial<F>& p, const F& x);

/// p(q(x)).
template <Field F>
Polynomial<F> compose(const Polynomial<F>& p, const Polynomial<F>& q);

/// (a + b x)^k by the binomial theorem.
template <Field F>
Polynomial<F> affine_power(const F& a, const F& b, unsigned k);

/// <x^k P> = sum_j a_j m_{k+j}.
template <Field F>
F inner_moment(const Polynomial<F>& p, std::size_t k, const MomentSequence<F>& m);

/// <x Pn Pm>.
template <Field F>
F orthogonality(const Polynomial<F>& pn, const Polynomial<F>& pm, const MomentSequence<F>& m);

/// <(a + b x)^k P>. Throws ConfigError when b == 0.
template <Field F>
F shifted_inner(const Polynomial<F>& p, unsigned k, const F& a, const F& b, const MomentSequence<F>& m);

/// Coefficients in x of y -> <w(y) P(y) P(x + a + b y)>, a degree-n polynomial
/// whenever P has degree n.
template <Field F>
Polynomial<F> additive_image(const Polynomial<F>& p, const F& a, const F& b, const MomentSequence<F>& m);

/// Coefficients in x of <w(y) P(y) P(x y)>: a_k <y^k P>.
template <Field F>
Polynomial<F> multiplicative_image(const Polynomial<F>& p, const MomentSequence<F>& m);

}  // namespace orthoieq

#endif  // ORTHOIEQ_POLYNOMIAL_HPP
