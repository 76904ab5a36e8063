#include "orthoieq/polynomial.hpp"

#include "orthoieq/errors.hpp"

#include <algorithm>

namespace orthoieq {

std::string to_string(MomentSource source) {
    switch (source) {
        case MomentSource::Analytic: return "analytic";
        case MomentSource::Quadrature: return "quadrature";
        case MomentSource::Contour: return "contour";
    }
    return "unknown";
}

template <Field F>
Real MomentSequence<F>::max_error() const {
    Real worst(0);
    for (const auto& e : errors) worst = std::max(worst, e);
    return worst;
}

template <Field F>
void require_moments(const MomentSequence<F>& m, std::size_t required, const char* what) {
    if (m.size() < required) {
        throw InsufficientMomentsError(std::string(what) + " needs " + std::to_string(required) +
                                       " moments, have " + std::to_string(m.size()));
    }
}

template <Field F>
MomentSequence<F> make_moments(std::vector<F> values, std::string id) {
    MomentSequence<F> m;
    m.values = std::move(values);
    m.weight_id = std::move(id);
    return m;
}

MomentSequence<Complex> to_float(const MomentSequence<Rational>& m) {
    MomentSequence<Complex> out;
    out.values.reserve(m.size());
    for (const auto& v : m.values) out.values.emplace_back(v);
    out.source = m.source;
    out.errors = m.errors;
    out.winding = m.winding;
    out.weight_id = m.weight_id;
    return out;
}

template <Field F>
Polynomial<F>::Polynomial(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.emplace_back(0);
}

template <Field F>
Polynomial<F> Polynomial<F>::monomial(std::size_t k, F c) {
    std::vector<F> coeffs(k + 1, F(0));
    coeffs[k] = std::move(c);
    return Polynomial(std::move(coeffs));
}

template <Field F>
Polynomial<F> Polynomial<F>::trimmed() const {
    std::size_t n = coeffs_.size();
    while (n > 1 && is_zero(coeffs_[n - 1])) --n;
    return Polynomial(std::vector<F>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
}

template <Field F>
Polynomial<F>& Polynomial<F>::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

template <Field F>
Polynomial<F>& Polynomial<F>::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

template <Field F>
Polynomial<F>& Polynomial<F>::operator*=(const F& c) {
    for (auto& a : coeffs_) a *= c;
    return *this;
}

template <Field F>
Polynomial<F> Polynomial<F>::multiply(const Polynomial& a, const Polynomial& b) {
    std::vector<F> out(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (is_zero(a.coeffs_[i])) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return Integer(0);
    Integer result(1);
    k = std::min(k, n - k);
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

Polynomial<Complex> to_float(const Polynomial<Rational>& p) {
    std::vector<Complex> coeffs;
    coeffs.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) coeffs.emplace_back(a);
    return Polynomial<Complex>(std::move(coeffs));
}

template <Field F>
F eval(const Polynomial<F>& p, const F& x) {
    const auto& a = p.coeffs();
    F acc = a.back();
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        acc *= x;
        acc += a[k];
    }
    return acc;
}

template <Field F>
Polynomial<F> compose(const Polynomial<F>& p, const Polynomial<F>& q) {
    const auto& a = p.coeffs();
    Polynomial<F> acc = Polynomial<F>::constant(a.back());
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        acc = acc * q;
        acc += Polynomial<F>::constant(a[k]);
    }
    return acc;
}

template <Field F>
Polynomial<F> affine_power(const F& a, const F& b, unsigned k) {
    std::vector<F> coeffs(k + 1, F(0));
    // a^{k-i} b^i C(k,i)
    std::vector<F> a_pow(k + 1, F(1));
    std::vector<F> b_pow(k + 1, F(1));
    for (unsigned i = 1; i <= k; ++i) {
        a_pow[i] = a_pow[i - 1] * a;
        b_pow[i] = b_pow[i - 1] * b;
    }
    for (unsigned i = 0; i <= k; ++i) {
        coeffs[i] = from_rational<F>(Rational(binomial(k, i))) * a_pow[k - i] * b_pow[i];
    }
    return Polynomial<F>(std::move(coeffs));
}

template <Field F>
F inner_moment(const Polynomial<F>& p, std::size_t k, const MomentSequence<F>& m) {
    require_moments(m, p.degree() + k + 1, "inner product");
    F acc(0);
    for (std::size_t j = 0; j <= p.degree(); ++j) {
        if (is_zero(p[j])) continue;
        acc += p[j] * m[k + j];
    }
    return acc;
}

template <Field F>
F orthogonality(const Polynomial<F>& pn, const Polynomial<F>& pm, const MomentSequence<F>& m) {
    require_moments(m, pn.degree() + pm.degree() + 2, "orthogonality");
    return inner_moment(pn * pm, 1, m);
}

template <Field F>
F shifted_inner(const Polynomial<F>& p, unsigned k, const F& a, const F& b, const MomentSequence<F>& m) {
    if (is_zero(b)) throw ConfigError("linear-shift coefficient b must be nonzero");
    require_moments(m, p.degree() + k + 1, "shifted inner product");
    return inner_moment(p * affine_power(a, b, k), 0, m);
}

template <Field F>
Polynomial<F> additive_image(const Polynomial<F>& p, const F& a, const F& b, const MomentSequence<F>& m) {
    // P(x + s) = sum_k a_k sum_i C(k,i) x^i s^{k-i} with s = a + b y; integrate
    // against w(y) P(y) term by term.
    const std::size_t n = p.degree();
    require_moments(m, 2 * n + 1, "integral image");
    std::vector<F> shifted(n + 1);
    for (unsigned j = 0; j <= n; ++j) shifted[j] = inner_moment(p * affine_power(a, b, j), 0, m);
    std::vector<F> out(n + 1, F(0));
    for (unsigned k = 0; k <= n; ++k) {
        if (is_zero(p[k])) continue;
        for (unsigned i = 0; i <= k; ++i) {
            out[i] += p[k] * from_rational<F>(Rational(binomial(k, i))) * shifted[k - i];
        }
    }
    return Polynomial<F>(std::move(out));
}

template <Field F>
Polynomial<F> multiplicative_image(const Polynomial<F>& p, const MomentSequence<F>& m) {
    const std::size_t n = p.degree();
    require_moments(m, 2 * n + 1, "integral image");
    std::vector<F> out(n + 1, F(0));
    for (std::size_t k = 0; k <= n; ++k) {
        if (is_zero(p[k])) continue;
        out[k] = p[k] * inner_moment(p, k, m);
    }
    return Polynomial<F>(std::move(out));
}

#define ORTHOIEQ_INSTANTIATE(F)                                                                        \
    template struct MomentSequence<F>;                                                                 \
    template void require_moments(const MomentSequence<F>&, std::size_t, const char*);                  \
    template MomentSequence<F> make_moments(std::vector<F>, std::string);                              \
    template class Polynomial<F>;                                                                      \
    template F eval(const Polynomial<F>&, const F&);                                                   \
    template Polynomial<F> compose(const Polynomial<F>&, const Polynomial<F>&);                        \
    template Polynomial<F> affine_power(const F&, const F&, unsigned);                                 \
    template F inner_moment(const Polynomial<F>&, std::size_t, const MomentSequence<F>&);              \
    template F orthogonality(const Polynomial<F>&, const Polynomial<F>&, const MomentSequence<F>&);    \
    template F shifted_inner(const Polynomial<F>&, unsigned, const F&, const F&, const MomentSequence<F>&); \
    template Polynomial<F> additive_image(const Polynomial<F>&, const F&, const F&, const MomentSequence<F>&); \
    template Polynomial<F> multiplicative_image(const Polynomial<F>&, const MomentSequence<F>&);

ORTHOIEQ_INSTANTIATE(Rational)
ORTHOIEQ_INSTANTIATE(Complex)

#undef ORTHOIEQ_INSTANTIATE

}  // namespace orthoieq
