#include "orthoieq/hankel.hpp"

#include "orthoieq/errors.hpp"

#include <algorithm>

namespace orthoieq {

namespace {

template <Field F>
void require_leading(const std::vector<F>& a, std::size_t n) {
    bool degenerate;
    if constexpr (is_exact_v<F>) {
        degenerate = a[n] == 0;
    } else {
        Real scale(0);
        for (const auto& c : a) scale = std::max(scale, abs(c));
        degenerate = abs(a[n]) <= singularity_threshold() * scale;
    }
    if (degenerate) {
        throw DegenerateDegreeError("solution of degree " + std::to_string(n) +
                                    " has a vanishing leading coefficient");
    }
}

template <Field F>
void require_valid(const MomentSequence<F>& m, std::size_t n) {
    auto cond = hankel_condition(m, n);
    if (!cond.valid) {
        throw SingularHankelError("Hankel matrix B_" + std::to_string(n) + " is singular (det " +
                                  (is_exact_v<F> ? std::string("0") : to_string(to_complex(cond.determinant), 6)) +
                                  ")");
    }
}

}  // namespace

template <Field F>
Matrix<F> hankel_matrix(const MomentSequence<F>& m, std::size_t size, std::size_t offset) {
    if (size > 0) require_moments(m, 2 * (size - 1) + offset + 1, "Hankel matrix");
    Matrix<F> h(size, size);
    for (std::size_t k = 0; k < size; ++k) {
        for (std::size_t j = 0; j < size; ++j) h(k, j) = m[k + j + offset];
    }
    return h;
}

template <Field F>
HankelCondition<F> hankel_condition(const MomentSequence<F>& m, std::size_t n) {
    const Matrix<F> b = hankel_matrix(m, n + 1, 0);
    HankelCondition<F> out{determinant(b), reciprocal_condition(b), false};
    if constexpr (is_exact_v<F>) {
        out.valid = out.determinant != 0;
    } else {
        out.valid = out.reciprocal_condition > singularity_threshold();
    }
    return out;
}

template <Field F>
Polynomial<F> solve_polynomial(const MomentSequence<F>& m, std::size_t n) {
    require_moments(m, 2 * n + 1, "degree-n solve");
    require_valid(m, n);
    std::vector<F> rhs(n + 1, F(0));
    rhs[0] = F(1);
    std::vector<F> a;
    try {
        a = solve_linear(hankel_matrix(m, n + 1, 0), rhs);
    } catch (const SingularSystemError& e) {
        throw SingularHankelError(e.what());
    }
    require_leading(a, n);
    return Polynomial<F>(std::move(a));
}

template <Field F>
Polynomial<F> polynomial_via_determinants(const MomentSequence<F>& m, std::size_t n) {
    require_moments(m, 2 * n + 1, "degree-n determinant formula");
    require_valid(m, n);
    const Matrix<F> b = hankel_matrix(m, n + 1, 0);
    const F det_b = determinant(b);
    // Rows 1..n of A_n coincide with rows 1..n of B_n; the first row holds
    // the monomials, so the cofactor of x^j is (-1)^j det(B_n minus row 0, col j).
    std::vector<F> a(n + 1, F(0));
    for (std::size_t j = 0; j <= n; ++j) {
        F cofactor = determinant(b.minor(0, j));
        if (j % 2 == 1) cofactor = -cofactor;
        a[j] = cofactor / det_b;
    }
    require_leading(a, n);
    return Polynomial<F>(std::move(a));
}

template <Field F>
F normalization(const MomentSequence<F>& m, std::size_t n) {
    require_moments(m, 2 * n + 2, "normalization factor");
    require_valid(m, n);
    const F det_b = determinant(hankel_matrix(m, n + 1, 0));
    const F det_c = determinant(hankel_matrix(m, n, 1));
    const F det_c_next = determinant(hankel_matrix(m, n + 1, 1));
    return det_c * det_c_next / (det_b * det_b);
}

template Matrix<Rational> hankel_matrix(const MomentSequence<Rational>&, std::size_t, std::size_t);
template Matrix<Complex> hankel_matrix(const MomentSequence<Complex>&, std::size_t, std::size_t);
template HankelCondition<Rational> hankel_condition(const MomentSequence<Rational>&, std::size_t);
template HankelCondition<Complex> hankel_condition(const MomentSequence<Complex>&, std::size_t);
template Polynomial<Rational> solve_polynomial(const MomentSequence<Rational>&, std::size_t);
template Polynomial<Complex> solve_polynomial(const MomentSequence<Complex>&, std::size_t);
template Polynomial<Rational> polynomial_via_determinants(const MomentSequence<Rational>&, std::size_t);
template Polynomial<Complex> polynomial_via_determinants(const MomentSequence<Complex>&, std::size_t);
template Rational normalization(const MomentSequence<Rational>&, std::size_t);
template Complex normalization(const MomentSequence<Complex>&, std::size_t);

}  // namespace orthoieq
