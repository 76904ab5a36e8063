#include "orthoieq/linalg.hpp"

#include "orthoieq/errors.hpp"

#include <algorithm>
#include <numeric>

namespace orthoieq {

template <Field F>
Matrix<F> Matrix<F>::minor(std::size_t r, std::size_t c) const {
    Matrix out(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
            if (j == c) continue;
            out(oi, oj++) = (*this)(i, j);
        }
        ++oi;
    }
    return out;
}

Real singularity_threshold() { return precision_tolerance(15); }

namespace {

Rational bareiss_determinant(Matrix<Rational> a) {
    const std::size_t n = a.rows();
    if (n == 0) return Rational(1);
    Rational previous(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0) ++swap;
            if (swap == n) return Rational(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
            }
        }
        previous = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// In-place LU with partial pivoting; returns false when a pivot is exactly 0.
struct ComplexLu {
    Matrix<Complex> lu;
    std::vector<std::size_t> perm;
    int sign = 1;
    bool singular = false;

    explicit ComplexLu(Matrix<Complex> a) : lu(std::move(a)), perm(lu.rows()) {
        const std::size_t n = lu.rows();
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t p = k;
            Real best = abs(lu(k, k));
            for (std::size_t i = k + 1; i < n; ++i) {
                Real v = abs(lu(i, k));
                if (v > best) {
                    best = std::move(v);
                    p = i;
                }
            }
            if (best == 0) {
                singular = true;
                return;
            }
            if (p != k) {
                for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
                std::swap(perm[k], perm[p]);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                lu(i, k) /= lu(k, k);
                const Complex factor = lu(i, k);
                for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= factor * lu(k, j);
            }
        }
    }

    std::vector<Complex> solve(const std::vector<Complex>& b) const {
        const std::size_t n = lu.rows();
        std::vector<Complex> x(n);
        for (std::size_t i = 0; i < n; ++i) {
            Complex acc = b[perm[i]];
            for (std::size_t j = 0; j < i; ++j) acc -= lu(i, j) * x[j];
            x[i] = acc;
        }
        for (std::size_t i = n; i-- > 0;) {
            Complex acc = x[i];
            for (std::size_t j = i + 1; j < n; ++j) acc -= lu(i, j) * x[j];
            x[i] = acc / lu(i, i);
        }
        return x;
    }
};

Real one_norm(const Matrix<Complex>& a) {
    Real best(0);
    for (std::size_t j = 0; j < a.cols(); ++j) {
        Real col(0);
        for (std::size_t i = 0; i < a.rows(); ++i) col += abs(a(i, j));
        best = std::max(best, col);
    }
    return best;
}

std::vector<Rational> solve_exact(Matrix<Rational> a, std::vector<Rational> b) {
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) throw SingularSystemError("linear system is singular");
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            std::swap(b[k], b[p]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            const Rational factor = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
            b[i] -= factor * b[k];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
        x[i] = acc / a(i, i);
    }
    return x;
}

// Gaussian elimination with complete pivoting.
std::vector<Complex> solve_full_pivot(Matrix<Complex> a, std::vector<Complex> b) {
    const std::size_t n = a.rows();
    std::vector<std::size_t> col(n);
    std::iota(col.begin(), col.end(), 0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pr = k;
        std::size_t pc = k;
        Real best(-1);
        for (std::size_t i = k; i < n; ++i) {
            for (std::size_t j = k; j < n; ++j) {
                Real v = abs(a(i, j));
                if (v > best) {
                    best = std::move(v);
                    pr = i;
                    pc = j;
                }
            }
        }
        if (best == 0) throw SingularSystemError("linear system is singular");
        if (pr != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pr, j));
            std::swap(b[k], b[pr]);
        }
        if (pc != k) {
            for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, pc));
            std::swap(col[k], col[pc]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex factor = a(i, k) / a(k, k);
            if (is_zero(factor)) continue;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
            b[i] -= factor * b[k];
        }
    }
    std::vector<Complex> y(n);
    for (std::size_t i = n; i-- > 0;) {
        Complex acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * y[j];
        y[i] = acc / a(i, i);
    }
    std::vector<Complex> x(n);
    for (std::size_t k = 0; k < n; ++k) x[col[k]] = y[k];
    return x;
}

}  // namespace

template <Field F>
F determinant(const Matrix<F>& a) {
    if constexpr (is_exact_v<F>) {
        return bareiss_determinant(a);
    } else {
        if (a.rows() == 0) return Complex(1);
        ComplexLu lu(a);
        if (lu.singular) return Complex(0);
        Complex det(lu.sign);
        for (std::size_t i = 0; i < a.rows(); ++i) det *= lu.lu(i, i);
        return det;
    }
}

template <Field F>
Real reciprocal_condition(const Matrix<F>& a) {
    if constexpr (is_exact_v<F>) {
        return bareiss_determinant(a) == 0 ? Real(0) : Real(1);
    } else {
        const std::size_t n = a.rows();
        if (n == 0) return Real(1);
        ComplexLu lu(a);
        if (lu.singular) return Real(0);
        Matrix<Complex> inverse(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Complex> e(n, Complex(0));
            e[j] = Complex(1);
            auto col = lu.solve(e);
            for (std::size_t i = 0; i < n; ++i) inverse(i, j) = col[i];
        }
        const Real norm_inv = one_norm(inverse);
        if (!bmp::isfinite(norm_inv) || norm_inv == 0) return Real(0);
        return 1 / (one_norm(a) * norm_inv);
    }
}

template <Field F>
std::vector<F> solve_linear(const Matrix<F>& a, const std::vector<F>& b) {
    if constexpr (is_exact_v<F>) {
        return solve_exact(a, b);
    } else {
        const Real rcond = reciprocal_condition(a);
        if (rcond <= singularity_threshold()) {
            throw SingularSystemError("linear system is numerically singular (reciprocal condition " +
                                      to_decimal(rcond, 6) + ")");
        }
        return solve_full_pivot(a, b);
    }
}

template class Matrix<Rational>;
template class Matrix<Complex>;
template Rational determinant(const Matrix<Rational>&);
template Complex determinant(const Matrix<Complex>&);
template Real reciprocal_condition(const Matrix<Rational>&);
template Real reciprocal_condition(const Matrix<Complex>&);
template std::vector<Rational> solve_linear(const Matrix<Rational>&, const std::vector<Rational>&);
template std::vector<Complex> solve_linear(const Matrix<Complex>&, const std::vector<Complex>&);

}  // namespace orthoieq
