#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "nntrig/scalar.hpp"

namespace nntrig {

/// Dense row-major square-or-rectangular matrix.
template <Scalar S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, S(0)) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    S& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<S> a_;
};

namespace detail {

// Fraction-free (Bareiss) elimination. Rows are first scaled by the lcm of their
// denominators so every entry is a Gaussian integer; each Bareiss quotient is
// then an exact division in Z[i].
inline GaussRational bareiss_det(Matrix<GaussRational> m) {
    const std::size_t n = m.rows();
    if (n == 0) return GaussRational(1);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).real().get_den_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).imag().get_den_mpz_t());
        }
        if (l != 1) {
            GaussRational f{Rational(l)};
            for (std::size_t j = 0; j < n; ++j) m(i, j) *= f;
            scale *= l;
        }
    }
    bool negate = false;
    GaussRational prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return GaussRational(0);
            m.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = GaussRational(0);
        }
        prev = m(k, k);
    }
    GaussRational det = m(n - 1, n - 1) / GaussRational(Rational(scale));
    return negate ? -det : det;
}

// Gaussian elimination with partial pivoting.
inline ComplexFloat lu_det(Matrix<ComplexFloat> m) {
    const std::size_t n = m.rows();
    ComplexFloat det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(m(k, k));
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(m(i, k)) > best) {
                best = std::abs(m(i, k));
                p = i;
            }
        if (best == 0.0) return 0.0;
        if (p != k) {
            m.swap_rows(p, k);
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            ComplexFloat f = m(i, k) / m(k, k);
            if (f == ComplexFloat{}) continue;
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

}  // namespace detail

/// Determinant: exact Bareiss elimination for Gaussian rationals, partially
/// pivoted LU for floats.
template <Scalar S>
S determinant(const Matrix<S>& m) {
    if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
    if constexpr (is_exact_v<S>) return detail::bareiss_det(m);
    else return detail::lu_det(m);
}

}  // namespace nntrig
