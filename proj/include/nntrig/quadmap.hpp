#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "nntrig/elim.hpp"
#include "nntrig/matrix.hpp"
#include "nntrig/poly.hpp"
#include "nntrig/roots.hpp"
#include "nntrig/trig_poly.hpp"

namespace nntrig {

/// X(z) = x_0 + ... + x_n z^n with x_0 real and positive.
template <Scalar S>
class SpectralFactor {
public:
    explicit SpectralFactor(Poly<S> X) : X_(std::move(X)) {
        const S& x0 = X_[0];
        bool ok;
        if constexpr (is_exact_v<S>) ok = x0.is_real() && x0.real() > 0;
        else ok = x0.imag() == 0.0 && x0.real() > 0.0;
        if (!ok) throw PreconditionError("spectral factor needs x_0 real and positive");
    }
    const Poly<S>& poly() const noexcept { return X_; }
    std::size_t degree() const noexcept { return X_.formal_degree(); }
    const S& operator[](std::size_t k) const { return X_[k]; }

private:
    Poly<S> X_;
};

/// The quadratic map: y_0 = (1/2) sum |x_j|^2, y_m = sum_k conj(x_k) x_{k+m}.
/// With the 1/2 on y_0, X X* = Y* + z^n Y holds identically.
template <Scalar S>
TrigPoly<S> phi(const SpectralFactor<S>& X) {
    const std::size_t n = X.degree();
    std::vector<S> y(n + 1, S(0));
    for (std::size_t j = 0; j <= n; ++j) y[0] += abs2(X[j]);
    if constexpr (is_exact_v<S>) y[0] = y[0] / S(2);
    else y[0] = ComplexFloat(0.5 * y[0].real(), 0.0);
    for (std::size_t m = 1; m <= n; ++m)
        for (std::size_t k = 0; k + m <= n; ++k) y[m] += conj(X[k]) * X[k + m];
    return TrigPoly<S>(std::move(y));
}

/// X X*, of formal degree 2n.
template <Scalar S>
Poly<S> gram_lift(const SpectralFactor<S>& X) {
    return mul(X.poly(), reciprocal(X.poly()));
}

/// Coefficient rows (basis 1, z, ..., z^{2n}) of the partial derivatives of
/// R = X X*: R_0 = X* + z^n X, then R_j = z^j X* and R_{-j} = z^{n-j} X for
/// j = 1..n, interleaved as R_1, R_{-1}, R_2, R_{-2}, ...
template <Scalar S>
Matrix<S> jacobian_rows(const SpectralFactor<S>& X) {
    const std::size_t n = X.degree();
    const auto Xs = reciprocal(X.poly());
    Matrix<S> J(2 * n + 1, 2 * n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        J(0, k) += Xs[k];
        J(0, n + k) += X[k];
    }
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t k = 0; k <= n; ++k) {
            J(2 * j - 1, j + k) = Xs[k];
            J(2 * j, n - j + k) = X[k];
        }
    }
    return J;
}

template <Scalar S>
struct Lemma1Check {
    S det;
    S closed_form;
    std::optional<S> ratio;  // empty when closed_form = 0
};

/// Jacobian determinant against 2 x_0 V(X).
template <Scalar S>
Lemma1Check<S> verify_lemma1(const SpectralFactor<S>& X) {
    Lemma1Check<S> r{determinant(jacobian_rows(X)), S(2) * X[0] * mobius_discriminant(X.poly()), std::nullopt};
    if (!is_zero(r.closed_form)) r.ratio = r.det / r.closed_form;
    return r;
}

template <Scalar S>
struct Lemma2Check {
    S lhs;  // Dis_2(phi(X))
    S rhs;  // |Dis(X)|^2 V(X)^2
};

template <Scalar S>
Lemma2Check<S> verify_lemma2(const SpectralFactor<S>& X) {
    S lhs = dis2(phi(X));
    S v = mobius_discriminant(X.poly());
    S rhs = abs2(discriminant(X.poly())) * v * v;
    return {std::move(lhs), std::move(rhs)};
}

namespace detail {

inline void require_positive_x0(const ComplexPoly& X) {
    if (!X[0].is_real() || X[0].real() <= 0) throw PreconditionError("lemma3_shadow: x_0 must be real and positive");
}
inline void require_positive_x0(const FloatPoly& X) {
    if (X[0].imag() != 0.0 || X[0].real() <= 0.0) throw PreconditionError("lemma3_shadow: x_0 must be real and positive");
}

inline std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
    mpz_class a, b;
    mpz_sqrt(a.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(b.get_mpz_t(), q.get_den_mpz_t());
    return make_rational(a, b);
}

}  // namespace detail

/// Replaces one copy of a multiple root w of X by its reflection 1/conj(w) and
/// rescales by |w|: Q = |w| x_n (z - w)(z - 1/conj w) prod_{others} (z - z_j).
/// Then Q Q* = X X*, q_0 = x_0/|w| > 0 and V(Q) = 0.
///
/// Exact scalars: w must be an exact root of multiplicity >= 2 with rational |w|.
/// Float scalars: Q is re-synthesized from the full root multiset of X.
template <Scalar S>
Poly<S> lemma3_shadow(const Poly<S>& X, const S& double_root, const RootOptions& opt = {}) {
    detail::require_positive_x0(X);
    if (is_zero(double_root)) throw DomainError("lemma3_shadow: double root must be nonzero");
    if constexpr (is_exact_v<S>) {
        S rem;
        auto X1 = deflate(X, double_root, &rem);
        S rem2;
        deflate(X1, double_root, &rem2);
        if (!is_zero(rem) || !is_zero(rem2))
            throw PreconditionError("lemma3_shadow: given point is not a root of multiplicity >= 2");
        auto lambda = detail::exact_sqrt(double_root.norm());
        if (!lambda) throw PreconditionError("lemma3_shadow: |w| is irrational; use float mode");
        S reflected = S(1) / conj(double_root);
        return mul(X1, Poly<S>{-reflected, S(1)}) * S(*lambda);
    } else {
        if (X.effective_degree() != static_cast<long>(X.formal_degree()))
            throw PreconditionError("lemma3_shadow: x_n must be nonzero");
        auto rs = all_roots(X, opt);
        const Root* hit = nullptr;
        double best = 1e-6 * std::max(1.0, std::abs(double_root));
        for (const auto& r : rs.roots) {
            double d = std::abs(r.location - double_root);
            if (r.multiplicity >= 2 && d <= best) {
                best = d;
                hit = &r;
            }
        }
        if (!hit) throw PreconditionError("lemma3_shadow: no root of multiplicity >= 2 found at the given point");
        std::vector<ComplexFloat> zs;
        for (const auto& r : rs.roots) {
            int copies = r.multiplicity;
            if (&r == hit) {
                zs.push_back(reflect(r.location));
                --copies;
            }
            zs.insert(zs.end(), static_cast<std::size_t>(copies), r.location);
        }
        const double lambda = std::abs(hit->location);
        return from_roots<ComplexFloat>(zs, lambda * X.leading());
    }
}

}  // namespace nntrig
