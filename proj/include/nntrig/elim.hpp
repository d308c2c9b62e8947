#pragma once

#include <cstddef>
#include <string>

#include "nntrig/matrix.hpp"
#include "nntrig/poly.hpp"
#include "nntrig/roots.hpp"
#include "nntrig/trig_poly.hpp"

namespace nntrig {

/// Sylvester matrix at formal degrees (n, m): m shifted rows of P's coefficients
/// followed by n shifted rows of Q's, highest power first.
template <Scalar S>
Matrix<S> sylvester_matrix(const Poly<S>& P, const Poly<S>& Q) {
    const std::size_t n = P.formal_degree(), m = Q.formal_degree();
    Matrix<S> s(n + m, n + m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) s(i, i + j) = P[n - j];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) s(m + i, i + j) = Q[m - j];
    return s;
}

/// Res(P, Q) = det Sylvester(P, Q) at formal degrees. With this normalization
/// Res(P, Q) = p_n^m q_m^n prod (a_j - b_k) and Res(P, c) = c^n.
template <Scalar S>
S resultant(const Poly<S>& P, const Poly<S>& Q) {
    S r = determinant(sylvester_matrix(P, Q));
    if constexpr (!is_exact_v<S>) check_finite(r, "resultant");
    return r;
}

/// Cayley root-product route to the resultant; independent of the Sylvester path.
template <Scalar S>
ComplexFloat resultant_root_oracle(const Poly<S>& P, const Poly<S>& Q, const RootOptions& opt = {}) {
    const auto p = to_float(P), q = to_float(Q);
    const std::size_t n = p.formal_degree(), m = q.formal_degree();
    if (p.effective_degree() != static_cast<long>(n) || q.effective_degree() != static_cast<long>(m))
        throw PreconditionError("resultant_root_oracle: effective degrees must equal formal degrees");
    if (n == 0) return ipow(p[0], m);
    if (m == 0) return ipow(q[0], n);
    auto a = all_roots(p, opt).expanded();
    auto b = all_roots(q, opt).expanded();
    ComplexFloat prod = ipow(p.leading(), m) * ipow(q.leading(), n);
    for (const auto& aj : a)
        for (const auto& bk : b) prod *= aj - bk;
    return prod;
}

namespace detail {
inline std::string degree_drop_message(const char* who) {
    return std::string(who) +
           ": leading coefficient vanishes at the declared formal degree; re-declare the degree "
           "and apply Dis(p_0,...,p_{m-1},0) = +/- p_{m-1}^2 Dis(p_0,...,p_{m-1}) explicitly";
}
}  // namespace detail

/// Dis(P) = p_m^{2m-2} prod_{i>j} (z_i - z_j)^2, computed as
/// (-1)^{m(m-1)/2} Res(P, P') / p_m. A linear polynomial has discriminant 1.
template <Scalar S>
S discriminant(const Poly<S>& P) {
    const std::size_t m = P.formal_degree();
    if (m < 1) throw PreconditionError("discriminant: formal degree must be at least 1");
    if (is_zero(P.leading())) throw DegreeDropError(detail::degree_drop_message("discriminant"));
    S d = resultant(P, derivative(P)) / P.leading();
    return (m * (m - 1) / 2) % 2 ? -d : d;
}

/// Root-product route: p_m^{2m-2} prod_{i>j} (z_i - z_j)^2.
template <Scalar S>
ComplexFloat discriminant_root_oracle(const Poly<S>& P, const RootOptions& opt = {}) {
    const auto p = to_float(P);
    const std::size_t m = p.formal_degree();
    if (m < 1 || p.effective_degree() != static_cast<long>(m))
        throw PreconditionError("discriminant_root_oracle: effective degree must equal formal degree >= 1");
    if (m == 1) return 1.0;
    auto z = all_roots(p, opt).expanded();
    ComplexFloat prod = ipow(p.leading(), 2 * m - 2);
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) prod *= (z[i] - z[j]) * (z[i] - z[j]);
    return prod;
}

/// Mobius discriminant V(X), normalized so that
/// V(X) = |x_n|^{2n} prod_{j,k} (z_j conj(z_k) - 1); this is Res(X*, X), which
/// differs from Res(X, X*) by (-1)^n. For n = 1 it is x_0^2 - |x_1|^2.
template <Scalar S>
S mobius_discriminant(const Poly<S>& X) {
    if (X.formal_degree() < 1) throw PreconditionError("mobius_discriminant: formal degree must be at least 1");
    return resultant(reciprocal(X), X);
}

/// Dis_2(Y) = Dis(Y* + z^n Y), at formal degree 2n. Refuses y_n = 0.
template <Scalar S>
S dis2(const TrigPoly<S>& Y) {
    if (Y.degree() < 1) throw PreconditionError("dis2: degree must be at least 1");
    if (is_zero(Y[Y.degree()])) throw DegreeDropError(detail::degree_drop_message("dis2 (y_n = 0)"));
    return discriminant(lift(Y));
}

}  // namespace nntrig
