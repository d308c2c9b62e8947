#pragma once

#include <cstddef>
#include <vector>

#include "nntrig/cone.hpp"

namespace nntrig {

/// Which boundary function the starlike test folds; reported alongside verdicts.
inline constexpr const char* starlike_boundary_form =
    "Re(z P'(z) conj(P(z))) on |z|=1, folded from z^(1-n) P'(z) P*(z)";

/// Trigonometric polynomial T(t) = Re(e^{it} P'(e^{it}) conj(P(e^{it}))), of degree n-1.
///
/// On the circle P*(z) = z^n conj(P(z)), so z^{1-n} P'(z) P*(z) is a Laurent
/// polynomial with exponents 1-n..n-1 whose real part is the target. Folding
/// c_m e^{imt} + c_{-m} e^{-imt} gives y_m = c_m + conj(c_{-m}).
template <Scalar S>
TrigPoly<S> boundary_trig(const Poly<S>& P) {
    if (!is_zero(P[0])) throw DomainError("boundary_trig: P(0) must vanish");
    const long eff = P.effective_degree();
    if (eff < 1) throw PreconditionError("boundary_trig: P must have degree >= 1");
    const auto p = P.with_formal_degree(static_cast<std::size_t>(eff));
    const std::size_t n = p.formal_degree();
    const auto L = mul(derivative(p), reciprocal(p));  // exponent of index k is k + 1 - n
    std::vector<S> y(n, S(0));
    if constexpr (is_exact_v<S>) y[0] = S(L[n - 1].real());
    else y[0] = ComplexFloat(L[n - 1].real(), 0.0);
    for (std::size_t m = 1; m < n; ++m) y[m] = L[n - 1 + m] + conj(L[n - 1 - m]);
    return TrigPoly<S>(std::move(y));
}

template <Scalar S>
struct StarlikeReport {
    bool is_starlike = false;
    std::vector<ComplexFloat> inner_roots;
    TrigPoly<S> trig;
    ConeVerdict<S> cone_verdict;
};

/// Starlike iff P(z)/z has no zeros in the open disk and T_P is nonnegative.
/// Zeros of P(z)/z within circle_tol of the unit circle do not disqualify.
template <Scalar S>
StarlikeReport<S> is_starlike(const Poly<S>& P, const ConeOptions& opt = {}) {
    auto trig = boundary_trig(P);
    auto verdict = classify(trig, opt);
    std::vector<ComplexFloat> inner;
    const auto q = deflate(P.trimmed(), S(0));
    if (q.effective_degree() >= 1) {
        for (const auto& z : all_roots(q, opt.roots).expanded())
            if (std::abs(z) < 1.0 - opt.circle_tol) inner.push_back(z);
    }
    const bool ok = inner.empty() && verdict.classification != ConeClass::Outside;
    return StarlikeReport<S>{ok, std::move(inner), std::move(trig), std::move(verdict)};
}

}  // namespace nntrig
