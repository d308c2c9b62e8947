#pragma once

// Reference evaluators for the explicit low-degree forms of V and Dis_2,
// transcribed term by term. They are independent of the Sylvester route.

#include "nntrig/scalar.hpp"

namespace nntrig::closed_forms {

/// n = 1: V(x_0, x_1) = x_0^2 - |x_1|^2.
template <Scalar S>
S mobius_n1(const S& x0, const S& x1) {
    return x0 * x0 - abs2(x1);
}

/// n = 1: Dis_2(y_0, y_1) = 4 (y_0^2 - |y_1|^2).
template <Scalar S>
S dis2_n1(const S& y0, const S& y1) {
    return S(4) * (y0 * y0 - abs2(y1));
}

/// n = 2 variant with |x_1|^2 in the leading square:
/// (x_0^2 - |x_1|^2)^2 - (x_0 x_1 - conj(x_1) x_2)(x_0 conj(x_1) - conj(x_2) x_1).
/// It does not vanish on X = 1 - z^2, so it is not V; see mobius_n2.
template <Scalar S>
S mobius_n2_variant(const S& x0, const S& x1, const S& x2) {
    S a = x0 * x0 - abs2(x1);
    return a * a - (x0 * x1 - conj(x1) * x2) * (x0 * conj(x1) - conj(x2) * x1);
}

/// n = 2: V = (x_0^2 - |x_2|^2)^2 - (x_0 x_1 - conj(x_1) x_2)(x_0 conj(x_1) - conj(x_2) x_1).
template <Scalar S>
S mobius_n2(const S& x0, const S& x1, const S& x2) {
    S a = x0 * x0 - abs2(x2);
    return a * a - (x0 * x1 - conj(x1) * x2) * (x0 * conj(x1) - conj(x2) * x1);
}

/// n = 2: the sixteen-term expansion of Dis_2(y_0, y_1, y_2).
template <Scalar S>
S dis2_n2(const S& y0, const S& y1, const S& y2) {
    const S b1 = conj(y1), b2 = conj(y2);
    auto p = [](const S& v, unsigned e) { return ipow(v, e); };
    S t(0);
    t += S(36) * p(y1, 3) * b1 * y0 * b2;
    t -= S(320) * y2 * y1 * b1 * p(y0, 2) * b2;
    t -= S(4) * p(y1, 3) * p(b1, 3);
    t += S(256) * y2 * p(y0, 4) * b2;
    t -= S(32) * y2 * p(y0, 3) * p(b1, 2);
    t -= S(27) * p(y1, 4) * p(b2, 2);
    t -= S(512) * p(y2, 2) * p(b2, 2) * p(y0, 2);
    t += S(288) * p(y2, 2) * b2 * y0 * p(b1, 2);
    t += S(36) * y2 * y1 * p(b1, 3) * y0;
    t += S(4) * p(y0, 2) * p(y1, 2) * p(b1, 2);
    t -= S(32) * p(y0, 3) * p(y1, 2) * b2;
    t -= S(192) * p(y2, 2) * p(b2, 2) * y1 * b1;
    t -= S(6) * y2 * b2 * p(y1, 2) * p(b1, 2);
    t += S(288) * y2 * p(b2, 2) * y0 * p(y1, 2);
    t += S(256) * p(y2, 3) * p(b2, 3);
    t -= S(27) * p(y2, 2) * p(b1, 4);
    return t;
}

}  // namespace nntrig::closed_forms
