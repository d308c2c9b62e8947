#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "nntrig/elim.hpp"
#include "nntrig/quadmap.hpp"
#include "nntrig/roots.hpp"
#include "nntrig/trig_poly.hpp"

namespace nntrig {

enum class ConeClass { Inside, Boundary, Outside };

inline const char* to_string(ConeClass c) {
    switch (c) {
        case ConeClass::Inside: return "inside";
        case ConeClass::Boundary: return "boundary";
        case ConeClass::Outside: return "outside";
    }
    return "?";
}

struct ConeOptions {
    /// Boundary band is |min T| <= tol * scale(Y).
    double tol = 1e-9;
    /// Relative distance from the unit circle that still counts as "on" it.
    double circle_tol = 1e-7;
    /// Reflection pairing tolerance, multiplied by max(1, |z|^2).
    double pair_tol = 1e-7;
    /// Boundary verdicts require |Dis_2| <= dis2_tol * scale^{4n-2}.
    double dis2_tol = 1e-6;
    /// Allowed excess of the critical-point minimum over the grid minimum.
    double consistency_tol = 1e-6;
    /// phi(factor) must reproduce Y to this relative accuracy.
    double factor_tol = 1e-9;
    int grid_points = 4096;
    RootOptions roots{};
};

struct CriticalSet {
    std::vector<double> angles;
    std::vector<double> values;
    double min_value = 0.0;
    double argmin = 0.0;
    double grid_min = 0.0;
};

template <Scalar S>
struct ConeVerdict {
    ConeClass classification = ConeClass::Outside;
    double min_value = 0.0;
    double minimizer_t = 0.0;
    /// Empty when Dis_2 is undefined (y_n = 0, or n = 0).
    std::optional<S> dis2_value;
    /// x_0 V(X) != 0 for the computed factor, i.e. d Phi has full rank 2n+1 there.
    bool rank_certificate = false;
    std::optional<SpectralFactor<ComplexFloat>> factor;
};

/// T(t) = y_0 + sum_m Re(y_m e^{imt}).
template <Scalar S>
double eval_T(const TrigPoly<S>& Y, double t) {
    const auto& y = to_float(Y);
    double v = y[0].real();
    for (std::size_t m = 1; m <= y.degree(); ++m)
        v += (y[m] * std::polar(1.0, static_cast<double>(m) * t)).real();
    return v;
}

namespace detail {

inline double wrap_angle(double t) {
    t = std::fmod(t, 2.0 * std::numbers::pi);
    if (t < 0) t += 2.0 * std::numbers::pi;
    if (t >= 2.0 * std::numbers::pi) t = 0.0;
    return t;
}

// First and second derivatives of T at t.
inline std::pair<double, double> dT(const TrigPoly<ComplexFloat>& y, double t) {
    double d1 = 0.0, d2 = 0.0;
    for (std::size_t m = 1; m <= y.degree(); ++m) {
        const double mm = static_cast<double>(m);
        ComplexFloat w = y[m] * std::polar(1.0, mm * t);
        d1 -= mm * w.imag();
        d2 -= mm * mm * w.real();
    }
    return {d1, d2};
}

inline double refine_critical(const TrigPoly<ComplexFloat>& y, double t) {
    for (int it = 0; it < 8; ++it) {
        auto [d1, d2] = dT(y, t);
        if (d1 == 0.0 || d2 == 0.0) break;
        double step = d1 / d2;
        if (std::abs(step) > 0.1) break;
        double cand = t - step;
        if (std::abs(dT(y, cand).first) >= std::abs(d1)) break;
        t = cand;
    }
    return wrap_angle(t);
}

}  // namespace detail

/// Global minimum of T from its critical points. On |z| = 1 the derivative of T
/// is proportional to z^{-n}(z R'(z) - n R(z)) with R = lift(Y), so the critical
/// angles are the arguments of the unit-circle roots of that polynomial. The
/// result is cross-checked against a uniform grid.
template <Scalar S>
CriticalSet minimize_T(const TrigPoly<S>& Y, const ConeOptions& opt = {}) {
    const auto& y = to_float(Y);
    const std::size_t n = y.degree();
    const double scale = y.scale();
    if (scale == 0.0) throw PreconditionError("minimize_T: Y is identically zero");

    CriticalSet cs;
    auto add = [&](double t) {
        t = detail::wrap_angle(t);
        cs.angles.push_back(t);
        cs.values.push_back(eval_T(y, t));
    };
    add(0.0);

    bool constant = true;
    for (std::size_t m = 1; m <= n; ++m) constant = constant && y[m] == ComplexFloat{};
    if (!constant) {
        auto R = lift(y);
        auto Sp = FloatPoly::zero(2 * n);
        for (std::size_t k = 0; k <= 2 * n; ++k)
            Sp[k] = R[k] * (static_cast<double>(k) - static_cast<double>(n));
        auto rs = all_roots(Sp, opt.roots);
        for (const auto& r : rs.roots) {
            double mod = std::abs(r.location);
            if (std::abs(mod - 1.0) <= opt.circle_tol) add(detail::refine_critical(y, std::arg(r.location)));
        }
    }

    auto best = std::min_element(cs.values.begin(), cs.values.end());
    cs.min_value = *best;
    cs.argmin = cs.angles[static_cast<std::size_t>(best - cs.values.begin())];

    cs.grid_min = cs.values.front();
    for (int k = 0; k < opt.grid_points; ++k)
        cs.grid_min = std::min(cs.grid_min, eval_T(y, 2.0 * std::numbers::pi * k / opt.grid_points));
    if (cs.min_value - cs.grid_min > opt.consistency_tol * scale)
        throw ConsistencyError("minimize_T: critical-point minimum " + std::to_string(cs.min_value) +
                               " exceeds grid minimum " + std::to_string(cs.grid_min));
    return cs;
}

struct FactorDetail {
    FloatPoly X;
    std::vector<ComplexFloat> roots;  // finite roots of X, multiplicity expanded
    std::size_t circle_roots = 0;     // how many of them lie on the unit circle
};

namespace detail {

inline FactorDetail factor_detail(const TrigPoly<ComplexFloat>& y, const ConeOptions& opt) {
    const std::size_t n = y.degree();
    FactorDetail out;
    const double y0 = y[0].real();
    if (y0 <= 0.0) throw NotNonnegativeError("factor: y_0 <= 0 cannot be a nonnegative polynomial");

    auto R = lift(y);
    std::size_t lo = 0, hi = 2 * n;
    while (lo < n && R[lo] == ComplexFloat{}) ++lo;
    while (hi > n && R[hi] == ComplexFloat{}) --hi;
    if (lo != 2 * n - hi) throw ConditioningError("factor: lift is not self-inversive");

    std::vector<ComplexFloat> selected;
    if (hi > lo) {
        FloatPoly core(std::vector<ComplexFloat>(R.coeffs().begin() + static_cast<long>(lo),
                                                 R.coeffs().begin() + static_cast<long>(hi) + 1));
        auto rs = all_roots(core, opt.roots);
        std::vector<ComplexFloat> outside, inside;
        for (const auto& r : rs.roots) {
            const double mod = std::abs(r.location);
            if (std::abs(mod - 1.0) <= opt.circle_tol) {
                if (r.multiplicity % 2)
                    throw NotNonnegativeError("factor: unit-circle root of odd multiplicity at arg " +
                                              std::to_string(std::arg(r.location)));
                selected.insert(selected.end(), static_cast<std::size_t>(r.multiplicity / 2), r.location / mod);
                out.circle_roots += static_cast<std::size_t>(r.multiplicity / 2);
            } else {
                auto& bucket = mod > 1.0 ? outside : inside;
                bucket.insert(bucket.end(), static_cast<std::size_t>(r.multiplicity), r.location);
            }
        }
        if (outside.size() != inside.size()) throw ConditioningError("factor: reflected root pairing failed");
        std::vector<bool> used(inside.size(), false);
        for (const auto& z : outside) {
            std::size_t best = inside.size();
            double bd = 0.0;
            for (std::size_t k = 0; k < inside.size(); ++k) {
                if (used[k]) continue;
                double d = std::abs(reflect(inside[k]) - z);
                if (best == inside.size() || d < bd) {
                    best = k;
                    bd = d;
                }
            }
            if (best == inside.size() || bd > opt.pair_tol * std::max(1.0, std::norm(z)))
                throw ConditioningError("factor: no reflected partner for root " + std::to_string(std::abs(z)));
            used[best] = true;
            selected.push_back(0.5 * (z + reflect(inside[best])));
        }
    }
    if (selected.size() != n - lo) throw ConditioningError("factor: selected root count mismatch");

    auto M = from_roots<ComplexFloat>(selected).with_formal_degree(n);
    double norm2 = 0.0;
    for (const auto& c : M.coeffs()) norm2 += std::norm(c);
    const double cabs = std::sqrt(2.0 * y0 / norm2);
    const ComplexFloat c = cabs * std::conj(M[0]) / std::abs(M[0]);
    out.X = M * c;
    out.X[0] = ComplexFloat(out.X[0].real(), 0.0);
    out.roots = std::move(selected);

    auto back = phi(SpectralFactor<ComplexFloat>(out.X));
    double err = 0.0;
    for (std::size_t k = 0; k <= n; ++k) err = std::max(err, std::abs(back[k] - y[k]));
    if (err > opt.factor_tol * y.scale())
        throw ConditioningError("factor: phi(X) misses Y by " + std::to_string(err / y.scale() * 1e9) + "e-9" + " relative");
    return out;
}

}  // namespace detail

/// Outer Fejer-Riesz factor: x_0 > 0, no roots in the open unit disk, and
/// phi(X) = Y. Each root pair {z, 1/conj z} of lift(Y) contributes its member
/// with |z| >= 1; unit-circle roots contribute half their multiplicity.
template <Scalar S>
SpectralFactor<ComplexFloat> factor(const TrigPoly<S>& Y, const ConeOptions& opt = {}) {
    return SpectralFactor<ComplexFloat>(detail::factor_detail(to_float(Y), opt).X);
}

/// Membership in the cone of nonnegative trigonometric polynomials.
template <Scalar S>
ConeVerdict<S> classify(const TrigPoly<S>& Y, const ConeOptions& opt = {}) {
    const auto& y = to_float(Y);
    const double scale = y.scale();
    const std::size_t n = Y.degree();
    ConeVerdict<S> v;
    auto cs = minimize_T(y, opt);
    v.min_value = cs.min_value;
    v.minimizer_t = cs.argmin;
    if (v.min_value > opt.tol * scale) v.classification = ConeClass::Inside;
    else if (v.min_value < -opt.tol * scale) v.classification = ConeClass::Outside;
    else v.classification = ConeClass::Boundary;

    if (n >= 1 && !is_zero(Y[n])) v.dis2_value = dis2(Y);

    if (v.classification == ConeClass::Boundary && v.dis2_value) {
        const int deg = static_cast<int>(4 * n - 2);
        bool small;
        if constexpr (is_exact_v<S>) {
            Rational b = Rational(opt.dis2_tol);
            const Rational sc(scale);
            for (int k = 0; k < deg; ++k) b *= sc;
            small = v.dis2_value->norm() <= b * b;
        } else {
            double mag = std::abs(*v.dis2_value);
            small = mag == 0.0 || std::log(mag) <= std::log(opt.dis2_tol) + deg * std::log(scale);
        }
        if (!small) throw ConsistencyError("classify: boundary verdict but Dis_2 is not small");
    }

    if (v.classification != ConeClass::Outside) {
        auto fd = detail::factor_detail(y, opt);
        v.rank_certificate = fd.circle_roots == 0 && fd.X[0].real() > 0.0;
        v.factor.emplace(std::move(fd.X));
        if (v.classification == ConeClass::Inside && !v.rank_certificate)
            throw ConsistencyError("classify: interior verdict without a full-rank certificate");
    }
    return v;
}

}  // namespace nntrig
