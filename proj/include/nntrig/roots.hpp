#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "nntrig/poly.hpp"

namespace nntrig {

/// Iteration failed to settle; carries the last iterate so callers can inspect it.
struct ConvergenceError : Error {
    ConvergenceError(const std::string& w, std::vector<ComplexFloat> best)
        : Error(ErrorKind::numeric, w), best_iterate(std::move(best)) {}
    std::vector<ComplexFloat> best_iterate;
};

struct Root {
    ComplexFloat location;
    int multiplicity = 1;
};

struct RootSet {
    std::vector<Root> roots;
    /// max_r |P(r)| / max_k |p_k| over the returned locations.
    double residual_bound = 0.0;
    /// Vanishing leading coefficients stripped before iteration.
    std::size_t roots_at_infinity = 0;
    int iterations = 0;

    std::size_t count() const {
        std::size_t n = 0;
        for (const auto& r : roots) n += static_cast<std::size_t>(r.multiplicity);
        return n;
    }
    /// Every location repeated according to its multiplicity.
    std::vector<ComplexFloat> expanded() const {
        std::vector<ComplexFloat> out;
        for (const auto& r : roots) out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.location);
        return out;
    }
};

struct RootOptions {
    double cluster_tol = 1e-7;
    int max_iters = 200;
    double converge_tol = 1e-14;
    int polish_steps = 2;
};

/// Unit-circle reflection z -> 1/conj(z).
inline ComplexFloat reflect(ComplexFloat z) {
    if (z == ComplexFloat{}) throw DomainError("reflect: z = 0 has no reflection");
    return 1.0 / std::conj(z);
}

namespace detail {

// Value and derivative by Horner, plus the running-error bound sum |b_k| |z|^k.
struct HornerEval {
    ComplexFloat p, dp;
    double abs_sum;
};

inline HornerEval horner(const std::vector<ComplexFloat>& b, ComplexFloat z) {
    ComplexFloat p = b.back(), dp = 0.0;
    double az = std::abs(z), s = std::abs(b.back());
    for (std::size_t k = b.size() - 1; k-- > 0;) {
        dp = dp * z + p;
        p = p * z + b[k];
        s = s * az + std::abs(b[k]);
    }
    return {p, dp, s};
}

}  // namespace detail

/// All roots of P by Aberth-Ehrlich simultaneous iteration.
///
/// Leading zero coefficients are stripped and counted as roots at infinity;
/// trailing zeros become an exact root at 0. The start points lie on a circle
/// whose radius is the geometric mean of the root moduli, so the result is a
/// deterministic function of the coefficients. Approximations closer than
/// cluster_tol (relative to their modulus), or whose inclusion disks overlap,
/// are merged into one root whose multiplicity is the cluster size.
template <Scalar S>
RootSet all_roots(const Poly<S>& P, const RootOptions& opt = {}) {
    std::vector<ComplexFloat> a;
    a.reserve(P.coeffs().size());
    for (const auto& c : P.coeffs()) {
        a.push_back(to_complex(c));
        check_finite(a.back(), "all_roots coefficients");
    }
    long eff = -1;
    for (std::size_t k = a.size(); k-- > 0;)
        if (a[k] != ComplexFloat{}) {
            eff = static_cast<long>(k);
            break;
        }
    if (eff < 0) throw DegenerateInputError("all_roots: zero polynomial");
    if (eff == 0) throw PreconditionError("all_roots: effective degree must be at least 1");

    RootSet out;
    out.roots_at_infinity = a.size() - 1 - static_cast<std::size_t>(eff);
    std::size_t zeros = 0;
    while (a[zeros] == ComplexFloat{}) ++zeros;

    std::vector<ComplexFloat> b(a.begin() + static_cast<long>(zeros), a.begin() + eff + 1);
    const std::size_t d = b.size() - 1;
    const ComplexFloat lead = b.back();
    for (auto& c : b) c /= lead;

    std::vector<ComplexFloat> z(d);
    if (d > 0) {
        const double radius = std::pow(std::abs(b[0]), 1.0 / static_cast<double>(d));
        for (std::size_t k = 0; k < d; ++k) {
            double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d) + 0.4;
            z[k] = std::polar(radius, theta);
        }
    }

    const double eps = std::numeric_limits<double>::epsilon();
    const double gamma = 4.0 * static_cast<double>(d + 1) * eps;
    std::vector<bool> done(d, false);
    std::size_t n_done = 0;
    int it = 0;
    for (; it < opt.max_iters && n_done < d; ++it) {
        for (std::size_t i = 0; i < d; ++i) {
            if (done[i]) continue;
            auto h = detail::horner(b, z[i]);
            if (std::abs(h.p) <= gamma * h.abs_sum) {
                done[i] = true;
                ++n_done;
                continue;
            }
            ComplexFloat ratio = h.p / h.dp;
            ComplexFloat sum = 0.0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            ComplexFloat w = ratio / (1.0 - ratio * sum);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
            z[i] -= w;
            if (std::abs(w) <= opt.converge_tol * std::max(std::abs(z[i]), eps)) {
                done[i] = true;
                ++n_done;
            }
        }
    }
    out.iterations = it;
    if (n_done < d)
        throw ConvergenceError("all_roots: no convergence after " + std::to_string(opt.max_iters) + " iterations", z);

    for (auto& zi : z) {
        for (int s = 0; s < opt.polish_steps; ++s) {
            auto h = detail::horner(b, zi);
            if (h.dp == ComplexFloat{}) break;
            ComplexFloat cand = zi - h.p / h.dp;
            if (std::abs(detail::horner(b, cand).p) < std::abs(h.p)) zi = cand;
            else break;
        }
    }

    // Inclusion radii d |p(z_i)| / prod |z_i - z_j|, with |p| floored at the
    // evaluation error. Near a multiple root these are comparable to the
    // spread of the approximations, so overlapping disks are merged too.
    std::vector<double> radius(d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
        auto h = detail::horner(b, z[i]);
        double prod = 1.0;
        for (std::size_t j = 0; j < d; ++j)
            if (j != i) prod *= std::abs(z[i] - z[j]);
        double res = std::max(std::abs(h.p), gamma * h.abs_sum);
        radius[i] = prod > 0.0 ? static_cast<double>(d) * res / prod : INFINITY;
    }

    // Union-find clustering on relative distance.
    std::vector<std::size_t> parent(d);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            double scale = std::max(std::abs(z[i]), std::abs(z[j]));
            double dist = std::abs(z[i] - z[j]);
            if (dist <= opt.cluster_tol * scale || dist <= radius[i] + radius[j]) parent[find(i)] = find(j);
        }
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < d; ++i)
        if (find(i) == i) order.push_back(i);
    for (std::size_t rep : order) {
        ComplexFloat sum = 0.0;
        int m = 0;
        for (std::size_t i = 0; i < d; ++i)
            if (find(i) == rep) {
                sum += z[i];
                ++m;
            }
        ComplexFloat center = sum / static_cast<double>(m);
        double spread = 0.0;
        for (std::size_t i = 0; i < d; ++i)
            if (find(i) == rep) spread = std::max(spread, std::abs(z[i] - center));
        if (m > 1) {
            // A root of multiplicity m is a simple root of the (m-1)-th derivative.
            std::vector<ComplexFloat> dm = b;
            for (int k = 1; k < m; ++k) {
                for (std::size_t j = 1; j < dm.size(); ++j) dm[j - 1] = dm[j] * static_cast<double>(j);
                dm.pop_back();
            }
            for (int s = 0; s < 4 * opt.polish_steps; ++s) {
                auto h = detail::horner(dm, center);
                if (h.dp == ComplexFloat{}) break;
                ComplexFloat cand = center - h.p / h.dp;
                if (std::abs(cand - center) > std::max(spread, opt.cluster_tol * std::max(1.0, std::abs(center)))) break;
                if (std::abs(detail::horner(dm, cand).p) < std::abs(h.p)) center = cand;
                else break;
            }
        }
        out.roots.push_back({center, m});
    }
    if (zeros > 0) out.roots.push_back({ComplexFloat{}, static_cast<int>(zeros)});

    double maxc = 0.0;
    for (const auto& c : a) maxc = std::max(maxc, std::abs(c));
    for (const auto& r : out.roots) {
        ComplexFloat v = eval_float(P, r.location);
        out.residual_bound = std::max(out.residual_bound, std::abs(v) / maxc);
    }
    return out;
}

}  // namespace nntrig
