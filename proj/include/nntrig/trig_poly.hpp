#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "nntrig/poly.hpp"

namespace nntrig {

/// Coefficient vector y = (y_0, ..., y_n) of T(t) = Re sum_k y_k e^{ikt}; y_0 is real.
template <Scalar S>
class TrigPoly {
public:
    explicit TrigPoly(std::vector<S> y) : y_(std::move(y)) {
        if (y_.empty()) throw InputError("trigonometric polynomial needs at least y_0");
        bool real0;
        if constexpr (is_exact_v<S>) real0 = y_[0].is_real();
        else real0 = y_[0].imag() == 0.0;
        if (!real0) throw InputError("y_0 must be real");
    }
    TrigPoly(std::initializer_list<S> y) : TrigPoly(std::vector<S>(y)) {}

    std::size_t degree() const noexcept { return y_.size() - 1; }
    const std::vector<S>& coeffs() const noexcept { return y_; }
    const S& operator[](std::size_t k) const { return y_[k]; }

    /// Largest coefficient magnitude; the cone's natural scale.
    double scale() const {
        double m = 0.0;
        for (const auto& c : y_) m = std::max(m, magnitude(c));
        return m;
    }

    TrigPoly scaled(const S& t) const {
        auto v = y_;
        for (auto& c : v) c = c * t;
        return TrigPoly(std::move(v));
    }

    friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
        auto v = a.y_;
        if (b.y_.size() > v.size()) v.resize(b.y_.size(), S(0));
        for (std::size_t k = 0; k < b.y_.size(); ++k) v[k] += b.y_[k];
        return TrigPoly(std::move(v));
    }
    friend bool operator==(const TrigPoly& a, const TrigPoly& b) { return a.y_ == b.y_; }

private:
    std::vector<S> y_;
};

inline TrigPoly<ComplexFloat> to_float(const TrigPoly<GaussRational>& y) {
    std::vector<ComplexFloat> v;
    for (const auto& c : y.coeffs()) v.push_back(to_float(c));
    return TrigPoly<ComplexFloat>(std::move(v));
}
inline const TrigPoly<ComplexFloat>& to_float(const TrigPoly<ComplexFloat>& y) { return y; }

/// The self-inversive lift R = Y* + z^n Y of formal degree 2n: conj(y_{n-k}) at
/// index k < n, 2 y_0 at index n, y_m at index n + m.
template <Scalar S>
Poly<S> lift(const TrigPoly<S>& Y) {
    const std::size_t n = Y.degree();
    auto r = Poly<S>::zero(2 * n);
    for (std::size_t k = 0; k < n; ++k) r[k] = conj(Y[n - k]);
    r[n] = Y[0] * S(2);
    for (std::size_t m = 1; m <= n; ++m) r[n + m] = Y[m];
    return r;
}

}  // namespace nntrig
