#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "nntrig/scalar.hpp"

namespace nntrig {

/// Univariate complex polynomial with an explicitly declared formal degree.
///
/// coeffs()[k] is the coefficient of z^k; the vector always holds
/// formal_degree() + 1 entries. The leading entry may be zero: the formal degree
/// is declared, never inferred, because reciprocals and Sylvester matrices are
/// taken at the declared degree.
template <Scalar S>
class Poly {
public:
    /// Zero polynomial of formal degree 0.
    Poly() : c_(1, S(0)) {}
    explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(S(0));
    }
    Poly(std::initializer_list<S> coeffs) : Poly(std::vector<S>(coeffs)) {}

    static Poly zero(std::size_t formal_degree) { return Poly(std::vector<S>(formal_degree + 1, S(0))); }
    static Poly monomial(std::size_t k, S c = S(1)) {
        auto p = zero(k);
        p.c_[k] = std::move(c);
        return p;
    }

    std::size_t formal_degree() const noexcept { return c_.size() - 1; }
    /// Largest index with a nonzero coefficient, or -1 for the zero polynomial.
    long effective_degree() const {
        for (std::size_t k = c_.size(); k-- > 0;)
            if (!is_zero(c_[k])) return static_cast<long>(k);
        return -1;
    }
    bool is_zero_poly() const { return effective_degree() < 0; }

    const std::vector<S>& coeffs() const noexcept { return c_; }
    const S& operator[](std::size_t k) const { return c_[k]; }
    S& operator[](std::size_t k) { return c_[k]; }
    /// Coefficient k, or zero beyond the formal degree.
    S coeff(std::size_t k) const { return k < c_.size() ? c_[k] : S(0); }
    const S& leading() const { return c_.back(); }

    /// Same coefficients re-declared at another formal degree (zero-extends or
    /// drops vanishing top coefficients).
    Poly with_formal_degree(std::size_t n) const {
        if (static_cast<long>(n) < effective_degree())
            throw PreconditionError("cannot declare formal degree below effective degree");
        auto v = c_;
        v.resize(n + 1, S(0));
        return Poly(std::move(v));
    }
    Poly trimmed() const {
        long d = effective_degree();
        return with_formal_degree(d < 0 ? 0 : static_cast<std::size_t>(d));
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    Poly& operator*=(const S& s) {
        for (auto& a : c_) a = a * s;
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const S& s) { return a *= s; }
    friend Poly operator*(const S& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }

    /// Coefficientwise equality after zero-extending the shorter operand.
    friend bool operator==(const Poly& a, const Poly& b) {
        std::size_t n = std::max(a.c_.size(), b.c_.size());
        for (std::size_t k = 0; k < n; ++k)
            if (a.coeff(k) != b.coeff(k)) return false;
        return true;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
        os << "[";
        for (std::size_t k = 0; k < p.c_.size(); ++k) os << (k ? ", " : "") << p.c_[k];
        return os << "]";
    }

private:
    std::vector<S> c_;
};

using ComplexPoly = Poly<GaussRational>;
using FloatPoly = Poly<ComplexFloat>;

template <Scalar S>
Poly<S> conjugate(const Poly<S>& p) {
    std::vector<S> v;
    v.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) v.push_back(conj(a));
    return Poly<S>(std::move(v));
}

/// P*(z) = z^n conj(P)(1/z) at the formal degree n: reverse and conjugate.
template <Scalar S>
Poly<S> reciprocal(const Poly<S>& p) {
    const auto& c = p.coeffs();
    std::vector<S> v;
    v.reserve(c.size());
    for (auto it = c.rbegin(); it != c.rend(); ++it) v.push_back(conj(*it));
    return Poly<S>(std::move(v));
}

/// Convolution; formal degree is the sum of the formal degrees.
template <Scalar S>
Poly<S> mul(const Poly<S>& p, const Poly<S>& q) {
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    std::vector<S> v(a.size() + b.size() - 1, S(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a[i] * b[j];
    }
    return Poly<S>(std::move(v));
}

/// Horner evaluation.
template <Scalar S>
S eval(const Poly<S>& p, const S& z) {
    const auto& c = p.coeffs();
    S acc = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
    return acc;
}

/// Float evaluation of any polynomial.
template <Scalar S>
ComplexFloat eval_float(const Poly<S>& p, ComplexFloat z) {
    const auto& c = p.coeffs();
    ComplexFloat acc = to_complex(c.back());
    for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + to_complex(c[k]);
    return acc;
}

template <Scalar S>
Poly<S> derivative(const Poly<S>& p) {
    const auto& c = p.coeffs();
    if (c.size() == 1) return Poly<S>::zero(0);
    std::vector<S> v;
    v.reserve(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) v.push_back(c[k] * S(static_cast<long>(k)));
    return Poly<S>(std::move(v));
}

/// Synthetic division by (z - root); the remainder is returned through `rem`.
template <Scalar S>
Poly<S> deflate(const Poly<S>& p, const S& root, S* rem = nullptr) {
    const auto& c = p.coeffs();
    if (c.size() == 1) {
        if (rem) *rem = c[0];
        return Poly<S>::zero(0);
    }
    std::vector<S> q(c.size() - 1, S(0));
    S acc = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        q[k] = acc;
        acc = acc * root + c[k];
    }
    if (rem) *rem = acc;
    return Poly<S>(std::move(q));
}

/// Largest coefficient magnitude.
template <Scalar S>
double max_coeff_magnitude(const Poly<S>& p) {
    double m = 0.0;
    for (const auto& a : p.coeffs()) m = std::max(m, magnitude(a));
    return m;
}

/// True iff reciprocal(P) equals P within `tol` componentwise; use tol = 0 for
/// exact scalars.
template <Scalar S>
bool is_self_inversive(const Poly<S>& p, double tol = 0.0) {
    auto r = reciprocal(p);
    for (std::size_t k = 0; k < r.coeffs().size(); ++k) {
        if constexpr (is_exact_v<S>) {
            if (tol != 0.0) throw PreconditionError("exact self-inversive test requires tol = 0");
            if (r[k] != p[k]) return false;
        } else {
            auto d = r[k] - p[k];
            if (std::abs(d.real()) > tol || std::abs(d.imag()) > tol) return false;
        }
    }
    return true;
}

inline FloatPoly to_float(const ComplexPoly& p) {
    std::vector<ComplexFloat> v;
    v.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) v.push_back(to_float(a));
    return FloatPoly(std::move(v));
}
inline const FloatPoly& to_float(const FloatPoly& p) { return p; }

/// Product of linear factors lead * prod (z - r_k).
template <Scalar S, class Range>
Poly<S> from_roots(const Range& roots, S lead = S(1)) {
    Poly<S> p{lead};
    for (const auto& r : roots) p = mul(p, Poly<S>{-S(r), S(1)});
    return p;
}

}  // namespace nntrig
