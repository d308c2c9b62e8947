#pragma once

#include <cctype>
#include <cmath>
#include <complex>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

#include "nntrig/error.hpp"

namespace nntrig {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonicalizes after every arithmetic operation).
using Rational = mpq_class;

/// Double-precision complex value; only finite components are admissible.
using ComplexFloat = std::complex<double>;

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "p/q" or a plain decimal such as "-0.125" into an exact rational.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return InputError("malformed rational '" + s + "'"); };
    if (s.empty()) throw bad();
    if (auto slash = s.find('/'); slash != std::string::npos) {
        mpz_class num, den;
        if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0)
            throw bad();
        if (den == 0) throw InputError("rational '" + s + "' has zero denominator");
        return make_rational(num, den);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac = s.size() - dot - 1;
        if (frac == 0 || digits.empty() || digits == "-" || digits == "+") throw bad();
        for (std::size_t i = (digits[0] == '-' || digits[0] == '+') ? 1 : 0; i < digits.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(digits[i]))) throw bad();
        if (digits[0] == '+') digits.erase(0, 1);
        mpz_class num(digits, 10), den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
        return make_rational(num, den);
    }
    mpz_class num;
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    if (num.set_str(s, 10) != 0) throw bad();
    return Rational(num);
}

/// "p/q", with "/q" omitted when q = 1.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

/// Nearest-double rounding; overflow to infinity is a MagnitudeError.
inline double to_double(const Rational& r) {
    mpfr_t tmp;
    mpfr_init2(tmp, 53);
    mpfr_set_q(tmp, r.get_mpq_t(), MPFR_RNDN);
    double d = mpfr_get_d(tmp, MPFR_RNDN);
    mpfr_clear(tmp);
    if (!std::isfinite(d)) throw MagnitudeError("rational " + to_string(r) + " overflows double");
    return d;
}

/// Exact element of Q(i).
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long v) : re_(v), im_(0) {}  // NOLINT: integer literals are natural scalars
    explicit GaussRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

    const Rational& real() const noexcept { return re_; }
    const Rational& imag() const noexcept { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    /// |w|^2 as an exact rational.
    Rational norm() const { return Rational(re_ * re_ + im_ * im_); }
    GaussRational conj() const { return GaussRational(re_, Rational(-im_)); }

    GaussRational operator-() const { return GaussRational(Rational(-re_), Rational(-im_)); }

    GaussRational& operator+=(const GaussRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o) {
        Rational d = o.norm();
        if (d == 0) throw DomainError("division by zero Gaussian rational");
        Rational re = (re_ * o.re_ + im_ * o.im_) / d;
        Rational im = (im_ * o.re_ - re_ * o.im_) / d;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const GaussRational& w) {
        os << to_string(w.re_);
        if (w.im_ != 0) os << (w.im_ < 0 ? "-" : "+") << to_string(Rational(abs(w.im_))) << "i";
        return os;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

inline GaussRational gauss_mul(const GaussRational& a, const GaussRational& b) { return a * b; }

inline ComplexFloat to_float(const GaussRational& a) {
    return {to_double(a.real()), to_double(a.imag())};
}

inline void check_finite(const ComplexFloat& z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw MagnitudeError(std::string("non-finite value in ") + what);
}

// Uniform vocabulary used by the templates: conj, abs2 (as a scalar), magnitude,
// is_zero, to_complex.
inline GaussRational conj(const GaussRational& a) { return a.conj(); }
inline ComplexFloat conj(const ComplexFloat& a) { return std::conj(a); }

inline GaussRational abs2(const GaussRational& a) { return GaussRational(a.norm()); }
inline ComplexFloat abs2(const ComplexFloat& a) { return {std::norm(a), 0.0}; }

inline bool is_zero(const GaussRational& a) { return a.is_zero(); }
inline bool is_zero(const ComplexFloat& a) { return a == ComplexFloat{}; }

inline ComplexFloat to_complex(const GaussRational& a) { return to_float(a); }
inline ComplexFloat to_complex(const ComplexFloat& a) { return a; }

inline double magnitude(const GaussRational& a) { return std::abs(to_float(a)); }
inline double magnitude(const ComplexFloat& a) { return std::abs(a); }

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<GaussRational> {
    static constexpr bool exact = true;
    static constexpr const char* name = "exact";
};

template <>
struct scalar_traits<ComplexFloat> {
    static constexpr bool exact = false;
    static constexpr const char* name = "float";
};

template <class S>
inline constexpr bool is_exact_v = scalar_traits<S>::exact;

template <class S>
concept Scalar = requires { scalar_traits<S>::exact; };

/// Integer power by repeated squaring; exponent 0 yields 1.
template <Scalar S>
S ipow(S base, unsigned long e) {
    S result(1);
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

}  // namespace nntrig
