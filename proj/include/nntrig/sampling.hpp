#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "nntrig/poly.hpp"

namespace nntrig {

/// Counter-based generator: draw k is splitmix64(seed + k * golden), so a
/// stream is a pure function of (seed, k) and reproducible everywhere.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [lo, hi].
    long integer(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

/// Rational p/q with |p| <= max_num, 1 <= q <= max_den.
inline Rational random_rational(CounterRng& rng, long max_num = 9, long max_den = 7) {
    return make_rational(mpz_class(rng.integer(-max_num, max_num)), mpz_class(rng.integer(1, max_den)));
}

inline GaussRational random_gauss(CounterRng& rng, long max_num = 9, long max_den = 7) {
    Rational re = random_rational(rng, max_num, max_den);
    Rational im = random_rational(rng, max_num, max_den);
    return GaussRational(re, im);
}

inline GaussRational random_nonzero_gauss(CounterRng& rng, long max_num = 9, long max_den = 7) {
    for (;;) {
        auto w = random_gauss(rng, max_num, max_den);
        if (!w.is_zero()) return w;
    }
}

/// Exact polynomial of formal degree n with x_0 > 0 rational and x_n != 0.
inline ComplexPoly random_exact_factor(CounterRng& rng, std::size_t n) {
    std::vector<GaussRational> v(n + 1);
    Rational x0;
    do x0 = random_rational(rng); while (x0 <= 0);
    v[0] = GaussRational(x0);
    for (std::size_t k = 1; k <= n; ++k) v[k] = k == n ? random_nonzero_gauss(rng) : random_gauss(rng);
    return ComplexPoly(std::move(v));
}

/// Point (3 + 4i)-style: rational point on the unit circle from a parameter s,
/// ((1 - s^2) + 2 s i) / (1 + s^2).
inline GaussRational rational_unit_point(const Rational& s) {
    Rational d = 1 + s * s;
    return GaussRational(Rational((1 - s * s) / d), Rational(2 * s / d));
}

/// Float complex sample with modulus in [rmin, rmax].
inline ComplexFloat random_annulus(CounterRng& rng, double rmin, double rmax) {
    return std::polar(rng.uniform(rmin, rmax), rng.uniform(0.0, 2.0 * std::numbers::pi));
}

}  // namespace nntrig
