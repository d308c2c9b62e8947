// Acceptance run: one PASS/FAIL line per criterion. With an argument N only
// criterion N runs. Exit status is nonzero if any selected criterion fails.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "nntrig/cone.hpp"
#include "nntrig/starlike.hpp"
#include "nntrig/verify.hpp"

using namespace nntrig;
using G = GaussRational;
using verify::SuiteReport;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        detail << (detail.tellp() > 0 ? "; " : "") << what << (ok ? "" : " [failed]");
    }
    void suites(const std::vector<SuiteReport>& reps) {
        for (const auto& r : reps) require(r.ok(), r.name + " " + std::to_string(r.passed) + "/" + std::to_string(r.total));
    }
};

std::string frac(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

FloatPoly random_outer(CounterRng& rng, std::size_t n) {
    std::vector<ComplexFloat> zs;
    for (std::size_t k = 0; k < n; ++k) zs.push_back(random_annulus(rng, 1.1, 3.0));
    auto X = from_roots<ComplexFloat>(zs, std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 2 * pi)));
    X = X * (std::abs(X[0]) / X[0]);
    X[0] = std::abs(X[0]);
    return X;
}

template <Scalar S>
double grid_min(const TrigPoly<S>& Y, int pts) {
    double m = INFINITY;
    for (int k = 0; k < pts; ++k) m = std::min(m, eval_T(Y, 2 * pi * k / pts));
    return m;
}

// 1. n = 1 closed forms of Dis_2 and V.
void example1(Outcome& o) {
    auto reps = verify::explicit_forms(100, 101);
    o.suites({reps[0], reps[1]});
}

// 2. n = 2 closed forms; V against the form with |x1|^2 in the first square.
void example2(Outcome& o) {
    auto reps = verify::explicit_forms(100, 102);
    o.suites({reps[2], reps[3]});
    o.detail << "; info: " << reps[4].name << " " << frac(reps[4].passed, reps[4].total);
}

void lemma1(Outcome& o) {
    for (std::size_t n = 1; n <= 5; ++n) {
        auto r = verify::lemma1<G>(n, 50, 300 + n);
        o.require(r.ok(), r.name + " " + frac(r.passed, r.total) + " sign " + r.info.value("sign", io::json("?")).dump());
    }
}

void lemma2(Outcome& o) {
    for (std::size_t n = 1; n <= 4; ++n) o.suites({verify::lemma2<G>(n, 25, 400 + n)});
}

void lemma3(Outcome& o) {
    for (std::size_t n = 2; n <= 5; ++n) {
        auto e = verify::lemma3<G>(n, 20, 500 + n);
        auto f = verify::lemma3<ComplexFloat>(n, 20, 500 + n);
        o.require(e.ok() && f.ok(), "n=" + std::to_string(n) + " exact " + frac(e.passed, e.total) + " float " + frac(f.passed, f.total));
    }
}

void roundtrip(Outcome& o) {
    CounterRng rng(600);
    std::size_t good = 0, mod_good = 0, total = 200;
    double worst = 0.0, worst_mod = 0.0;
    for (std::size_t s = 0; s < total; ++s) {
        std::size_t n = 1 + s % 6;
        auto X = random_outer(rng, n);
        auto Y = phi(SpectralFactor<ComplexFloat>(X));
        double err = 0.0;
        try {
            auto F = factor(Y).poly();
            for (std::size_t k = 0; k <= n; ++k) err = std::max(err, std::abs(F[k] - X[k]) / max_coeff_magnitude(X));
        } catch (const Error&) {
            err = INFINITY;
        }
        worst = std::max(worst, err);
        good += err <= 1e-9;
        double merr = 0.0;
        for (int k = 0; k < 64; ++k) {
            double t = 2 * pi * k / 64;
            double lhs = std::norm(eval(X, std::polar(1.0, t))), rhs = 2 * eval_T(Y, t);
            merr = std::max(merr, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-300));
        }
        worst_mod = std::max(worst_mod, merr);
        mod_good += merr <= 1e-9;
    }
    std::ostringstream a, b;
    a << "factor(phi(X)) = X " << frac(good, total) << " worst " << worst;
    b << "|X|^2 = 2T at 64 angles " << frac(mod_good, total) << " worst " << worst_mod;
    o.require(good == total, a.str());
    o.require(mod_good == total, b.str());
}

void classification(Outcome& o) {
    CounterRng rng(700);
    const double tol = ConeOptions{}.tol;
    std::size_t agree = 0, total = 500, manufactured = 0, boundary_hits = 0, dis2_ok = 0, boundary_total = 0;
    std::size_t inside = 0, outside = 0;
    for (std::size_t s = 0; s < total; ++s) {
        std::size_t n = 1 + s % 6;
        bool planted = s % 5 == 0;
        ConeClass cls;
        double gmin, scale;
        std::optional<ComplexFloat> d2;
        double d2_bound = 0.0;
        bool d2_small = false;
        try {
            if (planted) {
                ++manufactured;
                auto w = rational_unit_point(random_rational(rng));
                auto X = mul(random_exact_factor(rng, n - 1), ComplexPoly{-w, G(1)});
                X = X * conj(X[0]);
                auto Y = phi(SpectralFactor<G>(X));
                auto v = classify(Y);
                cls = v.classification;
                gmin = grid_min(Y, 4096);
                scale = to_float(Y).scale();
                if (v.dis2_value) {
                    d2 = to_float(*v.dis2_value);
                    d2_small = v.dis2_value->is_zero() ||
                               std::log(std::abs(*d2)) <= std::log(1e-6) + (4.0 * n - 2) * std::log(scale);
                }
            } else {
                auto X = random_outer(rng, n);
                auto Y = phi(SpectralFactor<ComplexFloat>(X));
                std::vector<ComplexFloat> y = Y.coeffs();
                y[0] = y[0] * rng.uniform(0.6, 1.4);
                TrigPoly<ComplexFloat> Z(y);
                auto v = classify(Z);
                cls = v.classification;
                gmin = grid_min(Z, 4096);
                scale = Z.scale();
                if (v.dis2_value) {
                    d2 = *v.dis2_value;
                    d2_bound = 1e-6 * std::pow(scale, 4.0 * n - 2);
                    d2_small = std::abs(*d2) <= d2_bound;
                }
            }
        } catch (const Error& e) {
            std::printf("  classify error at sample %zu: %s\n", s, e.what());
            continue;
        }
        bool ok;
        switch (cls) {
            case ConeClass::Inside: ok = gmin > 0; ++inside; break;
            case ConeClass::Outside: ok = gmin < 0; ++outside; break;
            default:
                ++boundary_total;
                ok = gmin >= -tol * scale;
                dis2_ok += d2_small;
                break;
        }
        ok = ok && (cls == ConeClass::Boundary) == planted;
        boundary_hits += planted && cls == ConeClass::Boundary;
        agree += ok;
    }
    o.require(agree == total, "grid sign agreement " + frac(agree, total) + " (inside " + std::to_string(inside) +
                                  ", outside " + std::to_string(outside) + ", boundary " + std::to_string(boundary_total) + ")");
    o.require(boundary_hits == manufactured && boundary_total == manufactured,
              "boundary exactly on manufactured " + frac(boundary_hits, manufactured));
    o.require(dis2_ok == boundary_total, "|dis2| <= 1e-6 scale^(4n-2) " + frac(dis2_ok, boundary_total));
}

void oracle(Outcome& o) {
    auto f = verify::oracle(8, 100, 800);
    auto x = verify::oracle(8, 50, 801);
    o.suites({f[0], f[1], x[2], x[3]});
}

void degrees(Outcome& o) {
    CounterRng rng(900);
    std::size_t v_ok = 0, d_ok = 0, r_ok = 0, total = 0;
    for (std::size_t n = 1; n <= 4; ++n)
        for (int s = 0; s < 20; ++s) {
            ++total;
            Rational tq;
            do tq = random_rational(rng); while (tq == 0);
            G t(tq);
            auto X = random_exact_factor(rng, n);
            auto V = mobius_discriminant(X);
            v_ok += mobius_discriminant(X * t) == ipow(t, 2 * n) * V;
            r_ok += mobius_discriminant(reciprocal(X)) == (n % 2 ? -V : V);
            std::vector<G> y{G(random_rational(rng))};
            for (std::size_t k = 1; k <= n; ++k) y.push_back(k == n ? random_nonzero_gauss(rng) : random_gauss(rng));
            TrigPoly<G> Y(y);
            d_ok += dis2(Y.scaled(t)) == ipow(t, 4 * n - 2) * dis2(Y);
        }
    o.require(v_ok == total, "V(tX) = t^(2n) V(X) " + frac(v_ok, total));
    o.require(d_ok == total, "dis2(tY) = t^(4n-2) dis2(Y) " + frac(d_ok, total));
    o.require(r_ok == total, "V(X*) = (-1)^n V(X) " + frac(r_ok, total));
}

void starlike_family(Outcome& o) {
    struct Case {
        long num, den;
    };
    CounterRng rng(1000);
    for (Case c : {Case{3, 10}, Case{49, 100}, Case{1, 2}, Case{51, 100}, Case{7, 10}}) {
        const double a = static_cast<double>(c.num) / static_cast<double>(c.den);
        const bool expected = a <= 0.5;
        // Exact real coefficient, then a rotated complex one of the same modulus.
        auto exact = is_starlike(ComplexPoly{G(0), G(1), G(Rational(c.num, c.den))});
        ComplexFloat ac = std::polar(a, rng.uniform(0, 2 * pi));
        auto rotated = is_starlike(FloatPoly{0.0, 1.0, ac});
        auto sampler = [](ComplexFloat coef) {
            double m = INFINITY;
            for (int k = 0; k < 2048; ++k) {
                auto z = std::polar(1.0, 2 * pi * k / 2048);
                m = std::min(m, (z * (1.0 + 2.0 * coef * z) * std::conj(z + coef * z * z)).real());
            }
            return m >= -1e-8;
        };
        bool ok = exact.is_starlike == expected && rotated.is_starlike == expected && sampler(a) == expected &&
                  sampler(ac) == expected;
        std::ostringstream s;
        s << "|a|=" << a << " " << (exact.is_starlike ? "starlike" : "not starlike") << " ("
          << to_string(exact.cone_verdict.classification) << ")";
        if (c.num * 2 == c.den) {
            bool bd = exact.cone_verdict.classification == ConeClass::Boundary &&
                      std::abs(exact.cone_verdict.minimizer_t - pi) <= 1e-6;
            ok = ok && bd;
            s << " argmin " << exact.cone_verdict.minimizer_t;
        }
        o.require(ok, s.str());
    }
}

struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {"n=1 closed forms", example1},
        {"n=2 closed forms", example2},
        {"Lemma 1 Jacobian determinant", lemma1},
        {"Lemma 2 Dis_2 factorization", lemma2},
        {"Lemma 3 shadow property", lemma3},
        {"Fejer roundtrip", roundtrip},
        {"classification vs brute force", classification},
        {"oracle equivalence", oracle},
        {"form degrees", degrees},
        {"starlike family", starlike_family},
    };
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    if (only < 0 || only > static_cast<int>(criteria.size())) {
        std::fprintf(stderr, "usage: %s [criterion 1..%zu]\n", argv[0], criteria.size());
        return 2;
    }
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only && static_cast<int>(i) + 1 != only) continue;
        Outcome o;
        try {
            criteria[i].run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.str().c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
