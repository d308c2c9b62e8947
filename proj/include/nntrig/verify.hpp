#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "nntrig/closed_forms.hpp"
#include "nntrig/io.hpp"
#include "nntrig/quadmap.hpp"
#include "nntrig/sampling.hpp"

namespace nntrig::verify {

using io::json;

struct SuiteReport {
    SuiteReport(std::string suite_name) : name(std::move(suite_name)) {}

    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
    std::vector<json> failures;  // offending points, capped at max_witnesses
    json info = json::object();

    bool ok() const { return passed == total; }
    void record(bool pass, const std::function<json()>& witness) {
        ++total;
        if (pass) ++passed;
        else if (failures.size() < max_witnesses) failures.push_back(witness());
    }
    json to_json() const {
        return {{"suite", name}, {"passed", passed}, {"total", total}, {"ok", ok()}, {"failures", failures}, {"info", info}};
    }
    static constexpr std::size_t max_witnesses = 5;
};

inline bool rel_close(ComplexFloat a, ComplexFloat b, double tol) {
    double s = std::max({std::abs(a), std::abs(b), std::numeric_limits<double>::min()});
    return std::abs(a - b) <= tol * s;
}

/// |det J| = |2 x_0 V(X)| with det J / (2 x_0 V(X)) the same sign for every X of degree n.
template <Scalar S = GaussRational>
SuiteReport lemma1(std::size_t n, std::size_t samples, std::uint64_t seed, double tol = 1e-9) {
    SuiteReport r{"lemma1 n=" + std::to_string(n)};
    CounterRng rng(seed);
    std::optional<S> reference;
    for (std::size_t s = 0; s < samples; ++s) {
        auto Xe = random_exact_factor(rng, n);
        Poly<S> X;
        if constexpr (is_exact_v<S>) X = Xe;
        else X = to_float(Xe);
        auto c = verify_lemma1(SpectralFactor<S>(X));
        bool pass;
        if constexpr (is_exact_v<S>) {
            pass = c.det.norm() == c.closed_form.norm();
            if (pass && c.ratio) {
                pass = *c.ratio == S(1) || *c.ratio == S(-1);
                if (!reference) reference = c.ratio;
                pass = pass && *c.ratio == *reference;
            }
        } else {
            pass = std::abs(std::abs(c.det) - std::abs(c.closed_form)) <= tol * std::abs(c.closed_form);
            if (pass && c.ratio) {
                ComplexFloat q = *c.ratio;
                ComplexFloat snapped(std::round(q.real()), 0.0);
                if (!reference) reference = snapped;
                pass = rel_close(q, *reference, tol);
            }
        }
        r.record(pass, [&] {
            return json{{"X", io::to_json(X)}, {"det", io::scalar_report(c.det)}, {"closed_form", io::scalar_report(c.closed_form)}};
        });
    }
    if (reference) r.info["sign"] = io::scalar_report(*reference);
    return r;
}

/// Dis_2(phi(X)) = |Dis X|^2 V(X)^2.
template <Scalar S = GaussRational>
SuiteReport lemma2(std::size_t n, std::size_t samples, std::uint64_t seed, double tol = 1e-9) {
    SuiteReport r{"lemma2 n=" + std::to_string(n)};
    CounterRng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        auto Xe = random_exact_factor(rng, n);
        Poly<S> X;
        if constexpr (is_exact_v<S>) X = Xe;
        else X = to_float(Xe);
        auto c = verify_lemma2(SpectralFactor<S>(X));
        bool pass;
        if constexpr (is_exact_v<S>) pass = c.lhs == c.rhs;
        else pass = rel_close(c.lhs, c.rhs, tol);
        r.record(pass, [&] {
            return json{{"X", io::to_json(X)}, {"lhs", io::scalar_report(c.lhs)}, {"rhs", io::scalar_report(c.rhs)}};
        });
    }
    return r;
}

/// Planted instance for the shadow construction: X = lead (z - w)^2 prod (z - z_j)
/// with |w| rational and lead chosen so that x_0 > 0.
struct PlantedDoubleRoot {
    ComplexPoly X;
    GaussRational w;
};

inline PlantedDoubleRoot plant_double_root(CounterRng& rng, std::size_t n) {
    for (;;) {
        Rational s = random_rational(rng, 5, 4);
        Rational rad;
        do rad = abs(random_rational(rng, 7, 3)); while (rad == 0);
        GaussRational w = rational_unit_point(s) * GaussRational(rad);
        std::vector<GaussRational> roots{w, w};
        for (std::size_t k = 2; k < n; ++k) roots.push_back(random_nonzero_gauss(rng, 6, 3));
        auto monic = from_roots<GaussRational>(roots);
        GaussRational x0 = monic[0];
        if (x0.is_zero()) continue;
        return {monic * conj(x0), w};
    }
}

/// Q Q* = X X*, q_0 > 0 and V(Q) = 0 for Q = lemma3_shadow(X, w). Exact mode
/// checks exact equality; float mode re-synthesizes Q from computed roots.
template <Scalar S = GaussRational>
SuiteReport lemma3(std::size_t n, std::size_t samples, std::uint64_t seed, double tol = 1e-9) {
    SuiteReport r{"lemma3 n=" + std::to_string(n)};
    CounterRng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        auto planted = plant_double_root(rng, n);
        if constexpr (is_exact_v<S>) {
            auto Q = lemma3_shadow(planted.X, planted.w);
            bool gram = mul(Q, reciprocal(Q)) == mul(planted.X, reciprocal(planted.X));
            bool q0 = Q[0].is_real() && Q[0].real() > 0;
            bool v0 = mobius_discriminant(Q).is_zero();
            r.record(gram && q0 && v0, [&] {
                return json{{"X", io::to_json(planted.X)}, {"w", io::to_json(planted.w)}, {"Q", io::to_json(Q)},
                            {"gram", gram}, {"q0_positive", q0}, {"V_zero", v0}};
            });
        } else {
            auto X = to_float(planted.X);
            auto Q = lemma3_shadow(X, to_float(planted.w));
            auto lhs = mul(Q, reciprocal(Q)), rhs = mul(X, reciprocal(X));
            double err = 0.0, sc = max_coeff_magnitude(rhs);
            for (std::size_t k = 0; k <= rhs.formal_degree(); ++k) err = std::max(err, std::abs(lhs[k] - rhs[k]));
            bool gram = err <= tol * sc;
            bool q0 = Q[0].real() > 0 && std::abs(Q[0].imag()) <= tol * std::abs(Q[0]);
            double vscale = std::pow(max_coeff_magnitude(Q), 2.0 * static_cast<double>(n));
            bool v0 = std::abs(mobius_discriminant(Q)) <= tol * vscale;
            r.record(gram && q0 && v0, [&] {
                return json{{"X", io::to_json(X)}, {"Q", io::to_json(Q)}, {"gram_rel_err", err / sc},
                            {"q0_positive", q0}, {"V_zero", v0}};
            });
        }
    }
    return r;
}

/// Sylvester determinants against the root-product routes, for resultants and
/// discriminants. Float pairs compare to `tol` relative; pairs built from
/// chosen rational roots compare exactly against the exact product formula.
inline std::vector<SuiteReport> oracle(std::size_t max_degree, std::size_t samples, std::uint64_t seed, double tol = 1e-8) {
    SuiteReport res_f{"resultant float max_degree=" + std::to_string(max_degree)};
    SuiteReport dis_f{"discriminant float max_degree=" + std::to_string(max_degree)};
    SuiteReport res_x{"resultant exact-roots max_degree=" + std::to_string(max_degree)};
    SuiteReport dis_x{"discriminant exact-roots max_degree=" + std::to_string(max_degree)};
    CounterRng rng(seed);
    auto rand_float_poly = [&](std::size_t d) {
        std::vector<ComplexFloat> c(d + 1);
        for (auto& a : c) a = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        return FloatPoly(std::move(c));
    };
    for (std::size_t s = 0; s < samples; ++s) {
        std::size_t n = static_cast<std::size_t>(rng.integer(1, static_cast<long>(max_degree)));
        std::size_t m = static_cast<std::size_t>(rng.integer(1, static_cast<long>(max_degree)));
        auto P = rand_float_poly(n), Q = rand_float_poly(m);
        ComplexFloat a = resultant(P, Q), b = resultant_root_oracle(P, Q);
        res_f.record(rel_close(a, b, tol), [&] {
            return json{{"P", io::to_json(P)}, {"Q", io::to_json(Q)}, {"sylvester", io::to_json(a)}, {"cayley", io::to_json(b)}};
        });
        std::size_t dm = std::max<std::size_t>(2, n);
        auto D = rand_float_poly(dm);
        ComplexFloat d1 = discriminant(D), d2 = discriminant_root_oracle(D);
        dis_f.record(rel_close(d1, d2, tol), [&] {
            return json{{"P", io::to_json(D)}, {"resultant_route", io::to_json(d1)}, {"root_product", io::to_json(d2)}};
        });

        // Exact: polynomials assembled from chosen rational roots.
        std::vector<GaussRational> ar, br;
        for (std::size_t k = 0; k < n; ++k) ar.push_back(random_gauss(rng, 5, 3));
        for (std::size_t k = 0; k < m; ++k) br.push_back(random_gauss(rng, 5, 3));
        GaussRational pl = random_nonzero_gauss(rng, 4, 3), ql = random_nonzero_gauss(rng, 4, 3);
        auto Pe = from_roots<GaussRational>(ar, pl), Qe = from_roots<GaussRational>(br, ql);
        GaussRational cay = ipow(pl, m) * ipow(ql, n);
        for (const auto& x : ar)
            for (const auto& y : br) cay = cay * (x - y);
        GaussRational syl = resultant(Pe, Qe);
        res_x.record(syl == cay, [&] {
            return json{{"P", io::to_json(Pe)}, {"Q", io::to_json(Qe)}, {"sylvester", io::to_json(syl)}, {"cayley", io::to_json(cay)}};
        });
        std::vector<GaussRational> dr = ar;
        while (dr.size() < 2) dr.push_back(random_gauss(rng, 5, 3));
        auto De = from_roots<GaussRational>(dr, pl);
        GaussRational prod = ipow(pl, 2 * dr.size() - 2);
        for (std::size_t i = 0; i < dr.size(); ++i)
            for (std::size_t j = 0; j < i; ++j) prod = prod * (dr[i] - dr[j]) * (dr[i] - dr[j]);
        GaussRational disc = discriminant(De);
        dis_x.record(disc == prod, [&] {
            return json{{"P", io::to_json(De)}, {"resultant_route", io::to_json(disc)}, {"root_product", io::to_json(prod)}};
        });
    }
    return {res_f, dis_f, res_x, dis_x};
}

/// Explicit low-degree forms of V and Dis_2 against the generated ones, with
/// the largest residual seen.
inline std::vector<SuiteReport> explicit_forms(std::size_t samples, std::uint64_t seed) {
    CounterRng rng(seed);
    struct Check {
        SuiteReport rep;
        Rational max_residual = 0;
        void add(const GaussRational& generated, const GaussRational& reference, const json& point) {
            GaussRational d = generated - reference;
            Rational res = d.norm();
            if (res > max_residual) max_residual = res;
            rep.record(d.is_zero(), [&] {
                return json{{"point", point}, {"generated", io::to_json(generated)}, {"reference", io::to_json(reference)}};
            });
        }
    };
    Check d1{{"dis2 n=1 vs 4(y0^2-|y1|^2)"}}, v1{{"V n=1 vs x0^2-|x1|^2"}};
    Check d2{{"dis2 n=2 vs 16-term expansion"}};
    Check v2v{{"V n=2 vs (x0^2-|x1|^2)^2-(x0x1-conj(x1)x2)(x0conj(x1)-conj(x2)x1)"}};
    Check v2{{"V n=2 vs (x0^2-|x2|^2)^2-(x0x1-conj(x1)x2)(x0conj(x1)-conj(x2)x1)"}};
    for (std::size_t s = 0; s < samples; ++s) {
        GaussRational y0(random_rational(rng)), y1 = random_nonzero_gauss(rng);
        TrigPoly<GaussRational> Y1{y0, y1};
        d1.add(dis2(Y1), closed_forms::dis2_n1(y0, y1), io::to_json(Y1));

        auto X1 = random_exact_factor(rng, 1);
        v1.add(mobius_discriminant(X1), closed_forms::mobius_n1(X1[0], X1[1]), io::to_json(X1));

        GaussRational z0(random_rational(rng)), z1 = random_gauss(rng), z2 = random_nonzero_gauss(rng);
        TrigPoly<GaussRational> Y2{z0, z1, z2};
        d2.add(dis2(Y2), closed_forms::dis2_n2(z0, z1, z2), io::to_json(Y2));

        auto X2 = random_exact_factor(rng, 2);
        auto V = mobius_discriminant(X2);
        v2v.add(V, closed_forms::mobius_n2_variant(X2[0], X2[1], X2[2]), io::to_json(X2));
        v2.add(V, closed_forms::mobius_n2(X2[0], X2[1], X2[2]), io::to_json(X2));
    }
    std::vector<SuiteReport> out;
    for (auto* c : {&d1, &v1, &d2, &v2v, &v2}) {
        c->rep.info["max_abs_residual_squared"] = to_string(c->max_residual);
        out.push_back(c->rep);
    }
    return out;
}

}  // namespace nntrig::verify
