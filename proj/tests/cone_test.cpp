#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nntrig/cone.hpp"
#include "nntrig/sampling.hpp"

namespace nntrig {
namespace {

using G = GaussRational;
using TF = TrigPoly<ComplexFloat>;
constexpr double pi = std::numbers::pi;
G gi(long re, long im = 0) { return G(Rational(re), Rational(im)); }

FloatPoly random_outer(CounterRng& rng, std::size_t n) {
    std::vector<ComplexFloat> zs;
    for (std::size_t k = 0; k < n; ++k) zs.push_back(random_annulus(rng, 1.2, 3.0));
    auto X = from_roots<ComplexFloat>(zs, std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 2 * pi)));
    X = X * (std::abs(X[0]) / X[0]);
    X[0] = std::abs(X[0]);
    return X;
}

double grid_min(const TF& Y, int pts = 4096) {
    double m = INFINITY;
    for (int k = 0; k < pts; ++k) m = std::min(m, eval_T(Y, 2 * pi * k / pts));
    return m;
}

TEST(Lift, Examples) {
    EXPECT_EQ(lift(TrigPoly<G>{gi(3), gi(2, 2)}), (ComplexPoly{gi(2, -2), gi(6), gi(2, 2)}));
    auto R = lift(TrigPoly<G>{gi(1), gi(2), gi(0, 3)});
    EXPECT_EQ(R, (ComplexPoly{gi(0, -3), gi(2), gi(2), gi(2), gi(0, 3)}));
    EXPECT_TRUE(is_self_inversive(R, 0.0));
}

TEST(EvalT, Examples) {
    EXPECT_DOUBLE_EQ(eval_T(TF{1.0, 0.0, 0.0}, 0.7), 1.0);
    EXPECT_NEAR(eval_T(TF{1.0, 1.0}, pi), 0.0, 1e-15);
    EXPECT_DOUBLE_EQ(eval_T(TF{0.625, 0.5}, 0.0), 1.125);
}

TEST(EvalT, CircleIdentity) {
    CounterRng rng(51);
    for (int it = 0; it < 10; ++it) {
        std::vector<ComplexFloat> y{rng.uniform(-1, 1)};
        for (int k = 0; k < 3; ++k) y.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
        TF Y(y);
        auto R = lift(Y);
        double t = rng.uniform(0, 2 * pi);
        auto z = std::polar(1.0, t);
        EXPECT_LE(std::abs(eval(R, z) - 2.0 * std::pow(z, 3) * eval_T(Y, t)), 1e-12);
    }
}

TEST(MinimizeT, Examples) {
    auto a = minimize_T(TF{1.0, 1.0});
    EXPECT_NEAR(a.min_value, 0.0, 1e-12);
    EXPECT_NEAR(a.argmin, pi, 1e-6);
    auto b = minimize_T(TF{1.0, 1.2});
    EXPECT_NEAR(b.min_value, -0.2, 1e-12);
    EXPECT_NEAR(b.argmin, pi, 1e-9);
    // (1/2)|1 + 0.5 e^{it}|^2 is smallest at t = pi: (1/2)(0.5)^2
    auto c = minimize_T(TF{0.625, 0.5});
    EXPECT_NEAR(c.min_value, 0.125, 1e-12);
    EXPECT_NEAR(c.argmin, pi, 1e-9);
    EXPECT_THROW(minimize_T(TF{0.0, 0.0}), PreconditionError);
}

TEST(MinimizeT, ConstantAndHighDegree) {
    auto c = minimize_T(TF{2.0, 0.0, 0.0});
    EXPECT_DOUBLE_EQ(c.min_value, 2.0);
    CounterRng rng(52);
    for (int it = 0; it < 30; ++it) {
        std::vector<ComplexFloat> y{rng.uniform(-1, 1)};
        for (int k = 0; k < 6; ++k) y.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
        TF Y(y);
        auto cs = minimize_T(Y);
        EXPECT_LE(cs.min_value, grid_min(Y) + 1e-12);
        EXPECT_GE(cs.min_value, grid_min(Y) - 1e-3);
    }
}

TEST(Classify, Examples) {
    auto b = classify(TrigPoly<G>{gi(1), G(Rational(3, 5), Rational(4, 5))});
    EXPECT_EQ(b.classification, ConeClass::Boundary);
    ASSERT_TRUE(b.dis2_value);
    EXPECT_TRUE(b.dis2_value->is_zero());
    ASSERT_TRUE(b.factor);
    EXPECT_FALSE(b.rank_certificate);

    auto in = classify(TF{1.0, 0.0, 0.0, 1e-3});
    EXPECT_EQ(in.classification, ConeClass::Inside);
    EXPECT_TRUE(in.rank_certificate);
    ASSERT_TRUE(in.factor);

    auto out = classify(TF{1.0, 1.2});
    EXPECT_EQ(out.classification, ConeClass::Outside);
    EXPECT_NEAR(out.min_value, -0.2, 1e-12);
    EXPECT_FALSE(out.factor);
}

TEST(Classify, DegreeDropStillClassifies) {
    auto v = classify(TrigPoly<G>{gi(1), gi(0)});
    EXPECT_EQ(v.classification, ConeClass::Inside);
    EXPECT_FALSE(v.dis2_value);
    ASSERT_TRUE(v.factor);
    EXPECT_NEAR(v.factor->poly()[0].real(), std::sqrt(2.0), 1e-12);
}

TEST(Factor, Examples) {
    auto X = factor(TF{0.625, 0.5}).poly();
    EXPECT_NEAR(std::abs(X[0] - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(X[1] - 0.5), 0.0, 1e-12);
    auto one = factor(TrigPoly<G>{G(Rational(1, 2)), gi(0), gi(0)}).poly();
    EXPECT_NEAR(std::abs(one[0] - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(one[1]), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(one[2]), 0.0, 1e-12);
    auto bd = factor(TF{1.0, {0.6, 0.8}});
    auto back = phi(bd);
    EXPECT_LE(std::abs(back[0] - 1.0), 1e-9);
    EXPECT_LE(std::abs(back[1] - ComplexFloat(0.6, 0.8)), 1e-9);
}

TEST(Factor, Errors) {
    EXPECT_THROW(factor(TF{-1.0, 0.5}), NotNonnegativeError);
    // 1 + 1.2 cos t has two simple circle roots
    EXPECT_THROW(factor(TF{1.0, 1.2}), NotNonnegativeError);
}

// ---- properties ------------------------------------------------------------

TEST(ConeProperties, Roundtrip) {
    CounterRng rng(53);
    for (int it = 0; it < 60; ++it) {
        std::size_t n = 1 + it % 6;
        auto X = random_outer(rng, n);
        auto Y = phi(SpectralFactor<ComplexFloat>(X));
        auto F = factor(Y).poly();
        for (std::size_t k = 0; k <= n; ++k)
            EXPECT_LE(std::abs(F[k] - X[k]), 1e-9 * max_coeff_magnitude(X)) << "n=" << n << " k=" << k;
        for (const auto& z : all_roots(F).expanded()) EXPECT_GE(std::abs(z), 1.0 - 1e-7);
    }
}

TEST(ConeProperties, ModulusEquality) {
    CounterRng rng(54);
    for (int it = 0; it < 20; ++it) {
        auto X = random_outer(rng, 1 + it % 5);
        auto Y = phi(SpectralFactor<ComplexFloat>(X));
        auto v = classify(Y);
        ASSERT_EQ(v.classification, ConeClass::Inside);
        for (int k = 0; k < 64; ++k) {
            double t = 2 * pi * k / 64;
            double lhs = std::norm(eval(v.factor->poly(), std::polar(1.0, t)));
            EXPECT_LE(std::abs(lhs - 2 * eval_T(Y, t)), 1e-9 * std::max(1.0, lhs));
        }
    }
}

TEST(ConeProperties, ClosedUnderSumAndScaling) {
    CounterRng rng(55);
    for (int it = 0; it < 20; ++it) {
        std::size_t n = 1 + it % 4;
        auto A = phi(SpectralFactor<ComplexFloat>(random_outer(rng, n)));
        auto B = phi(SpectralFactor<ComplexFloat>(random_outer(rng, n)));
        EXPECT_EQ(classify(A + B).classification, ConeClass::Inside);
        EXPECT_EQ(classify(A.scaled(ComplexFloat(rng.uniform(0.01, 50.0)))).classification, ConeClass::Inside);
    }
}

TEST(ConeProperties, ManufacturedBoundary) {
    CounterRng rng(56);
    for (int it = 0; it < 20; ++it) {
        std::size_t n = 1 + it % 4;
        auto w = rational_unit_point(random_rational(rng));
        auto X = mul(random_exact_factor(rng, n - 1), ComplexPoly{-w, gi(1)});
        X = X * conj(X[0]);
        auto Y = phi(SpectralFactor<G>(X));
        auto v = classify(Y);
        EXPECT_EQ(v.classification, ConeClass::Boundary);
        ASSERT_TRUE(v.dis2_value);
        EXPECT_TRUE(v.dis2_value->is_zero());
        ASSERT_TRUE(v.factor);
        EXPECT_FALSE(v.rank_certificate);
    }
}

TEST(ConeProperties, AgreesWithGridSign) {
    CounterRng rng(57);
    for (int it = 0; it < 100; ++it) {
        std::size_t n = 1 + it % 6;
        std::vector<ComplexFloat> y{rng.uniform(0.0, 2.0)};
        for (std::size_t k = 1; k <= n; ++k) y.push_back(std::polar(rng.uniform(0.0, 1.0) / static_cast<double>(n), rng.uniform(0, 2 * pi)));
        TF Y(y);
        auto v = classify(Y);
        double g = grid_min(Y);
        if (g < 0) EXPECT_EQ(v.classification, ConeClass::Outside) << g;
        if (v.classification == ConeClass::Inside) EXPECT_GT(g, 0.0);
    }
}

TEST(ConeProperties, ShadowHasSameImage) {
    CounterRng rng(58);
    for (int it = 0; it < 10; ++it) {
        std::size_t n = 2 + it % 3;
        auto w = random_annulus(rng, 0.4, 2.5);
        std::vector<ComplexFloat> zs{w, w};
        for (std::size_t k = 2; k < n; ++k) zs.push_back(random_annulus(rng, 0.4, 2.5));
        auto X = from_roots<ComplexFloat>(zs);
        X = X * (std::abs(X[0]) / X[0]);
        X[0] = std::abs(X[0]);
        auto Q = lemma3_shadow(X, w);
        ASSERT_LE(std::abs(Q[0].imag()), 1e-12 * std::abs(Q[0]));
        Q[0] = Q[0].real();
        auto a = phi(SpectralFactor<ComplexFloat>(X)), b = phi(SpectralFactor<ComplexFloat>(Q));
        for (std::size_t k = 0; k <= n; ++k) EXPECT_LE(std::abs(a[k] - b[k]), 1e-9 * a.scale());
    }
}

}  // namespace
}  // namespace nntrig
