#include <gtest/gtest.h>

#include "nntrig/sampling.hpp"
#include "nntrig/scalar.hpp"

namespace nntrig {
namespace {

GaussRational g(const char* re, const char* im = "0") { return GaussRational(parse_rational(re), parse_rational(im)); }

TEST(Rational, ParsesCanonically) {
    EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
    EXPECT_EQ(to_string(parse_rational("-2/-4")), "1/2");
    EXPECT_EQ(to_string(parse_rational("4/2")), "2");
    EXPECT_EQ(to_string(parse_rational("-0.125")), "-1/8");
    EXPECT_EQ(to_string(parse_rational("+7")), "7");
    EXPECT_THROW(parse_rational("1/0"), InputError);
    EXPECT_THROW(parse_rational("abc"), InputError);
    EXPECT_THROW(parse_rational(""), InputError);
    EXPECT_THROW(parse_rational("1.2.3"), InputError);
}

TEST(GaussRational, MulExamples) {
    EXPECT_EQ(gauss_mul(g("1", "1"), g("1", "-1")), g("2"));
    EXPECT_EQ(gauss_mul(g("1/2"), g("0", "2")), g("0", "1"));
    EXPECT_EQ(gauss_mul(g("2/3", "1/3"), g("3")), g("2", "1"));
}

TEST(GaussRational, ToFloatRoundsToNearest) {
    EXPECT_EQ(to_float(g("1/2")), ComplexFloat(0.5, 0.0));
    EXPECT_EQ(to_float(g("1/3")), ComplexFloat(0.3333333333333333, 0.0));
    EXPECT_EQ(to_float(g("0", "-7/4")), ComplexFloat(0.0, -1.75));
    // 2/3 rounds up: truncation would give the double below.
    EXPECT_EQ(to_float(g("2/3")).real(), 2.0 / 3.0);
    EXPECT_EQ(to_float(g("1/10")).real(), 0.1);
}

TEST(GaussRational, ToFloatOverflowIsMagnitudeError) {
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 400);
    EXPECT_THROW(to_float(GaussRational(Rational(big))), MagnitudeError);
}

TEST(GaussRational, DivisionByZero) { EXPECT_THROW(g("1") / g("0"), DomainError); }

TEST(GaussRational, FieldAxiomsOnRandomOperands) {
    CounterRng rng(7);
    for (int i = 0; i < 200; ++i) {
        auto a = random_gauss(rng), b = random_gauss(rng), c = random_gauss(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(conj(a * b), conj(a) * conj(b));
        EXPECT_EQ(conj(conj(a)), a);
        EXPECT_GE(a.norm(), 0);
        if (!a.is_zero()) EXPECT_EQ(a * (GaussRational(1) / a), GaussRational(1));
        EXPECT_EQ(a - a, GaussRational(0));
    }
}

TEST(ScalarVocabulary, Ipow) {
    EXPECT_EQ(ipow(g("1", "1"), 4), g("-4"));
    EXPECT_EQ(ipow(g("5"), 0), g("1"));
    EXPECT_EQ(ipow(ComplexFloat(0.0, 1.0), 2), ComplexFloat(-1.0, 0.0));
}

}  // namespace
}  // namespace nntrig
