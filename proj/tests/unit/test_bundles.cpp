#include "helpers.hpp"

#include "gysin/bundles.hpp"
#include "gysin/error.hpp"

#include <gtest/gtest.h>

using namespace gysin;
using namespace gysin::test;

TEST(Segre, TrivialBundle) {
    const auto r = ring_h(4);
    const auto e = VectorBundleData::trivial("E", 3, r);
    EXPECT_EQ(e.segre()[0], num(r, 1));
    for (int i = 1; i <= 4; ++i)
        EXPECT_TRUE(e.segre()[i].is_zero());
    EXPECT_EQ(segre_laurent(e, 1, 1), mono(r, {0}));
}

TEST(Segre, LineBundleIsGeometricSeries) {
    const auto r = ring_h(3);
    const auto h = gen(r, "h");
    const VectorBundleData e("E", 1, {h}, r);
    for (int i = 0; i <= 3; ++i)
        EXPECT_EQ(e.segre()[i], (-h).pow(i)) << i;
    EXPECT_TRUE(e.segre()[4].is_zero());
    EXPECT_TRUE(e.segre()[-1].is_zero());
}

TEST(Segre, RankTwo) {
    const auto r = ring_ab(4);
    const auto a = gen(r, "a");
    const auto b = gen(r, "b");
    const VectorBundleData e("E", 2, {a, b}, r);
    EXPECT_EQ(e.segre()[1], -a);
    EXPECT_EQ(e.segre()[2], a.pow(2) - b);
    const SegreTable table = segre_from_chern(e);
    RingElement product(r);
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= i; ++j)
            product += table[j] * e.chern(i - j);
    EXPECT_EQ(product, num(r, 1));
}

TEST(Segre, LaurentSeries) {
    const auto r = ring_h(2);
    const auto h = gen(r, "h");
    const VectorBundleData e("E", 1, {h}, r);
    const auto expected = mono(r, {0}) + LaurentPoly::monomial({-1}, -h) +
                          LaurentPoly::monomial({-2}, h.pow(2));
    EXPECT_EQ(segre_laurent(e, 1, 1), expected);
    EXPECT_EQ(segre_laurent(e, 2, 2), expected.embedded(2, 1));
    EXPECT_EQ(segre_laurent(e, 1, 1) * chern_laurent(e, 1, 1), mono(r, {0}));
}

TEST(Segre, SelfDualBundleHasEvenSegreClasses) {
    const auto r = ring_ab(6);
    const auto b = gen(r, "b");
    const auto a = gen(r, "a");
    const VectorBundleData e("E", 4, {RingElement(r), b + a.pow(2), RingElement(r), b.pow(2)}, r);
    for (int i = 1; i <= 6; i += 2)
        EXPECT_TRUE(e.segre()[i].is_zero()) << i;
    EXPECT_FALSE(e.segre()[2].is_zero());
}

TEST(Segre, FromSegreRoundTrip) {
    const auto r = ring_ab(4);
    const auto a = gen(r, "a");
    const auto b = gen(r, "b");
    const VectorBundleData e("E", 2, {a, b}, r);
    const auto& classes = e.segre().classes();
    const std::vector<RingElement> positive(classes.begin() + 1, classes.end());
    const auto back = VectorBundleData::from_segre("F", 2, positive, r);
    EXPECT_EQ(back.chern(1), a);
    EXPECT_EQ(back.chern(2), b);
    const auto line = VectorBundleData::from_segre("L", 1, {-a, a.pow(2), -a.pow(3), a.pow(4)}, r);
    EXPECT_EQ(line.chern(1), a);
    EXPECT_THROW(VectorBundleData::from_segre("X", 1, {a, a.pow(2) + b}, r), ValidationError);
}

TEST(Bundle, Validation) {
    const auto r = ring_ab(4);
    const auto a = gen(r, "a");
    const auto b = gen(r, "b");
    EXPECT_THROW(VectorBundleData("E", 0, {}, r), ValidationError);
    EXPECT_THROW(VectorBundleData("E", 1, {a, b}, r), ValidationError);
    EXPECT_THROW(VectorBundleData("E", 2, {b}, r), ValidationError);
    EXPECT_THROW(VectorBundleData("E", 2, {a + b}, r), ValidationError);
    EXPECT_EQ(VectorBundleData("E", 2, {a}, r).chern(2), RingElement(r));
}

TEST(IsotropicQuotient, EmptyFlagIsSegreSeries) {
    const auto r = ring_h(3);
    const auto h = gen(r, "h");
    const VectorBundleData e("E", 2, {h}, r);
    EXPECT_EQ(isotropic_quotient_segre_laurent(e, RingElement(r), {}, 1, 1), segre_laurent(e, 1, 1));
}

TEST(IsotropicQuotient, TrivialBundleOneRoot) {
    const auto r = ring_h(3);
    const auto h = gen(r, "h");
    const auto e = VectorBundleData::trivial("E", 4, r);
    const auto got = isotropic_quotient_segre_laurent(e, RingElement(r), {h}, 1, 1);
    EXPECT_EQ(got, mono(r, {0}) + LaurentPoly::monomial({-2}, -h.pow(2)));
}

TEST(IsotropicQuotient, WhitneyProduct) {
    const auto r = ring_ab(4);
    const auto a = gen(r, "a");
    const auto b = gen(r, "b");
    const VectorBundleData e("E", 4, {a, b}, r);
    const RingElement line = num(r, 2) * a;
    const std::vector<RingElement> xi{-a, num(r, 3) * a};
    const auto quotient = isotropic_quotient_segre_laurent(e, line, xi, 1, 1);
    // s_{1/t}(U^perp/U) * c_{1/t}(E) = prod (1 - xi/t)(1 + (xi + l)/t)
    LaurentPoly expected = mono(r, {0});
    for (const auto& x : xi)
        expected *= (mono(r, {0}) - LaurentPoly::monomial({-1}, x)) *
                    (mono(r, {0}) + LaurentPoly::monomial({-1}, x + line));
    EXPECT_EQ(quotient * chern_laurent(e, 1, 1), expected);
}
