#include "helpers.hpp"

#include "gysin/error.hpp"

#include <gtest/gtest.h>

using namespace gysin;
using namespace gysin::test;

TEST(RingDescriptor, DefinesGenerators) {
    const auto r = RingDescriptor::define({{"h", 1}}, 4);
    EXPECT_EQ(r.size(), 1u);
    EXPECT_EQ(r.truncation(), 4);
    const auto ab = ring_ab(3);
    EXPECT_EQ(ab.size(), 2u);
    EXPECT_EQ(ab.index_of("b"), 1u);
    EXPECT_FALSE(ab.index_of("c").has_value());
    EXPECT_EQ(ab.weighted_degree({1, 1}), 3);
}

TEST(RingDescriptor, RejectsBadInput) {
    EXPECT_THROW(RingDescriptor::define({{"h", 1}, {"h", 2}}, 3), ValidationError);
    EXPECT_THROW(RingDescriptor::define({{"h", 0}}, 3), ValidationError);
    EXPECT_THROW(RingDescriptor::define({{"", 1}}, 3), ValidationError);
    EXPECT_THROW(RingDescriptor::define({{"h", 1}}, -1), ValidationError);
}

TEST(RingDescriptor, PointRing) {
    const RingDescriptor point;
    EXPECT_EQ(point.size(), 0u);
    EXPECT_EQ(point.truncation(), 0);
    EXPECT_EQ(RingElement::constant(point, 5).to_string(), "5");
}

TEST(RingElement, Add) {
    const auto r = ring_h(4);
    const auto h = gen(r, "h");
    EXPECT_EQ(h + h, num(r, 2) * h);
    EXPECT_TRUE((h + (-h)).is_zero());
    EXPECT_EQ((h.pow(2) + h.pow(3)).to_string(), "h^2 + h^3");
}

TEST(RingElement, MulTruncates) {
    const auto r = ring_h(4);
    const auto h = gen(r, "h");
    EXPECT_EQ(h * h, h.pow(2));
    EXPECT_TRUE((h.pow(2) * h.pow(3)).is_zero());
    const auto one = num(r, 1);
    const auto inverse = one - h + h.pow(2) - h.pow(3) + h.pow(4);
    EXPECT_EQ((one + h) * inverse, one);
}

TEST(RingElement, DescriptorMismatch) {
    const auto r4 = ring_h(4);
    const auto r3 = ring_h(3);
    EXPECT_THROW(gen(r4, "h") + gen(r3, "h"), ValidationError);
    EXPECT_THROW(gen(r4, "h") * gen(r3, "h"), ValidationError);
}

TEST(RingElement, GradeComponent) {
    const auto r = ring_h(4);
    const auto h = gen(r, "h");
    const auto x = num(r, 1) + num(r, 2) * h + h.pow(2);
    EXPECT_EQ(x.grade_component(1), num(r, 2) * h);
    EXPECT_TRUE(x.grade_component(3).is_zero());
    const auto ab = ring_ab(3);
    const auto a = gen(ab, "a");
    const auto b = gen(ab, "b");
    EXPECT_EQ((a * b + a.pow(3)).grade_component(3), a * b + a.pow(3));
}

TEST(RingElement, Rendering) {
    const auto ab = ring_ab(4);
    const auto a = gen(ab, "a");
    const auto b = gen(ab, "b");
    EXPECT_EQ((num(ab, 3) * a.pow(2) + a * b).to_string(), "3*a^2 + a*b");
    EXPECT_EQ((num(ab, 1) - num(ab, 2) * a).to_string(), "1 - 2*a");
    EXPECT_EQ(RingElement(ab).to_string(), "0");
    EXPECT_EQ((-a).to_string(), "-a");
}

TEST(RingElement, CanonicalFormIsUnique) {
    const auto ab = ring_ab(4);
    const auto a = gen(ab, "a");
    const auto b = gen(ab, "b");
    EXPECT_EQ(a * b + b * a, num(ab, 2) * b * a);
    EXPECT_EQ((a + b) * (a - b), a.pow(2) - b.pow(2));
}

TEST(RingElement, Homogeneity) {
    const auto ab = ring_ab(4);
    const auto a = gen(ab, "a");
    const auto b = gen(ab, "b");
    EXPECT_EQ((a.pow(2) + b).homogeneous_degree(), 2);
    EXPECT_FALSE((a + b).homogeneous_degree().has_value());
    EXPECT_TRUE(RingElement(ab).is_homogeneous_of_degree(3));
    EXPECT_EQ(RingElement(ab).max_degree(), -1);
}

TEST(RingElement, ExactDivision) {
    const auto r = ring_h(4);
    const auto h = gen(r, "h");
    EXPECT_EQ((num(r, 4) * h + num(r, 2)).exact_div(2), num(r, 2) * h + num(r, 1));
    EXPECT_THROW((num(r, 3) * h).exact_div(2), MathContractError);
}

TEST(RingElement, RingAxiomsOnSamples) {
    const auto ab = ring_ab(5);
    const auto a = gen(ab, "a");
    const auto b = gen(ab, "b");
    const auto x = num(ab, 2) + a - num(ab, 3) * b;
    const auto y = a.pow(2) + num(ab, 7) * a * b;
    const auto z = num(ab, -1) + b.pow(2);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x * num(ab, 1), x);
    RingElement sum(ab);
    for (int k = 0; k <= 5; ++k)
        sum += (x * y).grade_component(k);
    EXPECT_EQ(sum, x * y);
}

TEST(RingElement, WithDescriptorTruncates) {
    const auto r4 = ring_h(4);
    const auto r2 = ring_h(2);
    const auto h = gen(r4, "h");
    EXPECT_EQ((h + h.pow(3)).with_descriptor(r2), gen(r2, "h"));
}
