#include "helpers.hpp"

#include "gysin/error.hpp"
#include "gysin/flag_push.hpp"
#include "gysin/oracle.hpp"

#include <gtest/gtest.h>

using namespace gysin;
using namespace gysin::test;

TEST(Localization, TwoPointExamples) {
    const SplitBundle split(2, 3);
    const auto& r = split.descriptor();
    EXPECT_EQ(localization_push_grassmann(split, 1, mono(r, {1})), num(r, 1));
    EXPECT_EQ(localization_push_grassmann(split, 1, mono(r, {2})), -(split.root(1) + split.root(2)));
    EXPECT_EQ(localization_push_grassmann(split, 1, mono(r, {2})), split.bundle().segre()[1]);
    EXPECT_TRUE(localization_push_grassmann(split, 1, mono(r, {0})).is_zero());
}

TEST(Localization, SegreAnchor) {
    for (int n = 1 + 1; n <= 4; ++n) {
        const SplitBundle split(n, 4);
        const auto e = split.bundle();
        for (int i = 0; i <= 4; ++i) {
            const auto f = mono(split.descriptor(), {i + n - 1});
            EXPECT_EQ(localization_push_grassmann(split, 1, f), e.segre()[i]) << n << "," << i;
            EXPECT_EQ(push_projective(f, e), e.segre()[i]);
        }
    }
}

TEST(Localization, ConstantVanishes) {
    for (int n = 2; n <= 5; ++n) {
        const SplitBundle split(n, 2);
        EXPECT_TRUE(localization_push_grassmann(split, 1, mono(split.descriptor(), {0})).is_zero());
    }
}

TEST(Localization, AgreesWithPushOnSymmetricIntegrand) {
    const SplitBundle split(4, 3);
    const auto& r = split.descriptor();
    const auto t1 = tvar(2, r, 1);
    const auto t2 = tvar(2, r, 2);
    const auto y1 = split.root(1);
    const auto f = (t1 + t2).pow(5) + lconst(2, y1) * (t1 * t2).pow(2) + t1.pow(4) + t2.pow(4) +
                   lconst(2, y1 * split.root(3)) * (t1.pow(3) + t2.pow(3));
    const FlagSpec spec(Family::A, split.bundle(), {2});
    EXPECT_EQ(localization_push_grassmann(split, 2, f), push(spec, f));
}

TEST(Localization, RejectsNonSymmetric) {
    const SplitBundle split(4, 3);
    const auto& r = split.descriptor();
    EXPECT_THROW(localization_push_grassmann(split, 2, tvar(2, r, 1)), ValidationError);
    EXPECT_THROW(localization_push_grassmann(split, 4, mono(r, {0, 0, 0, 0})), ValidationError);
    EXPECT_THROW(localization_push_grassmann(split, 2, mono(ring_h(2), {0, 0})), ValidationError);
}

TEST(SplitBundle, ChernClassesAreElementary) {
    const SplitBundle split(3, 3);
    const auto y1 = split.root(1);
    const auto y2 = split.root(2);
    const auto y3 = split.root(3);
    const auto e = split.bundle();
    EXPECT_EQ(e.chern(1), y1 + y2 + y3);
    EXPECT_EQ(e.chern(2), y1 * y2 + y1 * y3 + y2 * y3);
    EXPECT_EQ(e.chern(3), y1 * y2 * y3);
    EXPECT_THROW(split.root(4), ValidationError);
}

TEST(BruteForce, Examples) {
    const auto r = ring_h(2);
    const LaurentPoly single[] = {mono(r, {2, 1}, 7)};
    EXPECT_EQ(brute_force_coeff(single, {2, 1}), num(r, 7));
    EXPECT_TRUE(brute_force_coeff(single, {1, 1}).is_zero());
    const auto t1 = tvar(2, r, 1);
    const auto t2 = tvar(2, r, 2);
    const LaurentPoly pair[] = {t1 + t2, t1 - t2};
    EXPECT_TRUE(brute_force_coeff(pair, {1, 1}).is_zero());
}

TEST(ClassicalDegree, Table) {
    EXPECT_EQ(classical_degree(SpaceDescriptor::projective(5)), 1);
    EXPECT_EQ(classical_degree(SpaceDescriptor::grassmann(2, 4)), 2);
    EXPECT_EQ(classical_degree(SpaceDescriptor::grassmann(2, 5)), 5);
    EXPECT_EQ(classical_degree(SpaceDescriptor::grassmann(3, 6)), 42);
    EXPECT_EQ(classical_degree(SpaceDescriptor::grassmann(1, 7)), 1);
    EXPECT_EQ(classical_degree(SpaceDescriptor::lagrangian(2)), 2);
    EXPECT_EQ(classical_degree(SpaceDescriptor::lagrangian(3)), 16);
    EXPECT_EQ(classical_degree(SpaceDescriptor::quadric(5)), 2);
    EXPECT_THROW(classical_degree(SpaceDescriptor::grassmann(3, 3)), ValidationError);
    EXPECT_EQ(space_dimension(SpaceDescriptor::lagrangian(3)), 6);
    EXPECT_EQ(to_string(SpaceDescriptor::grassmann(2, 4)), "G(2,4)");
}
