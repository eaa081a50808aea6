#include "helpers.hpp"

#include "gysin/error.hpp"
#include "gysin/flag_push.hpp"

#include <gtest/gtest.h>

using namespace gysin;
using namespace gysin::test;

namespace {

LaurentPoly xi_sum(std::size_t d, const RingDescriptor& r) {
    LaurentPoly s(d, r);
    for (std::size_t k = 1; k <= d; ++k)
        s += tvar(d, r, k);
    return s;
}

RingDescriptor point_ring(int truncation) {
    return RingDescriptor::define({{"p", 1}}, truncation);
}

} // namespace

TEST(Family, Parse) {
    EXPECT_EQ(parse_family("A"), Family::A);
    EXPECT_EQ(parse_family("C"), Family::C);
    EXPECT_EQ(parse_family("BD"), Family::BD);
    EXPECT_EQ(parse_family("B"), Family::BD);
    EXPECT_EQ(parse_family("D"), Family::BD);
    EXPECT_THROW(parse_family("E"), ValidationError);
    EXPECT_EQ(to_string(Family::BD), "BD");
}

TEST(FlagSpec, Validation) {
    const auto r = ring_h(3);
    const auto h = gen(r, "h");
    const auto e3 = VectorBundleData::trivial("E", 3, r);
    const auto e4 = VectorBundleData::trivial("E", 4, r);
    const auto e5 = VectorBundleData::trivial("E", 5, r);
    EXPECT_THROW(FlagSpec(Family::A, e3, {3}), ValidationError);
    EXPECT_THROW(FlagSpec(Family::A, e3, {2, 1}), ValidationError);
    EXPECT_THROW(FlagSpec(Family::A, e3, {}), ValidationError);
    EXPECT_THROW(FlagSpec(Family::A, e3, {1}, h), ValidationError);
    EXPECT_THROW(FlagSpec(Family::C, e5, {1}), ValidationError);
    EXPECT_THROW(FlagSpec(Family::C, e4, {3}), ValidationError);
    EXPECT_THROW(FlagSpec(Family::BD, e5, {3}), ValidationError);
    EXPECT_THROW(FlagSpec(Family::C, e4, {1}, h.pow(2)), ValidationError);
    EXPECT_NO_THROW(FlagSpec(Family::BD, e5, {1, 2}, h));
}

TEST(FlagSpec, Blocks) {
    const auto r = ring_h(3);
    const FlagSpec spec(Family::A, VectorBundleData::trivial("E", 6, r), {1, 3, 4});
    EXPECT_EQ(spec.d(), 4);
    EXPECT_EQ(spec.m(), 3);
    EXPECT_EQ(spec.r(2), 2);
    const std::vector<std::pair<int, int>> blocks{{4, 4}, {2, 3}, {1, 1}};
    EXPECT_EQ(spec.blocks(), blocks);
}

TEST(Exponents, Examples) {
    const auto r = ring_h(3);
    EXPECT_EQ(exponents(FlagSpec(Family::A, VectorBundleData::trivial("E", 4, r), {2})),
              (ExponentSeq{3, 2}));
    EXPECT_EQ(exponents(FlagSpec(Family::C, VectorBundleData::trivial("E", 6, r), {3})),
              (ExponentSeq{5, 4, 3}));
    EXPECT_EQ(exponents(FlagSpec(Family::C, VectorBundleData::trivial("E", 6, r), {1, 2, 3})),
              (ExponentSeq{5, 5, 5}));
    EXPECT_EQ(exponents(FlagSpec(Family::BD, VectorBundleData::trivial("E", 7, r), {1}),
                        Variant::OrthogonalTrivialLine),
              (ExponentSeq{5}));
    EXPECT_THROW(exponents(FlagSpec(Family::C, VectorBundleData::trivial("E", 6, r), {1}),
                           Variant::OrthogonalTrivialLine),
                 ValidationError);
    EXPECT_THROW(exponents(FlagSpec(Family::BD, VectorBundleData::trivial("E", 6, r), {1},
                                    gen(r, "h")),
                           Variant::OrthogonalTrivialLine),
                 ValidationError);
}

TEST(Kernel, Examples) {
    const auto r = ring_h(3);
    const auto l = gen(r, "h");
    const auto t1 = tvar(2, r, 1);
    const auto t2 = tvar(2, r, 2);
    EXPECT_EQ(kernel(FlagSpec(Family::A, VectorBundleData::trivial("E", 4, r), {2})).poly, t1 - t2);
    const auto c = kernel(FlagSpec(Family::C, VectorBundleData::trivial("E", 4, r), {2}, l));
    EXPECT_EQ(c.poly, (t1 - t2) * (t1 + t2 + lconst(2, l)));
    EXPECT_EQ(c.scalar, 1);
    const auto bd = kernel(FlagSpec(Family::BD, VectorBundleData::trivial("E", 4, r), {1}, l));
    EXPECT_EQ(bd.poly, mono(r, {1}, 2) + lconst(1, l));
    const auto trivial = kernel(FlagSpec(Family::BD, VectorBundleData::trivial("E", 5, r), {2}),
                                Variant::OrthogonalTrivialLine);
    EXPECT_EQ(trivial.poly, t1.pow(2) - t2.pow(2));
    EXPECT_EQ(trivial.scalar, 4);
}

TEST(FiberDimension, Examples) {
    const auto r = ring_h(3);
    for (int n = 2; n <= 6; ++n)
        for (int d = 1; d < n; ++d)
            EXPECT_EQ(fiber_dimension(FlagSpec(Family::A, VectorBundleData::trivial("E", n, r), {d})),
                      d * (n - d));
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> full(n);
        for (int k = 0; k < n; ++k)
            full[k] = k + 1;
        EXPECT_EQ(fiber_dimension(FlagSpec(Family::C, VectorBundleData::trivial("E", 2 * n, r), full)),
                  n * n);
        EXPECT_EQ(fiber_dimension(FlagSpec(Family::C, VectorBundleData::trivial("E", 2 * n, r), {n})),
                  n * (n + 1) / 2);
        EXPECT_EQ(fiber_dimension(FlagSpec(Family::BD, VectorBundleData::trivial("E", 2 * n, r), {n})),
                  n * (n - 1) / 2);
    }
}

TEST(PushProjective, Examples) {
    const auto r = ring_ab(4);
    const auto a = gen(r, "a");
    const auto b = gen(r, "b");
    const VectorBundleData e("E", 3, {a, b}, r);
    EXPECT_EQ(push_projective(mono(r, {2}), e), num(r, 1));
    for (int i = 0; i <= 4; ++i)
        EXPECT_EQ(push_projective(mono(r, {i + 2}), e), e.segre()[i]) << i;
    const VectorBundleData e2("E", 2, {a, b}, r);
    EXPECT_TRUE(push_projective(mono(r, {0}), e2).is_zero());
}

TEST(PushQuadric, Examples) {
    const auto r = ring_ab(4);
    const auto a = gen(r, "a");
    const auto b = gen(r, "b");
    const VectorBundleData e("E", 5, {a, b}, r);
    for (const auto& l : {RingElement(r), a, num(r, -3) * a}) {
        EXPECT_EQ(push_quadric(mono(r, {3}), e, l), num(r, 2));
        EXPECT_TRUE(push_quadric(mono(r, {0}), e, l).is_zero());
        EXPECT_EQ(push_quadric(mono(r, {4}), e, l), num(r, 2) * e.segre()[1] + l);
    }
}

TEST(Push, CompleteFlagIdentity) {
    const auto r = ring_ab(4);
    const auto a = gen(r, "a");
    const auto b = gen(r, "b");
    for (int n = 2; n <= 5; ++n) {
        std::vector<RingElement> chern{num(r, 2) * a, a.pow(2) - b};
        chern.resize(std::min(n, 2));
        const VectorBundleData e("E", n, chern, r);
        std::vector<int> dims;
        Exponents g;
        for (int k = 1; k < n; ++k) {
            dims.push_back(k);
            g.push_back(k);
        }
        EXPECT_EQ(push(FlagSpec(Family::A, e, dims), mono(r, g)), num(r, 1)) << n;
    }
}

TEST(Push, GrassmannDegree) {
    const auto r = point_ring(0);
    const FlagSpec spec(Family::A, VectorBundleData::trivial("E", 4, r), {2});
    EXPECT_EQ(push(spec, xi_sum(2, r).pow(4)), num(r, 2));
}

TEST(Push, LagrangianDegree) {
    const auto r = point_ring(0);
    const FlagSpec spec(Family::C, VectorBundleData::trivial("E", 4, r), {2});
    EXPECT_EQ(push(spec, xi_sum(2, r).pow(3)), num(r, 2));
}

TEST(Push, QuadricDegree) {
    const auto r = point_ring(0);
    for (int rank = 3; rank <= 7; ++rank) {
        const FlagSpec spec(Family::BD, VectorBundleData::trivial("E", rank, r), {1});
        EXPECT_EQ(push(spec, mono(r, {rank - 2})), num(r, 2)) << rank;
    }
}

TEST(Push, SpecializationsInOneVariable) {
    const auto r = ring_ab(4);
    const auto a = gen(r, "a");
    const auto b = gen(r, "b");
    const VectorBundleData e("E", 4, {a, b, RingElement(r), b.pow(2)}, r);
    const auto f = mono(r, {5}) + LaurentPoly::monomial({3}, b) + LaurentPoly::monomial({4}, -a);
    EXPECT_EQ(push(FlagSpec(Family::A, e, {1}), f), push_projective(f, e));
    EXPECT_EQ(push(FlagSpec(Family::C, e, {1}, a), f), push_projective(f, e));
    EXPECT_EQ(push(FlagSpec(Family::BD, e, {1}, a), f), push_quadric(f, e, a));
    EXPECT_EQ(push(FlagSpec(Family::BD, e, {1}), f), push_quadric(f, e, RingElement(r)));
}

TEST(Push, OrthogonalPathsAgree) {
    const auto r = ring_ab(4);
    const auto a = gen(r, "a");
    const auto b = gen(r, "b");
    const VectorBundleData e("E", 6, {a, b, a * b}, r);
    const FlagSpec spec(Family::BD, e, {1, 2});
    const auto t1 = tvar(2, r, 1);
    const auto t2 = tvar(2, r, 2);
    const auto f = t1.pow(6) * t2.pow(2) + lconst(2, b) * t1.pow(3) * t2.pow(3) + t2.pow(7);
    const auto general = push(spec, f, {false, OrthogonalPath::General});
    const auto trivial_line = push(spec, f, {false, OrthogonalPath::TrivialLine});
    EXPECT_EQ(general, trivial_line);
    EXPECT_EQ(chosen_variant(spec, {}), Variant::OrthogonalTrivialLine);
    EXPECT_EQ(chosen_variant(FlagSpec(Family::BD, e, {1}, a), {}), Variant::Standard);
    EXPECT_THROW(push(FlagSpec(Family::BD, e, {1}, a), mono(r, {1}), {false, OrthogonalPath::TrivialLine}),
                 ValidationError);
}

TEST(Push, Halving) {
    const auto r = point_ring(0);
    const FlagSpec og(Family::BD, VectorBundleData::trivial("E", 4, r), {2});
    const auto f = xi_sum(2, r);
    // two P^1 components, det U^dual of degree 2 on each
    EXPECT_EQ(push(og, f), num(r, 4));
    EXPECT_EQ(push(og, f, {true, OrthogonalPath::Auto}), num(r, 2));
    const auto ab = ring_ab(3);
    const auto a = gen(ab, "a");
    const FlagSpec twisted(Family::BD, VectorBundleData("E", 4, {a, gen(ab, "b")}, ab), {2}, a);
    const auto odd_class = mono(ab, {1, 2});
    EXPECT_EQ(push(twisted, odd_class), -a.pow(2));
    EXPECT_THROW(push(twisted, odd_class, {true, OrthogonalPath::Auto}), MathContractError);
    const FlagSpec c(Family::C, VectorBundleData::trivial("E", 4, r), {2});
    EXPECT_THROW(push(c, f, {true, OrthogonalPath::Auto}), ValidationError);
    const FlagSpec odd(Family::BD, VectorBundleData::trivial("E", 5, r), {2});
    EXPECT_THROW(push(odd, f, {true, OrthogonalPath::Auto}), ValidationError);
    const FlagSpec small(Family::BD, VectorBundleData::trivial("E", 6, r), {2});
    EXPECT_THROW(push(small, f, {true, OrthogonalPath::Auto}), ValidationError);
}

TEST(Push, RejectsBadIntegrand) {
    const auto r = ring_h(2);
    const FlagSpec spec(Family::A, VectorBundleData::trivial("E", 4, r), {2});
    EXPECT_THROW(push(spec, mono(r, {1})), ValidationError);
    EXPECT_THROW(push(spec, mono(r, {-1, 0})), ValidationError);
}

TEST(Push, DegreeLaw) {
    const auto r = ring_ab(5);
    const auto a = gen(r, "a");
    const auto b = gen(r, "b");
    const VectorBundleData e("E", 5, {a, b, a * b}, r);
    const FlagSpec spec(Family::A, e, {1, 3});
    const auto t1 = tvar(3, r, 1);
    const auto t2 = tvar(3, r, 2);
    const auto t3 = tvar(3, r, 3);
    const int dim = fiber_dimension(spec);
    for (int g = dim; g <= dim + 5; ++g) {
        const auto f = t1.pow(g) + (t2 * t3).pow(g / 2) * t1.pow(g % 2) + t2.pow(g - 1) * t3;
        const auto result = push(spec, f);
        EXPECT_TRUE(result.is_homogeneous_of_degree(g - dim)) << g << ": " << result;
    }
}

TEST(PushFullRoots, Examples) {
    const auto r = ring_ab(4);
    const auto a = gen(r, "a");
    const auto b = gen(r, "b");
    const VectorBundleData e("E", 2, {a, b}, r);
    const FlagSpec complete(Family::A, e, {1});
    EXPECT_TRUE(push_full_roots_A(complete, mono(r, {0, 0})).is_zero());
    EXPECT_TRUE(push_full_roots_A(complete, tvar(2, r, 1) + tvar(2, r, 2)).is_zero());
    EXPECT_EQ(push_full_roots_A(complete, tvar(2, r, 2)), num(r, 1));
    EXPECT_EQ(full_roots_exponents(complete), (ExponentSeq{1, 1}));
}

TEST(PushFullRoots, AgreesWithLastRootsPath) {
    const auto r = ring_ab(4);
    const auto a = gen(r, "a");
    const auto b = gen(r, "b");
    const VectorBundleData e("E", 4, {a, b, RingElement(r), b.pow(2)}, r);
    const FlagSpec spec(Family::A, e, {2});
    const auto t1 = tvar(2, r, 1);
    const auto t2 = tvar(2, r, 2);
    const auto f = (t1 + t2).pow(4) + lconst(2, a) * (t1 * t2).pow(2) + t1.pow(6) + t2.pow(6);
    EXPECT_EQ(push_full_roots_A(spec, f.embedded(4, 2)), push(spec, f));
}
