#include "helpers.hpp"

#include "gysin/error.hpp"

#include <gtest/gtest.h>

using namespace gysin;
using namespace gysin::test;

TEST(Laurent, Multiplication) {
    const auto r = ring_h(1);
    EXPECT_EQ(lmul(mono(r, {1}), mono(r, {-1})), mono(r, {0}));
    const auto t1 = tvar(2, r, 1);
    const auto t2 = tvar(2, r, 2);
    EXPECT_EQ(lmul(t1 + t2, t1 - t2), t1.pow(2) - t2.pow(2));
    const auto h = gen(r, "h");
    const auto f = LaurentPoly::monomial({-1}, h);
    EXPECT_TRUE(lmul(f, f).is_zero());
}

TEST(Laurent, Rendering) {
    const auto r = ring_h(2);
    const auto t1 = tvar(2, r, 1);
    const auto t2 = tvar(2, r, 2);
    const auto f = t1.pow(2) + LaurentPoly::monomial({1, -1}, gen(r, "h")) + lconst(2, num(r, 3));
    EXPECT_EQ(f.to_string(), "t1^2 + h*t1*t2^-1 + 3");
    const auto g = LaurentPoly::monomial({0, 1}, gen(r, "h") + num(r, 2)) - t1;
    EXPECT_EQ(g.to_string(), "-t1 + (2 + h)*t2");
    EXPECT_EQ((t1 - t2).to_string(), "t1 - t2");
    EXPECT_EQ(LaurentPoly(2, r).to_string(), "0");
}

TEST(Laurent, Coefficient) {
    const auto r = ring_h(2);
    const auto h = gen(r, "h");
    const auto f = mono(r, {2}, 3) + LaurentPoly::monomial({1}, h);
    EXPECT_EQ(coeff(f, {2}), num(r, 3));
    EXPECT_EQ(coeff(f, {1}), h);
    EXPECT_TRUE(coeff(f, {0}).is_zero());
    const auto g = mono(r, {2}) + mono(r, {1});
    EXPECT_EQ(coeff(lmul(mono(r, {1}), g), {3}), coeff(g, {2}));
    const auto t1 = tvar(2, r, 1);
    const auto t2 = tvar(2, r, 2);
    EXPECT_EQ(coeff((t1 + t2).pow(2), {1, 1}), num(r, 2));
    EXPECT_THROW(coeff(g, {1, 1}), ValidationError);
}

TEST(Laurent, StagedExtract) {
    const auto r = ring_h(2);
    const auto t1 = tvar(2, r, 1);
    const auto t2 = tvar(2, r, 2);
    const LaurentPoly single[] = {t1.pow(2) + t2};
    EXPECT_EQ(staged_extract(single, {2, 0}), num(r, 1));
    const LaurentPoly pair[] = {t1 + t2, t1 - t2};
    EXPECT_TRUE(staged_extract(pair, {1, 1}).is_zero());
    EXPECT_EQ(staged_extract(pair, {2, 0}), num(r, 1));
    EXPECT_EQ(staged_extract(pair, {0, 2}), num(r, -1));
}

TEST(Laurent, StagedExtractWithSegreLikeFactors) {
    const auto r = ring_h(3);
    const auto h = gen(r, "h");
    // (t1 - t2) * (1 - h/t1 + h^2/t1^2) * (1 - h/t2)
    LaurentPoly s1 = mono(r, {0, 0}) + LaurentPoly::monomial({-1, 0}, -h) +
                     LaurentPoly::monomial({-2, 0}, h.pow(2));
    LaurentPoly s2 = mono(r, {0, 0}) + LaurentPoly::monomial({0, -1}, -h);
    const auto v = tvar(2, r, 1) - tvar(2, r, 2);
    const LaurentPoly factors[] = {v, s1, s2};
    const auto full = v * s1 * s2;
    for (int a = -2; a <= 1; ++a)
        for (int b = -2; b <= 1; ++b)
            EXPECT_EQ(staged_extract(factors, {a, b}), coeff(full, {a, b})) << a << "," << b;
}

TEST(Laurent, DetExtract) {
    const auto r = ring_h(2);
    Matrix<LaurentPoly> one_by_one{{mono(r, {3}, 5) + mono(r, {1})}};
    EXPECT_EQ(det_extract(one_by_one, {3}), num(r, 5));
    // F_ij = t_j^{2-i}
    Matrix<LaurentPoly> f{{mono(r, {1, 0}), mono(r, {0, 1})}, {mono(r, {0, 0}), mono(r, {0, 0})}};
    EXPECT_EQ(laurent_determinant(f), tvar(2, r, 1) - tvar(2, r, 2));
    EXPECT_EQ(det_extract(f, {1, 0}), num(r, 1));
    EXPECT_EQ(det_extract(f, {1, 0}), coeff(laurent_determinant(f), {1, 0}));
    Matrix<LaurentPoly> foreign{{mono(r, {0, 1}), mono(r, {0, 1})}, {mono(r, {0, 0}), mono(r, {0, 0})}};
    EXPECT_THROW(det_extract(foreign, {1, 0}), ValidationError);
}

TEST(Laurent, VandermondeAndDivision) {
    const auto r = ring_h(0);
    EXPECT_EQ(vandermonde(2, r), tvar(2, r, 1) - tvar(2, r, 2));
    const auto t1 = tvar(3, r, 1);
    const auto t2 = tvar(3, r, 2);
    const auto t3 = tvar(3, r, 3);
    const auto v = vandermonde(3, r);
    EXPECT_EQ(v, (t1 - t2) * (t1 - t3) * (t2 - t3));
    EXPECT_EQ(divide_by_difference(v, 0, 2), (t1 - t2) * (t2 - t3));
    EXPECT_THROW(divide_by_difference(t1, 0, 1), MathContractError);
}

TEST(Laurent, Transforms) {
    const auto r = ring_h(0);
    const auto t1 = tvar(2, r, 1);
    const auto t2 = tvar(2, r, 2);
    const std::size_t swap[] = {1, 0};
    EXPECT_EQ((t1.pow(2) * t2).permuted(swap), t2.pow(2) * t1);
    EXPECT_EQ(t1.shifted({-1, 2}), mono(r, {0, 2}));
    EXPECT_EQ(t1.embedded(3, 1), tvar(3, r, 2));
    EXPECT_EQ((t1 * t2).min_exponent(0), 1);
    EXPECT_TRUE(t1.pow(3).involves_only(0));
    EXPECT_FALSE((t1 * t2).involves_only(0));
    EXPECT_FALSE(mono(r, {-1, 0}).is_polynomial());
}

TEST(Laurent, Linearity) {
    const auto r = ring_h(3);
    const auto h = gen(r, "h");
    const auto t1 = tvar(2, r, 1);
    const auto t2 = tvar(2, r, 2);
    const auto f = t1.pow(2) + h * t2;
    const auto g = t1 * t2 - t1.pow(2);
    const auto alpha = num(r, 3) + h;
    const auto beta = h.pow(2);
    for (Exponents m : {Exponents{2, 0}, Exponents{1, 1}, Exponents{0, 1}})
        EXPECT_EQ(coeff(alpha * f + beta * g, m), alpha * coeff(f, m) + beta * coeff(g, m));
}
