#include "helpers.hpp"

#include "gysin/error.hpp"
#include "gysin/expr.hpp"

#include <gtest/gtest.h>

using namespace gysin;
using namespace gysin::test;

namespace {

std::size_t error_offset(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.offset();
    }
    ADD_FAILURE() << "no error for '" << text << "'";
    return 0;
}

std::string error_message(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.message();
    }
    return "";
}

} // namespace

TEST(Parse, Examples) {
    EXPECT_EQ(describe(*parse("xi_1^2 + 3*xi_2")), "Add(Pow(xi_1,2), Mul(3, xi_2))");
    EXPECT_EQ(describe(*parse("s[2](E)*(xi_1 - xi_2)")), "Mul(ClassRef(s,2,E), Sub(xi_1, xi_2))");
    EXPECT_EQ(error_offset("xi_1 +"), 5u);
    EXPECT_EQ(error_message("xi_1 +"), "dangling operator '+'");
}

TEST(Parse, Precedence) {
    EXPECT_EQ(describe(*parse("-xi_1^2")), "Neg(Pow(xi_1,2))");
    EXPECT_EQ(describe(*parse("-a*b")), "Mul(Neg(a), b)");
    EXPECT_EQ(describe(*parse("a - b - c")), "Sub(Sub(a, b), c)");
    EXPECT_EQ(describe(*parse("a*b*c")), "Mul(Mul(a, b), c)");
    EXPECT_EQ(describe(*parse("a + b*c^3")), "Add(a, Mul(b, Pow(c,3)))");
    EXPECT_EQ(describe(*parse("c1(L)^2")), "Pow(C1(L),2)");
    EXPECT_EQ(describe(*parse("c[1](E) - t_2")), "Sub(ClassRef(c,1,E), t_2)");
}

TEST(Parse, Errors) {
    EXPECT_EQ(error_offset(""), 0u);
    EXPECT_EQ(error_offset("(xi_1 + 2"), 0u);
    EXPECT_EQ(error_message("(xi_1 + 2"), "unbalanced parenthesis");
    EXPECT_EQ(error_offset("xi_1)"), 4u);
    EXPECT_EQ(error_offset("foo(E)"), 0u);
    EXPECT_EQ(error_message("foo(E)"), "unknown function 'foo'");
    EXPECT_EQ(error_offset("2 * $"), 4u);
    EXPECT_EQ(error_offset("xi_1^xi_2"), 5u);
    EXPECT_EQ(error_offset("xi_1^2^3"), 6u);
    EXPECT_EQ(error_offset("3xi_1"), 0u);
    EXPECT_EQ(error_offset("xi_0"), 0u);
    EXPECT_EQ(error_offset("a * * b"), 4u);
    EXPECT_EQ(error_offset("s[1](E"), 6u);
    EXPECT_THROW(parse("xi_1^-1"), ParseError);
}

TEST(Parse, ErrorsAreValidationErrors) {
    EXPECT_THROW(parse("xi_1 +"), ValidationError);
}

TEST(Render, RoundTrip) {
    for (const char* text : {"xi_1^2 + 3*xi_2", "-(a + b)^2", "a - (b - c)", "a*(b*c)", "-(-a)",
                             "(xi_1 + xi_2)*(xi_1 - xi_2)", "s[3](E)*c1(L) - c[2](F)^2",
                             "2 - -a", "(-a)^3", "((a))", "1"}) {
        const auto tree = parse(text);
        const std::string shown = render(*tree);
        EXPECT_TRUE(same_tree(*tree, *parse(shown))) << text << " -> " << shown;
        EXPECT_EQ(render(*parse(shown)), shown);
    }
    EXPECT_EQ(render(*parse("(a*b) + ((c))")), "a*b + c");
    EXPECT_EQ(render(*parse("a-(b+c)")), "a - (b + c)");
}

TEST(Eval, Examples) {
    const auto r = ring_ab(4);
    const auto a = gen(r, "a");
    const auto b = gen(r, "b");
    Bindings bindings(r);
    bindings.bind_generators();
    EXPECT_EQ(eval(*parse("xi_1 + xi_2"), bindings, 2), tvar(2, r, 1) + tvar(2, r, 2));
    bindings.bind_line("L", a);
    EXPECT_EQ(eval(*parse("c1(L)^2"), bindings, 1), lconst(1, a.pow(2)));
    const VectorBundleData e("E", 2, {a, b}, r);
    bindings.bind_bundle(e);
    EXPECT_EQ(eval(*parse("s[1](E)*xi_1"), bindings, 1), LaurentPoly::monomial({1}, -a));
    EXPECT_EQ(eval(*parse("c[2](E) + c[3](E) + s[9](E)"), bindings, 1), lconst(1, b));
    EXPECT_EQ(eval(*parse("t_2*xi_2"), bindings, 2), tvar(2, r, 2).pow(2));
}

TEST(Eval, Errors) {
    const auto r = ring_ab(4);
    Bindings bindings(r);
    bindings.bind_generators();
    EXPECT_THROW(eval(*parse("xi_3"), bindings, 2), ValidationError);
    EXPECT_THROW(eval(*parse("q"), bindings, 2), ValidationError);
    EXPECT_THROW(eval(*parse("s[1](E)"), bindings, 2), ValidationError);
    EXPECT_THROW(eval(*parse("c1(L)"), bindings, 2), ValidationError);
}

TEST(Eval, Homomorphism) {
    const auto r = ring_ab(5);
    Bindings bindings(r);
    bindings.bind_generators();
    const auto x = parse("xi_1^2 - a*xi_2 + 3");
    const auto y = parse("(xi_1 + b)*xi_2 - 2*a^2");
    const auto px = eval(*x, bindings, 2);
    const auto py = eval(*y, bindings, 2);
    const auto product = parse("(" + render(*x) + ")*(" + render(*y) + ")");
    const auto sum = parse(render(*x) + " + " + render(*y));
    EXPECT_EQ(eval(*product, bindings, 2), lmul(px, py));
    EXPECT_EQ(eval(*sum, bindings, 2), px + py);
}

TEST(Symmetry, Examples) {
    const auto r = ring_h(3);
    Bindings bindings(r);
    const auto e = VectorBundleData::trivial("E", 4, r);
    const FlagSpec grassmann(Family::A, e, {2});
    const FlagSpec full(Family::A, e, {1, 2});
    EXPECT_TRUE(check_block_symmetry(*parse("xi_1+xi_2"), bindings, grassmann).symmetric);
    const auto report = check_block_symmetry(*parse("xi_1"), bindings, grassmann);
    EXPECT_FALSE(report.symmetric);
    EXPECT_EQ(report.violations, (std::vector<std::pair<int, int>>{{1, 2}}));
    EXPECT_TRUE(check_block_symmetry(*parse("xi_1*xi_2"), bindings, full).symmetric);
    EXPECT_TRUE(check_block_symmetry(*parse("xi_1"), bindings, full).symmetric);
}
