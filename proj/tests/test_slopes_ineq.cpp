#include <gtest/gtest.h>

#include <modulislope/modulislope.hpp>

using namespace modulislope;

TEST(Slope, Examples) {
    EXPECT_EQ(slope(k3_class()), Slope::finite(7));
    EXPECT_EQ(slope(brill_noether_class(10)), Slope::finite(Rational(78, 11)));
    const NamedClass k = k3_class();
    EXPECT_EQ(slope(2 * k.cls, k.bounds), Slope::finite(7));
    EXPECT_EQ(bn_slope(10), Rational(78, 11));
}

TEST(Slope, Infinite) {
    DivisorClass d(ModuliSpace{5, 0});
    d.add_lambda(1);
    const Slope s = slope(d);
    EXPECT_TRUE(s.infinite);
    EXPECT_FALSE(s.note.empty());
    d.add_delta(1, 1);  // b_1 = -1
    EXPECT_TRUE(slope(d).infinite);
    DivisorClass neg(ModuliSpace{5, 0});
    neg.add_lambda(-1).add_delta(0, -1).add_delta(1, -1).add_delta(2, -1);
    EXPECT_TRUE(slope(neg).infinite);
    EXPECT_TRUE(slope(DivisorClass(ModuliSpace{5, 0})).infinite);
    EXPECT_THROW(slope(weierstrass_class(3)), SpaceMismatch);
}

TEST(Slope, UnboundedSymbolGivesInfinity) {
    DivisorClass d(ModuliSpace{4, 0});
    d.add_lambda(7).add_delta(0, -1).add_delta(1, -LinExpr::symbol("u")).add_delta(2, -1);
    EXPECT_TRUE(slope(d).infinite);
    BoundEnv env;
    env.set("u", Bound::at_least(Rational(1, 2)));
    EXPECT_EQ(slope(d, env), Slope::finite(14));
}

TEST(Slope, UpperBounds) {
    EXPECT_EQ(slope_upper_bound(22), Rational(145, 22));
    EXPECT_EQ(slope_upper_bound(11), Rational(7));
    EXPECT_EQ(slope_upper_bound(10), Rational(7));
    EXPECT_EQ(max_epsilon(23), Rational(5, 12));
    EXPECT_EQ(max_epsilon(10), Rational(5, 6));
    // 13 is prime: the Petri bound 295/42 applies, not 6 + 12/13.
    EXPECT_EQ(slope_upper_bound(12), Rational(295, 42));
    EXPECT_EQ(max_epsilon(12), Rational(23, 42));
    EXPECT_THROW(slope_upper_bound(1), std::invalid_argument);
    EXPECT_THROW(max_epsilon(24), std::invalid_argument);
}

TEST(Slope, NoBound) {
    // g = 2 is even, so Petri applies; no genus in 3..23 lacks a bound.
    for (int g = 3; g <= 23; ++g) EXPECT_NO_THROW(slope_upper_bound(g)) << g;
}

TEST(Inequalities, ResidualsForK3) {
    const NamedClass k = k3_class();
    EXPECT_EQ(ineq_a_residual(k.cls, 2), LinExpr(0));
    EXPECT_EQ(check_ineq_a(k.cls, 3).residual, 4);
    EXPECT_EQ(ineq_a_residual(k.cls, 5), LinExpr::symbol("B5") - LinExpr(6));
    EXPECT_THROW(check_ineq_a(k.cls, 5), std::invalid_argument);
    EXPECT_EQ(check_ineq_c(k.cls.substitute("B5", LinExpr(6))).residual, 0);
    EXPECT_THROW(ineq_a_residual(k.cls, 1), InvalidIndex);
}

TEST(Inequalities, LambdaOnly) {
    DivisorClass d(ModuliSpace{12, 0});
    d.add_lambda(1);
    for (int i = 2; i <= 11; ++i) EXPECT_EQ(check_ineq_a(d, i, true).residual, i + 1);
    EXPECT_THROW(check_ineq_a(d, 10), InvalidIndex);
}

TEST(Inequalities, CaseBConstants) {
    const CaseBDerivation d = derive_case_b_constants();
    const LinExpr a = LinExpr::symbol("a"), m = LinExpr::symbol("m"), b0 = LinExpr::symbol("b0"),
                  b10 = LinExpr::symbol("b10");
    EXPECT_EQ(d.lambda_coeff, 642 * b10 + 990 * (a - 7 * m));
    EXPECT_EQ(d.delta0_coeff, -55 * (b10 + 18 * (b0 - m)));
    EXPECT_EQ(d.m_floor, 78 * b0 - 11 * a - b10);
    // Oracle: 642 b10 + 990 a - 6930 (78 b0 - 11 a - b10) >= 0, solved for b10 by hand.
    EXPECT_EQ(d.coef_b0, Rational(540540, 7572));
    EXPECT_EQ(-d.coef_a, Rational(77220, 7572));
    EXPECT_EQ(d.coef_b0, Rational(45045, 631));
}

TEST(Inequalities, CaseB) {
    DivisorClass d(ModuliSpace{20, 0});
    d.add_lambda(7).add_delta(0, -1).add_delta(10, -100);
    const IneqBResult r = check_ineq_b(d);
    EXPECT_EQ(r.strong_residual, 100 - 78 + 77);
    EXPECT_TRUE(r.holds());
    EXPECT_THROW(check_ineq_b(brill_noether_class(19)), std::invalid_argument);
}

TEST(Inequalities, Thresholds) {
    EXPECT_EQ(corollary_threshold(9), Rational(71, 10));
    EXPECT_EQ(corollary_threshold(10), Rational(88828, 12870));
    EXPECT_EQ(corollary_threshold(11), Rational(83, 12));
    EXPECT_EQ(corollary_threshold(2), Rational(29, 3));
    for (int g = 3; g <= 23; ++g) EXPECT_GT(pipeline_epsilon(g), 0) << g;
}
