#include <gtest/gtest.h>

#include <random>

#include <modulislope/modulislope.hpp>

#include "oracle/fourier_motzkin.hpp"

using namespace modulislope;
using lp::Relation;

namespace {

lp::Program make(std::size_t n, std::vector<lp::Constraint> rows, std::vector<Rational> obj) {
    lp::Program p;
    p.num_vars = n;
    p.rows = std::move(rows);
    p.objective = std::move(obj);
    return p;
}

}  // namespace

TEST(LP, SmallOptimum) {
    // max x + y, x + 2y <= 4, 3x + y <= 6
    const auto p = make(2, {{{1, 2}, Relation::LessEqual, 4}, {{3, 1}, Relation::LessEqual, 6}}, {1, 1});
    const lp::Solution s = lp::solve(p);
    ASSERT_EQ(s.status, lp::Status::Optimal);
    EXPECT_EQ(s.value, Rational(14, 5));
    EXPECT_TRUE(lp::verify_primal(p, s.x));
    EXPECT_TRUE(lp::verify_dual_bound(p, s.dual, s.value));
}

TEST(LP, InfeasibleWithFarkas) {
    // x + y >= 3, x + y <= 1
    const auto p = make(2, {{{1, 1}, Relation::GreaterEqual, 3}, {{1, 1}, Relation::LessEqual, 1}}, {0, 0});
    const lp::Solution s = lp::solve(p);
    ASSERT_EQ(s.status, lp::Status::Infeasible);
    EXPECT_TRUE(lp::verify_farkas(p, s.dual));
    EXPECT_FALSE(lp::verify_farkas(p, {Rational(0), Rational(0)}));
}

TEST(LP, Unbounded) {
    const auto p = make(2, {{{1, -1}, Relation::LessEqual, 1}}, {1, 0});
    EXPECT_EQ(lp::solve(p).status, lp::Status::Unbounded);
}

TEST(LP, Equalities) {
    const auto p = make(3, {{{1, 1, 1}, Relation::Equal, 1}, {{1, -1, 0}, Relation::Equal, 0}}, {0, 0, 1});
    const lp::Solution s = lp::solve(p);
    ASSERT_EQ(s.status, lp::Status::Optimal);
    EXPECT_EQ(s.value, 1);
}

TEST(LP, NegativeRhs) {
    // -x <= -2 forces x >= 2; min x = 2.
    const auto p = make(1, {{{-1}, Relation::LessEqual, -2}}, {-1});
    const lp::Solution s = lp::solve(p);
    ASSERT_EQ(s.status, lp::Status::Optimal);
    EXPECT_EQ(s.x[0], 2);
}

TEST(LP, RandomAgainstFourierMotzkin) {
    std::mt19937 rng(20241016);
    std::uniform_int_distribution<int> coef(-3, 3), nvars(1, 4), nrows(1, 5), rel(0, 2), rhs(-4, 6);
    int infeasible = 0, unbounded = 0, optimal = 0;
    for (int t = 0; t < 100; ++t) {
        lp::Program p;
        p.num_vars = static_cast<std::size_t>(nvars(rng));
        const int m = nrows(rng);
        for (int r = 0; r < m; ++r) {
            lp::Constraint c;
            for (std::size_t j = 0; j < p.num_vars; ++j) c.coeffs.push_back(coef(rng));
            c.rel = static_cast<Relation>(rel(rng));
            c.rhs = rhs(rng);
            p.rows.push_back(c);
        }
        for (std::size_t j = 0; j < p.num_vars; ++j) p.objective.push_back(coef(rng));

        const lp::Solution s = lp::solve(p);
        const oracle::MaxResult o = oracle::maximum(p);
        ASSERT_EQ(oracle::feasible(p), o.feasible) << "trial " << t;
        if (!o.feasible) {
            ++infeasible;
            ASSERT_EQ(s.status, lp::Status::Infeasible) << "trial " << t;
            EXPECT_TRUE(lp::verify_farkas(p, s.dual)) << "trial " << t;
        } else if (o.unbounded) {
            ++unbounded;
            ASSERT_EQ(s.status, lp::Status::Unbounded) << "trial " << t;
        } else {
            ++optimal;
            ASSERT_EQ(s.status, lp::Status::Optimal) << "trial " << t;
            EXPECT_EQ(s.value, o.value) << "trial " << t;
            EXPECT_TRUE(lp::verify_primal(p, s.x));
            EXPECT_TRUE(lp::verify_dual_bound(p, s.dual, s.value));
        }
    }
    // The generator should exercise every outcome.
    EXPECT_GT(infeasible, 0);
    EXPECT_GT(unbounded, 0);
    EXPECT_GT(optimal, 0);
}

// The pruned oracle must decide feasibility exactly like plain elimination.
TEST(LP, OraclePruningMatchesPlainElimination) {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> coef(-3, 3), nvars(1, 4), nrows(1, 6), rel(0, 2), rhs(-4, 6);
    for (int t = 0; t < 300; ++t) {
        lp::Program p;
        p.num_vars = static_cast<std::size_t>(nvars(rng));
        const int m = nrows(rng);
        for (int r = 0; r < m; ++r) {
            lp::Constraint c;
            for (std::size_t j = 0; j < p.num_vars; ++j) c.coeffs.push_back(coef(rng));
            c.rel = static_cast<Relation>(rel(rng));
            c.rhs = rhs(rng);
            p.rows.push_back(c);
        }
        auto rows = oracle::normalize(p);
        for (std::size_t k = 0; k < p.num_vars; ++k) rows = oracle::eliminate(rows, k);
        bool plain = true;
        for (const auto& r : rows) plain = plain && r.rhs >= 0;
        ASSERT_EQ(oracle::feasible(p), plain) << "trial " << t;
    }
}
