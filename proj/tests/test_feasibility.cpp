#include <shiish/feasibility.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace shiish;

namespace {

std::vector<Rational> q(std::initializer_list<long long> v)
{
    std::vector<Rational> out;
    for (auto x : v) out.emplace_back(x);
    return out;
}

/// A random system of difference constraints, some strict, some equalities.
StrictSystem random_difference_system(int n, int m, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> var(0, n - 1), off(-2, 2), kind(0, 9);
    StrictSystem s{n, {}};
    while (static_cast<int>(s.constraints.size()) < m) {
        const int u = var(rng), v = var(rng);
        if (u == v) continue;
        std::vector<std::int64_t> a(static_cast<std::size_t>(n), 0);
        a[static_cast<std::size_t>(u)] = 1;
        a[static_cast<std::size_t>(v)] = -1;
        const int k = kind(rng);
        s.add(a, off(rng), k == 0 ? Relation::equal : (k % 2 ? Relation::less : Relation::greater));
    }
    return s;
}

} // namespace

TEST(Simplex, Optimum)
{
    std::vector<LpRow> rows{{q({1, 2}), -1, 4}, {q({3, 1}), -1, 6}};
    const auto r = lp_maximize(rows, q({1, 1}));
    ASSERT_EQ(r.status, LpStatus::optimal);
    EXPECT_EQ(r.value, Rational(14, 5));
    EXPECT_EQ(r.x, (std::vector<Rational>{Rational(8, 5), Rational(6, 5)}));
}

TEST(Simplex, InfeasibleAndUnbounded)
{
    EXPECT_EQ(lp_maximize({{q({1, 1}), -1, -1}}, q({0, 0})).status, LpStatus::infeasible);
    EXPECT_EQ(lp_maximize({{q({1, -1}), -1, 1}}, q({1, 1})).status, LpStatus::unbounded);
    const auto eq = lp_maximize({{q({1, 1}), 0, 3}, {q({1, 0}), 1, 1}}, q({0, 1}));
    ASSERT_EQ(eq.status, LpStatus::optimal);
    EXPECT_EQ(eq.value, 2);
}

TEST(StrictFeasibility, SmallCases)
{
    StrictSystem cyc{3, {}};
    cyc.add({1, -1, 0}, 0, Relation::less);
    cyc.add({0, 1, -1}, 0, Relation::less);
    cyc.add({-1, 0, 1}, 0, Relation::less);
    EXPECT_FALSE(feasible_strict(cyc));
    EXPECT_FALSE(feasible_strict_lp(cyc));

    StrictSystem tri{2, {}};
    tri.add({1, 0}, 0, Relation::greater);
    tri.add({0, 1}, 0, Relation::greater);
    tri.add({1, 1}, 1, Relation::less);
    const auto w = feasible_strict(tri);
    ASSERT_TRUE(w);
    EXPECT_TRUE(satisfies(tri, *w));

    tri.add({1, 1}, 0, Relation::less);
    EXPECT_FALSE(feasible_strict(tri));

    // An open interval of width zero.
    StrictSystem thin{2, {}};
    thin.add({1, -1}, 1, Relation::greater);
    thin.add({1, -1}, 1, Relation::less);
    EXPECT_FALSE(feasible_strict(thin));
    StrictSystem on{2, {}};
    on.add({1, -1}, 1, Relation::equal);
    on.add({1, 1}, 0, Relation::greater);
    const auto w2 = feasible_strict(on);
    ASSERT_TRUE(w2);
    EXPECT_TRUE(satisfies(on, *w2));
}

TEST(StrictFeasibility, DifferenceSolverMatchesSimplex)
{
    std::mt19937_64 rng(31337);
    int feasible = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + trial % 4;
        const auto s = random_difference_system(n, 2 + trial % 7, rng);
        ASSERT_TRUE(as_difference_system(s).has_value());
        const auto d = feasible_strict_difference(s);
        const auto l = feasible_strict_lp(s);
        ASSERT_EQ(d.has_value(), l.has_value()) << "trial " << trial;
        if (d) {
            ++feasible;
            EXPECT_TRUE(satisfies(s, *d));
            EXPECT_TRUE(satisfies(s, *l));
        }
    }
    // Both outcomes occur often enough to mean something.
    EXPECT_GT(feasible, 50);
    EXPECT_LT(feasible, 350);
}

TEST(StrictFeasibility, GeneralSystemsWitnessesCheck)
{
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> coef(-2, 2), off(-3, 3), rel(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        StrictSystem s{3, {}};
        for (int i = 0; i < 4; ++i) {
            std::vector<std::int64_t> a{coef(rng), coef(rng), coef(rng)};
            if (a == std::vector<std::int64_t>{0, 0, 0}) a[0] = 1;
            s.add(a, off(rng), rel(rng) ? Relation::less : Relation::greater);
        }
        if (const auto w = feasible_strict(s)) EXPECT_TRUE(satisfies(s, *w));
    }
}

TEST(ConeDimension, Examples)
{
    EXPECT_EQ(cone_dimension(3, {}), 3);
    EXPECT_EQ(cone_dimension(3, {{1, -1, 0}}), 3);
    EXPECT_EQ(cone_dimension(3, {{1, -1, 0}, {-1, 1, 0}}), 2);
    EXPECT_EQ(cone_dimension(3, {{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}), 1);
    EXPECT_EQ(cone_dimension_lp(2, {{1, 1}, {-1, -1}, {1, 0}}), 1);
    EXPECT_EQ(cone_dimension_lp(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), 0);
}

TEST(ConeDimension, SccRouteMatchesLp)
{
    std::mt19937_64 rng(8080);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 5;
        std::uniform_int_distribution<int> var(0, n - 1);
        std::vector<std::vector<std::int64_t>> rows;
        std::vector<std::pair<int, int>> pairs;
        for (int k = 0; k < trial % 9; ++k) {
            const int u = var(rng), v = var(rng);
            if (u == v) continue;
            std::vector<std::int64_t> r(static_cast<std::size_t>(n), 0);
            r[static_cast<std::size_t>(u)] = 1;
            r[static_cast<std::size_t>(v)] = -1;
            rows.push_back(r);
            pairs.emplace_back(u, v);
        }
        EXPECT_EQ(cone_dimension_difference(n, pairs), cone_dimension_lp(n, rows)) << "trial " << trial;
    }
}
