#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace shiish;

namespace {

std::set<std::vector<int>> sign_set(const std::vector<RegionCert>& rs)
{
    std::set<std::vector<int>> out;
    for (const auto& r : rs) out.insert(r.signs);
    return out;
}

long long zaslavsky(const Graph& g) { return static_cast<long long>(zaslavsky_regions(charpoly_closed_form(g), g.n())); }

long long rel_bounded(const Graph& g)
{
    return static_cast<long long>(zaslavsky_rel_bounded(charpoly_closed_form(g), g.n() - 1));
}

const RegionCert& find_signs(const Arrangement& a, const std::vector<RegionCert>& rs, const Point& x)
{
    for (const auto& r : rs) {
        bool match = true;
        for (std::size_t h = 0; h < a.size(); ++h) {
            const Rational v = dot(std::vector<std::int64_t>(a[h].a.begin(), a[h].a.end()), x) - a[h].b;
            if ((v > 0 ? 1 : -1) != r.signs[h]) match = false;
        }
        if (match) return r;
    }
    throw std::runtime_error("no region contains the point");
}

Point pt(std::initializer_list<long long> v)
{
    Point p;
    for (auto x : v) p.emplace_back(x);
    return p;
}

Census census_from(std::initializer_list<std::pair<std::pair<int, int>, long long>> cells)
{
    Census c;
    for (const auto& [k, v] : cells) c.by_cd[k] = v;
    return c;
}

} // namespace

TEST(Regions, Counts)
{
    EXPECT_EQ(enumerate_regions(build_cox(3)).size(), 6U);
    EXPECT_EQ(enumerate_regions(build_shi(Graph::complete(3))).size(), 16U);
    EXPECT_EQ(enumerate_regions(build_ish(Graph::complete(3))).size(), 16U);
    EXPECT_EQ(enumerate_regions(build_ish(Graph::chain(3))).size(), 13U);
    EXPECT_EQ(enumerate_regions(build_shi(Graph::complete(4))).size(), 125U);
}

TEST(Regions, WitnessesReproduceSigns)
{
    for (const auto& g : {Graph::complete(4), Graph::chain(4)})
        for (const auto& a : {build_shi(g), build_ish(g)})
            for (const auto& r : enumerate_regions(a)) {
                ASSERT_EQ(r.signs.size(), a.size());
                EXPECT_TRUE(satisfies(region_system(a, r.signs), r.witness)) << r.sign_string();
            }
}

TEST(Regions, MatchGridSamplingOracle)
{
    for (const auto& g : oracle::all_graphs(3))
        for (const auto& a : {build_shi(g), build_ish(g)})
            EXPECT_EQ(sign_set(enumerate_regions(a)), oracle::sampled_sign_vectors(a, 6, 9)) << g.to_string();
    for (const auto& g : {Graph::complete(4), Graph(4, {{1, 3}, {2, 4}, {3, 4}})})
        for (const auto& a : {build_shi(g), build_ish(g)})
            EXPECT_EQ(sign_set(enumerate_regions(a)), oracle::sampled_sign_vectors(a, 8, 8)) << g.to_string();
}

TEST(Regions, SimplexBackendAgrees)
{
    for (const auto& g : oracle::all_graphs(3))
        for (const auto& a : {build_shi(g), build_ish(g)}) {
            const auto fast = enumerate_regions(a);
            const auto slow = enumerate_regions(a, {}, FeasibilityBackend::simplex);
            EXPECT_EQ(sign_set(fast), sign_set(slow));
            for (const auto& r : slow) EXPECT_TRUE(satisfies(region_system(a, r.signs), r.witness));
        }
}

TEST(Regions, Guard)
{
    Guards tight;
    tight.max_geometry_hyperplanes = 5;
    EXPECT_THROW(enumerate_regions(build_shi(Graph::complete(3)), tight), guard_error);
}

TEST(Walls, CoxeterRegionsAreSimplicial)
{
    for (int n = 2; n <= 4; ++n) {
        const auto a = build_cox(n);
        for (const auto& r : enumerate_regions(a)) {
            EXPECT_EQ(walls(a, r).size(), static_cast<std::size_t>(n - 1));
            EXPECT_TRUE(ceilings(a, r).empty());
            EXPECT_EQ(recession_dim(a, r), n);
        }
    }
    const auto a = build_cox(3);
    const auto rs = enumerate_regions(a);
    const auto& dom = find_signs(a, rs, pt({2, 1, 0}));
    EXPECT_TRUE(is_dominant(a, dom));
    EXPECT_EQ(walls(a, dom), (std::vector<std::size_t>{*a.coxeter_index(1, 2), *a.coxeter_index(2, 3)}));
    int dominant = 0;
    for (const auto& r : rs) dominant += is_dominant(a, r) ? 1 : 0;
    EXPECT_EQ(dominant, 1);
}

TEST(Walls, ShiThreeAllPlusRegion)
{
    // x_1 - x_2 > 1 and x_2 - x_3 > 1: bounded by the two outer Shi hyperplanes.
    const auto a = build_shi(Graph::complete(3));
    const auto rs = enumerate_regions(a);
    const auto& r = find_signs(a, rs, pt({4, 2, 0}));
    std::set<std::pair<int, int>> got;
    for (auto h : walls(a, r)) {
        EXPECT_EQ(a[h].b, 1);
        got.insert(*a[h].edge);
    }
    EXPECT_EQ(got, (std::set<std::pair<int, int>>{{1, 2}, {2, 3}}));
    EXPECT_TRUE(ceilings(a, r).empty());
}

TEST(Ceilings, SubsetOfWallsAndRecession)
{
    const auto a = build_shi(Graph::complete(3));
    const auto rs = enumerate_regions(a);
    int two_ceilings = 0;
    for (const auto& r : rs) {
        const auto w = walls(a, r);
        const auto c = ceilings(a, r, w);
        for (auto h : c) EXPECT_NE(std::find(w.begin(), w.end(), h), w.end());
        if (c.size() == 2) {
            ++two_ceilings;
            EXPECT_EQ(recession_dim(a, r), 1);
        }
    }
    EXPECT_EQ(two_ceilings, 1);
    // Ceilingless dominant region.
    EXPECT_EQ(recession_dim(a, find_signs(a, rs, pt({4, 2, 0}))), 3);
}

TEST(Census, IntroTables)
{
    const auto full = census_from({{{0, 3}, 6}, {{1, 1}, 3}, {{1, 2}, 6}, {{2, 1}, 1}});
    const auto chain = census_from({{{0, 3}, 6}, {{1, 1}, 2}, {{1, 2}, 4}, {{2, 1}, 1}});
    const auto shi3 = region_census(build_shi(Graph::complete(3)));
    const auto ish3 = region_census(build_ish(Graph::complete(3)));
    EXPECT_EQ(shi3.by_cd, full.by_cd);
    EXPECT_EQ(ish3.by_cd, full.by_cd);
    EXPECT_EQ(region_census(build_shi(Graph::chain(3))).by_cd, chain.by_cd);
    EXPECT_EQ(region_census(build_ish(Graph::chain(3))).by_cd, chain.by_cd);

    EXPECT_EQ(shi3.dominant_total(), 5);
    EXPECT_EQ(ish3.dominant_total(), 5);
    EXPECT_EQ(shi3.dominant_with_dof(1), 2);
    EXPECT_EQ(ish3.dominant_with_dof(1), 3);
    EXPECT_EQ(shi3.dominant_by_c(), ish3.dominant_by_c());
    EXPECT_NE(shi3.dominant_by_cd, ish3.dominant_by_cd);
}

TEST(Census, AllGraphsOnFour)
{
    for (const auto& g : oracle::all_graphs(4)) {
        const auto shi_regions = enumerate_regions(build_shi(g));
        const auto ish_regions = enumerate_regions(build_ish(g));
        ASSERT_EQ(static_cast<long long>(shi_regions.size()), zaslavsky(g)) << g.to_string();
        ASSERT_EQ(static_cast<long long>(ish_regions.size()), zaslavsky(g)) << g.to_string();
        const auto shi = region_census(build_shi(g), shi_regions);
        const auto ish = region_census(build_ish(g), ish_regions);
        EXPECT_EQ(shi.by_cd, ish.by_cd) << g.to_string();
        EXPECT_EQ(shi.dominant_by_c(), ish.dominant_by_c()) << g.to_string();
        EXPECT_EQ(shi.with_dof(1), rel_bounded(g));
        EXPECT_EQ(ish.with_dof(1), rel_bounded(g));
        for (const auto& [cd, v] : shi.by_cd) EXPECT_LE(cd.first, 3);
    }
}

TEST(Census, AllGraphsOnThree)
{
    for (const auto& g : oracle::all_graphs(3))
        for (const auto& a : {build_shi(g), build_ish(g)}) {
            const auto rs = enumerate_regions(a);
            EXPECT_EQ(static_cast<long long>(rs.size()), zaslavsky(g));
            EXPECT_EQ(region_census(a, rs).with_dof(1), rel_bounded(g));
        }
}

TEST(Census, SpotChecksOnFive)
{
    std::vector<Graph> graphs{Graph::complete(5), Graph::chain(5)};
    for (const auto& g : oracle::random_graphs(5, 5, 5150)) graphs.push_back(g);
    for (const auto& g : graphs) {
        const auto shi_regions = enumerate_regions(build_shi(g));
        const auto ish_regions = enumerate_regions(build_ish(g));
        EXPECT_EQ(static_cast<long long>(shi_regions.size()), zaslavsky(g)) << g.to_string();
        EXPECT_EQ(static_cast<long long>(ish_regions.size()), zaslavsky(g)) << g.to_string();
        if (g.size() <= 6) {
            const auto shi = region_census(build_shi(g), shi_regions);
            const auto ish = region_census(build_ish(g), ish_regions);
            EXPECT_EQ(shi.by_cd, ish.by_cd) << g.to_string();
            EXPECT_EQ(shi.dominant_by_c(), ish.dominant_by_c()) << g.to_string();
        }
    }
}
