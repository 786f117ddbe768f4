#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace shiish;

namespace {

const Permutation example_w{5, 1, 2, 8, 6, 3, 4, 7};

ShiCeilingDiagram shi_example() { return {example_w, SetPartition(8, {{1, 4}, {2, 5}, {3}, {6, 8}, {7}})}; }
IshCeilingDiagram ish_example() { return {example_w, {0, 0, 0, 1, 0, 0, 3, 5}}; }

std::set<std::pair<int, int>> edge_tags(const Arrangement& a, const std::vector<std::size_t>& idx)
{
    std::set<std::pair<int, int>> out;
    for (auto h : idx) out.insert(*a[h].edge);
    return out;
}

/// Whether x lies in the closure of the region with these signs.
bool in_closure(const Arrangement& a, const RegionCert& r, const Point& x)
{
    for (std::size_t h = 0; h < a.size(); ++h) {
        const Rational v = dot(std::vector<std::int64_t>(a[h].a.begin(), a[h].a.end()), x) - a[h].b;
        if (r.signs[h] > 0 && v < 0) return false;
        if (r.signs[h] < 0 && v > 0) return false;
    }
    return true;
}

/// A naive witness: z_i = -max{ level of a minimal filter
/// element x_1 - x_k = level with pos(k) <= pos(i) }, max(empty) = 0.
Point naive_witness(const IshCeilingDiagram& d)
{
    const auto pos = positions(d.w);
    Point z(d.w.size(), 0);
    for (int i = 1; i <= d.n(); ++i) {
        int m = 0;
        for (auto [level, k] : d.ceilings())
            if (pos[static_cast<std::size_t>(k)] <= pos[static_cast<std::size_t>(i)]) m = std::max(m, level);
        z[static_cast<std::size_t>(i - 1)] = -m;
    }
    return z;
}

std::vector<Graph> bijection_corpus()
{
    auto gs = oracle::all_graphs(3);
    for (const auto& g : oracle::all_graphs(4)) gs.push_back(g);
    return gs;
}

} // namespace

TEST(Posets, ShiPosetShape)
{
    const auto p = shi_poset(Graph::complete(8), example_w);
    int noninv = 0;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) noninv += example_w[static_cast<std::size_t>(i)] < example_w[static_cast<std::size_t>(j)];
    EXPECT_EQ(static_cast<int>(p.elements.size()), noninv);
    EXPECT_TRUE(shi_poset(Graph::complete(5), Permutation{5, 4, 3, 2, 1}).elements.empty());

    // The example's ideal has maximal elements at the arcs of pi.
    const auto arcs = shi_example().pi.arcs();
    for (const auto& a : arcs) EXPECT_NE(std::find(p.elements.begin(), p.elements.end(), a), p.elements.end());
}

TEST(Posets, IshPosetShape)
{
    const auto p = ish_poset(Graph::complete(8), example_w);
    // j - 1 boxes above every symbol j right of 1.
    std::size_t expect = 0;
    for (int m = 2; m < 8; ++m) expect += static_cast<std::size_t>(example_w[static_cast<std::size_t>(m)] - 1);
    EXPECT_EQ(p.elements.size(), expect);
    EXPECT_TRUE(ish_poset(Graph::complete(4), Permutation{2, 3, 4, 1}).elements.empty());
}

TEST(Posets, AreValidPartialOrders)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + trial % 4;
        const Graph g = Graph::random(n, rng);
        Permutation w = identity_permutation(n);
        std::shuffle(w.begin(), w.end(), rng);
        const auto sp = shi_poset(g, w);
        const auto ip = ish_poset(g, w);
        auto check = [](const auto& elems, auto leq) {
            for (const auto& x : elems) {
                EXPECT_TRUE(leq(x, x));
                for (const auto& y : elems) {
                    if (leq(x, y) && leq(y, x)) EXPECT_EQ(x, y);
                    for (const auto& z : elems)
                        if (leq(x, y) && leq(y, z)) EXPECT_TRUE(leq(x, z));
                }
            }
        };
        check(sp.elements, ShiPoset::leq);
        check(ip.elements, [&](const auto& x, const auto& y) { return ip.leq(x, y); });
    }
}

TEST(Diagrams, AntichainsAreNonnestingArcSets)
{
    for (const auto& g : oracle::all_graphs(4))
        for_each_permutation(4, [&](const Permutation& w) {
            const auto elems = shi_poset(g, w).elements;
            std::set<std::vector<Arc>> expect;
            for (std::uint32_t mask = 0; mask < (1U << elems.size()); ++mask) {
                std::vector<Arc> s;
                for (std::size_t k = 0; k < elems.size(); ++k)
                    if (mask >> k & 1U) s.push_back(elems[k]);
                EndpointPair e{4, {}, {}};
                for (auto [i, j] : s) {
                    e.alpha.push_back(i);
                    e.beta.push_back(j);
                }
                if (e.valid() && std::is_sorted(e.beta.begin(), e.beta.end())) expect.insert(s);
            }
            std::set<std::vector<Arc>> got;
            for (const auto& d : enumerate_shi_diagrams(g, w)) {
                EXPECT_TRUE(d.violation(g).empty());
                got.insert(d.pi.arcs());
            }
            EXPECT_EQ(got, expect);
        });
}

TEST(Diagrams, FiltersAreIncreasingEpsVectors)
{
    for (const auto& g : oracle::all_graphs(4))
        for_each_permutation(4, [&](const Permutation& w) {
            std::set<std::vector<int>> expect;
            std::vector<int> eps(4, 0);
            auto rec = [&](auto&& self, std::size_t i) -> void {
                if (i == 4) {
                    if (IshCeilingDiagram{w, eps}.violation(g).empty()) expect.insert(eps);
                    return;
                }
                for (int e = 0; e < w[i]; ++e) {
                    eps[i] = e;
                    self(self, i + 1);
                }
                eps[i] = 0;
            };
            rec(rec, 0);
            std::set<std::vector<int>> got;
            for (const auto& d : enumerate_ish_diagrams(g, w)) got.insert(d.eps);
            EXPECT_EQ(got, expect);
        });
}

TEST(Diagrams, CountsOverAllCones)
{
    std::size_t shi = 0, ish = 0;
    for_each_permutation(3, [&](const Permutation& w) {
        shi += enumerate_shi_diagrams(Graph::complete(3), w).size();
        ish += enumerate_ish_diagrams(Graph::complete(3), w).size();
    });
    EXPECT_EQ(shi, 16U);
    EXPECT_EQ(ish, 16U);
    EXPECT_EQ(enumerate_shi_diagrams(Graph::empty(4), identity_permutation(4)).size(), 1U);
    EXPECT_EQ(enumerate_ish_diagrams(Graph::empty(4), identity_permutation(4)).size(), 1U);
}

TEST(WorkedExamples, Shi)
{
    const Graph k8 = Graph::complete(8);
    const auto d = shi_example();
    EXPECT_TRUE(d.violation(k8).empty());
    EXPECT_EQ(shi_ceiling_partition(d).to_string(), "(135,678)");
    EXPECT_EQ(shi_dof(d), 2);

    const auto a = build_shi(k8);
    const auto r = diagram_to_region(d, a);
    EXPECT_TRUE(satisfies(region_system(a, r.signs), r.witness));
    EXPECT_EQ(region_permutation(r), example_w);
    EXPECT_EQ(recession_dim(a, r), 2);
    const auto c = ceilings(a, r);
    EXPECT_EQ(edge_tags(a, c), (std::set<std::pair<int, int>>{{5, 8}, {1, 6}, {3, 7}}));
    EXPECT_EQ(region_ceiling_partition(a, c).to_string(), "(135,678)");
    EXPECT_EQ(region_to_shi_diagram(r, a, c), d);
}

TEST(WorkedExamples, Ish)
{
    const Graph k8 = Graph::complete(8);
    const auto d = ish_example();
    EXPECT_TRUE(d.violation(k8).empty());
    EXPECT_EQ(ish_ceiling_partition(d).to_string(), "(135,847)");
    EXPECT_EQ(ish_dof(d), 2);

    const auto a = build_ish(k8);
    const auto r = diagram_to_region(d, a);
    EXPECT_TRUE(satisfies(region_system(a, r.signs), r.witness));
    EXPECT_EQ(recession_dim(a, r), 2);
    const auto c = ceilings(a, r);
    EXPECT_EQ(edge_tags(a, c), (std::set<std::pair<int, int>>{{1, 8}, {3, 4}, {5, 7}}));
    EXPECT_EQ(region_ceiling_partition(a, c).to_string(), "(135,847)");
    EXPECT_EQ(region_to_ish_diagram(r, a, c), d);
    EXPECT_TRUE(in_closure(a, r, ish_filter_witness(d, k8)));
}

TEST(Dof, Trivial)
{
    EXPECT_EQ(shi_dof({identity_permutation(5), SetPartition::singletons(5)}), 5);
    EXPECT_EQ(shi_dof({identity_permutation(5), SetPartition::one_block(5)}), 1);
    EXPECT_EQ(ish_dof({Permutation{3, 1, 2}, {0, 0, 0}}), 3);
    // Relatively bounded iff w(1) = 1 and eps_n != 0.
    for_each_permutation(4, [](const Permutation& w) {
        for (const auto& d : enumerate_ish_diagrams(Graph::complete(4), w))
            EXPECT_EQ(ish_dof(d) == 1, w[0] == 1 && d.eps[3] != 0);
    });
}

TEST(Bijection, RoundTripsDofAndCeilings)
{
    for (const auto& g : bijection_corpus())
        for (const auto kind : {ArrangementKind::shi, ArrangementKind::ish}) {
            const auto a = build(kind, g);
            const auto regions = enumerate_regions(a);
            std::set<std::vector<int>> region_signs;
            for (const auto& r : regions) {
                region_signs.insert(r.signs);
                const auto c = ceilings(a, r);
                const auto dof = recession_dim(a, r);
                const auto cp = region_ceiling_partition(a, c);
                if (kind == ArrangementKind::shi) {
                    const auto d = region_to_shi_diagram(r, a, c);
                    EXPECT_EQ(diagram_to_region(d, a).signs, r.signs);
                    EXPECT_EQ(shi_dof(d), dof) << g.to_string() << " " << r.sign_string();
                    EXPECT_EQ(shi_ceiling_partition(d), cp);
                } else {
                    const auto d = region_to_ish_diagram(r, a, c);
                    EXPECT_EQ(diagram_to_region(d, a).signs, r.signs);
                    EXPECT_EQ(ish_dof(d), dof) << g.to_string() << " " << r.sign_string();
                    EXPECT_EQ(ish_ceiling_partition(d), cp);
                }
            }
            // Diagrams to regions is injective and hits every region.
            std::set<std::vector<int>> from_diagrams;
            std::size_t count = 0;
            for_each_permutation(g.n(), [&](const Permutation& w) {
                if (kind == ArrangementKind::shi)
                    for (const auto& d : enumerate_shi_diagrams(g, w)) {
                        const auto r = diagram_to_region(d, a);
                        from_diagrams.insert(r.signs);
                        EXPECT_EQ(shi_ceiling_partition(d), region_ceiling_partition(a, ceilings(a, r)));
                        ++count;
                    }
                else
                    for (const auto& d : enumerate_ish_diagrams(g, w)) {
                        const auto r = diagram_to_region(d, a);
                        from_diagrams.insert(r.signs);
                        EXPECT_EQ(ish_ceiling_partition(d), region_ceiling_partition(a, ceilings(a, r)));
                        ++count;
                    }
            });
            EXPECT_EQ(count, regions.size());
            EXPECT_EQ(from_diagrams, region_signs);
        }
}

TEST(Bijection, SpotChecksOnFive)
{
    for (const auto& g : {Graph::complete(5), Graph::chain(5)})
        for (const auto kind : {ArrangementKind::shi, ArrangementKind::ish}) {
            const auto a = build(kind, g);
            for (const auto& r : enumerate_regions(a)) {
                const auto c = ceilings(a, r);
                const int dof = kind == ArrangementKind::shi ? shi_dof(region_to_shi_diagram(r, a, c))
                                                              : ish_dof(region_to_ish_diagram(r, a, c));
                EXPECT_EQ(dof, recession_dim(a, r));
            }
        }
}

TEST(Bijection, TiedWitnessRejected)
{
    RegionCert r{{}, {Rational(1), Rational(1), Rational(0)}};
    EXPECT_THROW(region_permutation(r), std::invalid_argument);
}

TEST(FilterWitness, LiesInClosure)
{
    for (const auto& g : bijection_corpus()) {
        const auto a = build_ish(g);
        for_each_permutation(g.n(), [&](const Permutation& w) {
            for (const auto& d : enumerate_ish_diagrams(g, w))
                EXPECT_TRUE(in_closure(a, diagram_to_region(d, a), ish_filter_witness(d, g)))
                    << g.to_string() << " w=" << permutation_string(w);
        });
    }
    // Empty graph, identity cone: the origin.
    const IshCeilingDiagram empty{identity_permutation(4), {0, 0, 0, 0}};
    EXPECT_EQ(ish_filter_witness(empty, Graph::empty(4)), Point(4, 0));
}

TEST(FilterWitness, NaiveFormulaCanLeaveTheClosure)
{
    // K_3, identity cone, filter generated by x_1 - x_2 = 1: the region needs
    // x_1 - x_3 >= 2 but the naive formula gives x_1 - x_3 = 1.
    const Graph g = Graph::complete(3);
    const auto a = build_ish(g);
    const IshCeilingDiagram d{identity_permutation(3), {0, 1, 0}};
    ASSERT_TRUE(d.violation(g).empty());
    const auto r = diagram_to_region(d, a);
    const Point z = naive_witness(d);
    EXPECT_EQ(z, (Point{0, -1, -1}));
    EXPECT_FALSE(in_closure(a, r, z));
    EXPECT_TRUE(in_closure(a, r, ish_filter_witness(d, g)));
    EXPECT_FALSE(in_closure(a, diagram_to_region(ish_example(), build_ish(Graph::complete(8))), naive_witness(ish_example())));
}

TEST(Dominant, BijectionPreservesCeilings)
{
    for (const auto& g : bijection_corpus()) {
        const auto shi = build_shi(g), ish = build_ish(g);
        for (const auto& p : dominant_bijection(g)) {
            const auto rs = diagram_to_region(p.shi, shi);
            const auto ri = diagram_to_region(p.ish, ish);
            EXPECT_TRUE(is_dominant(shi, rs));
            EXPECT_TRUE(is_dominant(ish, ri));
            EXPECT_EQ(static_cast<int>(ceilings(shi, rs).size()), p.ceilings);
            EXPECT_EQ(static_cast<int>(ceilings(ish, ri).size()), p.ceilings);
        }
        EXPECT_EQ(static_cast<long long>(dominant_bijection(g).size()), region_census(shi).dominant_total());
    }
}

TEST(Dominant, DoesNotPreserveDof)
{
    bool differs = false;
    for (const auto& p : dominant_bijection(Graph::complete(3))) differs = differs || shi_dof(p.shi) != ish_dof(p.ish);
    EXPECT_TRUE(differs);
}

TEST(Dominant, NarayanaAndBinomial)
{
    for (int n = 2; n <= 7; ++n) {
        std::map<int, long> full, chain;
        for (const auto& p : dominant_bijection(Graph::complete(n))) ++full[p.ceilings];
        for (const auto& p : dominant_bijection(Graph::chain(n))) ++chain[p.ceilings];
        for (int c = 0; c < n; ++c) {
            EXPECT_EQ(full[c], oracle::narayana(n, c + 1)) << n << " " << c;
            EXPECT_EQ(chain[c], binomial(n - 1, c)) << n << " " << c;
        }
    }
    std::map<int, long> k4;
    for (const auto& p : dominant_bijection(Graph::complete(4))) ++k4[p.ceilings];
    EXPECT_EQ(k4, (std::map<int, long>{{0, 1}, {1, 6}, {2, 6}, {3, 1}}));
    EXPECT_EQ(dominant_bijection(Graph::empty(5)).size(), 1U);
}

TEST(CeilingPartitionCounts, Examples)
{
    const Graph k3 = Graph::complete(3);
    EXPECT_EQ(count_by_ceiling_partition(k3, EndpointPair{3, {1}, {2}}), 3);
    EXPECT_EQ(count_by_ceiling_partition(k3, EndpointPair{3, {}, {}}), 6);
    EXPECT_EQ(count_by_ceiling_partition(k3, EndpointPair{3, {1, 2}, {2, 3}}), 1);
    for (auto e : {EndpointPair{3, {1}, {2}}, EndpointPair{3, {1}, {3}}, EndpointPair{3, {2}, {3}}}) {
        EXPECT_EQ(count_by_ceiling_partition_and_dof(k3, e, 1), 1);
        EXPECT_EQ(count_by_ceiling_partition_and_dof(k3, e, 2), 2);
        EXPECT_EQ(count_by_ceiling_partition_and_dof(k3, e, 3), 0);
    }
    EXPECT_EQ(count_by_ceiling_partition(Graph::chain(3), EndpointPair{3, {1}, {3}}), 0);
    EXPECT_EQ(count_by_ceiling_partition_and_dof(k3, EndpointPair{3, {}, {}}, 3), 6);
    EXPECT_EQ(count_by_ceiling_partition_and_dof(k3, EndpointPair{3, {}, {}}, 2), 0);
    EXPECT_THROW(count_by_ceiling_partition_and_dof(k3, EndpointPair{3, {}, {}}, 0), std::invalid_argument);
}

TEST(CeilingPartitionCounts, MatchGeometryOnFour)
{
    for (const auto& g : oracle::all_graphs(4))
        for (const auto kind : {ArrangementKind::shi, ArrangementKind::ish}) {
            const auto a = build(kind, g);
            std::map<std::pair<EndpointPair, int>, long> by_pd;
            std::map<EndpointPair, long> by_p;
            for (const auto& r : enumerate_regions(a)) {
                const auto e = region_ceiling_partition(a, ceilings(a, r));
                ++by_pd[{e, recession_dim(a, r)}];
                ++by_p[e];
            }
            for (const auto& p : enumerate_partitions(4)) {
                const auto e = p.to_endpoint();
                EXPECT_EQ(count_by_ceiling_partition(g, e), by_p[e]) << g.to_string() << " " << e.to_string();
                for (int d = 1; d <= 4; ++d) {
                    const std::pair<EndpointPair, int> key{e, d};
                    EXPECT_EQ(count_by_ceiling_partition_and_dof(g, e, d), by_pd[key])
                        << g.to_string() << " " << e.to_string() << " d=" << d;
                }
            }
        }
}

TEST(CeilingPartitionCounts, SumOverDofAndIshPlacement)
{
    for (int n = 2; n <= 5; ++n)
        for (const auto& g : oracle::random_graphs(n, 4, 606)) {
            std::map<EndpointPair, long> ish_diagrams;
            for_each_permutation(n, [&](const Permutation& w) {
                for (const auto& d : enumerate_ish_diagrams(g, w)) ++ish_diagrams[ish_ceiling_partition(d)];
            });
            for (const auto& p : enumerate_g_partitions(g)) {
                const auto e = p.to_endpoint();
                BigInt sum = 0;
                for (int d = 1; d <= n; ++d) sum += count_by_ceiling_partition_and_dof(g, e, d);
                EXPECT_EQ(sum, count_by_ceiling_partition(g, e));
                EXPECT_EQ(count_by_ceiling_partition(g, e), ish_diagrams[e]) << g.to_string() << " " << e.to_string();
            }
        }
}

TEST(LabelingCensus, MatchesGeometry)
{
    for (const auto& g : oracle::all_graphs(4)) {
        EXPECT_EQ(labeling_census(g, ArrangementKind::shi), region_census(build_shi(g))) << g.to_string();
        EXPECT_EQ(labeling_census(g, ArrangementKind::ish), region_census(build_ish(g))) << g.to_string();
    }
    EXPECT_EQ(labeling_census(Graph::complete(4), ArrangementKind::shi).total(), 125);
    const auto chain = labeling_census(Graph::chain(3), ArrangementKind::ish);
    EXPECT_EQ(chain.count(0, 3), 6);
    EXPECT_EQ(chain.count(1, 1), 2);
    EXPECT_EQ(chain.count(1, 2), 4);
    EXPECT_EQ(chain.count(2, 1), 1);
}

TEST(StirlingIdentity, HoldsExactly)
{
    const auto s3 = stirling_identity_sides(3);
    EXPECT_EQ(s3.lhs, 16);
    EXPECT_EQ(s3.rhs, 16);
    for (int n = 1; n <= 10; ++n) EXPECT_TRUE(stirling_identity_check(n)) << n;
    // Independent right-hand side from the Stirling recurrence.
    for (int n = 1; n <= 12; ++n) {
        BigInt rhs = 0;
        for (int k = 1; k <= n; ++k) rhs += oracle::stirling2(n, k) * factorial(n) / factorial(n - k + 1);
        EXPECT_EQ(rhs, ipow(BigInt(n + 1), static_cast<unsigned>(n - 1)));
    }
}
