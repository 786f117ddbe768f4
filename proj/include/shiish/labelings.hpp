#pragma once

#include "arrangement.hpp"
#include "census.hpp"
#include "geometry.hpp"
#include "partitions.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shiish {

/// One-line notation w(1)..w(n), values 1-based.
using Permutation = std::vector<int>;

inline Permutation identity_permutation(int n)
{
    Permutation w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return w;
}

/// positions[v] = w^{-1}(v), 1-based; index 0 unused.
inline std::vector<int> positions(const Permutation& w)
{
    std::vector<int> pos(w.size() + 1, 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const int v = w[i];
        if (v < 1 || v > static_cast<int>(w.size()) || pos[static_cast<std::size_t>(v)] != 0)
            throw std::invalid_argument("not a permutation");
        pos[static_cast<std::size_t>(v)] = static_cast<int>(i) + 1;
    }
    return pos;
}

template <typename Visitor>
void for_each_permutation(int n, Visitor&& visit)
{
    Permutation w = identity_permutation(n);
    do {
        visit(static_cast<const Permutation&>(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

inline std::string permutation_string(const Permutation& w)
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i && w.size() >= 10) s += ",";
        s += std::to_string(w[i]);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Posets of hyperplanes meeting the cone wC.

/// Phi+(G, w): position pairs (i, j), i < j, with w(i) < w(j) and
/// {w(i), w(j)} in G, standing for x_{w(i)} - x_{w(j)} = 1. Ordered by
/// nesting: (i', j') <= (i, j) iff i <= i' and j' <= j.
struct ShiPoset {
    Permutation w;
    std::vector<Arc> elements;

    static bool leq(const Arc& x, const Arc& y) { return y.first <= x.first && x.second <= y.second; }
};

/// Psi+(G, w): pairs (i, j) for the hyperplanes x_1 - x_j = i with ij in G
/// and j right of 1 in w. Ordered by (i, j) <= (i', j') iff i <= i' and
/// w^{-1}(j') <= w^{-1}(j): up in level, left in position.
struct IshPoset {
    Permutation w;
    std::vector<int> pos;
    std::vector<std::pair<int, int>> elements;

    bool leq(const std::pair<int, int>& x, const std::pair<int, int>& y) const
    {
        return x.first <= y.first && pos[static_cast<std::size_t>(y.second)] <= pos[static_cast<std::size_t>(x.second)];
    }
};

inline ShiPoset shi_poset(const Graph& g, const Permutation& w)
{
    const int n = g.n();
    if (static_cast<int>(w.size()) != n) throw std::invalid_argument("permutation size differs from graph");
    positions(w);
    ShiPoset p{w, {}};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const int a = w[static_cast<std::size_t>(i - 1)], b = w[static_cast<std::size_t>(j - 1)];
            if (a < b && g.has_edge(a, b)) p.elements.emplace_back(i, j);
        }
    return p;
}

inline IshPoset ish_poset(const Graph& g, const Permutation& w)
{
    const int n = g.n();
    if (static_cast<int>(w.size()) != n) throw std::invalid_argument("permutation size differs from graph");
    IshPoset p{w, positions(w), {}};
    for (auto [i, j] : g.edges())
        if (p.pos[1] < p.pos[static_cast<std::size_t>(j)]) p.elements.emplace_back(i, j);
    std::sort(p.elements.begin(), p.elements.end());
    return p;
}

namespace detail {

/// Every antichain of `elems` under `leq`, each as a sorted subsequence.
template <typename T, typename Leq>
std::vector<std::vector<T>> antichains(const std::vector<T>& elems, Leq leq)
{
    std::vector<std::vector<T>> out;
    std::vector<T> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        out.push_back(cur);
        for (std::size_t k = start; k < elems.size(); ++k) {
            bool ok = true;
            for (const auto& c : cur)
                if (leq(c, elems[k]) || leq(elems[k], c)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(elems[k]);
            self(self, k + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Ceiling diagrams.

/// (w, pi): pi a nonnesting partition of positions whose arcs (i, j) have
/// w(i) < w(j) and {w(i), w(j)} in G.
struct ShiCeilingDiagram {
    Permutation w;
    SetPartition pi;

    int n() const { return static_cast<int>(w.size()); }

    std::string violation(const Graph& g) const
    {
        if (pi.n() != n() || g.n() != n()) return "size mismatch";
        if (!pi.is_nonnesting()) return "pi is nesting";
        for (auto [i, j] : pi.arcs()) {
            const int a = w[static_cast<std::size_t>(i - 1)], b = w[static_cast<std::size_t>(j - 1)];
            if (a > b) return "arc " + std::to_string(i) + std::to_string(j) + " is an inversion of w";
            if (!g.has_edge(a, b)) return "arc " + std::to_string(i) + std::to_string(j) + " maps outside G";
        }
        return {};
    }

    friend bool operator==(const ShiCeilingDiagram&, const ShiCeilingDiagram&) = default;
};

/// (w, eps): eps_i circles above position i.
struct IshCeilingDiagram {
    Permutation w;
    std::vector<int> eps;

    int n() const { return static_cast<int>(w.size()); }

    std::string violation(const Graph& g) const
    {
        if (static_cast<int>(eps.size()) != n() || g.n() != n()) return "size mismatch";
        const auto pos = positions(w);
        int last = 0;
        for (int i = 1; i <= n(); ++i) {
            const int e = eps[static_cast<std::size_t>(i - 1)], wi = w[static_cast<std::size_t>(i - 1)];
            if (e < 0 || e >= wi) return "eps_" + std::to_string(i) + " out of range";
            if (e == 0) continue;
            if (i <= pos[1]) return "eps_" + std::to_string(i) + " nonzero left of 1";
            if (!g.has_edge(e, wi)) return "edge " + std::to_string(e) + std::to_string(wi) + " not in G";
            if (e <= last) return "nonzero entries do not increase";
            last = e;
        }
        return {};
    }

    /// Ceilings as (level i, vertex j) for x_1 - x_j = i.
    std::vector<std::pair<int, int>> ceilings() const
    {
        std::vector<std::pair<int, int>> out;
        for (std::size_t m = 0; m < eps.size(); ++m)
            if (eps[m] != 0) out.emplace_back(eps[m], w[m]);
        return out;
    }

    friend bool operator==(const IshCeilingDiagram&, const IshCeilingDiagram&) = default;
};

/// One diagram per order ideal of Phi+(G, w); the arcs of pi are the ideal's
/// maximal elements. Sorted by arc list.
inline std::vector<ShiCeilingDiagram> enumerate_shi_diagrams(const Graph& g, const Permutation& w)
{
    const auto poset = shi_poset(g, w);
    std::vector<ShiCeilingDiagram> out;
    for (auto& chain : detail::antichains(poset.elements, ShiPoset::leq))
        out.push_back({w, SetPartition::from_arcs(g.n(), chain)});
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.pi.arcs() < y.pi.arcs(); });
    return out;
}

/// One diagram per order filter of Psi+(G, w); the nonzero cells of eps are
/// the filter's minimal elements. Sorted by eps.
inline std::vector<IshCeilingDiagram> enumerate_ish_diagrams(const Graph& g, const Permutation& w)
{
    const auto poset = ish_poset(g, w);
    std::vector<IshCeilingDiagram> out;
    auto leq = [&](const auto& x, const auto& y) { return poset.leq(x, y); };
    for (auto& anti : detail::antichains(poset.elements, leq)) {
        IshCeilingDiagram d{w, std::vector<int>(w.size(), 0)};
        for (auto [level, j] : anti) d.eps[static_cast<std::size_t>(poset.pos[static_cast<std::size_t>(j)] - 1)] = level;
        out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.eps < y.eps; });
    return out;
}

/// Degrees of freedom of a Shi region: connected components of pi.
inline int shi_dof(const ShiCeilingDiagram& d) { return d.pi.connected_components(); }

/// Degrees of freedom of an Ish region: n - k + w^{-1}(1), k the last
/// position with eps_k != 0 (k = w^{-1}(1) when eps = 0).
inline int ish_dof(const IshCeilingDiagram& d)
{
    const int p1 = positions(d.w)[1];
    int k = p1;
    for (int i = 1; i <= d.n(); ++i)
        if (d.eps[static_cast<std::size_t>(i - 1)] != 0) k = i;
    return d.n() - k + p1;
}

/// w . pi in endpoint notation.
inline EndpointPair shi_ceiling_partition(const ShiCeilingDiagram& d) { return d.pi.relabel(d.w).to_endpoint(); }

/// alpha = nonzero entries of eps left to right, beta = the symbols above
/// which they sit.
inline EndpointPair ish_ceiling_partition(const IshCeilingDiagram& d)
{
    EndpointPair e{d.n(), {}, {}};
    for (auto [level, j] : d.ceilings()) {
        e.alpha.push_back(level);
        e.beta.push_back(j);
    }
    return e;
}

// ---------------------------------------------------------------------------
// Diagrams <-> regions.

namespace detail {

inline void require_kind(const Arrangement& a, ArrangementKind kind)
{
    if (a.kind() != kind || !a.graph()) throw std::invalid_argument("arrangement is not " + to_string(kind) + "(G)");
}

inline int coxeter_sign(const Hyperplane& h, const std::vector<int>& pos)
{
    const auto [u, v] = *h.difference_form();
    return pos[static_cast<std::size_t>(u + 1)] < pos[static_cast<std::size_t>(v + 1)] ? 1 : -1;
}

inline RegionCert realize(const Arrangement& a, std::vector<int> signs)
{
    auto w = feasible_strict(region_system(a, signs));
    if (!w) throw std::logic_error("diagram does not label a region");
    return {std::move(signs), std::move(*w)};
}

} // namespace detail

inline RegionCert diagram_to_region(const ShiCeilingDiagram& d, const Arrangement& a)
{
    detail::require_kind(a, ArrangementKind::shi);
    if (auto why = d.violation(*a.graph()); !why.empty()) throw std::invalid_argument("invalid Shi diagram: " + why);
    const auto pos = positions(d.w);
    const auto arcs = d.pi.arcs();
    std::vector<int> signs;
    for (const auto& h : a.hyperplanes()) {
        if (!h.edge) {
            signs.push_back(detail::coxeter_sign(h, pos));
            continue;
        }
        const int i = pos[static_cast<std::size_t>(h.edge->first)], j = pos[static_cast<std::size_t>(h.edge->second)];
        if (i > j) {
            signs.push_back(-1);
            continue;
        }
        // Below the hyperplane iff (i, j) lies in the ideal generated by the arcs.
        const bool below = std::any_of(arcs.begin(), arcs.end(), [&](const Arc& c) { return ShiPoset::leq({i, j}, c); });
        signs.push_back(below ? -1 : 1);
    }
    return detail::realize(a, std::move(signs));
}

inline RegionCert diagram_to_region(const IshCeilingDiagram& d, const Arrangement& a)
{
    detail::require_kind(a, ArrangementKind::ish);
    if (auto why = d.violation(*a.graph()); !why.empty()) throw std::invalid_argument("invalid Ish diagram: " + why);
    const auto pos = positions(d.w);
    const auto ceil = d.ceilings();
    std::vector<int> signs;
    for (const auto& h : a.hyperplanes()) {
        if (!h.edge) {
            signs.push_back(detail::coxeter_sign(h, pos));
            continue;
        }
        const auto [level, j] = *h.edge;
        if (pos[static_cast<std::size_t>(j)] < pos[1]) {
            signs.push_back(-1);
            continue;
        }
        // Below iff (level, j) lies in the filter generated by the ceilings.
        const bool below = std::any_of(ceil.begin(), ceil.end(), [&](const auto& c) {
            return c.first <= level && pos[static_cast<std::size_t>(j)] <= pos[static_cast<std::size_t>(c.second)];
        });
        signs.push_back(below ? -1 : 1);
    }
    return detail::realize(a, std::move(signs));
}

/// The cone wC containing the region: w lists coordinates in decreasing order.
inline Permutation region_permutation(const RegionCert& r)
{
    const int n = static_cast<int>(r.witness.size());
    Permutation w = identity_permutation(n);
    std::sort(w.begin(), w.end(), [&](int x, int y) {
        return r.witness[static_cast<std::size_t>(x - 1)] > r.witness[static_cast<std::size_t>(y - 1)];
    });
    for (int i = 1; i < n; ++i)
        if (r.witness[static_cast<std::size_t>(w[static_cast<std::size_t>(i - 1)] - 1)] ==
            r.witness[static_cast<std::size_t>(w[static_cast<std::size_t>(i)] - 1)])
            throw std::invalid_argument("witness has tied coordinates");
    return w;
}

inline ShiCeilingDiagram region_to_shi_diagram(const RegionCert& r, const Arrangement& a,
                                               const std::vector<std::size_t>& region_ceilings)
{
    detail::require_kind(a, ArrangementKind::shi);
    const Permutation w = region_permutation(r);
    const auto pos = positions(w);
    std::vector<Arc> arcs;
    for (auto h : region_ceilings) {
        const auto [u, v] = *a[h].edge;
        arcs.emplace_back(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
    }
    std::sort(arcs.begin(), arcs.end());
    ShiCeilingDiagram d{w, SetPartition::from_arcs(a.n(), arcs)};
    if (auto why = d.violation(*a.graph()); !why.empty()) throw std::logic_error("ceilings do not form a Shi diagram: " + why);
    return d;
}

inline ShiCeilingDiagram region_to_shi_diagram(const RegionCert& r, const Arrangement& a)
{
    return region_to_shi_diagram(r, a, ceilings(a, r));
}

inline IshCeilingDiagram region_to_ish_diagram(const RegionCert& r, const Arrangement& a,
                                               const std::vector<std::size_t>& region_ceilings)
{
    detail::require_kind(a, ArrangementKind::ish);
    const Permutation w = region_permutation(r);
    const auto pos = positions(w);
    IshCeilingDiagram d{w, std::vector<int>(w.size(), 0)};
    for (auto h : region_ceilings) {
        const auto [level, j] = *a[h].edge;
        d.eps[static_cast<std::size_t>(pos[static_cast<std::size_t>(j)] - 1)] = level;
    }
    if (auto why = d.violation(*a.graph()); !why.empty()) throw std::logic_error("ceilings do not form an Ish diagram: " + why);
    return d;
}

inline IshCeilingDiagram region_to_ish_diagram(const RegionCert& r, const Arrangement& a)
{
    return region_to_ish_diagram(r, a, ceilings(a, r));
}

/// Ceiling partition read off geometric ceilings: each Shi ceiling
/// x_i - x_j = 1 and each Ish ceiling x_1 - x_j = i contributes the arc ij.
inline EndpointPair region_ceiling_partition(const Arrangement& a, const std::vector<std::size_t>& region_ceilings)
{
    std::vector<Arc> arcs;
    for (auto h : region_ceilings) {
        if (!a[h].edge) throw std::invalid_argument("ceiling without a graph edge");
        arcs.push_back(*a[h].edge);
    }
    std::sort(arcs.begin(), arcs.end());
    EndpointPair e{a.n(), {}, {}};
    for (auto [i, j] : arcs) {
        e.alpha.push_back(i);
        e.beta.push_back(j);
    }
    if (auto why = e.violation(); !why.empty()) throw std::logic_error("ceilings do not form a partition: " + why);
    return e;
}

/// A point in the closure of the Ish region labeled by d. Coordinates left
/// of 1 (in w) are 0; moving right, x_1 - x_{w(m)} is the running maximum of
/// the largest level in column w(m) that lies outside the filter.
inline Point ish_filter_witness(const IshCeilingDiagram& d, const Graph& g)
{
    const int n = d.n();
    const auto pos = positions(d.w);
    const auto ceil = d.ceilings();
    Point x(static_cast<std::size_t>(n), 0);
    int running = 0;
    for (int m = pos[1] + 1; m <= n; ++m) {
        const int j = d.w[static_cast<std::size_t>(m - 1)];
        int lower = 0;
        for (int level = 1; level < j; ++level) {
            if (!g.has_edge(level, j)) continue;
            const bool in_filter = std::any_of(ceil.begin(), ceil.end(), [&](const auto& c) {
                return c.first <= level && m <= pos[static_cast<std::size_t>(c.second)];
            });
            if (!in_filter) lower = std::max(lower, level);
        }
        running = std::max(running, lower);
        x[static_cast<std::size_t>(j - 1)] = -running;
    }
    return x;
}

// ---------------------------------------------------------------------------
// Dominant regions.

struct DominantPair {
    ShiCeilingDiagram shi;
    IshCeilingDiagram ish;
    int ceilings = 0;
};

/// For w = 1, Phi+(G, 1) and Psi+(G, 1) are the same set of pairs ij in G
/// with opposite orders, so ideals and filters share their antichains; each
/// antichain labels one dominant Shi region and one dominant Ish region.
inline std::vector<DominantPair> dominant_bijection(const Graph& g)
{
    const int n = g.n();
    const Permutation id = identity_permutation(n);
    std::vector<DominantPair> out;
    for (auto& anti : detail::antichains(shi_poset(g, id).elements, ShiPoset::leq)) {
        DominantPair p{{id, SetPartition::from_arcs(n, anti)}, {id, std::vector<int>(static_cast<std::size_t>(n), 0)},
                       static_cast<int>(anti.size())};
        for (auto [i, j] : anti) p.ish.eps[static_cast<std::size_t>(j - 1)] = i;
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.shi.pi.arcs() < y.shi.pi.arcs(); });
    return out;
}

// ---------------------------------------------------------------------------
// Counting by ceiling partition.

namespace detail {

inline bool arcs_in_graph(const Graph& g, const EndpointPair& e)
{
    if (auto why = e.violation(); !why.empty()) throw std::invalid_argument("invalid endpoint pair: " + why);
    if (e.n != g.n()) throw std::invalid_argument("endpoint pair and graph differ in n");
    for (auto [a, b] : e.arcs())
        if (!g.has_edge(a, b)) return false;
    return true;
}

} // namespace detail

/// Regions of Shi(G) (equivalently Ish(G)) with ceiling partition e:
/// n!/(n-k+1)! with k = n - |e| blocks, or 0 if some arc is not in G.
inline BigInt count_by_ceiling_partition(const Graph& g, const EndpointPair& e)
{
    if (!detail::arcs_in_graph(g, e)) return 0;
    const int n = g.n(), k = n - static_cast<int>(e.length());
    return factorial(n) / factorial(n - k + 1);
}

/// ... and with d degrees of freedom: d(n-d-1)!(k-1)! / ((n-k-1)!(k-d)!).
/// With no arcs (k = n) every region has n degrees of freedom.
inline BigInt count_by_ceiling_partition_and_dof(const Graph& g, const EndpointPair& e, int d)
{
    if (d < 1) throw std::invalid_argument("d must be positive");
    if (!detail::arcs_in_graph(g, e)) return 0;
    const int n = g.n(), k = n - static_cast<int>(e.length());
    if (d > k) return 0;
    if (k == n) return d == n ? factorial(n) : BigInt(0);
    return BigInt(d) * factorial(n - d - 1) * factorial(k - 1) / (factorial(n - k - 1) * factorial(k - d));
}

/// (c, d) census of Shi(G) or Ish(G) from ceiling diagrams alone.
inline Census labeling_census(const Graph& g, ArrangementKind kind)
{
    if (kind != ArrangementKind::shi && kind != ArrangementKind::ish)
        throw std::invalid_argument("labeling census needs shi or ish");
    Census c;
    const Permutation id = identity_permutation(g.n());
    for_each_permutation(g.n(), [&](const Permutation& w) {
        const bool dominant = (w == id);
        if (kind == ArrangementKind::shi) {
            for (const auto& d : enumerate_shi_diagrams(g, w))
                c.add(static_cast<int>(d.pi.arcs().size()), shi_dof(d), dominant);
        } else {
            for (const auto& d : enumerate_ish_diagrams(g, w))
                c.add(static_cast<int>(d.ceilings().size()), ish_dof(d), dominant);
        }
    });
    return c;
}

struct IdentitySides {
    BigInt lhs;  // (n+1)^(n-1)
    BigInt rhs;  // sum_k Stir(n,k) n!/(n-k+1)!
};

inline IdentitySides stirling_identity_sides(int n)
{
    if (n < 1) throw std::invalid_argument("n must be positive");
    IdentitySides s{ipow(BigInt(n + 1), static_cast<unsigned>(n - 1)), 0};
    const auto stir = g_stirling_numbers(Graph::complete(n));
    for (int k = 1; k <= n; ++k) s.rhs += stir[static_cast<std::size_t>(k)] * factorial(n) / factorial(n - k + 1);
    return s;
}

inline bool stirling_identity_check(int n)
{
    const auto s = stirling_identity_sides(n);
    return s.lhs == s.rhs;
}

} // namespace shiish
