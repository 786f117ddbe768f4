#pragma once

#include "arrangement.hpp"
#include "census.hpp"
#include "feasibility.hpp"
#include "guards.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace shiish {

/// A region as the strict sign of each hyperplane (+1: a.x > b, -1: a.x < b),
/// aligned with the arrangement's hyperplane order, plus an interior point.
struct RegionCert {
    std::vector<int> signs;
    Point witness;

    std::string sign_string() const
    {
        std::string s;
        for (int v : signs) s += v > 0 ? '+' : '-';
        return s;
    }

    friend bool operator==(const RegionCert& x, const RegionCert& y) { return x.signs == y.signs; }
};

struct RegionStats {
    std::vector<std::size_t> walls;
    std::vector<std::size_t> ceilings;
    int dof = 0;
    bool dominant = false;
};

enum class FeasibilityBackend { automatic, simplex };

namespace detail {

inline std::vector<std::int64_t> widen(const std::vector<int>& a) { return {a.begin(), a.end()}; }

inline Constraint signed_constraint(const Hyperplane& h, int sign)
{
    return {widen(h.a), h.b, sign > 0 ? Relation::greater : Relation::less};
}

inline std::optional<Point> solve(const StrictSystem& s, FeasibilityBackend backend)
{
    if (backend == FeasibilityBackend::automatic) return feasible_strict(s);
    auto w = feasible_strict_lp(s);
    if (w && !satisfies(s, *w)) throw std::logic_error("simplex witness failed substitution");
    return w;
}

inline int side(const Hyperplane& h, const Point& x)
{
    const Rational v = dot(widen(h.a), x) - h.b;
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

} // namespace detail

/// The open region with the given signs, as a strict system. If `on` is set,
/// that hyperplane becomes an equality instead.
inline StrictSystem region_system(const Arrangement& a, const std::vector<int>& signs,
                                  std::optional<std::size_t> on = std::nullopt)
{
    StrictSystem s{a.n(), {}};
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (on && *on == i)
            s.constraints.push_back({detail::widen(a[i].a), a[i].b, Relation::equal});
        else
            s.constraints.push_back(detail::signed_constraint(a[i], signs[i]));
    }
    return s;
}

/// All regions, built by inserting hyperplanes in arrangement order and
/// splitting every region that meets both open sides of the new hyperplane.
inline std::vector<RegionCert> enumerate_regions(const Arrangement& a, const Guards& guards = {},
                                                 FeasibilityBackend backend = FeasibilityBackend::automatic)
{
    if (a.size() > guards.max_geometry_hyperplanes)
        throw guard_error("region enumeration limited to " + std::to_string(guards.max_geometry_hyperplanes) +
                          " hyperplanes (arrangement has " + std::to_string(a.size()) + ")");
    std::vector<RegionCert> regions{{{}, Point(static_cast<std::size_t>(a.n()), 0)}};
    for (std::size_t h = 0; h < a.size(); ++h) {
        std::vector<RegionCert> next;
        next.reserve(regions.size() * 2);
        for (auto& r : regions) {
            const int here = detail::side(a[h], r.witness);
            for (int s : {1, -1}) {
                if (s == here) {
                    RegionCert keep{r.signs, r.witness};
                    keep.signs.push_back(s);
                    next.push_back(std::move(keep));
                    continue;
                }
                auto signs = r.signs;
                signs.push_back(s);
                StrictSystem sys{a.n(), {}};
                for (std::size_t i = 0; i <= h; ++i) sys.constraints.push_back(detail::signed_constraint(a[i], signs[i]));
                if (auto w = detail::solve(sys, backend)) next.push_back({std::move(signs), std::move(*w)});
            }
        }
        regions = std::move(next);
    }
    return regions;
}

/// Hyperplanes spanning a codimension-one face of the closure: H is a wall
/// iff H together with the other strict signs is feasible.
inline std::vector<std::size_t> walls(const Arrangement& a, const RegionCert& r)
{
    std::vector<std::size_t> out;
    for (std::size_t h = 0; h < a.size(); ++h)
        if (feasible_strict(region_system(a, r.signs, h))) out.push_back(h);
    return out;
}

/// Walls not through the origin that have the region on the origin's side.
inline std::vector<std::size_t> ceilings(const Arrangement& a, const RegionCert& r,
                                         const std::vector<std::size_t>& region_walls)
{
    std::vector<std::size_t> out;
    for (auto h : region_walls) {
        const int b = a[h].b;
        if (b == 0) continue;
        const int origin_side = b > 0 ? -1 : 1;
        if (r.signs[h] == origin_side) out.push_back(h);
    }
    return out;
}

inline std::vector<std::size_t> ceilings(const Arrangement& a, const RegionCert& r)
{
    return ceilings(a, r, walls(a, r));
}

/// dim Rec(R), where Rec(R) = {v : a.v <= 0 for every a.x < b of R}.
inline int recession_dim(const Arrangement& a, const RegionCert& r)
{
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t h = 0; h < a.size(); ++h) {
        auto row = detail::widen(a[h].a);
        if (r.signs[h] > 0)
            for (auto& v : row) v = -v;
        rows.push_back(std::move(row));
    }
    return cone_dimension(a.n(), rows);
}

/// Whether the region lies in the cone x_1 > x_2 > ... > x_n.
inline bool is_dominant(const Arrangement& a, const RegionCert& r)
{
    for (int i = 1; i <= a.n(); ++i)
        for (int j = i + 1; j <= a.n(); ++j) {
            if (auto k = a.coxeter_index(i, j)) {
                const int expect = a[*k].a[static_cast<std::size_t>(i - 1)] == 1 ? 1 : -1;
                if (r.signs[*k] != expect) return false;
            } else {
                // No Coxeter hyperplane: the region avoids x_i < x_j entirely.
                StrictSystem s = region_system(a, r.signs);
                auto row = std::vector<std::int64_t>(static_cast<std::size_t>(a.n()), 0);
                row[static_cast<std::size_t>(i - 1)] = 1;
                row[static_cast<std::size_t>(j - 1)] = -1;
                s.constraints.push_back({row, 0, Relation::less});
                if (feasible_strict(s)) return false;
            }
        }
    return true;
}

inline RegionStats region_stats(const Arrangement& a, const RegionCert& r)
{
    RegionStats st;
    st.walls = walls(a, r);
    st.ceilings = ceilings(a, r, st.walls);
    st.dof = recession_dim(a, r);
    st.dominant = is_dominant(a, r);
    return st;
}

inline Census region_census(const Arrangement& a, const std::vector<RegionCert>& regions)
{
    Census c;
    for (const auto& r : regions) {
        const auto st = region_stats(a, r);
        c.add(static_cast<int>(st.ceilings.size()), st.dof, st.dominant);
    }
    return c;
}

inline Census region_census(const Arrangement& a, const Guards& guards = {})
{
    return region_census(a, enumerate_regions(a, guards));
}

} // namespace shiish
