#pragma once

#include "numeric.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace shiish {

enum class Relation { less, greater, equal };

/// a.x (relation) b with integer data.
struct Constraint {
    std::vector<std::int64_t> a;
    std::int64_t b = 0;
    Relation rel = Relation::less;
};

/// A conjunction of strict inequalities and equalities in n variables.
struct StrictSystem {
    int n = 0;
    std::vector<Constraint> constraints;

    void add(std::vector<std::int64_t> a, std::int64_t b, Relation rel)
    {
        if (static_cast<int>(a.size()) != n) throw std::invalid_argument("constraint dimension mismatch");
        if (std::all_of(a.begin(), a.end(), [](auto c) { return c == 0; }))
            throw std::invalid_argument("constraint with zero normal");
        constraints.push_back({std::move(a), b, rel});
    }
};

using Point = std::vector<Rational>;

inline Rational dot(const std::vector<std::int64_t>& a, const Point& x)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += Rational(a[i]) * x[i];
    return s;
}

/// Exact substitution check.
inline bool satisfies(const StrictSystem& s, const Point& x)
{
    if (static_cast<int>(x.size()) != s.n) return false;
    for (const auto& c : s.constraints) {
        const Rational lhs = dot(c.a, x);
        switch (c.rel) {
        case Relation::less:
            if (!(lhs < c.b)) return false;
            break;
        case Relation::greater:
            if (!(lhs > c.b)) return false;
            break;
        case Relation::equal:
            if (lhs != c.b) return false;
            break;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Exact simplex.

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    std::vector<Rational> x;
    Rational value = 0;
};

/// Row relation for lp_maximize: sense < 0 means <=, 0 means =, > 0 means >=.
struct LpRow {
    std::vector<Rational> a;
    int sense = -1;
    Rational b = 0;
};

namespace detail {

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : t_(rows, std::vector<Rational>(cols + 1, 0)), basis_(rows, 0) {}

    std::vector<Rational>& row(std::size_t i) { return t_[i]; }
    std::size_t rows() const { return t_.size(); }
    std::size_t rhs() const { return t_.empty() ? 0 : t_[0].size() - 1; }
    std::vector<std::size_t>& basis() { return basis_; }

    void pivot(std::size_t r, std::size_t c, std::vector<Rational>& obj)
    {
        auto& pr = t_[r];
        const Rational inv = 1 / pr[c];
        for (auto& v : pr) v *= inv;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (i == r || t_[i][c] == 0) continue;
            const Rational f = t_[i][c];
            for (std::size_t k = 0; k < pr.size(); ++k)
                if (pr[k] != 0) t_[i][k] -= f * pr[k];
        }
        if (obj[c] != 0) {
            const Rational f = obj[c];
            for (std::size_t k = 0; k < pr.size(); ++k)
                if (pr[k] != 0) obj[k] -= f * pr[k];
        }
        basis_[r] = c;
    }

    /// Maximizes with reduced-cost row `obj` (obj[j] > 0 means column j
    /// improves) over columns < `usable`. Bland's rule. Returns false if unbounded.
    bool run(std::vector<Rational>& obj, std::size_t usable)
    {
        while (true) {
            std::size_t enter = usable;
            for (std::size_t j = 0; j < usable; ++j)
                if (obj[j] > 0) {
                    enter = j;
                    break;
                }
            if (enter == usable) return true;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < t_.size(); ++i) {
                if (t_[i][enter] <= 0) continue;
                const Rational ratio = t_[i][rhs()] / t_[i][enter];
                if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) return false;
            pivot(*leave, enter, obj);
        }
    }

    void erase_row(std::size_t r)
    {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

private:
    std::vector<std::vector<Rational>> t_;
    std::vector<std::size_t> basis_;
};

} // namespace detail

/// maximize c.z subject to the rows and z >= 0, by two-phase simplex over Q.
inline LpResult lp_maximize(std::vector<LpRow> rows, const std::vector<Rational>& c)
{
    const std::size_t nv = c.size();
    for (auto& r : rows) {
        if (r.a.size() != nv) throw std::invalid_argument("lp row width mismatch");
        if (r.b < 0) {
            for (auto& v : r.a) v = -v;
            r.b = -r.b;
            r.sense = -r.sense;
        }
    }
    std::size_t slack_cols = 0, art_cols = 0;
    for (const auto& r : rows) {
        if (r.sense != 0) ++slack_cols;
        if (r.sense >= 0) ++art_cols;
    }
    const std::size_t art_begin = nv + slack_cols, cols = art_begin + art_cols;
    detail::Tableau tab(rows.size(), cols);
    std::size_t s = nv, a = art_begin;
    std::vector<bool> is_art_row(rows.size(), false);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto& tr = tab.row(i);
        for (std::size_t j = 0; j < nv; ++j) tr[j] = rows[i].a[j];
        tr[cols] = rows[i].b;
        if (rows[i].sense < 0) {
            tr[s] = 1;
            tab.basis()[i] = s++;
        } else {
            if (rows[i].sense > 0) tr[s++] = -1;
            tr[a] = 1;
            tab.basis()[i] = a++;
            is_art_row[i] = true;
        }
    }

    // Phase 1: maximize -sum(artificials).
    std::vector<Rational> obj(cols + 1, 0);
    for (std::size_t j = art_begin; j < cols; ++j) obj[j] = -1;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (is_art_row[i])
            for (std::size_t k = 0; k <= cols; ++k) obj[k] += tab.row(i)[k];
    tab.run(obj, cols);
    if (obj[cols] != 0) return {LpStatus::infeasible, {}, 0};

    // Drive zero-valued artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tab.rows();) {
        if (tab.basis()[i] < art_begin) {
            ++i;
            continue;
        }
        std::optional<std::size_t> col;
        for (std::size_t j = 0; j < art_begin; ++j)
            if (tab.row(i)[j] != 0) {
                col = j;
                break;
            }
        if (col) {
            tab.pivot(i, *col, obj);
            ++i;
        } else {
            tab.erase_row(i);
        }
    }

    // Phase 2.
    std::fill(obj.begin(), obj.end(), Rational(0));
    for (std::size_t j = 0; j < nv; ++j) obj[j] = c[j];
    for (std::size_t i = 0; i < tab.rows(); ++i) {
        const std::size_t bj = tab.basis()[i];
        if (bj < nv && c[bj] != 0) {
            const Rational f = c[bj];
            for (std::size_t k = 0; k <= cols; ++k) obj[k] -= f * tab.row(i)[k];
        }
    }
    if (!tab.run(obj, art_begin)) return {LpStatus::unbounded, {}, 0};

    LpResult res{LpStatus::optimal, std::vector<Rational>(nv, 0), 0};
    for (std::size_t i = 0; i < tab.rows(); ++i)
        if (tab.basis()[i] < nv) res.x[tab.basis()[i]] = tab.row(i)[cols];
    for (std::size_t j = 0; j < nv; ++j) res.value += c[j] * res.x[j];
    return res;
}

namespace detail {

/// Rows over the split variables (x+, x-) for free variables x.
inline std::vector<Rational> split_free(const std::vector<std::int64_t>& a, std::size_t extra = 0)
{
    std::vector<Rational> r(2 * a.size() + extra, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[2 * i] = a[i];
        r[2 * i + 1] = -a[i];
    }
    return r;
}

inline Point join_free(const std::vector<Rational>& z, std::size_t n)
{
    Point x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = z[2 * i] - z[2 * i + 1];
    return x;
}

} // namespace detail

/// Strict feasibility by maximizing a margin t <= 1 subject to
/// a.x + t <= b for "<" rows, -a.x + t <= -b for ">" rows and a.x = b for
/// "=" rows. Strictly feasible iff the optimum has t > 0.
inline std::optional<Point> feasible_strict_lp(const StrictSystem& s)
{
    const auto n = static_cast<std::size_t>(s.n);
    const std::size_t t_plus = 2 * n, t_minus = 2 * n + 1;
    std::vector<LpRow> rows;
    for (const auto& c : s.constraints) {
        LpRow r{detail::split_free(c.a, 2), -1, Rational(c.b)};
        if (c.rel == Relation::equal) {
            r.sense = 0;
        } else {
            if (c.rel == Relation::greater) {
                for (auto& v : r.a) v = -v;
                r.b = -r.b;
            }
            r.a[t_plus] = 1;
            r.a[t_minus] = -1;
        }
        rows.push_back(std::move(r));
    }
    LpRow cap{std::vector<Rational>(2 * n + 2, 0), -1, 1};
    cap.a[t_plus] = 1;
    cap.a[t_minus] = -1;
    rows.push_back(std::move(cap));
    std::vector<Rational> c(2 * n + 2, 0);
    c[t_plus] = 1;
    c[t_minus] = -1;
    const auto res = lp_maximize(std::move(rows), c);
    if (res.status != LpStatus::optimal || res.value <= 0) return std::nullopt;
    return detail::join_free(res.x, n);
}

// ---------------------------------------------------------------------------
// Difference constraints x_u - x_v (< or <=) c, solved as shortest paths with
// weights in the ordered group Z + Z*eps (a strict edge weighs c - eps).

struct DifferenceEdge {
    int u = 0, v = 0;  // 0-based: x_u - x_v <= c (or < c)
    std::int64_t c = 0;
    bool strict = false;
};

namespace detail {

inline std::optional<std::pair<int, int>> unit_difference(const std::vector<std::int64_t>& a)
{
    int plus = -1, minus = -1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (a[i] == 1 && plus < 0)
            plus = static_cast<int>(i);
        else if (a[i] == -1 && minus < 0)
            minus = static_cast<int>(i);
        else
            return std::nullopt;
    }
    if (plus < 0 || minus < 0) return std::nullopt;
    return std::pair{plus, minus};
}

} // namespace detail

/// The system as difference edges, or empty if some normal is not e_u - e_v.
inline std::optional<std::vector<DifferenceEdge>> as_difference_system(const StrictSystem& s)
{
    std::vector<DifferenceEdge> edges;
    for (const auto& c : s.constraints) {
        auto uv = detail::unit_difference(c.a);
        if (!uv) return std::nullopt;
        auto [u, v] = *uv;
        switch (c.rel) {
        case Relation::less: edges.push_back({u, v, c.b, true}); break;
        case Relation::greater: edges.push_back({v, u, -c.b, true}); break;
        case Relation::equal:
            edges.push_back({u, v, c.b, false});
            edges.push_back({v, u, -c.b, false});
            break;
        }
    }
    return edges;
}

/// Bellman-Ford over Z + Z*eps; returns a rational point or nothing when a
/// cycle of negative (or zero-with-a-strict-edge) weight exists.
inline std::optional<Point> solve_difference_system(int n, const std::vector<DifferenceEdge>& edges)
{
    using W = std::pair<std::int64_t, std::int64_t>;  // value + eps * second, ordered lexicographically
    std::vector<W> dist(static_cast<std::size_t>(n), W{0, 0});
    auto relax_all = [&] {
        bool changed = false;
        for (const auto& e : edges) {
            const W& dv = dist[static_cast<std::size_t>(e.v)];
            const W cand{dv.first + e.c, dv.second - (e.strict ? 1 : 0)};
            if (cand < dist[static_cast<std::size_t>(e.u)]) {
                dist[static_cast<std::size_t>(e.u)] = cand;
                changed = true;
            }
        }
        return changed;
    };
    bool changed = true;
    for (int it = 0; it < n && changed; ++it) changed = relax_all();
    if (changed && relax_all()) return std::nullopt;

    Rational eps = 1;
    for (const auto& e : edges) {
        const auto& du = dist[static_cast<std::size_t>(e.u)];
        const auto& dv = dist[static_cast<std::size_t>(e.v)];
        const std::int64_t gap = e.c - (du.first - dv.first);
        const std::int64_t k = du.second - dv.second + (e.strict ? 1 : 0);
        if (gap > 0 && k > 0) eps = std::min(eps, Rational(gap, 2 * k));
    }
    Point x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& d = dist[static_cast<std::size_t>(i)];
        x[static_cast<std::size_t>(i)] = Rational(d.first) + Rational(d.second) * eps;
    }
    return x;
}

inline std::optional<Point> feasible_strict_difference(const StrictSystem& s)
{
    auto edges = as_difference_system(s);
    if (!edges) throw std::invalid_argument("system is not in difference form");
    return solve_difference_system(s.n, *edges);
}

/// Exact strict feasibility with a rational witness. Systems whose normals
/// are all of the form e_u - e_v go through the shortest-path solver; anything
/// else through the simplex. Every witness is checked by substitution.
inline std::optional<Point> feasible_strict(const StrictSystem& s)
{
    std::optional<Point> w;
    if (auto edges = as_difference_system(s))
        w = solve_difference_system(s.n, *edges);
    else
        w = feasible_strict_lp(s);
    if (w && !satisfies(s, *w)) throw std::logic_error("feasibility witness failed substitution");
    return w;
}

// ---------------------------------------------------------------------------
// Polyhedral cones {v : r.v <= 0 for every row r}.

/// Dimension via implicit equalities: row i is an implicit equality iff
/// {R v <= 0, r_i.v <= -1} is infeasible; dim = n - rank(implicit rows).
inline int cone_dimension_lp(int n, const std::vector<std::vector<std::int64_t>>& rows)
{
    std::vector<std::vector<std::int64_t>> implicit;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<LpRow> lp;
        for (const auto& r : rows) lp.push_back({detail::split_free(r), -1, 0});
        lp.push_back({detail::split_free(rows[i]), -1, -1});
        const auto res = lp_maximize(std::move(lp), std::vector<Rational>(2 * static_cast<std::size_t>(n), 0));
        if (res.status == LpStatus::infeasible) implicit.push_back(rows[i]);
    }
    if (implicit.empty()) return n;
    return n - static_cast<int>(matrix_rank(to_rational(implicit)));
}

/// Dimension of a cone cut out by rows v_u - v_v <= 0: the number of strongly
/// connected components of the digraph u -> v.
inline int cone_dimension_difference(int n, const std::vector<std::pair<int, int>>& le_pairs)
{
    // reach[u][v]: v_u <= v_v is implied.
    std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i) reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    for (auto [u, v] : le_pairs) reach[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    for (std::size_t k = 0; k < reach.size(); ++k)
        for (std::size_t i = 0; i < reach.size(); ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < reach.size(); ++j)
                    if (reach[k][j]) reach[i][j] = true;
    int components = 0;
    for (std::size_t i = 0; i < reach.size(); ++i) {
        bool leader = true;
        for (std::size_t j = 0; j < i; ++j)
            if (reach[i][j] && reach[j][i]) {
                leader = false;
                break;
            }
        components += leader ? 1 : 0;
    }
    return components;
}

inline int cone_dimension(int n, const std::vector<std::vector<std::int64_t>>& rows)
{
    std::vector<std::pair<int, int>> pairs;
    for (const auto& r : rows) {
        auto uv = detail::unit_difference(r);
        if (!uv) return cone_dimension_lp(n, rows);
        pairs.push_back(*uv);
    }
    return cone_dimension_difference(n, pairs);
}

} // namespace shiish
