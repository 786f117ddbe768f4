#pragma once

#include "graph.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shiish {

/// The affine hyperplane a.x = b. `edge` records the graph edge ij a Shi or
/// Ish hyperplane was built from (empty for Coxeter and custom hyperplanes).
struct Hyperplane {
    std::vector<int> a;
    int b = 0;
    std::optional<Edge> edge;

    int dim() const noexcept { return static_cast<int>(a.size()); }

    /// Positions (0-based) of the +1 and -1 coefficients when the normal is
    /// e_u - e_v; empty otherwise.
    std::optional<std::pair<int, int>> difference_form() const
    {
        int plus = -1, minus = -1;
        for (int i = 0; i < dim(); ++i) {
            const int c = a[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            if (c == 1 && plus < 0)
                plus = i;
            else if (c == -1 && minus < 0)
                minus = i;
            else
                return std::nullopt;
        }
        if (plus < 0 || minus < 0) return std::nullopt;
        return std::pair{plus, minus};
    }

    /// Human-readable equation, e.g. "x1 - x3 = 2".
    std::string to_string() const
    {
        std::string s;
        for (int i = 0; i < dim(); ++i) {
            const int c = a[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            const int mag = c < 0 ? -c : c;
            if (s.empty())
                s += c < 0 ? "-" : "";
            else
                s += c < 0 ? " - " : " + ";
            if (mag != 1) s += std::to_string(mag) + "*";
            s += "x" + std::to_string(i + 1);
        }
        return s + " = " + std::to_string(b);
    }

    /// Equality as a point set: (a, b) up to nonzero scaling.
    bool same_set(const Hyperplane& o) const
    {
        if (o.dim() != dim()) return false;
        // a.x = b and o.a.x = o.b coincide iff (a, b) and (o.a, o.b) are proportional.
        std::vector<long long> u(a.begin(), a.end()), v(o.a.begin(), o.a.end());
        u.push_back(b);
        v.push_back(o.b);
        std::size_t k = 0;
        while (k < u.size() && u[k] == 0) ++k;
        if (k == u.size() || v[k] == 0) return false;
        for (std::size_t i = 0; i < u.size(); ++i)
            if (u[i] * v[k] != v[i] * u[k]) return false;
        return true;
    }
};

enum class ArrangementKind { cox, shi, ish, custom };

inline std::string to_string(ArrangementKind k)
{
    switch (k) {
    case ArrangementKind::cox: return "cox";
    case ArrangementKind::shi: return "shi";
    case ArrangementKind::ish: return "ish";
    case ArrangementKind::custom: return "custom";
    }
    return "custom";
}

/// Ordered list of distinct affine hyperplanes in R^n.
class Arrangement {
public:
    Arrangement() = default;
    Arrangement(int n, ArrangementKind kind, std::optional<Graph> graph = std::nullopt)
        : n_(n), kind_(kind), graph_(std::move(graph))
    {
        if (n < 1) throw std::invalid_argument("arrangement dimension must be positive");
    }

    /// Appends h unless an identical hyperplane is already present; returns
    /// whether it was added.
    bool add(Hyperplane h)
    {
        if (h.dim() != n_) throw std::invalid_argument("hyperplane dimension mismatch");
        if (std::all_of(h.a.begin(), h.a.end(), [](int c) { return c == 0; }))
            throw std::invalid_argument("hyperplane with zero normal");
        for (const auto& e : hyperplanes_)
            if (e.same_set(h)) return false;
        hyperplanes_.push_back(std::move(h));
        return true;
    }

    int n() const noexcept { return n_; }
    ArrangementKind kind() const noexcept { return kind_; }
    const std::optional<Graph>& graph() const noexcept { return graph_; }
    const std::vector<Hyperplane>& hyperplanes() const noexcept { return hyperplanes_; }
    const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }
    std::size_t size() const noexcept { return hyperplanes_.size(); }

    /// Index of the Coxeter hyperplane x_i = x_j (1-based i < j), if present.
    std::optional<std::size_t> coxeter_index(int i, int j) const
    {
        for (std::size_t k = 0; k < hyperplanes_.size(); ++k) {
            const auto& h = hyperplanes_[k];
            if (h.b != 0) continue;
            auto d = h.difference_form();
            if (!d) continue;
            if ((d->first == i - 1 && d->second == j - 1) || (d->first == j - 1 && d->second == i - 1)) return k;
        }
        return std::nullopt;
    }

    friend bool operator==(const Arrangement& x, const Arrangement& y)
    {
        if (x.n_ != y.n_ || x.hyperplanes_.size() != y.hyperplanes_.size()) return false;
        for (std::size_t i = 0; i < x.hyperplanes_.size(); ++i)
            if (!x.hyperplanes_[i].same_set(y.hyperplanes_[i])) return false;
        return true;
    }

private:
    int n_ = 0;
    ArrangementKind kind_ = ArrangementKind::custom;
    std::optional<Graph> graph_;
    std::vector<Hyperplane> hyperplanes_;
};

inline Hyperplane difference_hyperplane(int n, int i, int j, int b, std::optional<Edge> edge = std::nullopt)
{
    Hyperplane h{std::vector<int>(static_cast<std::size_t>(n), 0), b, edge};
    h.a[static_cast<std::size_t>(i - 1)] = 1;
    h.a[static_cast<std::size_t>(j - 1)] = -1;
    return h;
}

namespace detail {

inline void add_coxeter(Arrangement& a, int n)
{
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) a.add(difference_hyperplane(n, i, j, 0));
}

inline void require_dim(int n)
{
    if (n < 2) throw std::invalid_argument("arrangements need n >= 2 (got " + std::to_string(n) + ")");
}

} // namespace detail

/// Cox(n): x_i - x_j = 0 for i < j.
inline Arrangement build_cox(int n)
{
    detail::require_dim(n);
    Arrangement a(n, ArrangementKind::cox, Graph::empty(n));
    detail::add_coxeter(a, n);
    return a;
}

/// Shi(G): Cox(n) plus x_i - x_j = 1 for each edge ij.
inline Arrangement build_shi(const Graph& g)
{
    detail::require_dim(g.n());
    Arrangement a(g.n(), ArrangementKind::shi, g);
    detail::add_coxeter(a, g.n());
    for (auto [i, j] : g.edges()) a.add(difference_hyperplane(g.n(), i, j, 1, Edge{i, j}));
    return a;
}

/// Ish(G): Cox(n) plus x_1 - x_j = i for each edge ij.
inline Arrangement build_ish(const Graph& g)
{
    detail::require_dim(g.n());
    Arrangement a(g.n(), ArrangementKind::ish, g);
    detail::add_coxeter(a, g.n());
    for (auto [i, j] : g.edges()) a.add(difference_hyperplane(g.n(), 1, j, i, Edge{i, j}));
    return a;
}

inline Arrangement build(ArrangementKind kind, const Graph& g)
{
    switch (kind) {
    case ArrangementKind::cox: return build_cox(g.n());
    case ArrangementKind::shi: return build_shi(g);
    case ArrangementKind::ish: return build_ish(g);
    case ArrangementKind::custom: break;
    }
    throw std::invalid_argument("cannot build a custom arrangement from a graph");
}

/// Dimension of the span of the normals.
inline int rank(const Arrangement& a)
{
    std::vector<std::vector<int>> rows;
    for (const auto& h : a.hyperplanes()) rows.push_back(h.a);
    if (rows.empty()) return 0;
    return static_cast<int>(matrix_rank(to_rational(rows)));
}

} // namespace shiish
