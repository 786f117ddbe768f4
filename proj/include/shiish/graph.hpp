#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shiish {

using Edge = std::pair<int, int>;

/// Raised by parse_graph; `position` is the 0-based offset of the offending character.
class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Simple loopless graph on the vertex set [n] = {1..n}. Edges are stored as
/// pairs (i, j) with i < j, sorted lexicographically.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n, std::vector<Edge> edges = {}) : n_(n), adj_(static_cast<std::size_t>(n * n), false)
    {
        if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
        for (auto [i, j] : edges) add_edge(i, j);
    }

    static Graph complete(int n)
    {
        Graph g(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
        return g;
    }

    static Graph chain(int n)
    {
        Graph g(n);
        for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
        return g;
    }

    static Graph empty(int n) { return Graph(n); }

    /// The graph on [n] whose edges are the bits of `mask` over C([n],2) in
    /// lexicographic order (bit 0 is edge 12).
    static Graph from_mask(int n, std::uint64_t mask)
    {
        Graph g(n);
        int bit = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j, ++bit)
                if ((mask >> bit) & 1U) g.add_edge(i, j);
        return g;
    }

    /// Uniform random edge subset; each edge is kept on one bit of the engine output.
    static Graph random(int n, std::mt19937_64& rng)
    {
        Graph g(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (rng() & 1U) g.add_edge(i, j);
        return g;
    }

    void add_edge(int i, int j)
    {
        if (i == j) throw std::invalid_argument("loop " + std::to_string(i) + "-" + std::to_string(j));
        if (i > j) std::swap(i, j);
        if (i < 1 || j > n_)
            throw std::invalid_argument("edge " + std::to_string(i) + "-" + std::to_string(j) + " out of range");
        if (has_edge(i, j))
            throw std::invalid_argument("duplicate edge " + std::to_string(i) + "-" + std::to_string(j));
        adj_[index(i, j)] = true;
        edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), Edge{i, j}), Edge{i, j});
    }

    int n() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t size() const noexcept { return edges_.size(); }

    bool has_edge(int i, int j) const noexcept
    {
        if (i > j) std::swap(i, j);
        if (i < 1 || j > n_ || i == j) return false;
        return adj_[index(i, j)];
    }

    int outdegree(int i) const noexcept
    {
        int d = 0;
        for (int j = i + 1; j <= n_; ++j) d += has_edge(i, j) ? 1 : 0;
        return d;
    }

    /// Canonical text form `n;i-j,...` accepted by parse_graph.
    std::string to_string() const
    {
        std::string s = std::to_string(n_) + ";";
        for (std::size_t k = 0; k < edges_.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(edges_[k].first) + "-" + std::to_string(edges_[k].second);
        }
        return s;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    std::size_t index(int i, int j) const noexcept { return static_cast<std::size_t>((i - 1) * n_ + (j - 1)); }

    int n_ = 0;
    std::vector<bool> adj_;
    std::vector<Edge> edges_;
};

namespace detail {

inline int parse_uint(std::string_view s, std::size_t& pos)
{
    const std::size_t start = pos;
    long long v = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
        v = v * 10 + (s[pos] - '0');
        if (v > 1'000'000) throw parse_error("integer too large", start);
        ++pos;
    }
    if (pos == start) throw parse_error("expected integer", start);
    return static_cast<int>(v);
}

} // namespace detail

/// Parses `complete:n`, `chain:n`, `empty:n`, or `n;i-j,i-j,...` (1-based).
inline Graph parse_graph(std::string_view text)
{
    std::size_t pos = 0;
    auto named = [&](std::string_view prefix) {
        if (text.substr(0, prefix.size()) != prefix) return -1;
        pos = prefix.size();
        const int n = detail::parse_uint(text, pos);
        if (pos != text.size()) throw parse_error("trailing characters", pos);
        if (n < 1) throw parse_error("vertex count must be positive", prefix.size());
        return n;
    };
    if (int n = named("complete:"); n > 0) return Graph::complete(n);
    if (int n = named("chain:"); n > 0) return Graph::chain(n);
    if (int n = named("empty:"); n > 0) return Graph::empty(n);

    pos = 0;
    const int n = detail::parse_uint(text, pos);
    if (n < 1) throw parse_error("vertex count must be positive", 0);
    Graph g(n);
    if (pos == text.size()) return g;
    if (text[pos] != ';') throw parse_error("expected ';'", pos);
    ++pos;
    if (pos == text.size()) return g;
    while (true) {
        const std::size_t edge_start = pos;
        const int i = detail::parse_uint(text, pos);
        if (pos >= text.size() || text[pos] != '-') throw parse_error("expected '-'", pos);
        ++pos;
        const int j = detail::parse_uint(text, pos);
        if (i == j) throw parse_error("loop edge", edge_start);
        if (std::min(i, j) < 1 || std::max(i, j) > n) throw parse_error("vertex out of range", edge_start);
        if (g.has_edge(i, j)) throw parse_error("duplicate edge", edge_start);
        g.add_edge(i, j);
        if (pos == text.size()) break;
        if (text[pos] != ',') throw parse_error("expected ','", pos);
        ++pos;
    }
    return g;
}

} // namespace shiish
