#pragma once

#include "graph.hpp"
#include "numeric.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shiish {

using Arc = std::pair<int, int>;

/// Arcs of a partition in endpoint notation: arcs (alpha[i], beta[i]) with
/// alpha strictly increasing, alpha[i] < beta[i] and beta pairwise distinct.
struct EndpointPair {
    int n = 0;
    std::vector<int> alpha;
    std::vector<int> beta;

    std::size_t length() const noexcept { return alpha.size(); }

    /// Empty string when valid, otherwise a description of the first violated invariant.
    std::string violation() const
    {
        if (n < 1) return "ground set must be nonempty";
        if (alpha.size() != beta.size()) return "alpha and beta differ in length";
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] < 1 || beta[i] > n) return "entry outside [n]";
            if (alpha[i] >= beta[i]) return "a_i < b_i violated at index " + std::to_string(i + 1);
            if (i > 0 && alpha[i - 1] >= alpha[i]) return "alpha is not strictly increasing";
            if (seen[static_cast<std::size_t>(beta[i])]) return "beta has a repeated entry";
            seen[static_cast<std::size_t>(beta[i])] = true;
        }
        return {};
    }

    bool valid() const { return violation().empty(); }

    std::vector<Arc> arcs() const
    {
        std::vector<Arc> out;
        for (std::size_t i = 0; i < alpha.size(); ++i) out.emplace_back(alpha[i], beta[i]);
        return out;
    }

    /// Compact form like "(135,678)"; entries are comma-separated once n >= 10.
    std::string to_string() const
    {
        const char* sep = n >= 10 ? "," : "";
        auto join = [&](const std::vector<int>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) s += sep;
                s += std::to_string(v[i]);
            }
            return s;
        };
        return "(" + join(alpha) + "," + join(beta) + ")";
    }

    friend bool operator==(const EndpointPair&, const EndpointPair&) = default;
    friend auto operator<=>(const EndpointPair&, const EndpointPair&) = default;
};

/// Block-size multiplicities r_1..r_n of a partition of [n].
struct TypeVector {
    int n = 0;
    std::vector<int> r;  // r[i-1] = number of blocks of size i

    int blocks() const { return std::accumulate(r.begin(), r.end(), 0); }

    bool valid() const
    {
        if (n < 1 || static_cast<int>(r.size()) != n) return false;
        long total = 0;
        for (int i = 1; i <= n; ++i) {
            if (r[i - 1] < 0) return false;
            total += static_cast<long>(i) * r[i - 1];
        }
        const int k = blocks();
        return total == n && k >= 1 && k <= n;
    }

    bool all_singletons() const { return n >= 1 && r[0] == n; }

    friend bool operator==(const TypeVector&, const TypeVector&) = default;
    friend auto operator<=>(const TypeVector&, const TypeVector&) = default;
};

/// A set partition of [n]. Blocks are kept sorted internally and ordered by
/// their least element, so equal partitions compare equal.
class SetPartition {
public:
    SetPartition() = default;

    SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks))
    {
        if (n < 1) throw std::invalid_argument("partition of an empty ground set");
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        int covered = 0;
        for (auto& b : blocks_) {
            if (b.empty()) throw std::invalid_argument("empty block");
            std::sort(b.begin(), b.end());
            for (int x : b) {
                if (x < 1 || x > n) throw std::invalid_argument("element " + std::to_string(x) + " outside [n]");
                if (seen[static_cast<std::size_t>(x)])
                    throw std::invalid_argument("element " + std::to_string(x) + " in two blocks");
                seen[static_cast<std::size_t>(x)] = true;
                ++covered;
            }
        }
        if (covered != n) throw std::invalid_argument("blocks do not cover [n]");
        std::sort(blocks_.begin(), blocks_.end());
    }

    static SetPartition singletons(int n)
    {
        std::vector<std::vector<int>> b;
        for (int i = 1; i <= n; ++i) b.push_back({i});
        return SetPartition(n, std::move(b));
    }

    static SetPartition one_block(int n)
    {
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 1);
        return SetPartition(n, {all});
    }

    /// From a restricted-growth string (0-based block labels, rgs[0] == 0).
    static SetPartition from_rgs(const std::vector<int>& rgs)
    {
        const int n = static_cast<int>(rgs.size());
        std::vector<std::vector<int>> b;
        for (int i = 0; i < n; ++i) {
            const auto label = static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)]);
            if (label > b.size()) throw std::invalid_argument("not a restricted-growth string");
            if (label == b.size()) b.emplace_back();
            b[label].push_back(i + 1);
        }
        return SetPartition(n, std::move(b));
    }

    /// Union-find style assembly of the partition whose arcs are exactly `arcs`.
    static SetPartition from_arcs(int n, const std::vector<Arc>& arcs)
    {
        std::vector<int> next(static_cast<std::size_t>(n) + 1, 0), has_prev(static_cast<std::size_t>(n) + 1, 0);
        for (auto [a, b] : arcs) {
            if (a < 1 || b > n || a >= b) throw std::invalid_argument("invalid arc");
            if (next[static_cast<std::size_t>(a)] || has_prev[static_cast<std::size_t>(b)])
                throw std::invalid_argument("arcs share an endpoint side");
            next[static_cast<std::size_t>(a)] = b;
            has_prev[static_cast<std::size_t>(b)] = 1;
        }
        std::vector<std::vector<int>> blocks;
        for (int i = 1; i <= n; ++i) {
            if (has_prev[static_cast<std::size_t>(i)]) continue;
            std::vector<int> block;
            for (int x = i; x != 0; x = next[static_cast<std::size_t>(x)]) block.push_back(x);
            blocks.push_back(std::move(block));
        }
        return SetPartition(n, std::move(blocks));
    }

    int n() const noexcept { return n_; }
    const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
    int block_count() const noexcept { return static_cast<int>(blocks_.size()); }

    /// Restricted-growth string; blocks are numbered by least element.
    std::vector<int> rgs() const
    {
        std::vector<int> out(static_cast<std::size_t>(n_));
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            for (int x : blocks_[b]) out[static_cast<std::size_t>(x - 1)] = static_cast<int>(b);
        return out;
    }

    /// Consecutive-in-block pairs, sorted by left endpoint.
    std::vector<Arc> arcs() const
    {
        std::vector<Arc> out;
        for (const auto& b : blocks_)
            for (std::size_t i = 1; i < b.size(); ++i) out.emplace_back(b[i - 1], b[i]);
        std::sort(out.begin(), out.end());
        return out;
    }

    EndpointPair to_endpoint() const
    {
        EndpointPair e{n_, {}, {}};
        for (auto [a, b] : arcs()) {
            e.alpha.push_back(a);
            e.beta.push_back(b);
        }
        return e;
    }

    static SetPartition from_endpoint(const EndpointPair& e)
    {
        if (auto why = e.violation(); !why.empty()) throw std::invalid_argument("invalid endpoint pair: " + why);
        return from_arcs(e.n, e.arcs());
    }

    TypeVector type() const
    {
        TypeVector t{n_, std::vector<int>(static_cast<std::size_t>(n_), 0)};
        for (const auto& b : blocks_) ++t.r[b.size() - 1];
        return t;
    }

    bool is_nonnesting() const
    {
        const auto a = arcs();
        for (const auto& [i, j] : a)
            for (const auto& [k, l] : a)
                if (i < k && l < j) return false;
        return true;
    }

    /// Number of nesting arc pairs, i.e. inversions of the right endpoint vector.
    int nesting_pairs() const
    {
        const auto e = to_endpoint();
        int inv = 0;
        for (std::size_t i = 0; i < e.beta.size(); ++i)
            for (std::size_t j = i + 1; j < e.beta.size(); ++j) inv += e.beta[i] > e.beta[j] ? 1 : 0;
        return inv;
    }

    /// One more than the number of gaps m in [n-1] that no arc (i, j), i <= m < j, spans.
    int connected_components() const
    {
        std::vector<int> cover(static_cast<std::size_t>(n_) + 1, 0);
        for (auto [i, j] : arcs())
            for (int m = i; m < j; ++m) cover[static_cast<std::size_t>(m)] = 1;
        int d = 1;
        for (int m = 1; m < n_; ++m) d += cover[static_cast<std::size_t>(m)] ? 0 : 1;
        return d;
    }

    bool is_g_partition(const Graph& g) const
    {
        if (g.n() != n_) throw std::invalid_argument("graph and partition have different ground sets");
        for (auto [i, j] : arcs())
            if (!g.has_edge(i, j)) return false;
        return true;
    }

    /// Image of the partition under the relabeling x -> w[x-1].
    SetPartition relabel(const std::vector<int>& w) const
    {
        auto b = blocks_;
        for (auto& block : b)
            for (int& x : block) x = w[static_cast<std::size_t>(x - 1)];
        return SetPartition(n_, std::move(b));
    }

    std::string to_string() const
    {
        std::string s = "{";
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            if (b) s += ",";
            s += "{";
            for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
                if (i) s += ",";
                s += std::to_string(blocks_[b][i]);
            }
            s += "}";
        }
        return s + "}";
    }

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
};

inline std::vector<Arc> arcs(const SetPartition& p) { return p.arcs(); }
inline EndpointPair to_endpoint(const SetPartition& p) { return p.to_endpoint(); }
inline SetPartition from_endpoint(const EndpointPair& e) { return SetPartition::from_endpoint(e); }
inline TypeVector type_vector(const SetPartition& p) { return p.type(); }
inline bool is_nonnesting(const SetPartition& p) { return p.is_nonnesting(); }
inline int nesting_pairs(const SetPartition& p) { return p.nesting_pairs(); }
inline int connected_components(const SetPartition& p) { return p.connected_components(); }
inline bool is_g_partition(const SetPartition& p, const Graph& g) { return p.is_g_partition(g); }

// ---------------------------------------------------------------------------
// Enumeration. Every stream visits partitions in lexicographic order of their
// restricted-growth strings.

template <typename Visitor>
void for_each_partition(int n, Visitor&& visit)
{
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<int> rgs(static_cast<std::size_t>(n), 0), maxima(static_cast<std::size_t>(n), 0);
    while (true) {
        visit(SetPartition::from_rgs(rgs));
        // Advance to the next restricted-growth string.
        int i = n - 1;
        while (i > 0 && rgs[static_cast<std::size_t>(i)] == maxima[static_cast<std::size_t>(i - 1)] + 1) --i;
        if (i == 0) return;
        ++rgs[static_cast<std::size_t>(i)];
        for (int j = i; j < n; ++j) {
            if (j > i) rgs[static_cast<std::size_t>(j)] = 0;
            maxima[static_cast<std::size_t>(j)] =
                std::max(maxima[static_cast<std::size_t>(j - 1)], rgs[static_cast<std::size_t>(j)]);
        }
    }
}

template <typename Visitor>
void for_each_g_partition(const Graph& g, Visitor&& visit)
{
    for_each_partition(g.n(), [&](const SetPartition& p) {
        if (p.is_g_partition(g)) visit(p);
    });
}

template <typename Visitor>
void for_each_nonnesting(int n, Visitor&& visit)
{
    for_each_partition(n, [&](const SetPartition& p) {
        if (p.is_nonnesting()) visit(p);
    });
}

inline std::vector<SetPartition> enumerate_partitions(int n)
{
    std::vector<SetPartition> out;
    for_each_partition(n, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

inline std::vector<SetPartition> enumerate_g_partitions(const Graph& g)
{
    std::vector<SetPartition> out;
    for_each_g_partition(g, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

inline std::vector<SetPartition> enumerate_nonnesting(int n)
{
    std::vector<SetPartition> out;
    for_each_nonnesting(n, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

/// All type vectors of [n] (integer partitions of n), in lexicographic order of r.
inline std::vector<TypeVector> enumerate_types(int n)
{
    std::vector<TypeVector> out;
    std::vector<int> r(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int size, int remaining) {
        if (size == 0) {
            if (remaining == 0) out.push_back({n, r});
            return;
        }
        for (int count = 0; count * size <= remaining; ++count) {
            r[static_cast<std::size_t>(size - 1)] = count;
            rec(size - 1, remaining - count * size);
        }
        r[static_cast<std::size_t>(size - 1)] = 0;
    };
    rec(n, n);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Counting.

/// Stir(G, k) for k = 0..n. Elements are added left to right; each either
/// opens a block or extends a block whose current maximum i has ij in G.
/// The DP state is the set of current block maxima.
inline std::vector<BigInt> g_stirling_numbers(const Graph& g)
{
    const int n = g.n();
    if (n > 24) throw std::invalid_argument("g_stirling_numbers supports n <= 24");
    using Mask = std::uint32_t;
    std::vector<std::pair<Mask, BigInt>> states{{Mask{0}, BigInt{1}}};
    for (int j = 1; j <= n; ++j) {
        std::vector<std::pair<Mask, BigInt>> next;
        const Mask bit_j = Mask{1} << (j - 1);
        for (const auto& [mask, ways] : states) {
            next.push_back({mask | bit_j, ways});
            for (int i = 1; i < j; ++i) {
                const Mask bit_i = Mask{1} << (i - 1);
                if ((mask & bit_i) && g.has_edge(i, j)) next.push_back({(mask & ~bit_i) | bit_j, ways});
            }
        }
        std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        states.clear();
        for (auto& s : next) {
            if (!states.empty() && states.back().first == s.first)
                states.back().second += s.second;
            else
                states.push_back(std::move(s));
        }
    }
    std::vector<BigInt> out(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [mask, ways] : states) out[static_cast<std::size_t>(std::popcount(mask))] += ways;
    return out;
}

inline BigInt g_stirling(const Graph& g, int k)
{
    if (k < 1 || k > g.n()) return 0;
    return g_stirling_numbers(g)[static_cast<std::size_t>(k)];
}

inline BigInt stirling2(int n, int k) { return g_stirling(Graph::complete(n), k); }

namespace detail {

inline BigInt type_symmetry(const TypeVector& t)
{
    BigInt s = 1;
    for (int ri : t.r) s *= factorial(ri);
    return s;
}

inline void require_type(const TypeVector& t)
{
    if (!t.valid()) throw std::invalid_argument("invalid type vector");
}

} // namespace detail

/// Nonnesting partitions of [n] of type t: n! / ((n-k+1)! r_1! ... r_n!).
inline BigInt kreweras_count(const TypeVector& t)
{
    detail::require_type(t);
    const int n = t.n, k = t.blocks();
    return factorial(n) / (factorial(n - k + 1) * detail::type_symmetry(t));
}

/// Nonnesting partitions of [n] of type t with d connected components.
inline BigInt rhoades_count(const TypeVector& t, int d)
{
    detail::require_type(t);
    if (d < 1) throw std::invalid_argument("d must be positive");
    const int n = t.n, k = t.blocks();
    if (t.all_singletons()) return d == n ? 1 : 0;
    if (k < d) return 0;
    const BigInt num = BigInt(d) * factorial(n - d - 1) * factorial(k - 1);
    const BigInt den = factorial(n - k - 1) * factorial(k - d) * detail::type_symmetry(t);
    return num / den;
}

} // namespace shiish
