#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace shiish {

/// Region counts by (ceilings c, degrees of freedom d), with the same tables
/// restricted to dominant regions.
struct Census {
    std::map<std::pair<int, int>, long long> by_cd;
    std::map<std::pair<int, int>, long long> dominant_by_cd;

    void add(int c, int d, bool dominant)
    {
        ++by_cd[{c, d}];
        if (dominant) ++dominant_by_cd[{c, d}];
    }

    long long total() const
    {
        long long t = 0;
        for (const auto& [k, v] : by_cd) t += v;
        return t;
    }

    long long count(int c, int d) const
    {
        auto it = by_cd.find({c, d});
        return it == by_cd.end() ? 0 : it->second;
    }

    long long with_dof(int d) const
    {
        long long t = 0;
        for (const auto& [k, v] : by_cd)
            if (k.second == d) t += v;
        return t;
    }

    std::map<int, long long> dominant_by_c() const
    {
        std::map<int, long long> out;
        for (const auto& [k, v] : dominant_by_cd) out[k.first] += v;
        return out;
    }

    long long dominant_total() const
    {
        long long t = 0;
        for (const auto& [k, v] : dominant_by_cd) t += v;
        return t;
    }

    long long dominant_with_dof(int d) const
    {
        long long t = 0;
        for (const auto& [k, v] : dominant_by_cd)
            if (k.second == d) t += v;
        return t;
    }

    /// Rows c = 0..max, columns d = 1..n; blank cells are zero.
    std::string table(int n, bool dominant_only = false) const
    {
        const auto& src = dominant_only ? dominant_by_cd : by_cd;
        int max_c = 0;
        for (const auto& [k, v] : src) max_c = std::max(max_c, k.first);
        std::ostringstream os;
        os << "c\\d |";
        for (int d = 1; d <= n; ++d) os << " " << std::string(d < 10 ? 5 : 4, ' ') << d;
        os << "\n----+" << std::string(static_cast<std::size_t>(7 * n), '-') << "\n";
        for (int c = 0; c <= max_c; ++c) {
            os << (c < 10 ? "  " : " ") << c << " |";
            for (int d = 1; d <= n; ++d) {
                auto it = src.find({c, d});
                std::string cell = it == src.end() ? "" : std::to_string(it->second);
                os << " " << std::string(6 - std::min<std::size_t>(6, cell.size()), ' ') << cell;
            }
            os << "\n";
        }
        return os.str();
    }

    friend bool operator==(const Census&, const Census&) = default;
};

} // namespace shiish
