#pragma once

#include "census.hpp"
#include "geometry.hpp"
#include "labelings.hpp"
#include "partitions.hpp"
#include "polynomial.hpp"

#include <json.hpp>

#include <limits>
#include <string>

namespace shiish {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline Json big_json(const BigInt& z)
{
    if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(z);
    return z.str();
}

inline Json polynomial_json(const IntPolynomial& p)
{
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(big_json(c));
    return Json{{"coeffs", coeffs}, {"var", "p"}, {"factored", p.factored_hint()}};
}

inline Json region_json(const RegionCert& r, const RegionStats& st)
{
    Json witness = Json::array();
    for (const auto& q : r.witness) witness.push_back(to_string(q));
    return Json{{"signs", r.sign_string()},
                {"witness", witness},
                {"c", st.ceilings.size()},
                {"d", st.dof},
                {"dominant", st.dominant}};
}

inline Json endpoint_json(const EndpointPair& e) { return Json{{"alpha", e.alpha}, {"beta", e.beta}}; }

inline Json diagram_json(const ShiCeilingDiagram& d)
{
    Json arcs = Json::array();
    for (auto [i, j] : d.pi.arcs()) arcs.push_back({i, j});
    return Json{{"kind", "shi"}, {"w", d.w}, {"arcs", arcs}};
}

inline Json diagram_json(const IshCeilingDiagram& d) { return Json{{"kind", "ish"}, {"w", d.w}, {"eps", d.eps}}; }

inline Json census_json(const Census& c)
{
    auto cells = [](const auto& table) {
        Json out = Json::array();
        for (const auto& [k, v] : table) out.push_back({{"c", k.first}, {"d", k.second}, {"count", v}});
        return out;
    };
    Json dom_c = Json::array();
    for (const auto& [k, v] : c.dominant_by_c()) dom_c.push_back({{"c", k}, {"count", v}});
    return Json{{"total", c.total()},
                {"cells", cells(c.by_cd)},
                {"dominant_total", c.dominant_total()},
                {"dominant_by_c", dom_c},
                {"dominant_cells", cells(c.dominant_by_cd)}};
}

} // namespace shiish
