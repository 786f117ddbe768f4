// shiish: command-line front end for the Shi/Ish arrangement toolkit.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 guard refusal.

#include <shiish/json_io.hpp>
#include <shiish/shiish.hpp>

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace shiish;

namespace {

enum class Format { table, json, csv };

struct Config {
    Format format = Format::table;
    std::string graph = "complete:3";
    std::string arrangement = "shi";
    std::uint64_t seed = 1;
    Guards guards;
    int max_labeling_n = 8;
};

class verification_failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Usage : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Graph load_graph(const Config& cfg)
{
    const std::string& s = cfg.graph;
    if (s.rfind("random:", 0) == 0) {
        std::size_t pos = 7;
        const int n = detail::parse_uint(s, pos);
        if (pos != s.size() || n < 1) throw parse_error("expected random:n", 7);
        std::mt19937_64 rng(cfg.seed);
        return Graph::random(n, rng);
    }
    return parse_graph(s);
}

ArrangementKind load_kind(const Config& cfg)
{
    if (cfg.arrangement == "shi") return ArrangementKind::shi;
    if (cfg.arrangement == "ish") return ArrangementKind::ish;
    if (cfg.arrangement == "cox") return ArrangementKind::cox;
    throw Usage("unknown arrangement '" + cfg.arrangement + "' (expected shi, ish or cox)");
}

Arrangement build_for(ArrangementKind kind, const Graph& g)
{
    return kind == ArrangementKind::cox ? build_cox(g.n()) : build(kind, g);
}

std::string label(ArrangementKind kind, const Graph& g)
{
    if (kind == ArrangementKind::cox) return "Cox(" + std::to_string(g.n()) + ")";
    return (kind == ArrangementKind::shi ? "Shi(" : "Ish(") + g.to_string() + ")";
}

void print(const Config& cfg, const Json& json, const std::string& table, const std::string& csv)
{
    switch (cfg.format) {
    case Format::json:
        std::cout << json.dump(2) << "\n";
        break;
    case Format::csv:
        std::cout << csv;
        break;
    case Format::table:
        std::cout << table;
        break;
    }
}

std::string coeff_list(const IntPolynomial& p, const char* sep)
{
    std::string s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) s += (i ? sep : "") + p.coeffs()[i].str();
    return s;
}

// ---------------------------------------------------------------------------
// charpoly

int cmd_charpoly(const Config& cfg, const std::string& method)
{
    const Graph g = load_graph(cfg);
    const auto kind = load_kind(cfg);
    const Graph eff = kind == ArrangementKind::cox ? Graph::empty(g.n()) : g;
    const Arrangement a = build_for(kind, g);

    const bool all = method == "all";
    std::vector<std::pair<std::string, IntPolynomial>> results;
    std::vector<std::pair<std::string, std::string>> skipped;

    if (all || method == "closed") results.emplace_back("closed", charpoly_closed_form(eff));
    if (all || method == "interpolated") {
        try {
            results.emplace_back("interpolated", charpoly_interpolated(a, cfg.guards));
        } catch (const std::invalid_argument& e) {
            if (!all) throw guard_error(e.what());
            skipped.emplace_back("interpolated", e.what());
        }
    }
    if (all || method == "mobius") {
        try {
            results.emplace_back("mobius", charpoly_via_mobius(a, cfg.guards));
        } catch (const guard_error& e) {
            if (!all) throw;
            skipped.emplace_back("mobius", e.what());
        }
    }
    if (all || method == "product") {
        try {
            results.emplace_back("product", charpoly_product_form(eff));
        } catch (const closure_violation& e) {
            if (!all) throw Usage(e.what());
            skipped.emplace_back("product", e.what());
        }
    }
    if (results.empty()) throw Usage("unknown method '" + method + "'");

    bool agree = true;
    for (const auto& [name, p] : results) agree = agree && p == results.front().second;
    const IntPolynomial& chi = results.front().second;
    const int r = rank(a);

    Json j{{"arrangement", to_string(kind)}, {"graph", g.to_string()}, {"n", g.n()}, {"hyperplanes", a.size()}};
    Json methods = Json::object();
    for (const auto& [name, p] : results) methods[name] = polynomial_json(p);
    j["methods"] = methods;
    Json sk = Json::object();
    for (const auto& [name, why] : skipped) sk[name] = why;
    j["skipped"] = sk;
    j["agree"] = agree;
    j["regions"] = big_json(zaslavsky_regions(chi, g.n()));
    j["relatively_bounded"] = big_json(zaslavsky_rel_bounded(chi, r));

    std::ostringstream t;
    t << label(kind, g) << ": " << a.size() << " hyperplanes, rank " << r << "\n";
    for (const auto& [name, p] : results)
        t << "  " << std::left << std::setw(13) << name << p.to_string() << "   = " << p.factored_hint() << "\n";
    for (const auto& [name, why] : skipped) t << "  " << std::left << std::setw(13) << name << "skipped: " << why << "\n";
    t << "regions " << zaslavsky_regions(chi, g.n()) << ", relatively bounded " << zaslavsky_rel_bounded(chi, r) << "\n";
    t << (agree ? "all methods agree\n" : "METHODS DISAGREE\n");

    std::ostringstream c;
    c << "method,coefficients,factored\n";
    for (const auto& [name, p] : results) c << name << "," << coeff_list(p, ";") << ",\"" << p.factored_hint() << "\"\n";

    print(cfg, j, t.str(), c.str());
    return agree ? 0 : 1;
}

// ---------------------------------------------------------------------------
// regions

Census combinatorial_census(const Config& cfg, ArrangementKind kind, const Graph& g)
{
    if (g.n() > cfg.max_labeling_n)
        throw guard_error("combinatorial census limited to n <= " + std::to_string(cfg.max_labeling_n) +
                          " (use --max-labeling-n to raise)");
    const Graph eff = kind == ArrangementKind::cox ? Graph::empty(g.n()) : g;
    return labeling_census(eff, kind == ArrangementKind::ish ? ArrangementKind::ish : ArrangementKind::shi);
}

/// Lines of an n = 3 arrangement in the plane coordinates (a, b) = (x1 - x2, x2 - x3).
Json plot_data(const Arrangement& a, const std::vector<RegionCert>& regions)
{
    const int box = 3;
    Json lines = Json::array();
    for (const auto& h : a.hyperplanes()) {
        // a.x in plane coordinates: x1 = a + b + x3, x2 = b + x3.
        const int ca = h.a[0], cb = h.a[0] + h.a[1];
        std::vector<std::pair<Rational, Rational>> pts;
        auto keep = [&](const Rational& u, const Rational& v) {
            if (u < -box || u > box || v < -box || v > box) return;
            for (const auto& p : pts)
                if (p.first == u && p.second == v) return;
            pts.emplace_back(u, v);
        };
        for (int side : {-box, box}) {
            if (cb != 0) keep(Rational(side), (Rational(h.b) - Rational(ca) * side) / cb);
            if (ca != 0) keep((Rational(h.b) - Rational(cb) * side) / ca, Rational(side));
        }
        if (pts.size() < 2) continue;
        lines.push_back({{"hyperplane", h.to_string()},
                         {"from", {to_string(pts[0].first), to_string(pts[0].second)}},
                         {"to", {to_string(pts[1].first), to_string(pts[1].second)}}});
    }
    Json regs = Json::array();
    for (const auto& r : regions) {
        const auto c = ceilings(a, r);
        Json entry{{"signs", r.sign_string()},
                   {"point", {to_string(r.witness[0] - r.witness[1]), to_string(r.witness[1] - r.witness[2])}}};
        if (a.kind() == ArrangementKind::shi) entry["diagram"] = diagram_json(region_to_shi_diagram(r, a, c));
        if (a.kind() == ArrangementKind::ish) entry["diagram"] = diagram_json(region_to_ish_diagram(r, a, c));
        regs.push_back(entry);
    }
    return Json{{"projection", "a = x1 - x2, b = x2 - x3"}, {"box", {-box, box}}, {"lines", lines}, {"regions", regs}};
}

void dump_regions(const Arrangement& a, const std::vector<RegionCert>& regions)
{
    for (const auto& r : regions) std::cout << region_json(r, region_stats(a, r)).dump() << "\n";
    if (a.kind() != ArrangementKind::shi && a.kind() != ArrangementKind::ish) return;
    const Graph& g = *a.graph();
    for_each_permutation(g.n(), [&](const Permutation& w) {
        if (a.kind() == ArrangementKind::shi)
            for (const auto& d : enumerate_shi_diagrams(g, w)) {
                auto j = diagram_json(d);
                j["ceiling_partition"] = endpoint_json(shi_ceiling_partition(d));
                j["d"] = shi_dof(d);
                std::cout << j.dump() << "\n";
            }
        else
            for (const auto& d : enumerate_ish_diagrams(g, w)) {
                auto j = diagram_json(d);
                j["ceiling_partition"] = endpoint_json(ish_ceiling_partition(d));
                j["d"] = ish_dof(d);
                std::cout << j.dump() << "\n";
            }
    });
}

std::string census_csv(const std::string& source, const Census& c)
{
    std::ostringstream os;
    for (const auto& [k, v] : c.by_cd) {
        auto it = c.dominant_by_cd.find(k);
        os << source << "," << k.first << "," << k.second << "," << v << ","
           << (it == c.dominant_by_cd.end() ? 0 : it->second) << "\n";
    }
    return os.str();
}

int cmd_regions(const Config& cfg, bool dump, bool combinatorial_only, bool plot)
{
    const Graph g = load_graph(cfg);
    const auto kind = load_kind(cfg);
    const Arrangement a = build_for(kind, g);
    const int n = g.n();
    const auto chi = charpoly_closed_form(kind == ArrangementKind::cox ? Graph::empty(n) : g);
    const auto z_regions = zaslavsky_regions(chi, n);
    const auto z_bounded = zaslavsky_rel_bounded(chi, rank(a));

    if (plot && n != 3) throw Usage("--plot-data is only available for n = 3");
    if ((plot || dump) && combinatorial_only) throw Usage("--dump and --plot-data need the geometric enumeration");

    std::optional<Census> geo;
    std::vector<RegionCert> regions;
    if (!combinatorial_only) {
        try {
            regions = enumerate_regions(a, cfg.guards);
        } catch (const guard_error& e) {
            throw guard_error(std::string(e.what()) + "; rerun with --combinatorial-only");
        }
        if (plot) {
            std::cout << plot_data(a, regions).dump(2) << "\n";
            return 0;
        }
        if (dump) {
            dump_regions(a, regions);
            return 0;
        }
        geo = region_census(a, regions);
    }
    const Census comb = combinatorial_census(cfg, kind, g);

    bool ok = BigInt(comb.total()) == z_regions && BigInt(comb.with_dof(1)) == z_bounded;
    if (geo) ok = ok && *geo == comb;

    Json j{{"arrangement", to_string(kind)}, {"graph", g.to_string()}, {"n", n}, {"hyperplanes", a.size()}};
    j["geometric"] = geo ? census_json(*geo) : Json(nullptr);
    j["combinatorial"] = census_json(comb);
    j["zaslavsky"] = {{"regions", big_json(z_regions)}, {"relatively_bounded", big_json(z_bounded)}};
    j["agree"] = ok;

    const Census& shown = geo ? *geo : comb;
    std::ostringstream t;
    t << label(kind, g) << ": " << a.size() << " hyperplanes\n";
    t << (geo ? "geometric" : "combinatorial") << " census, " << shown.total() << " regions (rows c = ceilings, columns d = degrees of freedom)\n";
    t << shown.table(n);
    t << "dominant regions: " << shown.dominant_total() << "\n" << shown.table(n, true);
    if (geo) t << "combinatorial census " << (*geo == comb ? "matches" : "DIFFERS FROM") << " the geometric census\n";
    t << "Zaslavsky: " << z_regions << " regions, " << z_bounded << " relatively bounded\n";
    t << (ok ? "consistent\n" : "INCONSISTENT\n");

    std::string c = "source,c,d,count,dominant\n";
    if (geo) c += census_csv("geometric", *geo);
    c += census_csv("combinatorial", comb);

    print(cfg, j, t.str(), c);
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify

struct GraphVerdict {
    Graph g;
    IntPolynomial chi;
    bool chi_equal = true;
    bool dominant_c_equal = true;
    bool census_equal = true;
    bool geometry_matches = true;
    bool dominant_cd_differs = false;
    bool geometry_checked = false;

    bool pass() const { return chi_equal && dominant_c_equal && census_equal && geometry_matches; }
};

GraphVerdict verify_graph(const Config& cfg, const Graph& g, bool skip_geometry)
{
    GraphVerdict v{g, charpoly_closed_form(g)};
    const auto shi = build_shi(g), ish = build_ish(g);
    if (g.n() <= cfg.guards.max_sweep_n) {
        v.chi_equal = charpoly_interpolated(shi, cfg.guards) == v.chi && charpoly_interpolated(ish, cfg.guards) == v.chi;
    }
    const auto cs = combinatorial_census(cfg, ArrangementKind::shi, g);
    const auto ci = combinatorial_census(cfg, ArrangementKind::ish, g);
    v.census_equal = cs.by_cd == ci.by_cd;
    v.dominant_c_equal = cs.dominant_by_c() == ci.dominant_by_c();
    v.dominant_cd_differs = cs.dominant_by_cd != ci.dominant_by_cd;
    if (!skip_geometry) {
        const auto gs = region_census(shi, cfg.guards);
        const auto gi = region_census(ish, cfg.guards);
        v.geometry_checked = true;
        v.geometry_matches = gs == cs && gi == ci;
        v.census_equal = v.census_equal && gs.by_cd == gi.by_cd;
        v.dominant_c_equal = v.dominant_c_equal && gs.dominant_by_c() == gi.dominant_by_c();
    }
    const auto regions = zaslavsky_regions(v.chi, g.n());
    v.chi_equal = v.chi_equal && BigInt(cs.total()) == regions && BigInt(ci.total()) == regions;
    return v;
}

int cmd_verify(const Config& cfg, std::optional<int> all_graphs, bool skip_geometry)
{
    std::vector<Graph> graphs;
    if (all_graphs) {
        const int n = *all_graphs;
        if (n < 2) throw Usage("--all-graphs needs n >= 2");
        if (n > 4) throw guard_error("--all-graphs is limited to n <= 4 (2^C(n,2) graphs)");
        const int m = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) graphs.push_back(Graph::from_mask(n, mask));
    } else {
        graphs.push_back(load_graph(cfg));
    }
    if (!skip_geometry)
        for (const auto& g : graphs)
            if (build_shi(g).size() > cfg.guards.max_geometry_hyperplanes)
                throw guard_error("geometric check of " + g.to_string() + " exceeds the hyperplane guard; use --skip-geometry");

    const auto verdicts = parallel_map(graphs, [&](const Graph& g) { return verify_graph(cfg, g, skip_geometry); });

    int passed = 0, differs = 0;
    for (const auto& v : verdicts) {
        passed += v.pass() ? 1 : 0;
        differs += v.dominant_cd_differs ? 1 : 0;
    }
    // Dominant (c,d) tables must differ somewhere once n >= 3 is swept.
    const bool need_negative = all_graphs && *all_graphs >= 3;
    const bool negative_ok = !need_negative || differs > 0;
    const bool ok = passed == static_cast<int>(verdicts.size()) && negative_ok;

    Json arr = Json::array();
    for (const auto& v : verdicts)
        arr.push_back({{"graph", v.g.to_string()},
                       {"charpoly", polynomial_json(v.chi)},
                       {"charpoly_equal", v.chi_equal},
                       {"dominant_by_c_equal", v.dominant_c_equal},
                       {"census_equal", v.census_equal},
                       {"geometry_checked", v.geometry_checked},
                       {"geometry_matches_combinatorial", v.geometry_matches},
                       {"dominant_by_cd_differs", v.dominant_cd_differs},
                       {"pass", v.pass()}});
    Json j{{"graphs", arr},
           {"passed", passed},
           {"total", verdicts.size()},
           {"negative_control", {{"required", need_negative}, {"graphs_with_differing_dominant_cd", differs}}},
           {"ok", ok}};

    std::ostringstream t;
    t << std::left << std::setw(24) << "graph" << std::setw(8) << "chi" << std::setw(10) << "dom(c)" << std::setw(10)
      << "(c,d)" << std::setw(10) << "geometry" << "dom(c,d) differs\n";
    auto mark = [](bool b) { return b ? "ok" : "FAIL"; };
    for (const auto& v : verdicts)
        t << std::left << std::setw(24) << v.g.to_string() << std::setw(8) << mark(v.chi_equal) << std::setw(10)
          << mark(v.dominant_c_equal) << std::setw(10) << mark(v.census_equal) << std::setw(10)
          << (v.geometry_checked ? mark(v.geometry_matches) : "skipped") << (v.dominant_cd_differs ? "yes" : "no") << "\n";
    t << passed << "/" << verdicts.size() << " graphs pass\n";
    t << "negative control: dominant (c,d) tables differ for " << differs << " graph(s)"
      << (need_negative ? (negative_ok ? " (required, ok)" : " (required, FAIL)") : "") << "\n";

    std::ostringstream c;
    c << "graph,charpoly_equal,dominant_by_c_equal,census_equal,geometry,dominant_by_cd_differs,pass\n";
    for (const auto& v : verdicts)
        c << v.g.to_string() << "," << v.chi_equal << "," << v.dominant_c_equal << "," << v.census_equal << ","
          << (v.geometry_checked ? (v.geometry_matches ? "1" : "0") : "skipped") << "," << v.dominant_cd_differs << ","
          << v.pass() << "\n";

    print(cfg, j, t.str(), c.str());
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// dominant

std::string arcs_string(const std::vector<Arc>& arcs)
{
    if (arcs.empty()) return "-";
    std::string s;
    for (auto [i, j] : arcs) s += (s.empty() ? "" : " ") + std::to_string(i) + std::to_string(j);
    return s;
}

int cmd_dominant(const Config& cfg)
{
    const Graph g = load_graph(cfg);
    const int n = g.n();
    const auto pairs = dominant_bijection(g);
    std::map<int, long long> by_c;
    for (const auto& p : pairs) ++by_c[p.ceilings];

    std::optional<std::string> rule;
    std::map<int, long long> expect;
    if (g == Graph::complete(n)) {
        rule = "narayana";
        for (int c = 0; c < n; ++c)
            expect[c] = static_cast<long long>(binomial(n, c) * binomial(n, c + 1) / n);
    } else if (g == Graph::chain(n)) {
        rule = "binomial";
        for (int c = 0; c < n; ++c) expect[c] = static_cast<long long>(binomial(n - 1, c));
    }
    if (rule)
        for (auto it = expect.begin(); it != expect.end();)
            it = it->second == 0 ? expect.erase(it) : std::next(it);
    const bool ok = !rule || expect == by_c;

    Json arr = Json::array();
    for (const auto& p : pairs)
        arr.push_back({{"c", p.ceilings},
                       {"shi", diagram_json(p.shi)},
                       {"ish", diagram_json(p.ish)},
                       {"shi_dof", shi_dof(p.shi)},
                       {"ish_dof", ish_dof(p.ish)}});
    Json counts = Json::array();
    for (const auto& [c, k] : by_c) counts.push_back({{"c", c}, {"count", k}});
    Json j{{"graph", g.to_string()}, {"pairs", arr}, {"by_c", counts}};
    if (rule) {
        Json e = Json::array();
        for (const auto& [c, k] : expect) e.push_back({{"c", c}, {"count", k}});
        j["expected"] = {{"rule", *rule}, {"by_c", e}};
    }
    j["ok"] = ok;

    std::ostringstream t;
    t << "dominant regions of Shi(" << g.to_string() << ") and Ish(" << g.to_string() << "): " << pairs.size() << " pairs\n";
    t << std::left << std::setw(4) << "c" << std::setw(20) << "shi arcs" << std::setw(20) << "ish eps" << std::setw(8)
      << "shi d" << "ish d\n";
    for (const auto& p : pairs) {
        std::string eps;
        for (int e : p.ish.eps) eps += (eps.empty() ? "" : ",") + std::to_string(e);
        t << std::left << std::setw(4) << p.ceilings << std::setw(20) << arcs_string(p.shi.pi.arcs()) << std::setw(20)
          << eps << std::setw(8) << shi_dof(p.shi) << ish_dof(p.ish) << "\n";
    }
    t << "count by c:";
    for (const auto& [c, k] : by_c) t << " " << c << ":" << k;
    t << "\n";
    if (rule) t << *rule << " check: " << (ok ? "ok" : "FAIL") << "\n";

    std::ostringstream c;
    c << "c,count\n";
    for (const auto& [cc, k] : by_c) c << cc << "," << k << "\n";

    print(cfg, j, t.str(), c.str());
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// partitions

TypeVector parse_type(const std::string& s)
{
    TypeVector t;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        t.r.push_back(detail::parse_uint(item, pos));
        if (pos != item.size()) throw Usage("bad type entry '" + item + "'");
    }
    t.n = static_cast<int>(t.r.size());
    if (!t.valid()) throw Usage("'" + s + "' is not the type of a partition of [" + std::to_string(t.n) + "]");
    return t;
}

constexpr int max_verify_n = 12;

void require_verifiable(int n)
{
    if (n > max_verify_n) throw guard_error("--verify enumerates partitions; limited to n <= " + std::to_string(max_verify_n));
}

int cmd_kreweras(const Config& cfg, const std::string& type, std::optional<int> d, bool verify)
{
    const TypeVector t = parse_type(type);
    const BigInt value = d ? rhoades_count(t, *d) : kreweras_count(t);
    std::optional<long long> oracle;
    if (verify) {
        require_verifiable(t.n);
        long long count = 0;
        for_each_nonnesting(t.n, [&](const SetPartition& p) {
            if (p.type() == t && (!d || p.connected_components() == *d)) ++count;
        });
        oracle = count;
    }
    const bool ok = !oracle || BigInt(*oracle) == value;
    Json j{{"type", t.r}, {"count", big_json(value)}};
    if (d) j["d"] = *d;
    if (oracle) j["enumerated"] = *oracle;
    j["ok"] = ok;
    std::ostringstream os;
    os << value;
    if (oracle) os << " (enumeration: " << *oracle << (ok ? ", agrees)" : ", DISAGREES)");
    os << "\n";
    std::ostringstream c;
    c << "count" << (oracle ? ",enumerated" : "") << "\n" << value;
    if (oracle) c << "," << *oracle;
    c << "\n";
    print(cfg, j, os.str(), c.str());
    return ok ? 0 : 1;
}

int cmd_stirling(const Config& cfg, bool verify)
{
    const Graph g = load_graph(cfg);
    const int n = g.n();
    const auto stir = g_stirling_numbers(g);
    std::vector<long long> oracle(static_cast<std::size_t>(n) + 1, 0);
    if (verify) {
        require_verifiable(n);
        for_each_g_partition(g, [&](const SetPartition& p) { ++oracle[static_cast<std::size_t>(p.block_count())]; });
    }
    bool ok = true;
    Json arr = Json::array();
    std::ostringstream t, c;
    t << "Stir(G,k) for G = " << g.to_string() << "\n";
    c << "k,stir" << (verify ? ",enumerated" : "") << "\n";
    for (int k = 1; k <= n; ++k) {
        const auto& v = stir[static_cast<std::size_t>(k)];
        Json e{{"k", k}, {"value", big_json(v)}};
        t << "  k=" << k << "  " << v;
        c << k << "," << v;
        if (verify) {
            const long long o = oracle[static_cast<std::size_t>(k)];
            e["enumerated"] = o;
            ok = ok && BigInt(o) == v;
            t << "  (enumeration " << o << ")";
            c << "," << o;
        }
        t << "\n";
        c << "\n";
        arr.push_back(e);
    }
    if (verify) t << (ok ? "enumeration agrees\n" : "ENUMERATION DISAGREES\n");
    print(cfg, Json{{"graph", g.to_string()}, {"stirling", arr}, {"ok", ok}}, t.str(), c.str());
    return ok ? 0 : 1;
}

int cmd_identity(const Config& cfg, int n)
{
    const auto s = stirling_identity_sides(n);
    const bool ok = s.lhs == s.rhs;
    std::ostringstream t, c;
    t << "(n+1)^(n-1) = " << s.lhs << ", sum_k Stir(n,k) n!/(n-k+1)! = " << s.rhs << ": " << (ok ? "holds" : "FAILS") << "\n";
    c << "n,lhs,rhs,holds\n" << n << "," << s.lhs << "," << s.rhs << "," << ok << "\n";
    print(cfg, Json{{"n", n}, {"lhs", big_json(s.lhs)}, {"rhs", big_json(s.rhs)}, {"holds", ok}}, t.str(), c.str());
    return ok ? 0 : 1;
}

int cmd_list(const Config& cfg, int n, bool nonnesting, bool use_graph)
{
    require_verifiable(n);
    std::vector<SetPartition> parts;
    if (use_graph) {
        const Graph g = load_graph(cfg);
        if (g.n() != n) throw Usage("--n and the graph disagree on n");
        parts = enumerate_g_partitions(g);
    } else {
        parts = enumerate_partitions(n);
    }
    if (nonnesting) std::erase_if(parts, [](const SetPartition& p) { return !p.is_nonnesting(); });
    Json arr = Json::array();
    std::ostringstream t, c;
    c << "partition,endpoint,blocks,components,nonnesting\n";
    for (const auto& p : parts) {
        const auto e = p.to_endpoint();
        arr.push_back({{"partition", p.to_string()},
                       {"endpoint", endpoint_json(e)},
                       {"blocks", p.block_count()},
                       {"components", p.connected_components()},
                       {"nonnesting", p.is_nonnesting()}});
        t << std::left << std::setw(28) << p.to_string() << std::setw(24) << e.to_string() << "k=" << p.block_count()
          << " d=" << p.connected_components() << (p.is_nonnesting() ? "" : " nesting") << "\n";
        c << "\"" << p.to_string() << "\"," << e.to_string() << "," << p.block_count() << "," << p.connected_components()
          << "," << p.is_nonnesting() << "\n";
    }
    t << parts.size() << " partitions\n";
    print(cfg, Json{{"n", n}, {"partitions", arr}, {"count", parts.size()}}, t.str(), c.str());
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact tools for deleted Shi and Ish hyperplane arrangements"};
    app.require_subcommand(1);
    Config cfg;
    std::string format = "table";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--seed", cfg.seed, "Seed for random:n graph specs");
    app.add_option("--max-hyperplanes", cfg.guards.max_geometry_hyperplanes, "Guard for region enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-mobius", cfg.guards.max_mobius_hyperplanes, "Guard for the intersection poset")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-sweep-n", cfg.guards.max_sweep_n, "Guard for finite-field point counts")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-labeling-n", cfg.max_labeling_n, "Guard for diagram enumeration")->check(CLI::PositiveNumber);

    const std::string graph_help = "Graph: complete:n, chain:n, empty:n, random:n or n;i-j,...";
    const std::string kind_help = "shi, ish or cox";

    auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial by several methods");
    std::string method = "all";
    charpoly->add_option("--graph", cfg.graph, graph_help)->required();
    charpoly->add_option("--arrangement", cfg.arrangement, kind_help);
    charpoly->add_option("--method", method, "all, closed, interpolated, mobius or product")
        ->check(CLI::IsMember({"all", "closed", "interpolated", "mobius", "product"}));

    auto* regions = app.add_subcommand("regions", "Census of regions by ceilings and degrees of freedom");
    bool dump = false, combinatorial_only = false, plot = false;
    regions->add_option("--graph", cfg.graph, graph_help)->required();
    regions->add_option("--arrangement", cfg.arrangement, kind_help);
    regions->add_flag("--dump", dump, "Emit regions and diagrams as JSON lines");
    regions->add_flag("--combinatorial-only", combinatorial_only, "Skip the geometric enumeration");
    regions->add_flag("--plot-data", plot, "Emit line and region data for plotting (n = 3)");

    auto* verify = app.add_subcommand("verify", "Check the Shi/Ish coincidences for one graph or all graphs on [n]");
    std::optional<int> all_graphs;
    bool skip_geometry = false;
    auto* vg = verify->add_option("--graph", cfg.graph, graph_help);
    verify->add_option("--all-graphs", all_graphs, "Every graph on [n], n <= 4")->excludes(vg);
    verify->add_flag("--skip-geometry", skip_geometry, "Use the combinatorial censuses only");

    auto* dominant = app.add_subcommand("dominant", "Bijection between dominant Shi and Ish regions");
    dominant->add_option("--graph", cfg.graph, graph_help)->required();

    auto* partitions = app.add_subcommand("partitions", "Set partition counts");
    partitions->require_subcommand(1);
    std::string type;
    int d = 1, n = 1;
    bool pverify = false, nonnesting = false, with_graph = false;
    auto* kreweras = partitions->add_subcommand("kreweras", "Nonnesting partitions of a given type");
    kreweras->add_option("--type", type, "Block-size multiplicities r1,...,rn")->required();
    kreweras->add_flag("--verify", pverify, "Cross-check by enumeration");
    auto* rhoades = partitions->add_subcommand("rhoades", "... with d connected components");
    rhoades->add_option("--type", type, "Block-size multiplicities r1,...,rn")->required();
    rhoades->add_option("--d", d, "Connected components")->required()->check(CLI::PositiveNumber);
    rhoades->add_flag("--verify", pverify, "Cross-check by enumeration");
    auto* stirling = partitions->add_subcommand("stirling", "G-Stirling numbers");
    stirling->add_option("--graph", cfg.graph, graph_help)->required();
    stirling->add_flag("--verify", pverify, "Cross-check by enumeration");
    auto* identity = partitions->add_subcommand("identity", "(n+1)^(n-1) = sum_k Stir(n,k) n!/(n-k+1)!");
    identity->add_option("--n", n, "n")->required()->check(CLI::PositiveNumber);
    auto* list = partitions->add_subcommand("list", "List partitions of [n]");
    list->add_option("--n", n, "n")->required()->check(CLI::PositiveNumber);
    list->add_flag("--nonnesting", nonnesting, "Only nonnesting partitions");
    list->add_option("--graph", cfg.graph, "Only G-partitions of this graph")->each([&](const std::string&) { with_graph = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    cfg.format = format == "json" ? Format::json : (format == "csv" ? Format::csv : Format::table);

    try {
        if (*charpoly) return cmd_charpoly(cfg, method);
        if (*regions) return cmd_regions(cfg, dump, combinatorial_only, plot);
        if (*verify) {
            if (!all_graphs && vg->count() == 0) throw Usage("verify needs --graph or --all-graphs");
            return cmd_verify(cfg, all_graphs, skip_geometry);
        }
        if (*dominant) return cmd_dominant(cfg);
        if (*kreweras) return cmd_kreweras(cfg, type, std::nullopt, pverify);
        if (*rhoades) return cmd_kreweras(cfg, type, d, pverify);
        if (*stirling) return cmd_stirling(cfg, pverify);
        if (*identity) return cmd_identity(cfg, n);
        if (*list) return cmd_list(cfg, n, nonnesting, with_graph);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const guard_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
