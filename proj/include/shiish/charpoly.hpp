#pragma once

#include "arrangement.hpp"
#include "guards.hpp"
#include "linalg.hpp"
#include "parallel.hpp"
#include "partitions.hpp"
#include "polynomial.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace shiish {

// ---------------------------------------------------------------------------
// Finite field method.

/// Number of points of F_p^n lying on no hyperplane of `a` (coefficients
/// reduced mod p). Requires p prime and p > n.
///
/// Coordinates are assigned depth-first and each hyperplane is tested as soon
/// as its last nonzero coordinate is fixed, so for arrangements containing
/// Cox(n) only injective vectors are ever completed. When every normal is
/// orthogonal to (1,...,1) the count is p times the count on the slice x_1 = 0.
inline BigInt count_complement_points(const Arrangement& a, std::int64_t p, const Guards& guards = {})
{
    const int n = a.n();
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (p <= n) throw std::invalid_argument("prime " + std::to_string(p) + " must exceed n = " + std::to_string(n));
    if (n > guards.max_sweep_n)
        throw guard_error("finite-field sweep limited to n <= " + std::to_string(guards.max_sweep_n));

    struct Reduced {
        std::vector<std::int64_t> a;
        std::int64_t b;
    };
    std::vector<std::vector<Reduced>> by_last(static_cast<std::size_t>(n));
    bool translation_invariant = true;
    for (const auto& h : a.hyperplanes()) {
        Reduced r{std::vector<std::int64_t>(static_cast<std::size_t>(n)), ((h.b % p) + p) % p};
        int last = 0;
        long long sum = 0;
        for (int i = 0; i < n; ++i) {
            const long long c = h.a[static_cast<std::size_t>(i)];
            sum += c;
            r.a[static_cast<std::size_t>(i)] = ((c % p) + p) % p;
            if (c != 0) last = i;
        }
        if (sum != 0) translation_invariant = false;
        by_last[static_cast<std::size_t>(last)].push_back(std::move(r));
    }

    std::vector<std::int64_t> x(static_cast<std::size_t>(n), 0);
    std::uint64_t count = 0;
    auto dfs = [&](auto&& self, int k) -> void {
        if (k == n) {
            ++count;
            return;
        }
        const std::int64_t lo = 0, hi = (k == 0 && translation_invariant) ? 1 : p;
        for (std::int64_t v = lo; v < hi; ++v) {
            x[static_cast<std::size_t>(k)] = v;
            bool ok = true;
            for (const auto& h : by_last[static_cast<std::size_t>(k)]) {
                std::int64_t s = 0;
                for (int i = 0; i <= k; ++i) s = (s + h.a[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)]) % p;
                if (s == h.b) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, k + 1);
        }
    };
    dfs(dfs, 0);
    BigInt total = count;
    if (translation_invariant) total *= p;
    return total;
}

/// Coefficients (low degree first) of the unique polynomial of degree < |xs|
/// through the points (xs[i], ys[i]), by Lagrange interpolation over Q.
inline std::vector<Rational> lagrange_coefficients(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys)
{
    const std::size_t m = xs.size();
    std::vector<Rational> out(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Rational> basis{1};
        Rational denom = 1;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            std::vector<Rational> next(basis.size() + 1, 0);
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] += basis[d];
                next[d] -= basis[d] * Rational(xs[j]);
            }
            basis = std::move(next);
            denom *= Rational(xs[i] - xs[j]);
        }
        const Rational scale = Rational(ys[i]) / denom;
        for (std::size_t d = 0; d < m; ++d) out[d] += basis[d] * scale;
    }
    return out;
}

struct InterpolationReport {
    IntPolynomial poly;
    std::vector<std::int64_t> primes;
    std::vector<BigInt> counts;
};

/// chi_A by counting complement points at the n+1 smallest primes above n and
/// interpolating. Throws std::runtime_error("prime threshold too low") if the
/// result is not a monic integer polynomial of degree n.
inline InterpolationReport charpoly_interpolation_report(const Arrangement& a, const Guards& guards = {})
{
    const int n = a.n();
    InterpolationReport rep;
    rep.primes = primes_above(n, n + 1);
    rep.counts = parallel_map(rep.primes, [&](std::int64_t p) { return count_complement_points(a, p, guards); });
    std::vector<BigInt> xs(rep.primes.begin(), rep.primes.end());
    const auto q = lagrange_coefficients(xs, rep.counts);
    std::vector<BigInt> coeffs;
    for (const auto& c : q) {
        if (!is_integer(c)) throw std::runtime_error("prime threshold too low: non-integer coefficient");
        coeffs.push_back(numerator(c));
    }
    rep.poly = IntPolynomial(std::move(coeffs));
    if (rep.poly.degree() != n || rep.poly.leading() != 1)
        throw std::runtime_error("prime threshold too low: interpolant is not monic of degree n");
    return rep;
}

inline IntPolynomial charpoly_interpolated(const Arrangement& a, const Guards& guards = {})
{
    return charpoly_interpolation_report(a, guards).poly;
}

// ---------------------------------------------------------------------------
// Closed forms.

/// p * sum_{k=0}^{n-1} (-1)^k Stir(G, n-k) (p-k-1)(p-k-2)...(p-n+1).
/// This is the characteristic polynomial of both Shi(G) and Ish(G).
inline IntPolynomial charpoly_closed_form(const Graph& g)
{
    const int n = g.n();
    const auto stir = g_stirling_numbers(g);
    IntPolynomial sum;
    for (int k = 0; k <= n - 1; ++k) {
        IntPolynomial term = shifted_product(k + 1, n - 1) * stir[static_cast<std::size_t>(n - k)];
        if (k % 2) term *= BigInt(-1);
        sum += term;
    }
    return IntPolynomial::variable() * sum;
}

/// Raised by charpoly_product_form when i < j < k, jk in G, but ik not in G.
class closure_violation : public std::invalid_argument {
public:
    closure_violation(int i, int j, int k)
        : std::invalid_argument("graph is not closed: " + std::to_string(j) + std::to_string(k) + " is an edge but " +
                                std::to_string(i) + std::to_string(k) + " is not (triple " + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) + ")"),
          i(i), j(j), k(k)
    {
    }
    int i, j, k;
};

/// p * prod_{i=1}^{n-1} (p - d_i - i), d_i the outdegree of i. Valid when
/// jk in G and i < j < k imply ik in G. The variant with ij in place of jk
/// is not enough: G = {23} on [3] satisfies it but has chi = p(p-2)^2.
inline IntPolynomial charpoly_product_form(const Graph& g)
{
    const int n = g.n();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                if (g.has_edge(j, k) && !g.has_edge(i, k)) throw closure_violation(i, j, k);
    IntPolynomial r = IntPolynomial::variable();
    for (int i = 1; i <= n - 1; ++i) r = r * IntPolynomial::linear(g.outdegree(i) + i);
    return r;
}

// ---------------------------------------------------------------------------
// Intersection poset.

/// A nonempty intersection of hyperplanes: its RREF system [M | c], its
/// dimension, the hyperplanes containing it, and mu(R^n, X).
struct Flat {
    RationalMatrix system;
    int dim = 0;
    std::uint64_t containing = 0;
    BigInt mobius = 0;
};

struct IntersectionPoset {
    int n = 0;
    std::vector<Flat> flats;  // flats[0] is R^n; ordered by decreasing dimension

    /// X <= Y (Y below X in reverse inclusion) iff Y is contained in X.
    bool leq(std::size_t x, std::size_t y) const
    {
        return (flats[x].containing & flats[y].containing) == flats[x].containing;
    }
};

namespace detail {

inline std::string flat_key(const RationalMatrix& m)
{
    std::string k;
    for (const auto& row : m) {
        for (const auto& v : row) k += to_string(v) + ",";
        k += ";";
    }
    return k;
}

/// RREF of [rows | rhs]; empty optional if the system is inconsistent.
inline std::optional<RationalMatrix> reduce_affine(RationalMatrix m, std::size_t n)
{
    const auto piv = rref(m);
    for (auto c : piv)
        if (c == n) return std::nullopt;
    return m;
}

inline std::vector<Rational> augmented_row(const Hyperplane& h)
{
    std::vector<Rational> r;
    for (int c : h.a) r.emplace_back(c);
    r.emplace_back(h.b);
    return r;
}

} // namespace detail

inline IntersectionPoset intersection_poset(const Arrangement& a, const Guards& guards = {})
{
    if (a.size() > guards.max_mobius_hyperplanes || a.size() > 63)
        throw guard_error("intersection poset limited to " + std::to_string(guards.max_mobius_hyperplanes) +
                          " hyperplanes (arrangement has " + std::to_string(a.size()) + ")");
    const auto n = static_cast<std::size_t>(a.n());
    IntersectionPoset poset;
    poset.n = a.n();
    poset.flats.push_back({RationalMatrix{}, a.n(), 0, 1});

    auto containing_set = [&](const RationalMatrix& sys) {
        std::uint64_t mask = 0;
        for (std::size_t h = 0; h < a.size(); ++h) {
            RationalMatrix m = sys;
            m.push_back(detail::augmented_row(a[h]));
            auto red = detail::reduce_affine(std::move(m), n);
            if (red && red->size() == sys.size()) mask |= std::uint64_t{1} << h;
        }
        return mask;
    };

    std::map<std::string, std::size_t> seen;
    std::size_t level_begin = 0;
    while (level_begin < poset.flats.size()) {
        const std::size_t level_end = poset.flats.size();
        for (std::size_t x = level_begin; x < level_end; ++x) {
            for (std::size_t h = 0; h < a.size(); ++h) {
                if (poset.flats[x].containing >> h & 1U) continue;
                RationalMatrix m = poset.flats[x].system;
                m.push_back(detail::augmented_row(a[h]));
                auto red = detail::reduce_affine(std::move(m), n);
                if (!red) continue;
                auto key = detail::flat_key(*red);
                if (seen.count(key)) continue;
                seen.emplace(key, poset.flats.size());
                Flat f;
                f.dim = a.n() - static_cast<int>(red->size());
                f.containing = containing_set(*red);
                f.system = std::move(*red);
                poset.flats.push_back(std::move(f));
            }
        }
        level_begin = level_end;
    }

    // Flats are generated level by level, so every flat strictly above X
    // (containing X) precedes it.
    for (std::size_t x = 1; x < poset.flats.size(); ++x) {
        BigInt s = 0;
        for (std::size_t y = 0; y < x; ++y)
            if (poset.flats[y].containing != poset.flats[x].containing && poset.leq(y, x)) s += poset.flats[y].mobius;
        poset.flats[x].mobius = -s;
    }
    return poset;
}

/// sum over flats X of mu(R^n, X) p^dim(X).
inline IntPolynomial charpoly_via_mobius(const Arrangement& a, const Guards& guards = {})
{
    const auto poset = intersection_poset(a, guards);
    std::vector<BigInt> coeffs(static_cast<std::size_t>(a.n()) + 1, 0);
    for (const auto& f : poset.flats) coeffs[static_cast<std::size_t>(f.dim)] += f.mobius;
    return IntPolynomial(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Zaslavsky evaluations.

/// Number of regions: (-1)^n chi(-1).
inline BigInt zaslavsky_regions(const IntPolynomial& chi, int n)
{
    BigInt v = chi.evaluate(BigInt(-1));
    return n % 2 ? BigInt(-v) : v;
}

/// Number of relatively bounded regions: (-1)^r chi(1), r the rank.
inline BigInt zaslavsky_rel_bounded(const IntPolynomial& chi, int r)
{
    BigInt v = chi.evaluate(BigInt(1));
    return r % 2 ? BigInt(-v) : v;
}

} // namespace shiish
