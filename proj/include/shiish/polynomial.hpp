#pragma once

#include "numeric.hpp"

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace shiish {

/// Dense integer polynomial in one variable, coefficients low degree first.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long long> coeffs)
    {
        for (long long c : coeffs) coeffs_.emplace_back(c);
        trim();
    }
    explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPolynomial constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }
    /// The monomial p - root.
    static IntPolynomial linear(const BigInt& root) { return IntPolynomial(std::vector<BigInt>{-root, 1}); }
    static IntPolynomial variable() { return IntPolynomial{0, 1}; }

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    BigInt coeff(int i) const
    {
        if (i < 0 || i > degree()) return 0;
        return coeffs_[static_cast<std::size_t>(i)];
    }
    BigInt leading() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

    template <typename T>
    T evaluate(const T& x) const
    {
        T acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
        return acc;
    }

    IntPolynomial& operator+=(const IntPolynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    IntPolynomial& operator-=(const IntPolynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    IntPolynomial& operator*=(const BigInt& s)
    {
        for (auto& c : coeffs_) c *= s;
        trim();
        return *this;
    }
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPolynomial(std::move(c));
    }

    /// Exact division by the monic linear factor (p - root); returns
    /// {quotient, remainder}.
    std::pair<IntPolynomial, BigInt> divide_linear(const BigInt& root) const
    {
        if (is_zero()) return {{}, 0};
        std::vector<BigInt> q(coeffs_.size() - 1, 0);
        BigInt carry = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            carry = carry * root + coeffs_[i];
            if (i > 0) q[i - 1] = carry;
        }
        return {IntPolynomial(std::move(q)), carry};
    }

    /// Expanded form, e.g. "p^3 - 6*p^2 + 9*p".
    std::string to_string(const std::string& var = "p") const
    {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            BigInt c = coeffs_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            const bool neg = c < 0;
            if (neg) c = -c;
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            const bool unit = (c == 1 && i > 0);
            if (!unit) s += c.str();
            if (i > 0) {
                if (!unit) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

    /// Best-effort factorization over the integers by extracting integer
    /// roots, e.g. "p*(p - 3)^2" or "p*(p^2 - 5*p + 7)". Falls back to the
    /// expanded form when the polynomial is not monic.
    std::string factored_hint(const std::string& var = "p") const
    {
        if (is_zero() || leading() != 1) return to_string(var);
        std::vector<std::pair<BigInt, int>> roots;
        IntPolynomial rest = *this;
        auto push_root = [&](const BigInt& r) {
            if (!roots.empty() && roots.back().first == r)
                ++roots.back().second;
            else
                roots.push_back({r, 1});
        };
        while (rest.degree() >= 1 && rest.coeffs_[0] == 0) {
            rest = rest.divide_linear(0).first;
            push_root(0);
        }
        bool progress = true;
        while (progress && rest.degree() >= 1) {
            progress = false;
            BigInt c0 = abs(rest.coeffs_[0]);
            // Candidate roots are the divisors of the constant term.
            for (BigInt d = 1; d * d <= c0 && !progress; ++d) {
                if (c0 % d != 0) continue;
                for (const BigInt& cand : {d, BigInt(-d), BigInt(c0 / d), BigInt(-(c0 / d))}) {
                    auto [q, rem] = rest.divide_linear(cand);
                    if (rem == 0) {
                        rest = q;
                        push_root(cand);
                        progress = true;
                        break;
                    }
                }
            }
        }
        std::sort(roots.begin(), roots.end());
        std::string s;
        auto append = [&](const std::string& factor, int mult, bool bare) {
            if (!s.empty()) s += "*";
            if (bare)
                s += factor;
            else
                s += "(" + factor + ")";
            if (mult > 1) s += "^" + std::to_string(mult);
        };
        for (const auto& [r, m] : roots) {
            if (r == 0)
                append(var, m, true);
            else
                append(var + (r > 0 ? " - " : " + ") + BigInt(abs(r)).str(), m, false);
        }
        if (rest.degree() >= 1) append(rest.to_string(var), 1, false);
        if (s.empty()) return rest.to_string(var);
        return s;
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
    friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& q) { return os << q.to_string(); }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

/// (p - lo)(p - lo - 1)...(p - hi), or 1 when lo > hi.
inline IntPolynomial shifted_product(int lo, int hi)
{
    IntPolynomial r = IntPolynomial::constant(1);
    for (int m = lo; m <= hi; ++m) r = r * IntPolynomial::linear(m);
    return r;
}

} // namespace shiish
