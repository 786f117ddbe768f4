#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace shiish {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n)
{
    if (n < 0) throw std::domain_error("factorial of negative integer");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline BigInt ipow(const BigInt& base, unsigned e)
{
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

inline bool is_prime(std::int64_t p)
{
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// The `count` smallest primes strictly greater than `above`.
inline std::vector<std::int64_t> primes_above(std::int64_t above, int count)
{
    std::vector<std::int64_t> out;
    for (std::int64_t q = above + 1; static_cast<int>(out.size()) < count; ++q)
        if (is_prime(q)) out.push_back(q);
    return out;
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// "p/q" (or "p" when integral); the wire format used for witness points.
inline std::string to_string(const Rational& q)
{
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const BigInt& z) { return z.str(); }

} // namespace shiish
