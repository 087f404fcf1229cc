#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the library's Bernoulli, divisor-sum or Eisenstein code.

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Bernoulli numbers by the Akiyama-Tanigawa triangle, with B_1 = -1/2.
inline std::vector<Rat> bernoulli_numbers(int n)
{
    std::vector<Rat> out;
    std::vector<Rat> a(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        a[m] = Rat(1, m + 1);
        for (int j = m; j >= 1; --j)
            a[j - 1] = Rat(j) * (a[j - 1] - a[j]);
        out.push_back(a[0]);
    }
    if (n >= 1)
        out[1] = -out[1];
    return out;
}

inline Rat bernoulli(int k) { return bernoulli_numbers(k)[static_cast<std::size_t>(k)]; }

inline Int ipow(const Int& b, int e)
{
    Int r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

/// sigma_e(n) by trial division.
inline Int sigma(std::int64_t n, int e)
{
    Int acc = 0;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0)
            acc += ipow(Int(d), e);
    return acc;
}

/// Number of divisors of n.
inline std::int64_t tau(std::int64_t n)
{
    std::int64_t c = 0;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0)
            ++c;
    return c;
}

/// (1 - a^k)(-B_k / k) as an exact rational.
inline Rat regularized_zeta(std::int64_t a, int k)
{
    return Rat(1 - ipow(Int(a), k)) * (-bernoulli(k) / k);
}

/// x mod p^N for an exact rational with p-free denominator, as a residue in [0, p^N).
/// Returns false when the denominator is divisible by p.
inline bool reduce(const Rat& x, std::uint64_t p, int N, std::uint64_t& out)
{
    const Int mod = ipow(Int(p), N);
    Int num = numerator(x);
    Int den = denominator(x);
    if (den % p == 0)
        return false;
    // Invert den modulo p^N by brute-force extended Euclid on big integers.
    Int r0 = mod, r1 = ((den % mod) + mod) % mod, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    Int inv = ((t0 % mod) + mod) % mod;
    Int v = ((num % mod) + mod) % mod * inv % mod;
    out = v.convert_to<std::uint64_t>();
    return true;
}

/// Coefficient n >= 1 of the Eisenstein measure on an integer-valued f:
/// 2 sum_{d|n} [f(d) - a f(a d)], as an exact integer.
inline Int eisenstein_coefficient(std::int64_t n, std::int64_t a, const std::function<Int(std::int64_t)>& f)
{
    Int acc = 0;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0)
            acc += f(d) - Int(a) * f(a * d);
    return 2 * acc;
}

/// Smallest integer g >= 2 that generates (Z/p^2)^x.
inline std::int64_t generator_mod_p2(std::int64_t p)
{
    const std::int64_t m = p * p;
    const std::int64_t order = p * (p - 1);
    for (std::int64_t g = 2;; ++g) {
        if (g % p == 0)
            continue;
        std::int64_t x = 1;
        std::int64_t k = 0;
        do {
            x = x * g % m;
            ++k;
        } while (x != 1);
        if (k == order)
            return g;
    }
}

} // namespace oracle
