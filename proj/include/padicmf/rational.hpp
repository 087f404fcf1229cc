#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "padicmf/context.hpp"
#include "padicmf/padic_int.hpp"

namespace padicmf {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// v_p(n); n must be nonzero.
int valuation(const BigInt& n, std::uint32_t p);

/// numerator / denominator as an element of Z_p modulo p^(N - d), where d is
/// v_p(denominator) cancelled against the numerator. The fraction need not be
/// in lowest terms. Throws NotPIntegral when v_p(den) > v_p(num).
PadicInt reduce_rational(const BigInt& numerator, const BigInt& denominator, const PadicContext& ctx);
PadicInt reduce_rational(const BigRational& r, const PadicContext& ctx);

/// Exact Bernoulli number B_k (B_1 = -1/2), from the recurrence
/// sum_{j<=k} C(k+1, j) B_j = 0. Memoized; safe to call from several threads.
BigRational bernoulli(int k);

/// B_k(x) = sum_j C(k, j) B_j x^(k-j).
BigRational bernoulli_polynomial(int k, const BigRational& x);

BigInt binomial(std::int64_t n, std::int64_t k);

/// zeta(1-k) = -B_k / k for k >= 2.
BigRational zeta_one_minus(int k);

std::string to_string(const BigRational& r);

} // namespace padicmf
