#include "padicmf/rational.hpp"

#include <mutex>
#include <vector>

#include "padicmf/errors.hpp"

namespace padicmf {

int valuation(const BigInt& n, std::uint32_t p)
{
    if (n == 0)
        fail(ErrorCode::InvalidArgument, "valuation of zero");
    BigInt m = abs(n);
    int v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

namespace {

std::uint64_t reduce_mod(const BigInt& n, std::uint64_t modulus)
{
    BigInt r = n % modulus;
    if (r < 0)
        r += modulus;
    return r.convert_to<std::uint64_t>();
}

} // namespace

PadicInt reduce_rational(const BigInt& numerator, const BigInt& denominator, const PadicContext& ctx)
{
    if (denominator == 0)
        fail(ErrorCode::InvalidArgument, "zero denominator");
    if (numerator == 0)
        return PadicInt::zero(ctx.p, ctx.N);
    const int d = valuation(denominator, ctx.p);
    const int vn = valuation(numerator, ctx.p);
    if (d > vn)
        fail(ErrorCode::NotPIntegral, "denominator has v_p = " + std::to_string(d) + " > v_p(numerator) = " +
                                          std::to_string(vn));
    const int prec = ctx.N - d;
    if (prec <= 0)
        return PadicInt::zero(ctx.p, 0);
    const BigInt pd = pow(BigInt(ctx.p), static_cast<unsigned>(d));
    const std::uint64_t modulus = ipow(ctx.p, prec);
    const std::uint64_t num = reduce_mod(numerator / pd, modulus);
    const std::uint64_t den = reduce_mod(denominator / pd, modulus);
    return PadicInt::from_residue(ctx.p, prec, mulmod(num, invmod(den, modulus), modulus));
}

PadicInt reduce_rational(const BigRational& r, const PadicContext& ctx)
{
    return reduce_rational(numerator(r), denominator(r), ctx);
}

BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0)
        return 0;
    BigInt r = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        r *= BigInt(n - i);
        r /= BigInt(i + 1);
    }
    return r;
}

namespace {

struct BernoulliTable {
    std::mutex mutex;
    std::vector<BigRational> values{BigRational(1)};
};

BernoulliTable& bernoulli_table()
{
    static BernoulliTable table;
    return table;
}

} // namespace

BigRational bernoulli(int k)
{
    if (k < 0)
        fail(ErrorCode::InvalidArgument, "Bernoulli index must be >= 0");
    auto& table = bernoulli_table();
    std::lock_guard lock(table.mutex);
    auto& b = table.values;
    while (static_cast<int>(b.size()) <= k) {
        const int m = static_cast<int>(b.size());
        // (m+1) B_m = -sum_{j<m} C(m+1, j) B_j
        BigRational s = 0;
        for (int j = 0; j < m; ++j)
            s += BigRational(binomial(m + 1, j)) * b[j];
        b.push_back(-s / (m + 1));
    }
    return b[k];
}

BigRational bernoulli_polynomial(int k, const BigRational& x)
{
    BigRational result = 0;
    BigRational xpow = 1;
    for (int j = k; j >= 0; --j) {
        result += BigRational(binomial(k, j)) * bernoulli(j) * xpow;
        xpow *= x;
    }
    return result;
}

BigRational zeta_one_minus(int k)
{
    if (k < 2)
        fail(ErrorCode::InvalidArgument, "zeta(1-k) needs k >= 2 here");
    return -bernoulli(k) / k;
}

std::string to_string(const BigRational& r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace padicmf
