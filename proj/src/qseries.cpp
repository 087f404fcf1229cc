#include "padicmf/qseries.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "padicmf/parallel.hpp"

namespace padicmf {

QExpansion zero_series(const PadicContext& ctx)
{
    return QExpansion(std::vector<Scalar>(static_cast<std::size_t>(ctx.M) + 1, make_scalar(ctx, 0)));
}

QExpansion series_from_integers(const PadicContext& ctx, const std::vector<std::int64_t>& coeffs)
{
    std::vector<Scalar> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs)
        c.push_back(make_scalar(ctx, v));
    return QExpansion(std::move(c));
}

int series_prec(const QExpansion& g)
{
    int prec = g[0].prec();
    for (const auto& a : g.coeffs())
        prec = std::min(prec, a.prec());
    return prec;
}

bool congruent(const QExpansion& a, const QExpansion& b, int e)
{
    const int L = std::min(a.truncation(), b.truncation());
    for (int n = 0; n <= L; ++n)
        if (!congruent(a[static_cast<std::size_t>(n)], b[static_cast<std::size_t>(n)], e))
            return false;
    return true;
}

QExpansion theta(const QExpansion& g) { return theta_power(g, 1); }

QExpansion theta_power(const QExpansion& g, int t)
{
    if (t < 0)
        fail(ErrorCode::InvalidArgument, "theta power must be >= 0");
    std::vector<Scalar> c(g.coeffs());
    parallel_for(c.size(), [&](std::size_t n) {
        const PadicInt w = PadicInt(c[n].p(), c[n].prec(), static_cast<std::int64_t>(n)).pow(static_cast<std::uint64_t>(t));
        c[n] *= w;
    });
    return QExpansion(std::move(c));
}

QExpansion u_p(const QExpansion& g)
{
    const std::uint32_t p = g[0].p();
    const int L = g.truncation() / static_cast<int>(p);
    std::vector<Scalar> c;
    c.reserve(static_cast<std::size_t>(L) + 1);
    for (int n = 0; n <= L; ++n)
        c.push_back(g[static_cast<std::size_t>(n) * p]);
    return QExpansion(std::move(c));
}

QExpansion v_p(const QExpansion& g, int M)
{
    const auto p = static_cast<std::int64_t>(g[0].p());
    const std::int64_t known = p * g.truncation() + p - 1;
    const auto L = static_cast<std::size_t>(std::min<std::int64_t>(M, known));
    const Scalar zero = Scalar::zero(g[0].p(), 0, g[0].prec());
    std::vector<Scalar> c(L + 1, zero);
    for (std::size_t n = 0; n * static_cast<std::size_t>(p) <= L; ++n)
        c[n * static_cast<std::size_t>(p)] = g[n];
    return QExpansion(std::move(c));
}

namespace {

struct SigmaCache {
    std::mutex mutex;
    std::map<std::tuple<std::uint32_t, int, int, int>, std::vector<PadicInt>> values;
};

SigmaCache& sigma_cache()
{
    static SigmaCache cache;
    return cache;
}

void require_positive_k(int k)
{
    if (k < 1)
        fail(ErrorCode::InvalidArgument, "weight must be >= 1");
}

} // namespace

std::vector<PadicInt> divisor_power_sums(const PadicContext& ctx, int e)
{
    if (e < 0)
        fail(ErrorCode::InvalidArgument, "divisor power must be >= 0");
    const auto key = std::make_tuple(ctx.p, ctx.N, ctx.M, e);
    auto& cache = sigma_cache();
    {
        std::lock_guard lock(cache.mutex);
        if (auto it = cache.values.find(key); it != cache.values.end())
            return it->second;
    }
    const std::uint64_t mod = ctx.modulus();
    const auto M = static_cast<std::size_t>(ctx.M);
    std::vector<std::uint64_t> s(M + 1, 0);
    for (std::size_t d = 1; d <= M; ++d) {
        const std::uint64_t w = PadicInt(ctx, static_cast<std::int64_t>(d)).pow(static_cast<std::uint64_t>(e)).residue();
        for (std::size_t n = d; n <= M; n += d) {
            s[n] += w;
            if (s[n] >= mod)
                s[n] -= mod;
        }
    }
    std::vector<PadicInt> out;
    out.reserve(M + 1);
    for (auto r : s)
        out.push_back(PadicInt::from_residue(ctx.p, ctx.N, r));
    std::lock_guard lock(cache.mutex);
    cache.values.emplace(key, out);
    return out;
}

namespace {

/// constant + sum_{n>=1} factor * 2 sigma_{k-1}(n) q^n.
QExpansion sigma_series(const PadicContext& ctx, const PadicInt& constant, const PadicInt& factor, int k)
{
    const auto sigma = divisor_power_sums(ctx, k - 1);
    std::vector<Scalar> c(sigma.size(), make_scalar(ctx, 0));
    c[0] = Scalar(constant);
    const PadicInt twice = factor.scaled(2);
    parallel_for(c.size() - 1, [&](std::size_t i) { c[i + 1] = Scalar(twice * sigma[i + 1]); });
    return QExpansion(std::move(c));
}

} // namespace

QExpansion eisenstein_2G(const PadicContext& ctx, int k)
{
    require_positive_k(k);
    if (k == 1)
        fail(ErrorCode::InvalidArgument, "2G_1 is not defined; use the measure path for the k = 1 moment");
    if (k % 2 == 1)
        return zero_series(ctx);
    const PadicInt constant = reduce_rational(zeta_one_minus(k), ctx);
    return sigma_series(ctx, constant, PadicInt(ctx, 1), k);
}

QExpansion eisenstein_moment_series(const PadicContext& ctx, const PadicInt& a, int k)
{
    require_positive_k(k);
    if (!a.is_unit())
        fail(ErrorCode::NotUnit, a.to_string() + " is not a unit");
    const BigInt r(a.residue());
    const BigRational constant = (BigRational(1) - BigRational(pow(r, static_cast<unsigned>(k)))) *
                                 (-bernoulli(k) / k);
    const PadicInt factor = PadicInt(ctx, 1) - a.with_prec(ctx.N).pow(static_cast<std::uint64_t>(k));
    return sigma_series(ctx, reduce_rational(constant, ctx), factor, k);
}

PeriodicTable periodic_table(const ContinuousFn& f)
{
    const StepPoly s = to_step(f);
    PeriodicTable t{s.level, {}};
    t.values.reserve(s.polys.size());
    for (const auto& poly : s.polys) {
        for (std::size_t j = 1; j < poly.size(); ++j)
            if (!poly[j].is_zero())
                fail(ErrorCode::InvalidArgument, "function is not locally constant");
        const Scalar v = poly.empty() ? make_scalar(f.context(), 0) : poly[0];
        if (!v.is_rational())
            fail(ErrorCode::InvalidArgument, "locally constant values must lie in Z_p");
        t.values.emplace_back(v.as_padic().centered());
    }
    return t;
}

BigRational lvalue_periodic(int k, const ContinuousFn& f)
{
    if (k < 1)
        fail(ErrorCode::InvalidArgument, "k must be >= 1");
    const PeriodicTable t = periodic_table(f);
    const BigInt F = pow(BigInt(f.context().p), static_cast<unsigned>(t.level));
    BigRational sum = 0;
    for (std::size_t c = 0; c < t.values.size(); ++c)
        if (t.values[c] != 0)
            sum += BigRational(t.values[c]) * bernoulli_polynomial(k, BigRational(BigInt(c), F));
    const BigRational bkf = BigRational(pow(F, static_cast<unsigned>(k - 1))) * sum;
    return -bkf / k;
}

QExpansion twisted_divisor_series(const PadicContext& ctx, int k, const ContinuousFn& f)
{
    if (k < 1)
        fail(ErrorCode::InvalidArgument, "k must be >= 1");
    const auto M = static_cast<std::size_t>(ctx.M);
    std::vector<Scalar> weights(M + 1, make_scalar(ctx, 0));
    parallel_for(M, [&](std::size_t i) {
        const auto d = static_cast<std::int64_t>(i + 1);
        weights[i + 1] = evaluate(f, d) * PadicInt(ctx, d).pow(static_cast<std::uint64_t>(k - 1)).scaled(2);
    });
    std::vector<Scalar> c(M + 1, make_scalar(ctx, 0));
    for (std::size_t d = 1; d <= M; ++d)
        for (std::size_t n = d; n <= M; n += d)
            c[n] += weights[d];
    return QExpansion(std::move(c));
}

QExpansion eisenstein_2G_twisted(const PadicContext& ctx, int k, const ContinuousFn& f)
{
    if (k < 2)
        fail(ErrorCode::InvalidArgument, "twisted Eisenstein series need k >= 2");
    const PadicInt constant = reduce_rational(lvalue_periodic(k, f), ctx);
    QExpansion g = twisted_divisor_series(ctx, k, f);
    g[0] = Scalar(constant);
    return g;
}

} // namespace padicmf
