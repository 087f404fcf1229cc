#include "padicmf/measures.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "padicmf/circle_action.hpp"
#include "padicmf/errors.hpp"
#include "padicmf/parallel.hpp"
#include "padicmf/rational.hpp"

namespace padicmf {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

// --- values -----------------------------------------------------------------

MeasureValue operator+(const MeasureValue& x, const MeasureValue& y)
{
    if (const auto* a = std::get_if<Scalar>(&x))
        if (const auto* b = std::get_if<Scalar>(&y))
            return *a + *b;
    if (const auto* a = std::get_if<QExpansion>(&x))
        if (const auto* b = std::get_if<QExpansion>(&y))
            return *a + *b;
    fail(ErrorCode::InvalidArgument, "cannot add a scalar to a q-expansion");
}

MeasureValue scale(const Scalar& c, const MeasureValue& x)
{
    if (const auto* a = std::get_if<Scalar>(&x))
        return c * *a;
    return std::get<QExpansion>(x).scaled(c);
}

int value_prec(const MeasureValue& x)
{
    if (const auto* a = std::get_if<Scalar>(&x))
        return a->prec();
    return series_prec(std::get<QExpansion>(x));
}

const QExpansion& as_series(const MeasureValue& x)
{
    if (const auto* g = std::get_if<QExpansion>(&x))
        return *g;
    fail(ErrorCode::InvalidArgument, "measure value is a scalar, not a q-expansion");
}

const Scalar& as_scalar(const MeasureValue& x)
{
    if (const auto* a = std::get_if<Scalar>(&x))
        return *a;
    fail(ErrorCode::InvalidArgument, "measure value is a q-expansion, not a scalar");
}

// --- construction -----------------------------------------------------------

Measure::Measure(const PadicContext& ctx, Variant v) : ctx_(ctx), node_(std::make_shared<const Variant>(std::move(v))) {}

bool Measure::series_valued() const
{
    return std::visit(overloaded{
                          [](const AmiceScalar&) { return false; },
                          [](const Dirac&) { return false; },
                          [](const LinearCombination& m) {
                              return !m.terms.empty() && m.terms.front().second.series_valued();
                          },
                          [](const auto&) { return true; },
                      },
                      variant());
}

namespace measure {

Measure amice(const PadicContext& ctx, std::vector<Scalar> b)
{
    if (b.empty())
        fail(ErrorCode::InvalidArgument, "an Amice measure needs b_0");
    return Measure(ctx, Measure::AmiceScalar{std::move(b)});
}

Measure amice_series(const PadicContext& ctx, std::vector<QExpansion> b)
{
    if (b.empty())
        fail(ErrorCode::InvalidArgument, "an Amice measure needs b_0");
    return Measure(ctx, Measure::AmiceSeries{std::move(b)});
}

Measure eisenstein(const PadicContext& ctx, const PadicInt& a, int m_max)
{
    if (!a.is_unit())
        fail(ErrorCode::NotUnit, a.to_string() + " is not a unit");
    return Measure(ctx, Measure::Eisenstein{a, m_max});
}

Measure dirac(const PadicContext& ctx, std::int64_t c) { return Measure(ctx, Measure::Dirac{c}); }

Measure combination(const PadicContext& ctx, std::vector<std::pair<Scalar, Measure>> terms)
{
    if (terms.empty())
        fail(ErrorCode::InvalidArgument, "empty linear combination");
    const bool series = terms.front().second.series_valued();
    for (const auto& [w, m] : terms)
        if (m.series_valued() != series)
            fail(ErrorCode::InvalidArgument, "cannot combine scalar and series valued measures");
    return Measure(ctx, Measure::LinearCombination{std::move(terms)});
}

} // namespace measure

// --- evaluation -------------------------------------------------------------

namespace {

MeasureValue raw_eval(const Measure& mu, const ContinuousFn& f)
{
    const auto& ctx = mu.context();
    return std::visit(
        overloaded{
            [&](const Measure::AmiceScalar& m) -> MeasureValue {
                const auto c = mahler_coeffs(f, static_cast<int>(m.b.size()) - 1);
                Scalar acc = make_scalar(ctx, 0);
                for (std::size_t k = 0; k < m.b.size(); ++k)
                    acc += c[k] * m.b[k];
                return acc;
            },
            [&](const Measure::AmiceSeries& m) -> MeasureValue {
                const auto c = mahler_coeffs(f, static_cast<int>(m.b.size()) - 1);
                QExpansion acc = m.b[0].scaled(c[0]);
                for (std::size_t k = 1; k < m.b.size(); ++k)
                    acc += m.b[k].scaled(c[k]);
                return acc;
            },
            [&](const Measure::Eisenstein& m) -> MeasureValue { return eisenstein_eval(m.a, f, m.m_max); },
            [&](const Measure::Dirac& m) -> MeasureValue { return evaluate(f, m.c); },
            [&](const Measure::LinearCombination& m) -> MeasureValue {
                MeasureValue acc = scale(m.terms[0].first, raw_eval(m.terms[0].second, f));
                for (std::size_t i = 1; i < m.terms.size(); ++i)
                    acc = acc + scale(m.terms[i].first, raw_eval(m.terms[i].second, f));
                return acc;
            },
            [&](const Measure::Action& m) -> MeasureValue { return act(f, m.g); },
        },
        mu.variant());
}

} // namespace

MeasureValue eval_measure(const Measure& mu, const ContinuousFn& f, std::optional<int> min_prec)
{
    MeasureValue v = raw_eval(mu, f);
    const int need = min_prec.value_or(mu.context().N);
    const int have = value_prec(v);
    if (have < need)
        fail(ErrorCode::PrecisionExhausted,
             "value known to " + std::to_string(have) + " digits, " + std::to_string(need) + " required");
    return v;
}

Measure amice_transform(const Measure& mu, int K)
{
    if (K < 0)
        fail(ErrorCode::InvalidArgument, "K must be >= 0");
    const auto& ctx = mu.context();
    if (const auto* d = std::get_if<Measure::Dirac>(&mu.variant())) {
        std::vector<Scalar> b;
        for (int k = 0; k <= K; ++k)
            b.push_back(Scalar(binomial_exact(d->c, k, ctx.p, ctx.N)));
        return measure::amice(ctx, std::move(b));
    }
    if (mu.series_valued()) {
        std::vector<QExpansion> b;
        for (int k = 0; k <= K; ++k)
            b.push_back(as_series(eval_measure(mu, fn::binomial(ctx, k))));
        return measure::amice_series(ctx, std::move(b));
    }
    std::vector<Scalar> b;
    for (int k = 0; k <= K; ++k)
        b.push_back(as_scalar(eval_measure(mu, fn::binomial(ctx, k))));
    return measure::amice(ctx, std::move(b));
}

Scalar amice_at(const Measure::AmiceScalar& mu, const Scalar& T)
{
    Scalar acc = Scalar::zero(T.p(), 0, T.prec());
    for (auto it = mu.b.rbegin(); it != mu.b.rend(); ++it)
        acc = acc * T + *it;
    return acc;
}

MeasureValue eval_at_character(const Measure& mu, const Scalar& zeta, int max_level)
{
    return eval_measure(mu, fn::character(mu.context(), zeta, max_level));
}

// --- constant term ----------------------------------------------------------

namespace {

using ClassKey = std::tuple<std::uint32_t, int, std::uint64_t, int, int, std::uint64_t>;

struct ClassCache {
    std::mutex mutex;
    std::map<ClassKey, PadicInt> values;
};

ClassCache& class_cache()
{
    static ClassCache cache;
    return cache;
}

/// (1 - r^k)(-B_k / k), the closed-form moment.
BigRational moment_rational(const BigInt& r, int k)
{
    return (BigRational(1) - BigRational(pow(r, static_cast<unsigned>(k)))) * (-bernoulli(k) / k);
}

/// E_k(b + p^m Z_p) = p^(m(k-1)) B_k(b / p^m) / k.
BigRational bernoulli_distribution(std::uint32_t p, int k, int m, std::uint64_t b)
{
    const BigInt pm = pow(BigInt(p), static_cast<unsigned>(m));
    const BigInt scale = pow(BigInt(p), static_cast<unsigned>(m * (k - 1)));
    return BigRational(scale) * bernoulli_polynomial(k, BigRational(BigInt(b), pm)) / k;
}

} // namespace

KLConstantTerm::KLConstantTerm(const PadicContext& ctx, const PadicInt& a, int m_max)
    : ctx_(ctx), a_(a), m_max_(m_max)
{
    if (!a.is_unit())
        fail(ErrorCode::NotUnit, a.to_string() + " is not a unit");
    if (m_max < 0)
        fail(ErrorCode::InvalidArgument, "m_max must be >= 0");
    // Fix the sign from the k = 2 and k = 4 moments, each assembled from the
    // level-1 classes so that the distribution relation is exercised.
    const BigInt r(a_.residue());
    bool plus = true;
    bool minus = true;
    for (int k : {2, 4}) {
        PadicInt sum = PadicInt::zero(ctx.p, ctx.N);
        for (std::uint64_t b = 0; b < ctx.p; ++b)
            sum += raw_on_class(k, 1, b);
        const PadicInt oracle = reduce_rational(moment_rational(r, k), ctx);
        const int e = std::min(sum.prec(), oracle.prec());
        plus = plus && congruent(sum, oracle, e);
        minus = minus && congruent(-sum, oracle, e);
    }
    if (!plus && !minus)
        fail(ErrorCode::InvalidArgument, "constant-term calibration failed for a = " + a.to_string());
    sign_ = plus ? 1 : -1;
}

PadicInt KLConstantTerm::raw_on_class(int k, int m, std::uint64_t b) const
{
    const ClassKey key{ctx_.p, ctx_.N, a_.residue(), k, m, b};
    auto& cache = class_cache();
    {
        std::lock_guard lock(cache.mutex);
        if (auto it = cache.values.find(key); it != cache.values.end())
            return it->second;
    }
    const std::uint64_t pm = ipow(ctx_.p, m);
    const std::uint64_t b_inv_a = m == 0 ? 0 : mulmod(invmod(a_.residue() % pm, pm), b % pm, pm);
    const BigInt r(a_.residue());
    const BigRational e = bernoulli_distribution(ctx_.p, k, m, b % pm) -
                          BigRational(pow(r, static_cast<unsigned>(k))) * bernoulli_distribution(ctx_.p, k, m, b_inv_a);
    const PadicInt v = reduce_rational(-e, ctx_);
    std::lock_guard lock(cache.mutex);
    cache.values.emplace(key, v);
    return v;
}

PadicInt KLConstantTerm::on_class(int k, int m, std::uint64_t b) const
{
    const PadicInt v = raw_on_class(k, m, b);
    return sign_ > 0 ? v : -v;
}

PadicInt KLConstantTerm::on_binomial(int k) const
{
    // C(z, k) = prod_{i<k} (z - i) / k!, expanded, then paired with the moments.
    std::vector<BigInt> c{1};
    for (int i = 0; i < k; ++i) {
        std::vector<BigInt> next(c.size() + 1, 0);
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] -= c[j] * i;
        }
        c = std::move(next);
    }
    BigInt fact = 1;
    for (int i = 2; i <= k; ++i)
        fact *= i;
    const BigInt r(a_.residue());
    BigRational acc = 0;
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0)
            acc += BigRational(c[j]) * moment_rational(r, static_cast<int>(j) + 1);
    return reduce_rational(acc / fact, ctx_);
}

Scalar KLConstantTerm::operator()(const ContinuousFn& f) const
{
    if (const auto* m = std::get_if<ContinuousFn::MahlerSeries>(&f.variant())) {
        Scalar acc = make_scalar(ctx_, 0);
        for (std::size_t k = 0; k < m->coeffs.size(); ++k)
            acc += m->coeffs[k] * on_binomial(static_cast<int>(k));
        // The functional is bounded by 1, so an unknown tail costs exactly its bound.
        return acc.with_prec(m->tail_valuation);
    }
    if (const auto* lc = std::get_if<ContinuousFn::LinearCombination>(&f.variant())) {
        Scalar acc = make_scalar(ctx_, 0);
        for (const auto& [w, h] : lc->terms)
            acc += w * (*this)(h);
        return acc;
    }
    const StepPoly s = to_step(f);
    if (s.level > m_max_)
        fail(ErrorCode::PrecisionExhausted, "constant term needs level " + std::to_string(s.level) +
                                                " above the cap " + std::to_string(m_max_));
    Scalar acc = make_scalar(ctx_, 0);
    for (std::size_t b = 0; b < s.polys.size(); ++b)
        for (std::size_t j = 0; j < s.polys[b].size(); ++j)
            if (!s.polys[b][j].is_zero())
                acc += s.polys[b][j] * on_class(static_cast<int>(j) + 1, s.level, b);
    return acc;
}

Scalar kl_constant(const PadicInt& a, const ContinuousFn& f, int m_max)
{
    return KLConstantTerm(f.context(), a, m_max)(f);
}

// --- Eisenstein measure -----------------------------------------------------

std::int64_t default_multiplier(std::uint32_t p)
{
    const std::uint64_t m = static_cast<std::uint64_t>(p) * p;
    for (std::uint64_t g = 2;; ++g) {
        if (g % p == 0)
            continue;
        // g generates (Z/p^2)^x iff g^((p-1)p/l) != 1 for every prime l | (p-1)p.
        bool generator = true;
        const std::uint64_t order = (p - 1) * static_cast<std::uint64_t>(p);
        for (std::uint64_t l = 2; l <= order && generator; ++l) {
            if (order % l != 0 || !is_prime(l))
                continue;
            std::uint64_t x = 1;
            for (std::uint64_t i = 0; i < order / l; ++i)
                x = x * g % m;
            generator = x != 1;
        }
        if (generator)
            return static_cast<std::int64_t>(g);
    }
}

QExpansion eisenstein_eval(const PadicInt& a, const ContinuousFn& f, int m_max)
{
    const auto& ctx = f.context();
    if (!a.is_unit())
        fail(ErrorCode::NotUnit, a.to_string() + " is not a unit");
    const KLConstantTerm kl(ctx, a, m_max);
    const auto M = static_cast<std::size_t>(ctx.M);
    const auto r = static_cast<std::int64_t>(a.residue());
    // w[d] = f(d) - a f(a d)
    std::vector<Scalar> w(M + 1, make_scalar(ctx, 0));
    parallel_for(M, [&](std::size_t i) {
        const auto d = static_cast<std::int64_t>(i + 1);
        std::int64_t ad = 0;
        const Scalar fad = __builtin_mul_overflow(r, d, &ad) ? evaluate(f, a * PadicInt(ctx, d)) : evaluate(f, ad);
        w[i + 1] = evaluate(f, d) - fad * a;
    });
    std::vector<Scalar> c(M + 1, make_scalar(ctx, 0));
    for (std::size_t d = 1; d <= M; ++d)
        for (std::size_t n = d; n <= M; n += d)
            c[n] += w[d];
    for (std::size_t n = 1; n <= M; ++n)
        c[n] = c[n].scaled(2);
    c[0] = kl(f);
    return QExpansion(std::move(c));
}

// --- two variables ----------------------------------------------------------

MeasureValue product_measure(const Bilinear& bilinear, const TwoVarFn& F)
{
    if (F.terms.empty())
        return make_scalar(F.ctx, 0);
    MeasureValue acc = bilinear(F.terms[0].first, F.terms[0].second);
    for (std::size_t i = 1; i < F.terms.size(); ++i)
        acc = acc + bilinear(F.terms[i].first, F.terms[i].second);
    return acc;
}

QExpansion convolution_nu(const PadicInt& a, const TwoVarFn& F, int m_max)
{
    if (F.terms.empty())
        return zero_series(F.ctx);
    const Bilinear nu = [&](const ContinuousFn& f, const ContinuousFn& g) -> MeasureValue {
        return act(g, eisenstein_eval(a, f, m_max));
    };
    return as_series(product_measure(nu, F));
}

QExpansion nu_closed_form(const PadicContext& ctx, const PadicInt& a, int s, int t)
{
    if (s < 0 || t < 0)
        fail(ErrorCode::InvalidArgument, "s and t must be >= 0");
    return theta_power(eisenstein_moment_series(ctx, a, s + 1), t);
}

TwoVarFn pushforward_halving(const TwoVarFn& F)
{
    const auto& ctx = F.ctx;
    TwoVarFn out{ctx, {}};
    for (const auto& [f, g] : F.terms) {
        const StepPoly st = to_step(g);
        const std::uint64_t count = ipow(ctx.p, st.level);
        const std::size_t degree = st.degree_bound();
        for (std::size_t j = 0; j < degree; ++j) {
            const ContinuousFn fj = multiply(f, fn::monomial(ctx, static_cast<int>(j)));
            for (std::uint64_t c = 0; c < count; ++c) {
                // On x = c mod p^level, g(x y) has y^j coefficient coef_j(c y mod p^level) x^j.
                StepPoly gy{ctx.p, ctx.N, st.level, {}};
                bool nonzero = false;
                for (std::uint64_t e = 0; e < count; ++e) {
                    const auto& poly = st.polys[static_cast<std::size_t>(mulmod(c, e, count))];
                    std::vector<Scalar> mono(j + 1, make_scalar(ctx, 0));
                    if (j < poly.size() && !poly[j].is_zero()) {
                        mono[j] = poly[j];
                        nonzero = true;
                    }
                    gy.polys.push_back(std::move(mono));
                }
                if (!nonzero)
                    continue;
                if (st.level == 0) {
                    out.terms.emplace_back(fj, fn::polynomial(ctx, gy.polys[0]));
                } else {
                    out.terms.emplace_back(multiply(fj, fn::indicator(ctx, st.level, static_cast<std::int64_t>(c))),
                                           fn::step(ctx, std::move(gy)));
                }
            }
        }
    }
    return out;
}

// --- two-variable L-values --------------------------------------------------

namespace {

std::vector<Scalar> character_table(const ContinuousFn& chi, int level)
{
    const auto& ctx = chi.context();
    const StepPoly s = to_step(chi, level);
    const std::uint64_t count = ipow(ctx.p, s.level);
    std::vector<Scalar> t;
    t.reserve(count);
    for (std::uint64_t c = 0; c < count; ++c) {
        const auto& poly = s.polys[c];
        for (std::size_t j = 1; j < poly.size(); ++j)
            if (!poly[j].is_zero())
                fail(ErrorCode::InvalidArgument, "a character must be locally constant");
        t.push_back(c % ctx.p == 0 ? make_scalar(ctx, 0) : poly[0]);
    }
    const Scalar one = make_scalar(ctx, 1);
    if (!(t[1] == one))
        fail(ErrorCode::InvalidArgument, "a character must send 1 to 1");
    for (std::uint64_t u = 1; u < count; ++u) {
        if (u % ctx.p == 0)
            continue;
        for (std::uint64_t v = u; v < count; ++v) {
            if (v % ctx.p == 0)
                continue;
            if (!(t[mulmod(u, v, count)] == t[u] * t[v]))
                fail(ErrorCode::InvalidArgument, "table is not multiplicative on units at (" + std::to_string(u) +
                                                     ", " + std::to_string(v) + ")");
        }
    }
    return t;
}

int table_level(const ContinuousFn& chi) { return std::max(to_step(chi).level, 1); }

} // namespace

TwoVariableL two_variable_L(const ContinuousFn& chi1, const ContinuousFn& chi2, const PadicInt& a, int m_max)
{
    const auto& ctx = chi1.context();
    if (!(chi2.context() == ctx))
        fail(ErrorCode::InvalidArgument, "characters over different contexts");
    if (!a.is_unit())
        fail(ErrorCode::NotUnit, a.to_string() + " is not a unit");
    const int level = std::max(table_level(chi1), table_level(chi2));
    if (level > m_max)
        fail(ErrorCode::PrecisionExhausted, "character conductor above the level cap");
    const auto t1 = character_table(chi1, level);
    const auto t2 = character_table(chi2, level);
    const std::uint64_t count = ipow(ctx.p, level);

    std::vector<Scalar> ratio(count, make_scalar(ctx, 0));
    for (std::uint64_t c = 0; c < count; ++c)
        if (c % ctx.p != 0)
            ratio[c] = t1[c] * t2[c].inverse();

    const std::uint64_t ra = a.residue() % count;
    const Scalar factor = make_scalar(ctx, 1) - ratio[ra] * a;
    if (!factor.is_unit())
        fail(ErrorCode::EulerFactorNotInvertible, "1 - chi1(a) a / chi2(a) is not a unit");

    const TwoVarFn F = tensor(fn::zero_extended_units(fn::locally_constant(ctx, level, ratio)),
                              fn::zero_extended_units(fn::locally_constant(ctx, level, t2)));
    const QExpansion nu = convolution_nu(a, F, m_max);
    QExpansion series = nu.scaled(factor.inverse());
    const Scalar constant = series[0];
    return TwoVariableL{std::move(series), factor, constant};
}

} // namespace padicmf
