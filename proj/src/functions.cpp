#include "padicmf/functions.hpp"

#include <algorithm>

#include "padicmf/errors.hpp"
#include "padicmf/rational.hpp"

namespace padicmf {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::int64_t class_of(std::int64_t n, std::uint64_t modulus)
{
    const auto m = static_cast<std::int64_t>(modulus);
    std::int64_t c = n % m;
    return c < 0 ? c + m : c;
}

Scalar horner(const std::vector<Scalar>& coeffs, const Scalar& z, const Scalar& zero)
{
    Scalar acc = zero;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

} // namespace

Scalar make_scalar(const PadicContext& ctx, std::int64_t value) { return Scalar(PadicInt(ctx, value)); }

PadicInt binomial_exact(std::int64_t n, std::int64_t k, std::uint32_t p, int N)
{
    if (k < 0)
        return PadicInt::zero(p, N);
    if (k == 0 || n == k)
        return PadicInt::one(p, N);
    if (n >= 0 && n < k)
        return PadicInt::zero(p, N);
    const std::uint64_t mod = ipow(p, N);
    int v = 0;
    std::uint64_t num_unit = 1;
    std::uint64_t den_unit = 1;
    bool negative = false;
    for (std::int64_t i = 0; i < k; ++i) {
        __int128 num = static_cast<__int128>(n) - i;
        if (num < 0) {
            num = -num;
            negative = !negative;
        }
        while (num % p == 0) {
            num /= p;
            ++v;
        }
        num_unit = mulmod(num_unit, static_cast<std::uint64_t>(num % mod), mod);
        std::int64_t den = i + 1;
        while (den % p == 0) {
            den /= p;
            --v;
        }
        den_unit = mulmod(den_unit, static_cast<std::uint64_t>(den) % mod, mod);
    }
    if (v >= N)
        return PadicInt::zero(p, N);
    std::uint64_t r = mulmod(num_unit, invmod(den_unit, mod), mod);
    r = mulmod(r, ipow(p, v), mod);
    PadicInt out = PadicInt::from_residue(p, N, r);
    return negative ? -out : out;
}

PadicInt binomial_padic(const PadicInt& x, std::int64_t k)
{
    if (k == 0)
        return PadicInt::one(x.p(), x.prec());
    const int loss = floor_log(x.p(), static_cast<std::uint64_t>(k));
    const int prec = std::max(x.prec() - loss, 0);
    if (prec == 0)
        return PadicInt::zero(x.p(), 0);
    return binomial_exact(static_cast<std::int64_t>(x.residue()), k, x.p(), x.prec()).with_prec(prec);
}

// --- StepPoly ---------------------------------------------------------------

std::size_t StepPoly::degree_bound() const
{
    std::size_t d = 0;
    for (const auto& poly : polys)
        d = std::max(d, poly.size());
    return d;
}

StepPoly StepPoly::lifted(int new_level) const
{
    if (new_level < level)
        fail(ErrorCode::InvalidArgument, "StepPoly can only be refined");
    if (new_level == level)
        return *this;
    StepPoly out{p, N, new_level, {}};
    const std::uint64_t count = ipow(p, new_level);
    const std::uint64_t old = ipow(p, level);
    out.polys.reserve(count);
    for (std::uint64_t c = 0; c < count; ++c)
        out.polys.push_back(polys[c % old]);
    return out;
}

Scalar StepPoly::evaluate(std::int64_t n) const
{
    const auto& poly = polys[static_cast<std::size_t>(class_of(n, ipow(p, level)))];
    const Scalar zero = Scalar(PadicInt::zero(p, N));
    return horner(poly, Scalar(PadicInt(p, N, n)), zero);
}

Scalar StepPoly::evaluate(const PadicInt& x) const
{
    if (x.prec() < level)
        fail(ErrorCode::PrecisionExhausted, "argument not known modulo p^level");
    const auto& poly = polys[static_cast<std::size_t>(x.residue() % ipow(p, level))];
    return horner(poly, Scalar(x), Scalar(PadicInt::zero(p, N)));
}

// --- ContinuousFn -----------------------------------------------------------

ContinuousFn::ContinuousFn(const PadicContext& ctx, Variant v)
    : ctx_(ctx), node_(std::make_shared<const Variant>(std::move(v)))
{
}

namespace {

int max_level(const std::vector<Scalar>& values)
{
    int m = 0;
    for (const auto& v : values)
        m = std::max(m, v.level());
    return m;
}

} // namespace

int ContinuousFn::value_level() const
{
    return std::visit(
        overloaded{
            [](const Polynomial& f) { return max_level(f.coeffs); },
            [](const Character& f) { return f.zeta.level(); },
            [](const LocallyConstant& f) { return max_level(f.table); },
            [](const MahlerSeries& f) { return max_level(f.coeffs); },
            [](const Product& f) {
                int m = 0;
                for (const auto& g : f.factors)
                    m = std::max(m, g.value_level());
                return m;
            },
            [](const LinearCombination& f) {
                int m = 0;
                for (const auto& [w, g] : f.terms)
                    m = std::max({m, w.level(), g.value_level()});
                return m;
            },
            [](const Scaled& f) { return f.inner->value_level(); },
            [](const ZeroExtendedUnits& f) { return f.inner->value_level(); },
            [](const Step& f) {
                int m = 0;
                for (const auto& poly : f.data.polys)
                    m = std::max(m, max_level(poly));
                return m;
            },
        },
        *node_);
}

namespace fn {

ContinuousFn constant(const PadicContext& ctx, const Scalar& c)
{
    return ContinuousFn(ctx, ContinuousFn::Polynomial{{c}});
}

ContinuousFn constant(const PadicContext& ctx, std::int64_t c) { return constant(ctx, make_scalar(ctx, c)); }

ContinuousFn monomial(const PadicContext& ctx, int degree)
{
    if (degree < 0)
        fail(ErrorCode::InvalidArgument, "monomial degree must be >= 0");
    std::vector<Scalar> coeffs(static_cast<std::size_t>(degree) + 1, make_scalar(ctx, 0));
    coeffs.back() = make_scalar(ctx, 1);
    return ContinuousFn(ctx, ContinuousFn::Polynomial{std::move(coeffs)});
}

ContinuousFn polynomial(const PadicContext& ctx, std::vector<Scalar> coeffs)
{
    if (coeffs.empty())
        coeffs.push_back(make_scalar(ctx, 0));
    return ContinuousFn(ctx, ContinuousFn::Polynomial{std::move(coeffs)});
}

ContinuousFn polynomial(const PadicContext& ctx, const std::vector<std::int64_t>& coeffs)
{
    std::vector<Scalar> c;
    for (auto v : coeffs)
        c.push_back(make_scalar(ctx, v));
    return polynomial(ctx, std::move(c));
}

ContinuousFn character(const PadicContext& ctx, const Scalar& zeta, int max_level)
{
    if (zeta.level() > max_level)
        fail(ErrorCode::InvalidArgument, "character level " + std::to_string(zeta.level()) +
                                             " exceeds the maximal cyclotomic level " + std::to_string(max_level));
    if (!zeta.is_root_of_unity())
        fail(ErrorCode::NotRootOfUnity, zeta.to_string());
    return ContinuousFn(ctx, ContinuousFn::Character{zeta});
}

ContinuousFn indicator(const PadicContext& ctx, int level, std::int64_t residue_class)
{
    const std::uint64_t count = ipow(ctx.p, level);
    std::vector<Scalar> table(count, make_scalar(ctx, 0));
    table[static_cast<std::size_t>(class_of(residue_class, count))] = make_scalar(ctx, 1);
    return ContinuousFn(ctx, ContinuousFn::LocallyConstant{level, std::move(table)});
}

ContinuousFn locally_constant(const PadicContext& ctx, int level, std::vector<Scalar> table)
{
    if (level < 0 || table.size() != ipow(ctx.p, level))
        fail(ErrorCode::InvalidArgument, "locally constant table must have exactly p^level entries");
    return ContinuousFn(ctx, ContinuousFn::LocallyConstant{level, std::move(table)});
}

ContinuousFn locally_constant(const PadicContext& ctx, int level, const std::vector<std::int64_t>& table)
{
    std::vector<Scalar> t;
    for (auto v : table)
        t.push_back(make_scalar(ctx, v));
    return locally_constant(ctx, level, std::move(t));
}

ContinuousFn mahler_series(const PadicContext& ctx, std::vector<Scalar> coeffs, int tail_valuation)
{
    if (coeffs.empty())
        fail(ErrorCode::InvalidArgument, "Mahler series needs at least c_0");
    return ContinuousFn(ctx, ContinuousFn::MahlerSeries{std::move(coeffs), tail_valuation});
}

ContinuousFn binomial(const PadicContext& ctx, int k)
{
    std::vector<Scalar> coeffs(static_cast<std::size_t>(k) + 1, make_scalar(ctx, 0));
    coeffs.back() = make_scalar(ctx, 1);
    return mahler_series(ctx, std::move(coeffs), ctx.N);
}

ContinuousFn step(const PadicContext& ctx, StepPoly data)
{
    if (data.p != ctx.p || data.polys.size() != ipow(ctx.p, data.level))
        fail(ErrorCode::InvalidArgument, "step data does not match the context");
    return ContinuousFn(ctx, ContinuousFn::Step{std::move(data)});
}

ContinuousFn zero_extended_units(const ContinuousFn& f)
{
    return ContinuousFn(f.context(), ContinuousFn::ZeroExtendedUnits{std::make_shared<const ContinuousFn>(f)});
}

ContinuousFn add(const ContinuousFn& f, const ContinuousFn& g)
{
    const auto one = make_scalar(f.context(), 1);
    return ContinuousFn(f.context(), ContinuousFn::LinearCombination{{{one, f}, {one, g}}});
}

ContinuousFn subtract(const ContinuousFn& f, const ContinuousFn& g)
{
    const auto one = make_scalar(f.context(), 1);
    return ContinuousFn(f.context(), ContinuousFn::LinearCombination{{{one, f}, {-one, g}}});
}

ContinuousFn scale(const Scalar& c, const ContinuousFn& f)
{
    return ContinuousFn(f.context(), ContinuousFn::LinearCombination{{{c, f}}});
}

} // namespace fn

// --- evaluation -------------------------------------------------------------

namespace {

/// An argument known modulo p^prec, optionally with its exact integer value.
struct Arg {
    PadicInt x;
    std::optional<std::int64_t> exact;
};

Scalar eval_at(const ContinuousFn& f, const Arg& arg);

Scalar eval_mahler(const ContinuousFn& f, const ContinuousFn::MahlerSeries& m, const Arg& arg)
{
    const auto& ctx = f.context();
    Scalar acc = make_scalar(ctx, 0);
    for (std::size_t k = 0; k < m.coeffs.size(); ++k) {
        const PadicInt b = arg.exact ? binomial_exact(*arg.exact, static_cast<std::int64_t>(k), ctx.p, ctx.N)
                                     : binomial_padic(arg.x, static_cast<std::int64_t>(k));
        acc += m.coeffs[k] * b;
    }
    // |C(x, k)| <= 1, so the tail only costs precision.
    return acc.with_prec(m.tail_valuation);
}

Scalar eval_at(const ContinuousFn& f, const Arg& arg)
{
    const auto& ctx = f.context();
    return std::visit(
        overloaded{
            [&](const ContinuousFn::Polynomial& g) {
                const Scalar z = arg.exact ? make_scalar(ctx, *arg.exact) : Scalar(arg.x);
                return horner(g.coeffs, z, make_scalar(ctx, 0));
            },
            [&](const ContinuousFn::Character& g) {
                if (arg.exact) {
                    const auto order = static_cast<std::int64_t>(ipow(ctx.p, g.zeta.level()));
                    return g.zeta.pow(static_cast<std::uint64_t>(class_of(*arg.exact, order)));
                }
                return cyclo_pow(g.zeta, arg.x);
            },
            [&](const ContinuousFn::LocallyConstant& g) {
                const std::uint64_t count = ipow(ctx.p, g.level);
                if (arg.exact)
                    return g.table[static_cast<std::size_t>(class_of(*arg.exact, count))];
                if (arg.x.prec() < g.level)
                    fail(ErrorCode::PrecisionExhausted, "argument not known modulo p^level");
                return g.table[static_cast<std::size_t>(arg.x.residue() % count)];
            },
            [&](const ContinuousFn::MahlerSeries& g) { return eval_mahler(f, g, arg); },
            [&](const ContinuousFn::Product& g) {
                Scalar acc = make_scalar(ctx, 1);
                for (const auto& h : g.factors)
                    acc *= eval_at(h, arg);
                return acc;
            },
            [&](const ContinuousFn::LinearCombination& g) {
                Scalar acc = make_scalar(ctx, 0);
                for (const auto& [w, h] : g.terms)
                    acc += w * eval_at(h, arg);
                return acc;
            },
            [&](const ContinuousFn::Scaled& g) {
                Arg scaled{g.u * arg.x, std::nullopt};
                if (g.exact && arg.exact)
                    scaled.exact = *g.exact * *arg.exact;
                return eval_at(*g.inner, scaled);
            },
            [&](const ContinuousFn::ZeroExtendedUnits& g) {
                const bool unit = arg.exact ? class_of(*arg.exact, ctx.p) != 0 : arg.x.is_unit();
                if (!arg.exact && arg.x.prec() < 1)
                    fail(ErrorCode::PrecisionExhausted, "argument not known modulo p");
                return unit ? eval_at(*g.inner, arg) : make_scalar(ctx, 0);
            },
            [&](const ContinuousFn::Step& g) {
                return arg.exact ? g.data.evaluate(*arg.exact) : g.data.evaluate(arg.x);
            },
        },
        f.variant());
}

} // namespace

Scalar evaluate(const ContinuousFn& f, const PadicInt& x) { return eval_at(f, Arg{x, std::nullopt}); }

Scalar evaluate(const ContinuousFn& f, std::int64_t n)
{
    return eval_at(f, Arg{PadicInt(f.context(), n), n});
}

std::vector<Scalar> mahler_coeffs(const ContinuousFn& f, int K)
{
    if (K < 0)
        fail(ErrorCode::InvalidArgument, "K must be >= 0");
    const auto& ctx = f.context();
    if (const auto* m = std::get_if<ContinuousFn::MahlerSeries>(&f.variant())) {
        std::vector<Scalar> out;
        for (int k = 0; k <= K; ++k) {
            if (static_cast<std::size_t>(k) < m->coeffs.size())
                out.push_back(m->coeffs[static_cast<std::size_t>(k)]);
            else
                out.push_back(Scalar(PadicInt::zero(ctx.p, std::min(ctx.N, m->tail_valuation))));
        }
        return out;
    }
    if (const auto* c = std::get_if<ContinuousFn::Character>(&f.variant())) {
        // Delta chi = (zeta - 1) chi
        std::vector<Scalar> out;
        const Scalar step = c->zeta - Scalar::one(ctx.p, c->zeta.level(), ctx.N);
        Scalar acc = Scalar::one(ctx.p, c->zeta.level(), ctx.N);
        for (int k = 0; k <= K; ++k) {
            out.push_back(acc);
            acc *= step;
        }
        return out;
    }
    std::vector<Scalar> diffs;
    diffs.reserve(static_cast<std::size_t>(K) + 1);
    for (int n = 0; n <= K; ++n)
        diffs.push_back(evaluate(f, n));
    std::vector<Scalar> out;
    out.reserve(diffs.size());
    for (int k = 0; k <= K; ++k) {
        out.push_back(diffs[0]);
        for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
            diffs[i] = diffs[i + 1] - diffs[i];
        diffs.pop_back();
    }
    return out;
}

// --- closure operations -----------------------------------------------------

ContinuousFn multiply(const ContinuousFn& f, const ContinuousFn& g)
{
    const auto* pf = std::get_if<ContinuousFn::Polynomial>(&f.variant());
    const auto* pg = std::get_if<ContinuousFn::Polynomial>(&g.variant());
    if (pf && pg) {
        const auto& ctx = f.context();
        std::vector<Scalar> c(pf->coeffs.size() + pg->coeffs.size() - 1, make_scalar(ctx, 0));
        for (std::size_t i = 0; i < pf->coeffs.size(); ++i)
            for (std::size_t j = 0; j < pg->coeffs.size(); ++j)
                c[i + j] += pf->coeffs[i] * pg->coeffs[j];
        return fn::polynomial(ctx, std::move(c));
    }
    return ContinuousFn(f.context(), ContinuousFn::Product{{f, g}});
}

namespace {

ContinuousFn scaled_node(const ContinuousFn& f, const PadicInt& u, std::optional<std::int64_t> exact)
{
    const auto& ctx = f.context();
    return std::visit(
        overloaded{
            [&](const ContinuousFn::Polynomial& g) {
                std::vector<Scalar> c;
                PadicInt upow = PadicInt::one(ctx.p, ctx.N);
                for (const auto& a : g.coeffs) {
                    c.push_back(a * upow);
                    upow *= u;
                }
                return fn::polynomial(ctx, std::move(c));
            },
            [&](const ContinuousFn::Character& g) {
                return ContinuousFn(ctx, ContinuousFn::Character{cyclo_pow(g.zeta, u)});
            },
            [&](const ContinuousFn::LocallyConstant& g) {
                const std::uint64_t count = ipow(ctx.p, g.level);
                if (u.prec() < g.level)
                    fail(ErrorCode::PrecisionExhausted, "scaling unit not known modulo p^level");
                std::vector<Scalar> table;
                table.reserve(count);
                for (std::uint64_t c = 0; c < count; ++c)
                    table.push_back(g.table[static_cast<std::size_t>(mulmod(u.residue() % count, c, count))]);
                return fn::locally_constant(ctx, g.level, std::move(table));
            },
            [&](const auto&) {
                return ContinuousFn(ctx, ContinuousFn::Scaled{std::make_shared<const ContinuousFn>(f), u, exact});
            },
        },
        f.variant());
}

} // namespace

ContinuousFn scale_argument(const ContinuousFn& f, const PadicInt& u)
{
    if (!u.is_unit())
        fail(ErrorCode::NotUnit, u.to_string() + " is not a unit");
    return scaled_node(f, u, std::nullopt);
}

ContinuousFn dilate(const ContinuousFn& f, std::int64_t c)
{
    return scaled_node(f, PadicInt(f.context(), c), c);
}

// --- step normal form -------------------------------------------------------

namespace {

std::vector<Scalar> poly_mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const Scalar& zero)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<Scalar> c(a.size() + b.size() - 1, zero);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

std::vector<Scalar> poly_axpy(std::vector<Scalar> acc, const Scalar& w, const std::vector<Scalar>& b, const Scalar& zero)
{
    if (acc.size() < b.size())
        acc.resize(b.size(), zero);
    for (std::size_t i = 0; i < b.size(); ++i)
        acc[i] += w * b[i];
    return acc;
}

/// Monomial coefficients of C(z, k) for k < p: s(k, j) / k!, p-integral.
std::vector<Scalar> binomial_polynomial(const PadicContext& ctx, int k)
{
    // prod_{i<k} (z - i), expanded with integer coefficients.
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
    std::vector<Scalar> out;
    for (const auto& v : c)
        out.push_back(Scalar(reduce_rational(v, fact, ctx)));
    return out;
}

StepPoly step_of(const ContinuousFn& f)
{
    const auto& ctx = f.context();
    const Scalar zero = make_scalar(ctx, 0);
    return std::visit(
        overloaded{
            [&](const ContinuousFn::Polynomial& g) { return StepPoly{ctx.p, ctx.N, 0, {g.coeffs}}; },
            [&](const ContinuousFn::Character& g) {
                const int level = g.zeta.level();
                StepPoly s{ctx.p, ctx.N, level, {}};
                Scalar v = Scalar::one(ctx.p, level, ctx.N);
                for (std::uint64_t c = 0; c < ipow(ctx.p, level); ++c) {
                    s.polys.push_back({v});
                    v *= g.zeta;
                }
                return s;
            },
            [&](const ContinuousFn::LocallyConstant& g) {
                StepPoly s{ctx.p, ctx.N, g.level, {}};
                for (const auto& v : g.table)
                    s.polys.push_back({v});
                return s;
            },
            [&](const ContinuousFn::MahlerSeries& g) {
                if (g.tail_valuation < ctx.N || g.coeffs.size() > ctx.p)
                    fail(ErrorCode::UnsupportedShape,
                         "Mahler series without an exact p-integral polynomial form has no step normal form");
                std::vector<Scalar> acc;
                for (std::size_t k = 0; k < g.coeffs.size(); ++k)
                    acc = poly_axpy(std::move(acc), g.coeffs[k], binomial_polynomial(ctx, static_cast<int>(k)), zero);
                return StepPoly{ctx.p, ctx.N, 0, {acc}};
            },
            [&](const ContinuousFn::Product& g) {
                StepPoly acc{ctx.p, ctx.N, 0, {{make_scalar(ctx, 1)}}};
                for (const auto& h : g.factors) {
                    StepPoly s = step_of(h);
                    const int level = std::max(acc.level, s.level);
                    acc = acc.lifted(level);
                    s = s.lifted(level);
                    for (std::size_t c = 0; c < acc.polys.size(); ++c)
                        acc.polys[c] = poly_mul(acc.polys[c], s.polys[c], zero);
                }
                return acc;
            },
            [&](const ContinuousFn::LinearCombination& g) {
                StepPoly acc{ctx.p, ctx.N, 0, {{}}};
                for (const auto& [w, h] : g.terms) {
                    StepPoly s = step_of(h);
                    const int level = std::max(acc.level, s.level);
                    acc = acc.lifted(level);
                    s = s.lifted(level);
                    for (std::size_t c = 0; c < acc.polys.size(); ++c)
                        acc.polys[c] = poly_axpy(std::move(acc.polys[c]), w, s.polys[c], zero);
                }
                for (auto& poly : acc.polys)
                    if (poly.empty())
                        poly.push_back(zero);
                return acc;
            },
            [&](const ContinuousFn::Scaled& g) {
                const StepPoly s = step_of(*g.inner);
                const std::uint64_t count = ipow(ctx.p, s.level);
                if (g.u.prec() < s.level)
                    fail(ErrorCode::PrecisionExhausted, "scaling factor not known modulo p^level");
                StepPoly out{ctx.p, ctx.N, s.level, {}};
                for (std::uint64_t c = 0; c < count; ++c) {
                    const auto& src = s.polys[static_cast<std::size_t>(mulmod(g.u.residue() % count, c, count))];
                    std::vector<Scalar> poly;
                    PadicInt upow = PadicInt::one(ctx.p, ctx.N);
                    for (const auto& a : src) {
                        poly.push_back(a * upow);
                        upow *= g.u;
                    }
                    out.polys.push_back(std::move(poly));
                }
                return out;
            },
            [&](const ContinuousFn::ZeroExtendedUnits& g) {
                StepPoly s = step_of(*g.inner);
                s = s.lifted(std::max(s.level, 1));
                for (std::size_t c = 0; c < s.polys.size(); ++c)
                    if (c % ctx.p == 0)
                        s.polys[c] = {zero};
                return s;
            },
            [&](const ContinuousFn::Step& g) { return g.data; },
        },
        f.variant());
}

} // namespace

StepPoly to_step(const ContinuousFn& f, int min_level)
{
    StepPoly s = step_of(f);
    return s.lifted(std::max(s.level, min_level));
}

bool is_step_representable(const ContinuousFn& f)
{
    try {
        (void)step_of(f);
        return true;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::UnsupportedShape)
            return false;
        throw;
    }
}

// --- two-variable functions -------------------------------------------------

Scalar TwoVarFn::evaluate(std::int64_t x, std::int64_t y) const
{
    Scalar acc = make_scalar(ctx, 0);
    for (const auto& [f, g] : terms)
        acc += padicmf::evaluate(f, x) * padicmf::evaluate(g, y);
    return acc;
}

Scalar TwoVarFn::evaluate(const PadicInt& x, const PadicInt& y) const
{
    Scalar acc = make_scalar(ctx, 0);
    for (const auto& [f, g] : terms)
        acc += padicmf::evaluate(f, x) * padicmf::evaluate(g, y);
    return acc;
}

TwoVarFn tensor(const ContinuousFn& f, const ContinuousFn& g) { return TwoVarFn{f.context(), {{f, g}}}; }

TwoVarFn operator+(const TwoVarFn& a, const TwoVarFn& b)
{
    TwoVarFn out = a;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    return out;
}

} // namespace padicmf
