#include "padicmf/verify.hpp"

#include <chrono>
#include <map>
#include <random>

#include "padicmf/circle_action.hpp"
#include "padicmf/errors.hpp"
#include "padicmf/kummer.hpp"
#include "padicmf/measures.hpp"
#include "padicmf/rational.hpp"

namespace padicmf {

namespace {

class Checker {
public:
    explicit Checker(SuiteResult& r) : r_(r) {}

    void check(bool ok, const std::string& what)
    {
        ++r_.checks;
        if (ok)
            return;
        ++r_.failures;
        r_.passed = false;
        if (r_.first_failure.empty())
            r_.first_failure = what;
    }

    void note(const std::string& line) { r_.details.push_back(line); }
    void add_checks(std::uint64_t n) { r_.checks += n; }

private:
    SuiteResult& r_;
};

/// Agreement of two series at their common precision, which must be at least `floor`.
bool agree(const QExpansion& x, const QExpansion& y, int floor)
{
    const int e = std::min(series_prec(x), series_prec(y));
    return e >= floor && x.truncation() == y.truncation() && congruent(x, y, e);
}

QExpansion random_series(std::mt19937_64& rng, const PadicContext& ctx)
{
    std::vector<std::int64_t> c;
    for (int n = 0; n <= ctx.M; ++n)
        c.push_back(static_cast<std::int64_t>(rng() % 200001) - 100000);
    return series_from_integers(ctx, c);
}

ContinuousFn random_function(std::mt19937_64& rng, const PadicContext& ctx)
{
    const std::uint32_t p = ctx.p;
    switch (rng() % 4) {
    case 0: {
        std::vector<std::int64_t> c(1 + rng() % 4);
        for (auto& x : c)
            x = static_cast<std::int64_t>(rng() % 51) - 25;
        return fn::polynomial(ctx, c);
    }
    case 1: {
        const int m = 1 + static_cast<int>(rng() % 2);
        return fn::character(ctx, CyclotomicElem::zeta_power(p, m, ctx.N, static_cast<std::int64_t>(rng() % ipow(p, m))));
    }
    case 2: {
        const int m = static_cast<int>(rng() % 3);
        std::vector<std::int64_t> t(ipow(p, m));
        for (auto& x : t)
            x = static_cast<std::int64_t>(rng() % 20);
        return fn::locally_constant(ctx, m, t);
    }
    default:
        return multiply(fn::monomial(ctx, static_cast<int>(rng() % 3)),
                        fn::indicator(ctx, 1, static_cast<std::int64_t>(rng() % p)));
    }
}

void suite_moments(const VerifyConfig& cfg, Checker& c)
{
    const auto& ctx = cfg.ctx;
    const PadicInt a(ctx, cfg.a);
    const KLConstantTerm kl(ctx, a, cfg.m_max);
    for (int k = 1; k <= 12; ++k) {
        const std::string tag = "k=" + std::to_string(k);
        const auto g = eisenstein_eval(a, fn::monomial(ctx, k - 1), cfg.m_max);
        c.check(agree(g, eisenstein_moment_series(ctx, a, k), ctx.N - 1), "moment series " + tag);
        const BigRational exact = BigRational(1 - pow(BigInt(cfg.a), static_cast<unsigned>(k))) * (-bernoulli(k) / k);
        const Scalar constant = kl(fn::monomial(ctx, k - 1));
        c.check(constant.prec() >= ctx.N - 1 &&
                    congruent(constant, Scalar(reduce_rational(exact, ctx)), constant.prec()),
                "regularized constant " + tag);
        if (k % 2 == 0 && k % static_cast<int>(ctx.p - 1) != 0) {
            const PadicInt factor = PadicInt(ctx, 1) - a.pow(static_cast<std::uint64_t>(k));
            c.check(agree(g, eisenstein_2G(ctx, k).scaled(Scalar(factor)), ctx.N - 1), "(1-a^k) 2G_k " + tag);
        }
    }
    c.note("k = 1..12: moment series, Bernoulli constants, (1-a^k) 2G_k where p-integral");
}

void suite_congruences(const VerifyConfig& cfg, Checker& c)
{
    const auto& ctx = cfg.ctx;
    const PadicInt a(ctx, cfg.a);
    std::map<int, QExpansion> mu;
    auto moment = [&](int k) -> const QExpansion& {
        auto it = mu.find(k);
        if (it == mu.end())
            it = mu.emplace(k, eisenstein_eval(a, fn::monomial(ctx, k - 1), cfg.m_max)).first;
        return it->second;
    };
    std::uint64_t pairs = 0;
    for (int m = 1; m <= 2; ++m) {
        const int period = static_cast<int>((ctx.p - 1) * ipow(ctx.p, m - 1));
        if (period > 24)
            continue;
        for (int k = m + 1; k + period <= 30; ++k) {
            const int k2 = k + period;
            c.check(congruent(moment(k), moment(k2), m),
                    "mod p^" + std::to_string(m) + " k=" + std::to_string(k) + " k'=" + std::to_string(k2));
            ++pairs;
        }
    }
    c.note(std::to_string(pairs) + " pairs k = k' mod (p-1)p^(m-1), m = 1, 2");
}

void suite_action(const VerifyConfig& cfg, Checker& c)
{
    const auto& ctx = cfg.ctx;
    std::mt19937_64 rng(cfg.seed);
    std::vector<QExpansion> gs;
    for (int i = 0; i < 10; ++i)
        gs.push_back(random_series(rng, ctx));
    for (int i = 0; i < 30; ++i) {
        const auto f = random_function(rng, ctx);
        const auto f2 = random_function(rng, ctx);
        const auto& g = gs[static_cast<std::size_t>(i) % gs.size()];
        c.check(act(multiply(f, f2), g) == act(f, act(f2, g)), "act(f f', g) pair " + std::to_string(i));
    }
    const auto one = fn::constant(ctx, 1);
    for (std::size_t i = 0; i < gs.size(); ++i)
        c.check(act(one, gs[i]) == gs[i], "act(1, g) series " + std::to_string(i));
    for (int i = 0; i < 20; ++i) {
        const auto g = random_series(rng, ctx);
        const auto d = derivative_check(g);
        const auto th = theta(g);
        bool ok = true;
        for (std::size_t n = 0; n < th.coeffs().size(); ++n)
            ok = ok && d[n].a == g[n] && d[n].b == th[n];
        c.check(ok, "derivative shadow series " + std::to_string(i));
    }
    const auto zeta = CyclotomicElem::zeta(ctx.p, 1, ctx.N);
    for (std::uint64_t e = 0; e < ctx.p; ++e)
        c.check(act_character(zeta.pow(e), gs[0]) == act(fn::character(ctx, zeta.pow(e)), gs[0]),
                "character substitution e=" + std::to_string(e));
    c.note("30 function pairs, 10 + 20 random series, characters of level 1");
}

void suite_amice(const VerifyConfig& cfg, Checker& c)
{
    const auto& ctx = cfg.ctx;
    std::mt19937_64 rng(cfg.seed + 1);
    std::vector<Measure> mus;
    for (int cpt = 0; cpt <= 3; ++cpt)
        mus.push_back(measure::dirac(ctx, cpt));
    for (int i = 0; i < 5; ++i) {
        std::vector<Scalar> b;
        for (int k = 0; k <= 12; ++k)
            b.push_back(Scalar(PadicInt::from_residue(ctx.p, ctx.N, rng() % ctx.modulus())));
        mus.push_back(measure::amice(ctx, std::move(b)));
    }
    const int K = 4 * static_cast<int>(ctx.p);
    for (int m = 1; m <= 2; ++m) {
        const auto zeta = CyclotomicElem::zeta(ctx.p, m, ctx.N);
        const auto one = CyclotomicElem::one(ctx.p, m, ctx.N);
        for (std::uint64_t e = 0; e < ipow(ctx.p, m); ++e) {
            const auto z = zeta.pow(e);
            for (std::size_t i = 0; i < mus.size(); ++i) {
                const auto A = std::get<Measure::AmiceScalar>(amice_transform(mus[i], K).variant());
                c.check(as_scalar(eval_at_character(mus[i], z)) == amice_at(A, z - one),
                        "measure " + std::to_string(i) + " zeta_{p^" + std::to_string(m) + "}^" + std::to_string(e));
            }
        }
    }
    c.note(std::to_string(mus.size()) + " measures against every character of level <= 2");
}

void suite_kummer(const VerifyConfig& cfg, Checker& c)
{
    const std::uint32_t p = cfg.ctx.p;
    const int k = cfg.kummer_k;
    if (k < 1 || ipow(p, k) > 27)
        fail(ErrorCode::InvalidArgument, "exhaustive Kummer checks need 1 <= k and p^k <= 27");
    const auto base = kummer_base(p, k, k, 4);
    const auto st = kummer_structure_check(base);
    c.check(st.passed, "structure: " + st.failed_check + " " + st.counterexample);
    const auto sa = serre_tate_action_check(CyclotomicElem::zeta(p, k, 4), k);
    c.check(sa.passed, "Serre-Tate: " + sa.failed_check + " " + sa.counterexample);
    const auto neg = serre_tate_action_check(CyclotomicElem::zeta(p, k, 4), k, 4, [](const KummerElement& x, const KummerElement& y) {
        const std::uint64_t n = x.base->order();
        const std::uint64_t s = x.a + y.a;
        return KummerElement{x.base, s % n, (x.j + y.j + (s >= n ? 1 : 0)) % n};
    });
    c.check(!neg.passed, "negative control (corrupted carrying) was not detected");
    c.add_checks(st.checks + sa.checks);
    const std::uint64_t order = ipow(p, k);
    c.note(std::to_string(order * order) + "-element table report");
    for (const auto& l : st.log)
        c.note(l);
    for (const auto& l : sa.log)
        c.note(l);
    c.note("negative control rejected at " + neg.failed_check + ": " + neg.counterexample);
}

void suite_nu(const VerifyConfig& cfg, Checker& c)
{
    const auto& ctx = cfg.ctx;
    const PadicInt a(ctx, cfg.a);
    for (int s : {1, 3, 5})
        for (int t = 0; t <= 3; ++t) {
            const auto conv = convolution_nu(a, tensor(fn::monomial(ctx, s), fn::monomial(ctx, t)), cfg.m_max);
            c.check(agree(conv, nu_closed_form(ctx, a, s, t), ctx.N - 1),
                    "s=" + std::to_string(s) + " t=" + std::to_string(t));
        }
    c.note("moment grid s in {1,3,5}, t in {0..3}");
}

using SuiteFn = void (*)(const VerifyConfig&, Checker&);

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"moments", suite_moments}, {"congruences", suite_congruences}, {"action", suite_action},
        {"amice", suite_amice},     {"kummer", suite_kummer},           {"nu", suite_nu},
    };
    return r;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, f] : registry())
            n.push_back(name);
        return n;
    }();
    return names;
}

std::vector<SuiteResult> run_suite(const std::string& name, const VerifyConfig& cfg)
{
    std::vector<SuiteResult> out;
    bool known = name == "all";
    for (const auto& [suite, f] : registry()) {
        if (name != "all" && name != suite)
            continue;
        known = true;
        SuiteResult r;
        r.name = suite;
        Checker c(r);
        const auto t0 = std::chrono::steady_clock::now();
        f(cfg, c);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    if (!known)
        fail(ErrorCode::InvalidArgument, "unknown suite \"" + name + "\"");
    return out;
}

} // namespace padicmf
