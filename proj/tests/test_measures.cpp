#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "padicmf/circle_action.hpp"
#include "padicmf/errors.hpp"
#include "padicmf/measures.hpp"

using namespace padicmf;

namespace {

const PadicContext kCtx = PadicContext::make(5, 12, 60);

Scalar s(std::int64_t v) { return make_scalar(kCtx, v); }

Scalar from_rational(const oracle::Rat& x, const PadicContext& ctx = kCtx)
{
    std::uint64_t r = 0;
    if (!oracle::reduce(x, ctx.p, ctx.N, r))
        throw std::runtime_error("oracle value not p-integral");
    return Scalar(PadicInt::from_residue(ctx.p, ctx.N, r));
}

Scalar from_int(const oracle::Int& x, const PadicContext& ctx = kCtx) { return from_rational(oracle::Rat(x), ctx); }

} // namespace

TEST(EisensteinEval, SpecExamples)
{
    const PadicInt a3(kCtx, 3);
    const auto g = eisenstein_eval(a3, fn::monomial(kCtx, 1));
    EXPECT_EQ(g[1], s(-16));
    EXPECT_EQ(g[0], from_rational(oracle::Rat(2, 3)));

    const auto h = eisenstein_eval(PadicInt(kCtx, 2), fn::indicator(kCtx, 1, 1));
    EXPECT_EQ(h[2], s(2));
}

TEST(EisensteinEval, CoefficientsMatchBruteForce)
{
    const std::vector<std::int64_t> table{4, -1, 7, 0, 2};
    const auto f = fn::locally_constant(kCtx, 1, table);
    const auto g = eisenstein_eval(PadicInt(kCtx, 3), f);
    const auto fo = [&](std::int64_t x) { return oracle::Int(table[static_cast<std::size_t>(x % 5)]); };
    for (std::int64_t n = 1; n <= kCtx.M; ++n)
        EXPECT_EQ(g[static_cast<std::size_t>(n)], from_int(oracle::eisenstein_coefficient(n, 3, fo))) << n;
}

TEST(EisensteinEval, MomentIdentity)
{
    for (std::int64_t a : {2, 3}) {
        const PadicInt pa(kCtx, a);
        for (int k : {2, 4, 6, 8, 10, 12}) {
            const auto g = eisenstein_eval(pa, fn::monomial(kCtx, k - 1));
            const oracle::Int factor = 1 - oracle::ipow(oracle::Int(a), k);
            for (std::int64_t n = 1; n <= kCtx.M; ++n)
                EXPECT_EQ(g[static_cast<std::size_t>(n)], from_int(factor * 2 * oracle::sigma(n, k - 1)));
            EXPECT_EQ(g[0], from_rational(oracle::regularized_zeta(a, k)));
            if (k % 4 != 0) {
                const PadicInt fa = PadicInt(kCtx, 1) - pa.pow(static_cast<std::uint64_t>(k));
                EXPECT_EQ(g, eisenstein_2G(kCtx, k).scaled(Scalar(fa)));
            }
        }
    }
}

TEST(KLConstant, MomentsIncludingPoles)
{
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const auto ctx = PadicContext::make(p, 12, 10);
        const PadicInt a(ctx, static_cast<std::int64_t>(oracle::generator_mod_p2(p)));
        const KLConstantTerm kl(ctx, a);
        for (int k = 1; k <= 2 * static_cast<int>(p - 1) + 2; ++k) {
            const Scalar v = kl(fn::monomial(ctx, k - 1));
            EXPECT_GE(v.prec(), ctx.N - 1);
            EXPECT_EQ(v, from_rational(oracle::regularized_zeta(static_cast<std::int64_t>(a.residue()), k), ctx))
                << "p=" << p << " k=" << k;
        }
    }
}

TEST(KLConstant, SpecExamples)
{
    const PadicInt a(kCtx, 2);
    EXPECT_EQ(kl_constant(a, fn::monomial(kCtx, 1)), from_rational(oracle::Rat(1, 4)));
    EXPECT_EQ(kl_constant(a, fn::monomial(kCtx, 3)), from_rational(oracle::Rat(-1, 8)));
    EXPECT_EQ(kl_constant(a, fn::monomial(kCtx, 5)), from_rational(oracle::Rat(1, 4)));
}

TEST(KLConstant, IndependentOfLevel)
{
    // The same function presented at levels 0..3 gives the same constant.
    const PadicInt a(kCtx, 2);
    const KLConstantTerm kl(kCtx, a);
    const auto f = fn::polynomial(kCtx, std::vector<std::int64_t>{3, 0, 5, 1});
    const Scalar base = kl(f);
    for (int m = 1; m <= 3; ++m)
        EXPECT_EQ(kl(fn::step(kCtx, to_step(f, m))), base) << m;
    // Indicators of all classes at a level sum to the total mass.
    Scalar total = s(0);
    for (int c = 0; c < 25; ++c)
        total += kl(fn::indicator(kCtx, 2, c));
    EXPECT_EQ(total, kl(fn::constant(kCtx, 1)));
}

TEST(KLConstant, LevelCap)
{
    const PadicInt a(kCtx, 2);
    try {
        (void)kl_constant(a, fn::indicator(kCtx, 4, 1), 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PrecisionExhausted);
    }
}

TEST(KLConstant, BinomialsThroughMomentsAgreeWithSteps)
{
    const PadicInt a(kCtx, 3);
    const KLConstantTerm kl(kCtx, a);
    for (int k = 0; k < 5; ++k)
        EXPECT_EQ(Scalar(kl.on_binomial(k)), kl(fn::step(kCtx, to_step(fn::binomial(kCtx, k)))));
    // Large k stays p-integral through the moment path.
    for (int k = 5; k <= 20; ++k)
        EXPECT_NO_THROW((void)kl.on_binomial(k));
}

TEST(BasicCongruence, KummerCongruencesOnMoments)
{
    const PadicInt a(kCtx, 2);
    for (int m : {1, 2}) {
        const int period = 4 * static_cast<int>(ipow(5, m - 1));
        for (int k = m + 1; k <= 24; ++k) {
            const int kp = k + period;
            const auto d = eisenstein_eval(a, fn::monomial(kCtx, k - 1)) - eisenstein_eval(a, fn::monomial(kCtx, kp - 1));
            for (const auto& c : d.coeffs())
                EXPECT_TRUE(congruent(c, CyclotomicElem::zero(5, 0, 12), m)) << "k=" << k << " k'=" << kp;
        }
    }
}

TEST(BasicCongruence, CongruentStepFunctions)
{
    // f = g + 5^2 h pointwise, so mu(f) = mu(g) mod 5^2 in every coefficient.
    const PadicInt a(kCtx, 2);
    std::mt19937_64 rng(9);
    std::vector<std::int64_t> g(25), h(25), f(25);
    for (int c = 0; c < 25; ++c) {
        g[c] = static_cast<std::int64_t>(rng() % 1000);
        h[c] = static_cast<std::int64_t>(rng() % 1000);
        f[c] = g[c] + 25 * h[c];
    }
    const auto mf = eisenstein_eval(a, fn::locally_constant(kCtx, 2, f));
    const auto mg = eisenstein_eval(a, fn::locally_constant(kCtx, 2, g));
    EXPECT_TRUE(congruent(mf, mg, 2));
}

TEST(Amice, DiracExamples)
{
    const auto b1 = std::get<Measure::AmiceScalar>(amice_transform(measure::dirac(kCtx, 1), 4).variant()).b;
    EXPECT_EQ(b1[0], s(1));
    EXPECT_EQ(b1[1], s(1));
    EXPECT_TRUE(b1[2].is_zero());
    const auto b0 = std::get<Measure::AmiceScalar>(amice_transform(measure::dirac(kCtx, 0), 4).variant()).b;
    EXPECT_EQ(b0[0], s(1));
    for (std::size_t k = 1; k < b0.size(); ++k)
        EXPECT_TRUE(b0[k].is_zero());
    const auto b2 = std::get<Measure::AmiceScalar>(amice_transform(measure::dirac(kCtx, 2), 4).variant()).b;
    EXPECT_EQ(b2[0], s(1));
    EXPECT_EQ(b2[1], s(2));
    EXPECT_EQ(b2[2], s(1));
    EXPECT_TRUE(b2[3].is_zero());
}

TEST(Amice, EvalExamples)
{
    const auto zeta = CyclotomicElem::zeta(5, 1, 12);
    const auto d1 = measure::dirac(kCtx, 1);
    EXPECT_EQ(as_scalar(eval_at_character(d1, zeta)), zeta);
    const auto mu = measure::amice(kCtx, {s(0), s(1), s(0)});
    EXPECT_EQ(as_scalar(eval_measure(mu, fn::monomial(kCtx, 2))), s(1));
    EXPECT_TRUE(as_scalar(eval_measure(mu, fn::constant(kCtx, 0))).is_zero());
    EXPECT_EQ(as_scalar(eval_at_character(measure::dirac(kCtx, 7), zeta)), zeta.pow(7));
    EXPECT_EQ(as_scalar(eval_at_character(mu, CyclotomicElem::one(5, 0, 12))), s(0));
}

TEST(Amice, CharacterDuality)
{
    std::mt19937_64 rng(4);
    std::vector<Measure> mus{measure::dirac(kCtx, 0), measure::dirac(kCtx, 1), measure::dirac(kCtx, 2)};
    for (int i = 0; i < 5; ++i) {
        std::vector<Scalar> b;
        for (int k = 0; k <= 12; ++k)
            b.push_back(Scalar(PadicInt::from_residue(5, 12, rng() % kCtx.modulus())));
        mus.push_back(measure::amice(kCtx, b));
    }
    for (int m = 1; m <= 2; ++m) {
        const auto zeta = CyclotomicElem::zeta(5, m, 12);
        for (std::uint64_t e = 0; e < 5; ++e) {
            const auto z = zeta.pow(e);
            const auto T = z - CyclotomicElem::one(5, m, 12);
            for (const auto& mu : mus) {
                const auto A = std::get<Measure::AmiceScalar>(amice_transform(mu, 12).variant());
                EXPECT_EQ(as_scalar(eval_at_character(mu, z)), amice_at(A, T));
            }
        }
    }
}

TEST(Amice, EisensteinTotalMass)
{
    const PadicInt a(kCtx, 2);
    const auto mu = measure::eisenstein(kCtx, a);
    const auto g = as_series(eval_at_character(mu, CyclotomicElem::one(5, 0, 12)));
    EXPECT_EQ(g[0], from_rational(oracle::regularized_zeta(2, 1)));
    for (std::int64_t n = 1; n <= kCtx.M; ++n)
        EXPECT_EQ(g[static_cast<std::size_t>(n)], s(2 * (1 - 2) * oracle::tau(n)));
}

TEST(Amice, SeriesValuedTransformReconstructs)
{
    // The Amice coefficients of mu^(a) recover mu^(a)(f) for a polynomial f.
    const PadicInt a(kCtx, 3);
    const auto mu = measure::eisenstein(kCtx, a);
    const auto A = amice_transform(mu, 6);
    const auto f = fn::polynomial(kCtx, std::vector<std::int64_t>{1, 0, -2, 0, 1});
    EXPECT_EQ(as_series(eval_measure(A, f)), as_series(eval_measure(mu, f)));
}

TEST(Amice, TailPrecision)
{
    const auto f = fn::mahler_series(kCtx, {s(1), s(1)}, 7);
    const auto mu = measure::dirac(kCtx, 3);
    EXPECT_THROW((void)eval_measure(mu, f), Error);
    EXPECT_EQ(value_prec(eval_measure(mu, f, 7)), 7);
    // A Mahler series with an exact tail is evaluated at full precision.
    EXPECT_EQ(as_scalar(eval_measure(mu, fn::binomial(kCtx, 2))), s(3));
}

TEST(ProductMeasure, DiracTensor)
{
    const auto dc = measure::dirac(kCtx, 3);
    const auto dd = measure::dirac(kCtx, 7);
    const Bilinear b = [&](const ContinuousFn& f, const ContinuousFn& g) -> MeasureValue {
        return as_scalar(eval_measure(dc, f)) * as_scalar(eval_measure(dd, g));
    };
    const auto F = tensor(fn::monomial(kCtx, 2), fn::indicator(kCtx, 1, 2));
    EXPECT_EQ(as_scalar(product_measure(b, F)), s(9));
    EXPECT_TRUE(as_scalar(product_measure(b, TwoVarFn{kCtx, {}})).is_zero());
}

TEST(ProductMeasure, IndependentOfDecomposition)
{
    // F(x, y) = 1_{x = 1}(x) (y + 1) written two ways.
    const auto F1 = tensor(fn::indicator(kCtx, 1, 1), fn::polynomial(kCtx, std::vector<std::int64_t>{1, 1}));
    const auto F2 = tensor(fn::indicator(kCtx, 1, 1), fn::monomial(kCtx, 1)) +
                    tensor(fn::locally_constant(kCtx, 2, [] {
                               std::vector<std::int64_t> t(25, 0);
                               for (int c = 0; c < 25; ++c)
                                   t[c] = c % 5 == 1 ? 1 : 0;
                               return t;
                           }()),
                           fn::constant(kCtx, 1));
    for (std::int64_t x = 0; x < 25; ++x)
        for (std::int64_t y = 0; y < 25; ++y)
            ASSERT_EQ(F1.evaluate(x, y), F2.evaluate(x, y));
    const PadicInt a(kCtx, 2);
    EXPECT_EQ(convolution_nu(a, F1), convolution_nu(a, F2));
}

TEST(Convolution, SpecExamples)
{
    const PadicInt a(kCtx, 2);
    const auto nu = convolution_nu(a, tensor(fn::monomial(kCtx, 1), fn::monomial(kCtx, 1)));
    EXPECT_EQ(nu[2], s(-36));
    EXPECT_EQ(nu, nu_closed_form(kCtx, a, 1, 1));

    const auto t0 = convolution_nu(a, tensor(fn::monomial(kCtx, 3), fn::constant(kCtx, 1)));
    EXPECT_EQ(t0, eisenstein_eval(a, fn::monomial(kCtx, 3)));

    const auto s0 = convolution_nu(a, tensor(fn::constant(kCtx, 1), fn::monomial(kCtx, 2)));
    EXPECT_TRUE(s0[0].is_zero());
}

TEST(Convolution, TheoremGrid)
{
    for (std::int64_t av : {2, 3}) {
        const PadicInt a(kCtx, av);
        for (int sdeg : {1, 3, 5})
            for (int t = 0; t <= 3; ++t)
                EXPECT_EQ(convolution_nu(a, tensor(fn::monomial(kCtx, sdeg), fn::monomial(kCtx, t))),
                          nu_closed_form(kCtx, a, sdeg, t))
                    << "a=" << av << " s=" << sdeg << " t=" << t;
    }
}

TEST(Halving, MonomialTransport)
{
    const auto F = pushforward_halving(tensor(fn::monomial(kCtx, 2), fn::monomial(kCtx, 3)));
    ASSERT_EQ(F.terms.size(), 1u);
    for (std::int64_t x = 0; x < 12; ++x)
        for (std::int64_t y = 0; y < 12; ++y)
            EXPECT_EQ(F.evaluate(x, y), s(x * x * x * x * x * y * y * y));
    const PadicInt a(kCtx, 2);
    // phi_* moments: (1 - a^{s+2t+1}) theta^t 2G_{s+1} pattern via x^{s+t} y^t.
    EXPECT_EQ(convolution_nu(a, F), theta_power(eisenstein_moment_series(kCtx, a, 6), 3));
}

TEST(Halving, ConstantSecondFactor)
{
    const auto f = fn::indicator(kCtx, 1, 2);
    const auto F = pushforward_halving(tensor(f, fn::constant(kCtx, 1)));
    for (std::int64_t x = 0; x < 25; ++x)
        for (std::int64_t y = 0; y < 5; ++y)
            EXPECT_EQ(F.evaluate(x, y), evaluate(f, x));
}

TEST(Halving, CharacterSplitsByResidue)
{
    const auto zeta = CyclotomicElem::zeta(5, 1, 12);
    const auto orig = tensor(fn::monomial(kCtx, 1), fn::character(kCtx, zeta));
    const auto F = pushforward_halving(orig);
    for (std::int64_t x = 0; x < 25; ++x)
        for (std::int64_t y = 0; y < 25; ++y)
            EXPECT_EQ(F.evaluate(x, y), orig.evaluate(x, x * y));
}

TEST(Halving, RejectsNonStep)
{
    const auto g = fn::mahler_series(kCtx, {s(1), s(1)}, 3);
    try {
        (void)pushforward_halving(tensor(fn::monomial(kCtx, 1), g));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnsupportedShape);
    }
}

TEST(TwoVariableL, TrivialCharacters)
{
    const PadicInt a(kCtx, 2);
    const auto one = fn::constant(kCtx, 1);
    const auto L = two_variable_L(one, one, a);
    EXPECT_EQ(L.factor, s(-1));
    EXPECT_TRUE(L.constant.is_zero());
    for (std::int64_t n = 1; n <= kCtx.M; ++n)
        EXPECT_EQ(L.series[static_cast<std::size_t>(n)], s(n % 5 == 0 ? 0 : 2 * oracle::tau(n))) << n;
}

TEST(TwoVariableL, Guards)
{
    // chi2 = trivial, chi1(a) a = 1 when chi1(2) = 2^-1 = 3 mod 5: build that character.
    // Characters of (Z/5)^x are determined by chi(2); take chi1(2) = omega(2)^-1 where omega is
    // the Teichmueller lift, so chi1(a) a = 1 to full precision.
    const PadicInt two(kCtx, 2);
    // omega(2): the 4th root of unity congruent to 2 mod 5, by iterating x -> x^5.
    PadicInt w = two;
    for (int i = 0; i < 20; ++i)
        w = w.pow(5);
    std::vector<Scalar> t(5, s(0));
    t[1] = s(1);
    t[2] = Scalar(w.inverse());
    t[4] = Scalar(w.inverse().pow(2));
    t[3] = Scalar(w.inverse().pow(3));
    const auto chi1 = fn::locally_constant(kCtx, 1, t);
    try {
        (void)two_variable_L(chi1, fn::constant(kCtx, 1), two);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EulerFactorNotInvertible);
    }
    // A doubled table is not multiplicative.
    const auto doubled = fn::locally_constant(kCtx, 1, std::vector<std::int64_t>{0, 2, 2, 2, 2});
    try {
        (void)two_variable_L(doubled, fn::constant(kCtx, 1), two);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
    }
}

TEST(TwoVariableL, NontrivialCharacterIdentity)
{
    // (1 - chi1(a) a / chi2(a)) L = nu(F) with F on explicit step tables.
    const PadicInt a(kCtx, 2);
    PadicInt w(kCtx, 2);
    for (int i = 0; i < 20; ++i)
        w = w.pow(5);
    std::vector<Scalar> t(5, s(0));
    t[1] = s(1);
    t[2] = Scalar(w);
    t[4] = Scalar(w.pow(2));
    t[3] = Scalar(w.pow(3));
    const auto chi = fn::locally_constant(kCtx, 1, t);
    const auto L = two_variable_L(chi, fn::constant(kCtx, 1), a);
    std::vector<Scalar> units(5, s(1));
    units[0] = s(0);
    const auto F = tensor(fn::locally_constant(kCtx, 1, t), fn::locally_constant(kCtx, 1, units));
    EXPECT_EQ(L.series.scaled(L.factor), convolution_nu(a, F));
}
