#include <gtest/gtest.h>

#include <random>

#include "padicmf/cyclotomic.hpp"
#include "padicmf/dual_number.hpp"
#include "padicmf/errors.hpp"
#include "padicmf/padic_int.hpp"
#include "padicmf/rational.hpp"

using namespace padicmf;

namespace {

// Akiyama-Tanigawa: an algorithm unrelated to the library's recurrence. It
// produces B_1 = +1/2, so the sign of index 1 is flipped afterwards.
std::vector<BigRational> bernoulli_akiyama_tanigawa(int n)
{
    std::vector<BigRational> out;
    std::vector<BigRational> a(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        a[m] = BigRational(1, m + 1);
        for (int j = m; j >= 1; --j)
            a[j - 1] = BigRational(j) * (a[j - 1] - a[j]);
        out.push_back(a[0]);
    }
    if (n >= 1)
        out[1] = -out[1];
    return out;
}

PadicInt random_padic(std::mt19937_64& rng, std::uint32_t p, int N)
{
    return PadicInt::from_residue(p, N, rng() % ipow(p, N));
}

CyclotomicElem random_cyclo(std::mt19937_64& rng, std::uint32_t p, int level, int N)
{
    std::vector<PadicInt> c;
    for (std::size_t i = 0; i < cyclotomic_degree(p, level); ++i)
        c.push_back(random_padic(rng, p, N));
    return CyclotomicElem(p, level, c);
}

} // namespace

TEST(ReduceRational, SpecExamples)
{
    const auto ctx = PadicContext::make(5, 3, 10);
    const PadicInt r = reduce_rational(BigInt(2), BigInt(3), ctx);
    EXPECT_EQ(r.residue(), 84u);
    EXPECT_EQ(r.prec(), 3);
    EXPECT_EQ((r * PadicInt(ctx, 3)).residue(), 2u);

    const PadicInt z = reduce_rational(BigInt(0), BigInt(7), ctx);
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.prec(), 3);

    try {
        (void)reduce_rational(BigInt(1), BigInt(5), ctx);
        FAIL() << "expected NotPIntegral";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPIntegral);
    }
}

TEST(ReduceRational, CancelledPowerLowersPrecision)
{
    const auto ctx = PadicContext::make(5, 6, 10);
    // 25/50 = 1/2 in lowest terms: no precision loss.
    EXPECT_EQ(reduce_rational(BigRational(25, 50), ctx).prec(), 6);
    // Unreduced 5/10 passed as a pair cancels one factor of 5.
    const PadicInt h = reduce_rational(BigInt(5), BigInt(10), ctx);
    EXPECT_EQ(h.prec(), 5);
    EXPECT_EQ((h * PadicInt(5, 5, 2)).residue(), 1u);
}

TEST(Bernoulli, SpecValues)
{
    EXPECT_EQ(bernoulli(0), BigRational(1));
    EXPECT_EQ(bernoulli(1), BigRational(-1, 2));
    EXPECT_EQ(bernoulli(2), BigRational(1, 6));
    EXPECT_EQ(bernoulli(3), BigRational(0));
    EXPECT_EQ(bernoulli(4), BigRational(-1, 30));
}

TEST(Bernoulli, MatchesAkiyamaTanigawa)
{
    const auto oracle = bernoulli_akiyama_tanigawa(40);
    for (int k = 0; k <= 40; ++k)
        EXPECT_EQ(bernoulli(k), oracle[k]) << "k = " << k;
}

TEST(Bernoulli, VonStaudtClausen)
{
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const auto ctx = PadicContext::make(p, 12, 10);
        for (int k = 2; k <= 20; k += 2) {
            const BigRational z = -bernoulli(k) / k;
            if (k % (p - 1) != 0) {
                EXPECT_NO_THROW((void)reduce_rational(z, ctx)) << "p=" << p << " k=" << k;
            } else {
                EXPECT_EQ(valuation(denominator(z), p), 1 + valuation(BigInt(k), p)) << "p=" << p << " k=" << k;
                EXPECT_EQ(valuation(denominator(bernoulli(k)), p), 1);
                EXPECT_THROW((void)reduce_rational(z, ctx), Error);
            }
        }
    }
}

TEST(Bernoulli, PolynomialAtZeroAndOne)
{
    for (int k = 2; k <= 12; ++k) {
        EXPECT_EQ(bernoulli_polynomial(k, 0), bernoulli(k));
        EXPECT_EQ(bernoulli_polynomial(k, 1), bernoulli(k));
    }
    // B_k(x + 1) - B_k(x) = k x^(k-1)
    const BigRational x(2, 7);
    for (int k = 1; k <= 8; ++k)
        EXPECT_EQ(bernoulli_polynomial(k, x + 1) - bernoulli_polynomial(k, x),
                  BigRational(k) * BigRational(pow(numerator(x), static_cast<unsigned>(k - 1)), pow(denominator(x), static_cast<unsigned>(k - 1))));
}

TEST(PadicInt, RingLawsRandom)
{
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {3u, 5u, 7u}) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = random_padic(rng, p, 12);
            const auto b = random_padic(rng, p, 12);
            const auto c = random_padic(rng, p, 12);
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ(a - a, PadicInt::zero(p, 12));
            if (a.is_unit())
                EXPECT_EQ(a * a.inverse(), PadicInt::one(p, 12));
        }
    }
}

TEST(PadicInt, PrecisionTracking)
{
    const PadicInt a(5, 6, 25);
    const PadicInt b(5, 3, 7);
    EXPECT_EQ((a + b).prec(), 3);
    EXPECT_EQ((a * b).prec(), 3);
    EXPECT_EQ(a.divide_by_p().prec(), 5);
    EXPECT_EQ(a.divide_by_p().residue(), 5u);
    EXPECT_EQ(a.valuation(), 2);
    EXPECT_THROW((void)a.inverse(), Error);
    EXPECT_EQ(PadicInt(5, 4, -1).residue(), 624u);
    EXPECT_EQ(PadicInt(5, 4, -1).centered(), -1);
}

TEST(PadicInt, Congruence)
{
    EXPECT_TRUE(congruent(PadicInt(5, 6, 3), PadicInt(5, 6, 3 + 125), 3));
    EXPECT_FALSE(congruent(PadicInt(5, 6, 3), PadicInt(5, 6, 3 + 125), 4));
    EXPECT_THROW((void)congruent(PadicInt(5, 2, 3), PadicInt(5, 6, 3), 3), Error);
}

TEST(Cyclotomic, ZetaIsPrimitive)
{
    for (std::uint32_t p : {3u, 5u}) {
        for (int m = 1; m <= 3; ++m) {
            const auto z = CyclotomicElem::zeta(p, m, 10);
            const auto one = CyclotomicElem::one(p, m, 10);
            EXPECT_EQ(z.pow(ipow(p, m)), one);
            EXPECT_NE(z.pow(ipow(p, m - 1)), one);
            // 1 + zeta^{p^{m-1}} + ... = 0
            CyclotomicElem s = CyclotomicElem::zero(p, m, 10);
            for (std::uint32_t i = 0; i < p; ++i)
                s += z.pow(i * ipow(p, m - 1));
            EXPECT_TRUE(s.is_zero());
        }
    }
}

TEST(Cyclotomic, RingLawsRandom)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = random_cyclo(rng, 5, 1, 12);
        const auto b = random_cyclo(rng, 5, 1, 12);
        const auto c = random_cyclo(rng, 5, 2, 12);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a.norm() * b.norm(), (a * b).norm());
        if (a.is_unit())
            EXPECT_EQ(a * a.inverse(), CyclotomicElem::one(5, 1, 12));
    }
}

TEST(Cyclotomic, LiftingEmbedsRoots)
{
    const auto z1 = CyclotomicElem::zeta(3, 1, 8);
    const auto z2 = CyclotomicElem::zeta(3, 2, 8);
    EXPECT_EQ(z1.lifted(2), z2.pow(3));
    EXPECT_EQ(z1 * z2, z2.pow(4));
}

TEST(Cyclotomic, ZetaMinusOneIsNotAUnit)
{
    const auto z = CyclotomicElem::zeta(5, 1, 12);
    const auto d = z - CyclotomicElem::one(5, 1, 12);
    EXPECT_FALSE(d.is_unit());
    EXPECT_EQ(d.norm().residue(), 5u); // Phi_5(1) = 5
    EXPECT_THROW((void)d.inverse(), Error);
}

TEST(CycloPow, SpecExamples)
{
    const auto z3 = CyclotomicElem::zeta(3, 1, 6);
    EXPECT_EQ(cyclo_pow(z3, PadicInt(3, 6, 4)), z3);
    EXPECT_EQ(cyclo_pow(z3, PadicInt(3, 6, 0)), CyclotomicElem::one(3, 1, 6));
    const auto z5 = CyclotomicElem::zeta(5, 1, 6);
    EXPECT_EQ(cyclo_pow(z5, PadicInt(5, 6, 7)), z5.pow(2));
}

TEST(CycloPow, PeriodicInExponent)
{
    std::mt19937_64 rng(3);
    for (int m = 1; m <= 2; ++m) {
        const auto z = CyclotomicElem::zeta(5, m, 10).pow(3);
        const auto period = static_cast<std::int64_t>(ipow(5, m));
        for (int trial = 0; trial < 40; ++trial) {
            const auto e = static_cast<std::int64_t>(rng() % 100000);
            EXPECT_EQ(cyclo_pow(z, PadicInt(5, 10, e)), cyclo_pow(z, PadicInt(5, 10, e + period)));
        }
    }
}

TEST(CycloPow, RejectsNonRoots)
{
    const auto two = CyclotomicElem::constant(5, 1, PadicInt(5, 6, 2));
    try {
        (void)cyclo_pow(two, PadicInt(5, 6, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotRootOfUnity);
    }
}

TEST(DualNumber, OnePlusEpsilonPowers)
{
    using D = DualNumber<PadicInt>;
    const D one{PadicInt::one(5, 12), PadicInt::zero(5, 12)};
    const D x{PadicInt::one(5, 12), PadicInt::one(5, 12)};
    for (std::uint64_t n = 0; n <= 40; ++n) {
        const D r = x.pow(n, one);
        EXPECT_EQ(r.a, PadicInt::one(5, 12));
        EXPECT_EQ(r.b, PadicInt(5, 12, static_cast<std::int64_t>(n)));
    }
}

TEST(DualNumber, RingLawsAndInverse)
{
    std::mt19937_64 rng(5);
    using D = DualNumber<CyclotomicElem>;
    for (int trial = 0; trial < 30; ++trial) {
        const D a{random_cyclo(rng, 3, 1, 10), random_cyclo(rng, 3, 1, 10)};
        const D b{random_cyclo(rng, 3, 1, 10), random_cyclo(rng, 3, 1, 10)};
        const D c{random_cyclo(rng, 3, 1, 10), random_cyclo(rng, 3, 1, 10)};
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        if (a.is_unit()) {
            const D one{CyclotomicElem::one(3, 1, 10), CyclotomicElem::zero(3, 1, 10)};
            EXPECT_EQ(a * a.inverse(), one);
        }
    }
}

TEST(Context, Validation)
{
    EXPECT_THROW((void)PadicContext::make(2, 5, 5), Error);
    EXPECT_THROW((void)PadicContext::make(9, 5, 5), Error);
    EXPECT_THROW((void)PadicContext::make(5, 0, 5), Error);
    EXPECT_THROW((void)PadicContext::make(5, 5, 0), Error);
    EXPECT_THROW((void)PadicContext::make(7, 40, 5), Error);
    EXPECT_NO_THROW((void)PadicContext::make(7, 12, 60));
}
