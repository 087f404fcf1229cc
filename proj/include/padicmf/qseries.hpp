#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "padicmf/dual_number.hpp"
#include "padicmf/errors.hpp"
#include "padicmf/functions.hpp"
#include "padicmf/rational.hpp"

namespace padicmf {

/// A q-expansion sum_{n=0}^{L} a_n q^n known through q^L (L = truncation()).
/// Exponents are integers; arithmetic truncates at the shorter operand.
template <class R>
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            fail(ErrorCode::InvalidArgument, "a q-series needs at least its constant term");
    }

    int truncation() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<R>& coeffs() const noexcept { return coeffs_; }
    const R& operator[](std::size_t n) const { return coeffs_.at(n); }
    R& operator[](std::size_t n) { return coeffs_.at(n); }

    QSeries truncated(int L) const
    {
        if (L >= truncation())
            return *this;
        return QSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + L + 1));
    }

    QSeries& operator+=(const QSeries& o)
    {
        const int L = std::min(truncation(), o.truncation());
        coeffs_.resize(static_cast<std::size_t>(L) + 1);
        for (int n = 0; n <= L; ++n)
            coeffs_[n] += o.coeffs_[n];
        return *this;
    }
    QSeries& operator-=(const QSeries& o)
    {
        const int L = std::min(truncation(), o.truncation());
        coeffs_.resize(static_cast<std::size_t>(L) + 1);
        for (int n = 0; n <= L; ++n)
            coeffs_[n] -= o.coeffs_[n];
        return *this;
    }
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }

    template <class S>
    QSeries scaled(const S& c) const
    {
        QSeries out = *this;
        for (auto& a : out.coeffs_)
            a = c * a;
        return out;
    }

    /// Cauchy product, truncated at the shorter operand.
    friend QSeries operator*(const QSeries& a, const QSeries& b)
    {
        const int L = std::min(a.truncation(), b.truncation());
        std::vector<R> c;
        c.reserve(static_cast<std::size_t>(L) + 1);
        for (int n = 0; n <= L; ++n) {
            R acc = a.coeffs_[0] * b.coeffs_[n];
            for (int i = 1; i <= n; ++i)
                acc += a.coeffs_[i] * b.coeffs_[n - i];
            c.push_back(std::move(acc));
        }
        return QSeries(std::move(c));
    }

    friend bool operator==(const QSeries& a, const QSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<R> coeffs_;
};

using QExpansion = QSeries<Scalar>;
using DualScalar = DualNumber<Scalar>;
using DualQExpansion = QSeries<DualScalar>;

QExpansion zero_series(const PadicContext& ctx);
QExpansion series_from_integers(const PadicContext& ctx, const std::vector<std::int64_t>& coeffs);

/// Smallest precision among the coefficients.
int series_prec(const QExpansion& g);

/// Coefficient-wise congruence modulo p^e over the common truncation.
bool congruent(const QExpansion& a, const QExpansion& b, int e);

/// theta = q d/dq: a_n -> n a_n.
QExpansion theta(const QExpansion& g);
QExpansion theta_power(const QExpansion& g, int t);

/// U_p: a_n -> a_{pn}. The result is known through q^floor(L/p).
QExpansion u_p(const QExpansion& g);
/// V_p: coefficient pn becomes a_n, all others 0; capped at q^M.
QExpansion v_p(const QExpansion& g, int M);

/// sigma_e(n) mod p^N for 0 <= n <= M (entry 0 is 0), by a divisor sieve.
/// Results are cached per (p, N, M, e).
std::vector<PadicInt> divisor_power_sums(const PadicContext& ctx, int e);

/// 2G_k = zeta(1-k) + 2 sum_n sigma_{k-1}(n) q^n for even k >= 2; the zero series
/// for odd k >= 3. Rejects k = 1 (InvalidArgument) and throws NotPIntegral when
/// (p-1) | k.
QExpansion eisenstein_2G(const PadicContext& ctx, int k);

/// The series (1 - a^k) [ -B_k/k + 2 sum_n sigma_{k-1}(n) q^n ] for any k >= 1.
/// The constant term is formed as the exact rational (1 - a^k)(-B_k/k) before
/// reduction (B_1 = -1/2), so it exists even when (p-1) | k. For even k this is
/// (1 - a^k) 2G_k; for odd k it is what the Eisenstein measure assigns to
/// z^(k-1), which is not a multiple of 2G_k = 0. The integer representative of
/// a is its canonical residue.
QExpansion eisenstein_moment_series(const PadicContext& ctx, const PadicInt& a, int k);

/// The locally constant Z-valued table of f at its own level; throws
/// InvalidArgument when f is not locally constant with level-0 values.
struct PeriodicTable {
    int level = 0;
    std::vector<BigInt> values;
};
PeriodicTable periodic_table(const ContinuousFn& f);

/// L(1-k, f) = -B_{k,f} / k with B_{k,f} = F^(k-1) sum_{c<F} f(c) B_k(c/F),
/// F = p^level, using the canonical integer residues of the table values.
BigRational lvalue_periodic(int k, const ContinuousFn& f);

/// sum_{n>=1} 2 sum_{d|n} d^(k-1) f(d) q^n with a zero constant term. Works for
/// any exactly evaluable f, including cyclotomic-valued ones.
QExpansion twisted_divisor_series(const PadicContext& ctx, int k, const ContinuousFn& f);

/// 2G_{k,f}: constant L(1-k, f), coefficient n = 2 sum_{d|n} d^(k-1) f(d).
/// Throws NotPIntegral when L(1-k, f) is not p-integral (as for the bare 2G_k).
QExpansion eisenstein_2G_twisted(const PadicContext& ctx, int k, const ContinuousFn& f);

} // namespace padicmf
