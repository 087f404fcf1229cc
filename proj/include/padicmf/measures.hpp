#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "padicmf/functions.hpp"
#include "padicmf/qseries.hpp"

namespace padicmf {

/// What a measure returns: a scalar, or a q-expansion for V-valued measures.
using MeasureValue = std::variant<Scalar, QExpansion>;

MeasureValue operator+(const MeasureValue& x, const MeasureValue& y);
MeasureValue scale(const Scalar& c, const MeasureValue& x);
/// Lowest precision among the scalars making up x.
int value_prec(const MeasureValue& x);
const QExpansion& as_series(const MeasureValue& x);
const Scalar& as_scalar(const MeasureValue& x);

/// A linear functional on ContinuousFn.
class Measure {
public:
    /// b_k = mu(C(x, k)) for k <= K and 0 beyond: a polynomial Amice transform.
    struct AmiceScalar {
        std::vector<Scalar> b;
    };
    struct AmiceSeries {
        std::vector<QExpansion> b;
    };
    /// The Eisenstein measure for the unit a. The integer representative of a
    /// is its canonical residue.
    struct Eisenstein {
        PadicInt a;
        int m_max = 3;
    };
    /// Evaluation at an exact integer point.
    struct Dirac {
        std::int64_t c = 0;
    };
    struct LinearCombination {
        std::vector<std::pair<Scalar, Measure>> terms;
    };
    /// f -> act(f, g): the action map applied to a fixed q-expansion g.
    struct Action {
        QExpansion g;
    };

    using Variant = std::variant<AmiceScalar, AmiceSeries, Eisenstein, Dirac, LinearCombination, Action>;

    Measure(const PadicContext& ctx, Variant v);

    const PadicContext& context() const noexcept { return ctx_; }
    const Variant& variant() const noexcept { return *node_; }
    bool series_valued() const;

private:
    PadicContext ctx_;
    std::shared_ptr<const Variant> node_;
};

namespace measure {

Measure amice(const PadicContext& ctx, std::vector<Scalar> b);
Measure amice_series(const PadicContext& ctx, std::vector<QExpansion> b);
/// Throws NotUnit.
Measure eisenstein(const PadicContext& ctx, const PadicInt& a, int m_max = 3);
Measure dirac(const PadicContext& ctx, std::int64_t c);
Measure combination(const PadicContext& ctx, std::vector<std::pair<Scalar, Measure>> terms);

} // namespace measure

/// mu(f). The result must be known to at least min_prec digits (default N),
/// otherwise PrecisionExhausted is thrown.
MeasureValue eval_measure(const Measure& mu, const ContinuousFn& f, std::optional<int> min_prec = std::nullopt);

/// The Amice coefficients b_0..b_K as an AmiceScalar or AmiceSeries measure.
Measure amice_transform(const Measure& mu, int K);

/// A(T) = sum_k b_k T^k for a scalar Amice measure.
Scalar amice_at(const Measure::AmiceScalar& mu, const Scalar& T);

/// mu(chi_zeta) for a p-power root of unity zeta.
MeasureValue eval_at_character(const Measure& mu, const Scalar& zeta, int max_level = kDefaultMaxLevel);

/// The constant-term functional of the Eisenstein measure.
///
/// On z^(k-1) 1_{b + p^m Z_p} it takes the value -E_{k,a}(b + p^m Z_p), where
/// E_k(b + p^m Z_p) = p^(m(k-1)) B_k({b / p^m}) / k is the Bernoulli
/// distribution and E_{k,a}(U) = E_k(U) - a^k E_k(a^-1 U) its regularization.
/// Each value is an exact rational reduced modulo p^N. The distribution
/// relation makes the result independent of the level used, and the moments
/// come out as (1 - a^k)(-B_k / k) for every k >= 1.
///
/// An overall sign is fixed at construction by matching the k = 2 and k = 4
/// moments against that closed form; construction throws if neither sign does.
class KLConstantTerm {
public:
    KLConstantTerm(const PadicContext& ctx, const PadicInt& a, int m_max = 3);

    int sign() const noexcept { return sign_; }
    const PadicInt& a() const noexcept { return a_; }
    int m_max() const noexcept { return m_max_; }

    /// Value on z^(k-1) 1_{b + p^m Z_p}.
    PadicInt on_class(int k, int m, std::uint64_t b) const;
    /// Value on the binomial function C(z, k), through the moments.
    PadicInt on_binomial(int k) const;
    /// Value on any step-representable or Mahler-series function. Throws
    /// PrecisionExhausted when the step level exceeds m_max.
    Scalar operator()(const ContinuousFn& f) const;

private:
    PadicInt raw_on_class(int k, int m, std::uint64_t b) const;

    PadicContext ctx_;
    PadicInt a_;
    int m_max_;
    int sign_ = 1;
};

/// Smallest integer >= 2 generating (Z/p^2)^x, the default multiplier a.
std::int64_t default_multiplier(std::uint32_t p);

Scalar kl_constant(const PadicInt& a, const ContinuousFn& f, int m_max = 3);

/// mu^(a)(f): coefficient n >= 1 is 2 sum_{d|n} [f(d) - a f(a d)], the constant
/// term is KLConstantTerm(a)(f).
QExpansion eisenstein_eval(const PadicInt& a, const ContinuousFn& f, int m_max = 3);

/// A bilinear evaluator (f, g) -> value and its extension to tensor sums.
using Bilinear = std::function<MeasureValue(const ContinuousFn&, const ContinuousFn&)>;
MeasureValue product_measure(const Bilinear& bilinear, const TwoVarFn& F);

/// sum_i act(g_i, eisenstein_eval(a, f_i)) for F = sum_i f_i (x) g_i.
QExpansion convolution_nu(const PadicInt& a, const TwoVarFn& F, int m_max = 3);
/// The closed form theta^t of the weight s+1 moment series of mu^(a).
QExpansion nu_closed_form(const PadicContext& ctx, const PadicInt& a, int s, int t);

/// F o phi with phi(x, y) = (x, x y), as a new tensor sum. A term f (x) g with g
/// of step level m splits over the classes c of x mod p^m: g(x y) is then a
/// polynomial in x y whose coefficients depend on c y mod p^m. Throws
/// UnsupportedShape when g has no step normal form.
TwoVarFn pushforward_halving(const TwoVarFn& F);

/// Output of two_variable_L.
struct TwoVariableL {
    QExpansion series;  // nu(F) / (1 - chi1(a) a / chi2(a))
    Scalar factor;      // 1 - chi1(a) a / chi2(a)
    Scalar constant;    // constant term of series
};

/// chi1, chi2: characters of (Z/p^m)^x given as level-m LocallyConstant tables
/// (entries at non-units are ignored). Validates multiplicativity and
/// that the values are roots of unity (InvalidArgument otherwise), and throws
/// EulerFactorNotInvertible when the factor is not a unit.
TwoVariableL two_variable_L(const ContinuousFn& chi1, const ContinuousFn& chi2, const PadicInt& a, int m_max = 3);

} // namespace padicmf
