#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "padicmf/context.hpp"
#include "padicmf/cyclotomic.hpp"
#include "padicmf/padic_int.hpp"

namespace padicmf {

/// Every value the library computes is an element of some Z[zeta_{p^m}]/p^N;
/// plain p-adic values are level 0.
using Scalar = CyclotomicElem;

inline constexpr int kDefaultMaxLevel = 3;

Scalar make_scalar(const PadicContext& ctx, std::int64_t value);

/// C(n, k) mod p^N for an exact integer n, at full precision.
PadicInt binomial_exact(std::int64_t n, std::int64_t k, std::uint32_t p, int N);

/// C(x, k) for x known modulo p^prec. Lifts x to its canonical residue; the
/// result is tagged with precision prec - floor(log_p k), the continuity
/// modulus of the binomial polynomial.
PadicInt binomial_padic(const PadicInt& x, std::int64_t k);

/// Polynomials on the residue classes mod p^level: the value at z is
/// polys[z mod p^level](z). This is the normal form every exactly
/// representable function converts into.
struct StepPoly {
    std::uint32_t p = 0;
    int N = 0;
    int level = 0;
    std::vector<std::vector<Scalar>> polys; // p^level entries, low degree first

    std::size_t degree_bound() const;
    StepPoly lifted(int new_level) const;
    Scalar evaluate(std::int64_t n) const;
    Scalar evaluate(const PadicInt& x) const;
};

/// A continuous function Z_p -> Z[zeta]/p^N, held as an immutable expression.
class ContinuousFn {
public:
    struct Polynomial {
        std::vector<Scalar> coeffs; // f(z) = sum_j coeffs[j] z^j
    };
    struct Character {
        Scalar zeta; // f(z) = zeta^z
    };
    struct LocallyConstant {
        int level = 0;
        std::vector<Scalar> table; // value on c + p^level Z_p at index c
    };
    struct MahlerSeries {
        std::vector<Scalar> coeffs; // c_0..c_K
        int tail_valuation = 0;     // v_p(c_k) >= tail_valuation for every k > K
    };
    struct Product {
        std::vector<ContinuousFn> factors;
    };
    struct LinearCombination {
        std::vector<std::pair<Scalar, ContinuousFn>> terms;
    };
    struct Scaled {
        std::shared_ptr<const ContinuousFn> inner;
        PadicInt u;
        std::optional<std::int64_t> exact; // set when u is an exact integer
    };
    struct ZeroExtendedUnits {
        std::shared_ptr<const ContinuousFn> inner;
    };
    struct Step {
        StepPoly data;
    };

    using Variant = std::variant<Polynomial, Character, LocallyConstant, MahlerSeries, Product, LinearCombination,
                                 Scaled, ZeroExtendedUnits, Step>;

    ContinuousFn(const PadicContext& ctx, Variant v);

    const PadicContext& context() const noexcept { return ctx_; }
    const Variant& variant() const noexcept { return *node_; }

    /// Largest cyclotomic level among the values this function can take.
    int value_level() const;

private:
    PadicContext ctx_;
    std::shared_ptr<const Variant> node_;
};

namespace fn {

ContinuousFn constant(const PadicContext& ctx, const Scalar& c);
ContinuousFn constant(const PadicContext& ctx, std::int64_t c);
ContinuousFn monomial(const PadicContext& ctx, int degree);
ContinuousFn polynomial(const PadicContext& ctx, std::vector<Scalar> coeffs);
ContinuousFn polynomial(const PadicContext& ctx, const std::vector<std::int64_t>& coeffs);
/// z -> zeta^z. Throws NotRootOfUnity, or InvalidArgument above max_level.
ContinuousFn character(const PadicContext& ctx, const Scalar& zeta, int max_level = kDefaultMaxLevel);
ContinuousFn indicator(const PadicContext& ctx, int level, std::int64_t residue_class);
ContinuousFn locally_constant(const PadicContext& ctx, int level, std::vector<Scalar> table);
ContinuousFn locally_constant(const PadicContext& ctx, int level, const std::vector<std::int64_t>& table);
ContinuousFn mahler_series(const PadicContext& ctx, std::vector<Scalar> coeffs, int tail_valuation);
/// z -> C(z, k); a one-term Mahler series with an exact (zero) tail.
ContinuousFn binomial(const PadicContext& ctx, int k);
ContinuousFn step(const PadicContext& ctx, StepPoly data);
ContinuousFn zero_extended_units(const ContinuousFn& f);

ContinuousFn add(const ContinuousFn& f, const ContinuousFn& g);
ContinuousFn subtract(const ContinuousFn& f, const ContinuousFn& g);
ContinuousFn scale(const Scalar& c, const ContinuousFn& f);

} // namespace fn

Scalar evaluate(const ContinuousFn& f, const PadicInt& x);
Scalar evaluate(const ContinuousFn& f, std::int64_t n);

/// c_k = (Delta^k f)(0) for k <= K, Delta f(z) = f(z+1) - f(z).
std::vector<Scalar> mahler_coeffs(const ContinuousFn& f, int K);

/// Pointwise product.
ContinuousFn multiply(const ContinuousFn& f, const ContinuousFn& g);

/// z -> f(u z) for a unit u. Throws NotUnit.
ContinuousFn scale_argument(const ContinuousFn& f, const PadicInt& u);

/// z -> f(c z) for any integer c (not necessarily a unit).
ContinuousFn dilate(const ContinuousFn& f, std::int64_t c);

/// Normal form of an exactly representable function, at a level no lower than
/// min_level. Mahler series convert only when their tail is exact and every
/// binomial C(z, k) they use has k < p (so its monomial coefficients are
/// p-integral); otherwise UnsupportedShape.
StepPoly to_step(const ContinuousFn& f, int min_level = 0);

/// True when to_step succeeds.
bool is_step_representable(const ContinuousFn& f);

/// F(x, y) = sum_i f_i(x) g_i(y).
struct TwoVarFn {
    PadicContext ctx;
    std::vector<std::pair<ContinuousFn, ContinuousFn>> terms;

    Scalar evaluate(std::int64_t x, std::int64_t y) const;
    Scalar evaluate(const PadicInt& x, const PadicInt& y) const;
};

TwoVarFn tensor(const ContinuousFn& f, const ContinuousFn& g);
TwoVarFn operator+(const TwoVarFn& a, const TwoVarFn& b);

} // namespace padicmf
