#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "padicmf/cyclotomic.hpp"

namespace padicmf {

/// Finite Laurent polynomials in q^(1/p^K) with coefficients in level-K
/// cyclotomics mod p^N. Exponents are stored as numerators over p^K.
class LaurentCyclo {
public:
    LaurentCyclo() = default;
    LaurentCyclo(std::uint32_t p, int K, int N);

    static LaurentCyclo constant(std::uint32_t p, int K, int N, const CyclotomicElem& c);
    /// c * q^(num / p^K).
    static LaurentCyclo monomial(std::uint32_t p, int K, int N, const CyclotomicElem& c, std::int64_t num);
    /// q^(num / p^den_exp), with den_exp <= K.
    static LaurentCyclo q_power(std::uint32_t p, int K, int N, std::int64_t num, int den_exp);

    std::uint32_t p() const noexcept { return p_; }
    int depth() const noexcept { return K_; }
    int prec() const noexcept { return N_; }
    const std::map<std::int64_t, CyclotomicElem>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    /// Exactly one term, whose coefficient is a unit.
    bool is_unit_monomial() const;
    /// Only the q^0 term is present (or the element is zero).
    bool is_constant() const;
    CyclotomicElem constant_term() const;

    LaurentCyclo& operator+=(const LaurentCyclo& o);
    LaurentCyclo operator*(const LaurentCyclo& o) const;
    LaurentCyclo pow(std::uint64_t e) const;
    /// Inverse of a unit monomial; throws NotUnit otherwise.
    LaurentCyclo inverse() const;

    /// The ring map q^(1/p^d) -> w q^(1/p^d). Throws UnsupportedShape if an
    /// exponent is not a multiple of 1/p^d, NotUnit if w is not invertible.
    LaurentCyclo substitute(const CyclotomicElem& w, int d) const;

    friend bool operator==(const LaurentCyclo& a, const LaurentCyclo& b);

    std::string to_string() const;

private:
    void check_compatible(const LaurentCyclo& o) const;

    std::uint32_t p_ = 0;
    int K_ = 0;
    int N_ = 0;
    std::map<std::int64_t, CyclotomicElem> terms_;
};

/// Base ring data for G_Q[p^k]: the parameter Q, a chosen p^k-th root of Q,
/// and the ring (Z/p^N)[zeta_{p^K}][q^(+-1/p^K)] where both live.
struct KummerBase {
    std::uint32_t p = 0;
    int k = 0;
    int K = 0;
    int N = 0;
    LaurentCyclo param;
    LaurentCyclo root;
    // Tables filled at construction: root^a, root^-a, Q^-1 and zeta_{p^k}^j.
    std::vector<LaurentCyclo> root_powers;
    std::vector<LaurentCyclo> root_inverse_powers;
    std::optional<LaurentCyclo> param_inverse;
    std::vector<CyclotomicElem> zeta_powers;

    std::uint64_t order() const;
    /// zeta_{p^k}^j inside level K.
    CyclotomicElem zeta_k(std::int64_t j = 1) const;

    friend bool operator==(const KummerBase& a, const KummerBase& b);
};

using KummerBasePtr = std::shared_ptr<const KummerBase>;

/// Q = q with root q^(1/p^k).
KummerBasePtr kummer_base(std::uint32_t p, int k, int K, int N);
/// Arbitrary parameter; throws IncompatibleRoots unless root^(p^k) == param
/// and root is a unit monomial.
KummerBasePtr kummer_base(std::uint32_t p, int k, int K, int N, LaurentCyclo param, LaurentCyclo root);
/// The base over Q^(-1) with root root^(-1).
KummerBasePtr dual_base(const KummerBasePtr& base);

/// The point (zeta_{p^k}^j * root^a, a/p^k) of G_Q[p^k].
struct KummerElement {
    KummerBasePtr base;
    std::uint64_t a = 0;
    std::uint64_t j = 0;

    std::uint64_t index() const; // a p^k + j
    friend bool operator==(const KummerElement& x, const KummerElement& y);
};

/// Throws InvalidArgument unless a, j < p^k.
KummerElement kummer_element(const KummerBasePtr& base, std::uint64_t a, std::uint64_t j);
KummerElement kummer_element_at(const KummerBasePtr& base, std::uint64_t index);
std::vector<KummerElement> all_elements(const KummerBasePtr& base);

/// The ring element x of the point.
LaurentCyclo realize(const KummerElement& e);
/// Reads a ring element x with marker a/p^k back as an index pair, if it is
/// of the form zeta_{p^k}^j root^a.
std::optional<KummerElement> decode(const KummerBasePtr& base, const LaurentCyclo& x, std::uint64_t a);

using KummerLaw = std::function<KummerElement(const KummerElement&, const KummerElement&)>;

/// The closed-form law: add markers, carry past p^k, add the root-of-unity indices.
KummerElement carrying_law(const KummerElement& e1, const KummerElement& e2);

/// Throws BaseMismatch for elements of different bases.
KummerElement kummer_mul(const KummerElement& e1, const KummerElement& e2, const KummerLaw& law = carrying_law);

/// The same product computed in the ring: x1 x2, divided by Q when the
/// markers carry, then decoded. Empty if the product does not decode.
std::optional<KummerElement> realized_mul(const KummerElement& e1, const KummerElement& e2);

/// <(g, a), (h, b)> = g^(p^k b) h^(p^k a) for e over Q and e2 over the dual base.
/// Returns the exponent v with value zeta_{p^k}^v. Throws BaseMismatch.
std::uint64_t kummer_pair(const KummerElement& e, const KummerElement& e2);

/// Compatible roots t^(1/p^n), n = 0..depth, with roots[0] = t.
struct RootSystem {
    std::vector<LaurentCyclo> roots;
};

/// Throws IncompatibleRoots unless roots[n+1]^p == roots[n] and every root is a unit monomial.
void validate_roots(const RootSystem& rs);
/// The base over t Q whose chosen root is t^(1/p^k) times the root of Q.
KummerBasePtr iso_target(const RootSystem& rs, const KummerBasePtr& source);
/// (x, a/p^k) -> (x t^(a/p^k), a/p^k) into `target`, which must have parameter t Q.
KummerElement kummer_iso(const RootSystem& rs, const KummerElement& e, const KummerBasePtr& target);
KummerElement kummer_iso(const RootSystem& rs, const KummerElement& e);

/// Outcome of an exhaustive check: counts and the first failing instance.
struct KummerReport {
    bool passed = true;
    std::uint64_t checks = 0;
    std::string failed_check;
    std::string counterexample;
    std::vector<std::string> log;

    void fail(const std::string& check, const std::string& detail);
};

/// Cayley table under `law`: table[x][y] = index of x * y.
std::vector<std::vector<std::uint64_t>> cayley_table(const KummerBasePtr& base, const KummerLaw& law = carrying_law);
/// Invariant factors (as exponents of p) of a finite abelian p-group given by
/// its table; empty if some element order is not a power of p.
std::vector<int> p_group_invariants(const std::vector<std::vector<std::uint64_t>>& table, std::uint64_t identity, std::uint32_t p);
/// Pairing exponents over all pairs: m[x][y] = <x, y>.
std::vector<std::vector<std::uint64_t>> pairing_matrix(const KummerBasePtr& base);
/// Trivial left and right kernels of a Z/n-valued pairing matrix.
bool pairing_is_perfect(const std::vector<std::vector<std::uint64_t>>& m);

/// Group axioms, invariants (Z/p^k)^2, extension structure, pairing
/// perfectness and closed form against realization, all exhaustively.
KummerReport kummer_structure_check(const KummerBasePtr& base, const KummerLaw& law = carrying_law);

/// Substitution q -> zeta^(-1) q against G_{zeta^(-1) q}[p^k], and its
/// inverse through kummer_iso along t = zeta. Works at depth K = 2k.
/// Throws NotRootOfUnity unless zeta^(p^k) = 1.
KummerReport serre_tate_action_check(const CyclotomicElem& zeta, int k, int N = 4, const KummerLaw& law = carrying_law);

} // namespace padicmf
