#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "padicmf/padic_int.hpp"

namespace padicmf {

/// phi(p^m) = (p-1) p^(m-1), and 1 for m = 0.
std::size_t cyclotomic_degree(std::uint32_t p, int level);

/// An element of (Z/p^N)[T] / Phi_{p^m}(T), with Phi_{p^m}(T) = sum_{i<p} T^(i p^(m-1)).
///
/// The class of T is a primitive p^m-th root of unity zeta_{p^m}. Level 0 is
/// Z/p^N itself. Values of different levels combine by embedding the lower
/// level through zeta_{p^m} = zeta_{p^m'}^(p^(m'-m)).
///
/// Precision is tracked for the element as a whole (the minimum over its
/// coefficients), so the coefficient loops run on plain residues.
class CyclotomicElem {
public:
    CyclotomicElem() = default;
    explicit CyclotomicElem(const PadicInt& x);
    /// coeffs.size() must be cyclotomic_degree(p, level); precision is their minimum.
    CyclotomicElem(std::uint32_t p, int level, const std::vector<PadicInt>& coeffs);

    static CyclotomicElem constant(std::uint32_t p, int level, const PadicInt& c);
    static CyclotomicElem zero(std::uint32_t p, int level, int prec);
    static CyclotomicElem one(std::uint32_t p, int level, int prec);
    /// The class of T at the given level (for level 0, the value 1).
    static CyclotomicElem zeta(std::uint32_t p, int level, int prec);
    /// zeta_{p^level}^e for any integer e.
    static CyclotomicElem zeta_power(std::uint32_t p, int level, int prec, std::int64_t e);

    std::uint32_t p() const noexcept { return p_; }
    int level() const noexcept { return level_; }
    int prec() const noexcept { return prec_; }
    std::size_t degree() const noexcept { return residues_.size(); }
    std::span<const std::uint64_t> residues() const noexcept { return residues_; }
    PadicInt coeff(std::size_t i) const;
    std::vector<PadicInt> coeffs() const;

    bool is_zero() const noexcept;
    bool is_rational() const noexcept; // all coefficients but the constant one vanish
    /// Constant coefficient; throws InvalidArgument unless is_rational().
    PadicInt as_padic() const;

    CyclotomicElem lifted(int level) const;
    CyclotomicElem with_prec(int prec) const;

    CyclotomicElem operator-() const;
    CyclotomicElem& operator+=(const CyclotomicElem& o);
    CyclotomicElem& operator-=(const CyclotomicElem& o);
    CyclotomicElem& operator*=(const CyclotomicElem& o);
    CyclotomicElem& operator*=(const PadicInt& c);

    friend CyclotomicElem operator+(CyclotomicElem a, const CyclotomicElem& b) { return a += b; }
    friend CyclotomicElem operator-(CyclotomicElem a, const CyclotomicElem& b) { return a -= b; }
    friend CyclotomicElem operator*(const CyclotomicElem& a, const CyclotomicElem& b);
    friend CyclotomicElem operator*(CyclotomicElem a, const PadicInt& c) { return a *= c; }
    friend CyclotomicElem operator*(const PadicInt& c, CyclotomicElem a) { return a *= c; }

    CyclotomicElem scaled(std::int64_t c) const;
    CyclotomicElem pow(std::uint64_t e) const;

    /// Galois conjugate zeta -> zeta^i, i prime to p.
    CyclotomicElem galois(std::uint64_t i) const;
    /// Norm down to Z/p^N (product of the Galois conjugates).
    PadicInt norm() const;

    /// Units are exactly the elements with nonzero image in Z[zeta]/(zeta-1, p) = F_p.
    bool is_unit() const;
    /// Throws NotUnit.
    CyclotomicElem inverse() const;

    /// x^(p^level) == 1 (to the known precision).
    bool is_root_of_unity() const;

    /// Equality of the represented elements after lifting to a common level,
    /// including precision.
    friend bool operator==(const CyclotomicElem& a, const CyclotomicElem& b);

    std::string to_string() const;

private:
    CyclotomicElem(std::uint32_t p, int level, int prec, std::vector<std::uint64_t> residues);
    /// Reduces a polynomial of any length modulo (Phi_{p^level}, p^prec) into *this.
    void assign_reduced(std::vector<std::uint64_t>& poly);

    std::uint32_t p_ = 0;
    int level_ = 0;
    int prec_ = 0;
    std::uint64_t modulus_ = 1;
    std::vector<std::uint64_t> residues_;
};

/// Agreement modulo p^e of every coefficient at a common level.
bool congruent(const CyclotomicElem& a, const CyclotomicElem& b, int e);

/// x^(e mod p^m) for a p^m-th root of unity x of level m.
/// Throws NotRootOfUnity when x^(p^m) != 1, PrecisionExhausted when e is not
/// known modulo p^m.
CyclotomicElem cyclo_pow(const CyclotomicElem& x, const PadicInt& e);

} // namespace padicmf
