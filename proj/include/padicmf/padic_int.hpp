#pragma once

#include <cstdint>
#include <string>

#include "padicmf/context.hpp"

namespace padicmf {

/// An element of Z_p known modulo p^prec.
///
/// The residue is kept canonical in [0, p^prec). Sums and products take the
/// minimum of the operand precisions; exact division by p lowers it by one.
/// Precision is tracked per value, never globally.
class PadicInt {
public:
    PadicInt() = default;

    /// value mod p^prec; value may be negative.
    PadicInt(std::uint32_t p, int prec, std::int64_t value);
    PadicInt(const PadicContext& ctx, std::int64_t value) : PadicInt(ctx.p, ctx.N, value) {}

    /// Builds from an already reduced unsigned residue (reduced again anyway).
    static PadicInt from_residue(std::uint32_t p, int prec, std::uint64_t residue);
    static PadicInt zero(std::uint32_t p, int prec) { return PadicInt(p, prec, 0); }
    static PadicInt one(std::uint32_t p, int prec) { return PadicInt(p, prec, 1); }

    std::uint64_t residue() const noexcept { return residue_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    std::uint32_t p() const noexcept { return p_; }
    int prec() const noexcept { return prec_; }

    bool is_zero() const noexcept { return residue_ == 0; }
    bool is_unit() const noexcept { return prec_ > 0 && residue_ % p_ != 0; }

    /// v_p of the residue; equals prec() when the value is zero to known precision.
    int valuation() const noexcept;

    /// Same value viewed at a lower precision (min(prec, new_prec)).
    PadicInt with_prec(int new_prec) const;

    PadicInt operator-() const;
    PadicInt& operator+=(const PadicInt& o);
    PadicInt& operator-=(const PadicInt& o);
    PadicInt& operator*=(const PadicInt& o);

    friend PadicInt operator+(PadicInt a, const PadicInt& b) { return a += b; }
    friend PadicInt operator-(PadicInt a, const PadicInt& b) { return a -= b; }
    friend PadicInt operator*(PadicInt a, const PadicInt& b) { return a *= b; }

    PadicInt scaled(std::int64_t c) const;
    PadicInt pow(std::uint64_t e) const;

    /// Throws NotUnit unless the value is a unit.
    PadicInt inverse() const;

    /// Exact division by p; the residue must be divisible by p. Lowers prec by 1.
    PadicInt divide_by_p() const;

    /// Representative in (-p^prec/2, p^prec/2].
    std::int64_t centered() const noexcept;

    /// Structural equality: same p, same precision, same residue.
    friend bool operator==(const PadicInt& a, const PadicInt& b) = default;

    std::string to_string() const;

private:
    std::uint64_t residue_ = 0;
    std::uint64_t modulus_ = 1;
    std::uint32_t p_ = 0;
    int prec_ = 0;
};

/// True when a and b agree modulo p^e (e must not exceed either precision).
bool congruent(const PadicInt& a, const PadicInt& b, int e);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t invmod(std::uint64_t a, std::uint64_t m); // throws NotUnit

} // namespace padicmf
