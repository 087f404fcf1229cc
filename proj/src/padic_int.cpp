#include "padicmf/padic_int.hpp"

#include <algorithm>
#include <limits>
#include <tuple>
#include <utility>

#include "padicmf/errors.hpp"

namespace padicmf {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::uint64_t ipow(std::uint64_t p, int e)
{
    if (e < 0)
        fail(ErrorCode::InvalidArgument, "negative exponent in ipow");
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / p)
            fail(ErrorCode::InvalidArgument, "p^e overflows 64 bits");
        r *= p;
    }
    return r;
}

int floor_log(std::uint64_t p, std::uint64_t n)
{
    int e = 0;
    std::uint64_t r = 1;
    while (r <= n / p) {
        r *= p;
        ++e;
    }
    return e;
}

PadicContext PadicContext::make(std::uint32_t p, int N, int M)
{
    if (p < 3 || !is_prime(p))
        fail(ErrorCode::InvalidArgument, "p must be an odd prime");
    if (N < 1)
        fail(ErrorCode::InvalidArgument, "N must be >= 1");
    if (M < 1)
        fail(ErrorCode::InvalidArgument, "M must be >= 1");
    std::uint64_t m = 1;
    for (int i = 0; i < N; ++i) {
        m *= p;
        if (m >= (std::uint64_t{1} << 62))
            fail(ErrorCode::InvalidArgument, "p^N must stay below 2^62");
    }
    return PadicContext{p, N, M};
}

std::uint64_t PadicContext::modulus() const { return ipow(p, N); }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m)
{
    if (m == 1)
        return 0;
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a % m;
    while (new_r != 0) {
        __int128 q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (r != 1)
        fail(ErrorCode::NotUnit, "value is not invertible");
    if (t < 0)
        t += m;
    return static_cast<std::uint64_t>(t);
}

PadicInt::PadicInt(std::uint32_t p, int prec, std::int64_t value) : p_(p), prec_(prec)
{
    if (prec < 0)
        fail(ErrorCode::InvalidArgument, "negative precision");
    modulus_ = ipow(p, prec);
    std::int64_t r = static_cast<std::int64_t>(static_cast<__int128>(value) % static_cast<__int128>(modulus_));
    if (r < 0)
        r += static_cast<std::int64_t>(modulus_);
    residue_ = static_cast<std::uint64_t>(r);
}

PadicInt PadicInt::from_residue(std::uint32_t p, int prec, std::uint64_t residue)
{
    PadicInt x(p, prec, 0);
    x.residue_ = residue % x.modulus_;
    return x;
}

int PadicInt::valuation() const noexcept
{
    if (residue_ == 0)
        return prec_;
    int v = 0;
    std::uint64_t r = residue_;
    while (r % p_ == 0) {
        r /= p_;
        ++v;
    }
    return v;
}

PadicInt PadicInt::with_prec(int new_prec) const
{
    if (new_prec >= prec_)
        return *this;
    return from_residue(p_, std::max(new_prec, 0), residue_);
}

namespace {

void check_same_prime(const PadicInt& a, const PadicInt& b)
{
    if (a.p() != b.p())
        fail(ErrorCode::InvalidArgument, "mixing scalars of different primes");
}

} // namespace

PadicInt PadicInt::operator-() const
{
    PadicInt r = *this;
    r.residue_ = residue_ == 0 ? 0 : modulus_ - residue_;
    return r;
}

PadicInt& PadicInt::operator+=(const PadicInt& o)
{
    check_same_prime(*this, o);
    if (o.prec_ < prec_)
        *this = with_prec(o.prec_);
    std::uint64_t b = o.residue_ % modulus_;
    residue_ = residue_ + b;
    if (residue_ >= modulus_)
        residue_ -= modulus_;
    return *this;
}

PadicInt& PadicInt::operator-=(const PadicInt& o) { return *this += -o; }

PadicInt& PadicInt::operator*=(const PadicInt& o)
{
    check_same_prime(*this, o);
    if (o.prec_ < prec_)
        *this = with_prec(o.prec_);
    residue_ = mulmod(residue_, o.residue_ % modulus_, modulus_);
    return *this;
}

PadicInt PadicInt::scaled(std::int64_t c) const { return *this * PadicInt(p_, prec_, c); }

PadicInt PadicInt::pow(std::uint64_t e) const
{
    PadicInt result = one(p_, prec_);
    PadicInt base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

PadicInt PadicInt::inverse() const
{
    if (!is_unit())
        fail(ErrorCode::NotUnit, to_string() + " is not a unit");
    return from_residue(p_, prec_, invmod(residue_, modulus_));
}

PadicInt PadicInt::divide_by_p() const
{
    if (prec_ == 0)
        fail(ErrorCode::PrecisionExhausted, "cannot divide a value of precision 0 by p");
    if (residue_ % p_ != 0)
        fail(ErrorCode::NotPIntegral, "residue not divisible by p");
    return from_residue(p_, prec_ - 1, residue_ / p_);
}

std::int64_t PadicInt::centered() const noexcept
{
    auto r = static_cast<std::int64_t>(residue_);
    if (residue_ > modulus_ / 2)
        r -= static_cast<std::int64_t>(modulus_);
    return r;
}

std::string PadicInt::to_string() const
{
    return std::to_string(residue_) + " (mod " + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
}

bool congruent(const PadicInt& a, const PadicInt& b, int e)
{
    if (a.p() != b.p())
        return false;
    if (e > a.prec() || e > b.prec())
        fail(ErrorCode::PrecisionExhausted, "congruence asked beyond known precision");
    const std::uint64_t m = ipow(a.p(), e);
    return a.residue() % m == b.residue() % m;
}

} // namespace padicmf
