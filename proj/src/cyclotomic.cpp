#include "padicmf/cyclotomic.hpp"

#include <algorithm>
#include <sstream>

#include "padicmf/errors.hpp"

namespace padicmf {

std::size_t cyclotomic_degree(std::uint32_t p, int level)
{
    if (level < 0)
        fail(ErrorCode::InvalidArgument, "negative cyclotomic level");
    if (level == 0)
        return 1;
    return static_cast<std::size_t>((p - 1) * ipow(p, level - 1));
}

namespace {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    std::uint64_t s = a + b;
    return s >= m ? s - m : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a >= b ? a - b : a + m - b; }

} // namespace

CyclotomicElem::CyclotomicElem(const PadicInt& x)
    : p_(x.p()), level_(0), prec_(x.prec()), modulus_(x.modulus()), residues_{x.residue()}
{
}

CyclotomicElem::CyclotomicElem(std::uint32_t p, int level, const std::vector<PadicInt>& coeffs)
    : p_(p), level_(level)
{
    if (coeffs.size() != cyclotomic_degree(p, level))
        fail(ErrorCode::InvalidArgument, "coefficient count does not match phi(p^level)");
    prec_ = coeffs.front().prec();
    for (const auto& c : coeffs) {
        if (c.p() != p)
            fail(ErrorCode::InvalidArgument, "coefficient prime mismatch");
        prec_ = std::min(prec_, c.prec());
    }
    modulus_ = ipow(p, prec_);
    residues_.reserve(coeffs.size());
    for (const auto& c : coeffs)
        residues_.push_back(c.residue() % modulus_);
}

CyclotomicElem::CyclotomicElem(std::uint32_t p, int level, int prec, std::vector<std::uint64_t> residues)
    : p_(p), level_(level), prec_(prec), modulus_(ipow(p, prec)), residues_(std::move(residues))
{
}

CyclotomicElem CyclotomicElem::constant(std::uint32_t p, int level, const PadicInt& c)
{
    std::vector<std::uint64_t> r(cyclotomic_degree(p, level), 0);
    r[0] = c.residue();
    return CyclotomicElem(p, level, c.prec(), std::move(r));
}

CyclotomicElem CyclotomicElem::zero(std::uint32_t p, int level, int prec)
{
    return constant(p, level, PadicInt::zero(p, prec));
}

CyclotomicElem CyclotomicElem::one(std::uint32_t p, int level, int prec)
{
    return constant(p, level, PadicInt::one(p, prec));
}

CyclotomicElem CyclotomicElem::zeta(std::uint32_t p, int level, int prec) { return zeta_power(p, level, prec, 1); }

CyclotomicElem CyclotomicElem::zeta_power(std::uint32_t p, int level, int prec, std::int64_t e)
{
    const auto order = static_cast<std::int64_t>(ipow(p, level));
    std::int64_t k = e % order;
    if (k < 0)
        k += order;
    CyclotomicElem x(p, level, prec, {});
    std::vector<std::uint64_t> poly(static_cast<std::size_t>(k) + 1, 0);
    poly[static_cast<std::size_t>(k)] = 1 % x.modulus_;
    x.assign_reduced(poly);
    return x;
}

void CyclotomicElem::assign_reduced(std::vector<std::uint64_t>& poly)
{
    const std::size_t phi = cyclotomic_degree(p_, level_);
    if (level_ == 0) {
        // Phi_1 is not used: level 0 means Z/p^N, so T acts as 1.
        std::uint64_t s = 0;
        for (auto c : poly)
            s = add_mod(s, c % modulus_, modulus_);
        residues_.assign(1, s);
        return;
    }
    const std::size_t stride = ipow(p_, level_ - 1);
    // T^phi = -sum_{j=0}^{p-2} T^(j * stride)
    for (std::size_t i = poly.size(); i-- > phi;) {
        const std::uint64_t c = poly[i] % modulus_;
        if (c == 0)
            continue;
        poly[i] = 0;
        const std::size_t base = i - phi;
        for (std::size_t j = 0; j + 1 < p_; ++j) {
            auto& slot = poly[base + j * stride];
            slot = sub_mod(slot % modulus_, c, modulus_);
        }
    }
    residues_.assign(phi, 0);
    for (std::size_t i = 0; i < std::min(phi, poly.size()); ++i)
        residues_[i] = poly[i] % modulus_;
}

PadicInt CyclotomicElem::coeff(std::size_t i) const
{
    return PadicInt::from_residue(p_, prec_, residues_.at(i));
}

std::vector<PadicInt> CyclotomicElem::coeffs() const
{
    std::vector<PadicInt> out;
    out.reserve(residues_.size());
    for (auto r : residues_)
        out.push_back(PadicInt::from_residue(p_, prec_, r));
    return out;
}

bool CyclotomicElem::is_zero() const noexcept
{
    return std::all_of(residues_.begin(), residues_.end(), [](auto r) { return r == 0; });
}

bool CyclotomicElem::is_rational() const noexcept
{
    return std::all_of(residues_.begin() + 1, residues_.end(), [](auto r) { return r == 0; });
}

PadicInt CyclotomicElem::as_padic() const
{
    if (!is_rational())
        fail(ErrorCode::InvalidArgument, "cyclotomic value is not in Z/p^N: " + to_string());
    return coeff(0);
}

CyclotomicElem CyclotomicElem::lifted(int level) const
{
    if (level == level_)
        return *this;
    if (level < level_)
        fail(ErrorCode::InvalidArgument, "cannot lower a cyclotomic level by lifting");
    // Lower level elements are polynomials in zeta_{p^level_} = zeta_{p^level}^(p^(level-level_)).
    // For level_ = 0 the element is a plain constant.
    std::vector<std::uint64_t> r(cyclotomic_degree(p_, level), 0);
    if (level_ == 0) {
        r[0] = residues_[0];
    } else {
        const std::size_t step = ipow(p_, level - level_);
        for (std::size_t i = 0; i < residues_.size(); ++i)
            r[i * step] = residues_[i];
    }
    return CyclotomicElem(p_, level, prec_, std::move(r));
}

CyclotomicElem CyclotomicElem::with_prec(int prec) const
{
    if (prec >= prec_)
        return *this;
    CyclotomicElem x(p_, level_, std::max(prec, 0), residues_);
    for (auto& r : x.residues_)
        r %= x.modulus_;
    return x;
}

namespace {

void check_prime(const CyclotomicElem& a, const CyclotomicElem& b)
{
    if (a.p() != b.p())
        fail(ErrorCode::InvalidArgument, "mixing cyclotomic values of different primes");
}

} // namespace

CyclotomicElem CyclotomicElem::operator-() const
{
    CyclotomicElem r = *this;
    for (auto& c : r.residues_)
        c = c == 0 ? 0 : modulus_ - c;
    return r;
}

CyclotomicElem& CyclotomicElem::operator+=(const CyclotomicElem& o)
{
    check_prime(*this, o);
    const int level = std::max(level_, o.level_);
    const int prec = std::min(prec_, o.prec_);
    CyclotomicElem a = lifted(level).with_prec(prec);
    const CyclotomicElem b = o.lifted(level).with_prec(prec);
    for (std::size_t i = 0; i < a.residues_.size(); ++i)
        a.residues_[i] = add_mod(a.residues_[i], b.residues_[i], a.modulus_);
    *this = std::move(a);
    return *this;
}

CyclotomicElem& CyclotomicElem::operator-=(const CyclotomicElem& o) { return *this += -o; }

CyclotomicElem operator*(const CyclotomicElem& x, const CyclotomicElem& y)
{
    check_prime(x, y);
    const int level = std::max(x.level_, y.level_);
    const int prec = std::min(x.prec_, y.prec_);
    const CyclotomicElem a = x.lifted(level).with_prec(prec);
    const CyclotomicElem b = y.lifted(level).with_prec(prec);
    const std::uint64_t m = a.modulus_;
    if (level == 0)
        return CyclotomicElem(a.p_, 0, prec, {mulmod(a.residues_[0], b.residues_[0], m)});

    std::vector<std::uint64_t> poly(a.residues_.size() + b.residues_.size() - 1, 0);
    for (std::size_t i = 0; i < a.residues_.size(); ++i) {
        if (a.residues_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.residues_.size(); ++j) {
            if (b.residues_[j] == 0)
                continue;
            poly[i + j] = add_mod(poly[i + j], mulmod(a.residues_[i], b.residues_[j], m), m);
        }
    }
    CyclotomicElem r(a.p_, level, prec, {});
    r.assign_reduced(poly);
    return r;
}

CyclotomicElem& CyclotomicElem::operator*=(const CyclotomicElem& o)
{
    *this = *this * o;
    return *this;
}

CyclotomicElem& CyclotomicElem::operator*=(const PadicInt& c)
{
    if (c.p() != p_)
        fail(ErrorCode::InvalidArgument, "scalar prime mismatch");
    *this = with_prec(c.prec());
    const std::uint64_t k = c.residue() % modulus_;
    for (auto& r : residues_)
        r = mulmod(r, k, modulus_);
    return *this;
}

CyclotomicElem CyclotomicElem::scaled(std::int64_t c) const { return *this * PadicInt(p_, prec_, c); }

CyclotomicElem CyclotomicElem::pow(std::uint64_t e) const
{
    CyclotomicElem result = one(p_, level_, prec_);
    CyclotomicElem base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

CyclotomicElem CyclotomicElem::galois(std::uint64_t i) const
{
    if (i % p_ == 0)
        fail(ErrorCode::InvalidArgument, "Galois index must be prime to p");
    if (level_ == 0)
        return *this;
    const std::uint64_t order = ipow(p_, level_);
    std::vector<std::uint64_t> poly(order, 0);
    for (std::size_t j = 0; j < residues_.size(); ++j) {
        const std::size_t target = static_cast<std::size_t>(mulmod(j, i % order, order));
        poly[target] = add_mod(poly[target], residues_[j], modulus_);
    }
    CyclotomicElem r(p_, level_, prec_, {});
    r.assign_reduced(poly);
    return r;
}

PadicInt CyclotomicElem::norm() const
{
    if (level_ == 0)
        return coeff(0);
    const std::uint64_t order = ipow(p_, level_);
    CyclotomicElem n = one(p_, level_, prec_);
    for (std::uint64_t i = 1; i < order; ++i)
        if (i % p_ != 0)
            n *= galois(i);
    return n.as_padic();
}

bool CyclotomicElem::is_unit() const
{
    if (prec_ == 0)
        return false;
    std::uint64_t s = 0;
    for (auto r : residues_)
        s = (s + r % p_) % p_;
    return s != 0;
}

CyclotomicElem CyclotomicElem::inverse() const
{
    if (!is_unit())
        fail(ErrorCode::NotUnit, to_string() + " is not a unit");
    // x == x(1) modulo (zeta - 1); Newton's iteration y <- y (2 - x y) doubles
    // the (zeta - 1)-adic accuracy each step.
    std::uint64_t s = 0;
    for (auto r : residues_)
        s = add_mod(s, r, modulus_);
    CyclotomicElem y = constant(p_, level_, PadicInt::from_residue(p_, prec_, invmod(s, modulus_)));
    const CyclotomicElem one_elem = one(p_, level_, prec_);
    const CyclotomicElem two = one_elem.scaled(2);
    for (int iter = 0; iter < 80; ++iter) {
        const CyclotomicElem xy = *this * y;
        if (xy == one_elem)
            return y;
        y = y * (two - xy);
    }
    fail(ErrorCode::NotUnit, "inverse iteration did not converge for " + to_string());
}

bool CyclotomicElem::is_root_of_unity() const
{
    return pow(ipow(p_, level_)) == one(p_, level_, prec_);
}

bool operator==(const CyclotomicElem& a, const CyclotomicElem& b)
{
    if (a.p_ != b.p_ || a.prec_ != b.prec_)
        return false;
    const int level = std::max(a.level_, b.level_);
    return a.lifted(level).residues_ == b.lifted(level).residues_;
}

bool congruent(const CyclotomicElem& a, const CyclotomicElem& b, int e)
{
    if (a.p() != b.p())
        return false;
    if (e > a.prec() || e > b.prec())
        fail(ErrorCode::PrecisionExhausted, "congruence asked beyond known precision");
    return a.with_prec(e) == b.with_prec(e);
}

std::string CyclotomicElem::to_string() const
{
    std::ostringstream os;
    if (level_ == 0) {
        os << residues_[0];
    } else {
        os << "[";
        for (std::size_t i = 0; i < residues_.size(); ++i)
            os << (i ? ", " : "") << residues_[i];
        os << "]@zeta_" << p_ << "^" << level_;
    }
    os << " (mod " << p_ << "^" << prec_ << ")";
    return os.str();
}

CyclotomicElem cyclo_pow(const CyclotomicElem& x, const PadicInt& e)
{
    if (!x.is_root_of_unity())
        fail(ErrorCode::NotRootOfUnity, x.to_string() + " is not a p^" + std::to_string(x.level()) + "-th root of unity");
    if (e.prec() < x.level())
        fail(ErrorCode::PrecisionExhausted, "exponent not known modulo p^level");
    const std::uint64_t order = ipow(x.p(), x.level());
    return x.pow(e.residue() % order);
}

} // namespace padicmf
