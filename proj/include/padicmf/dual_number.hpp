#pragma once

#include <cstdint>
#include <string>

namespace padicmf {

/// a + eps b with eps^2 = 0, over any commutative scalar ring S.
template <class S>
struct DualNumber {
    S a;
    S b;

    DualNumber& operator+=(const DualNumber& o)
    {
        a += o.a;
        b += o.b;
        return *this;
    }
    DualNumber& operator-=(const DualNumber& o)
    {
        a -= o.a;
        b -= o.b;
        return *this;
    }
    DualNumber& operator*=(const DualNumber& o)
    {
        *this = *this * o;
        return *this;
    }

    friend DualNumber operator+(DualNumber x, const DualNumber& y) { return x += y; }
    friend DualNumber operator-(DualNumber x, const DualNumber& y) { return x -= y; }
    friend DualNumber operator*(const DualNumber& x, const DualNumber& y)
    {
        return DualNumber{x.a * y.a, x.a * y.b + x.b * y.a};
    }
    DualNumber operator-() const { return DualNumber{-a, -b}; }

    /// Repeated multiplication, so (1 + eps)^n is built from the ring law itself.
    DualNumber pow(std::uint64_t n, const DualNumber& one) const
    {
        DualNumber r = one;
        for (std::uint64_t i = 0; i < n; ++i)
            r *= *this;
        return r;
    }

    bool is_unit() const { return a.is_unit(); }

    /// (a + eps b)^-1 = a^-1 - eps b a^-2.
    DualNumber inverse() const
    {
        const S ai = a.inverse();
        return DualNumber{ai, -(b * ai * ai)};
    }

    friend bool operator==(const DualNumber& x, const DualNumber& y) { return x.a == y.a && x.b == y.b; }

    std::string to_string() const { return a.to_string() + " + eps*" + b.to_string(); }
};

} // namespace padicmf
