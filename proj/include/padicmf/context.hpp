#pragma once

#include <cstdint>

namespace padicmf {

/// The fixed odd prime together with the two truncation parameters:
/// scalars live modulo p^N and q-expansions are cut after q^M.
struct PadicContext {
    std::uint32_t p = 5;
    int N = 12;
    int M = 60;

    /// Validates and returns a context; throws InvalidArgument otherwise.
    /// p^N must fit in 62 bits so that products fit in 128-bit arithmetic.
    static PadicContext make(std::uint32_t p, int N, int M);

    std::uint64_t modulus() const; // p^N

    friend bool operator==(const PadicContext&, const PadicContext&) = default;
};

bool is_prime(std::uint64_t n);

/// p^e as a 64-bit integer. Throws InvalidArgument on overflow.
std::uint64_t ipow(std::uint64_t p, int e);

/// Largest e with p^e <= n (n >= 1).
int floor_log(std::uint64_t p, std::uint64_t n);

} // namespace padicmf
