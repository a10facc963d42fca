#pragma once

#include <cstdint>
#include <vector>

namespace qseries {

struct PrimePower {
    std::uint64_t p;
    unsigned t;

    friend bool operator==(const PrimePower &, const PrimePower &) = default;
};

/// Prime-power decomposition; factors ascend by p and multiply back to value.
struct Factorization {
    std::vector<PrimePower> factors;
    std::uint64_t value = 1;

    /// Exponent of p in value (0 if p does not divide it).
    unsigned ord(std::uint64_t p) const noexcept;
};

/// Legendre symbol (d/3): 1 for d = 1 mod 3, -1 for d = 2 mod 3, 0 for 3 | d.
int chi3(std::uint64_t d) noexcept;

/// Deterministic Miller-Rabin with the first thirteen primes as witnesses,
/// exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// Trial division by primes below 10^6, then Pollard rho with Brent cycle
/// detection on whatever cofactor remains. n must be positive.
Factorization factorize(std::uint64_t n);

/// Every divisor of f.value, ascending.
std::vector<std::uint64_t> divisors(const Factorization &f);

/// Coefficient of q^N in eta(9z)^3/eta(3z): sum of chi3(d) over d | N when
/// N = 1 mod 3, and 0 off that lattice even where the raw divisor sum is not
/// (N = 3 has raw sum 1 but the form has no q^3 term).
std::int64_t b_star_divisor_sum(std::uint64_t N);

/// True iff 3 | n or some prime p = 2 mod 3 divides n to an odd power.
bool support_vanishes(std::uint64_t n);

/// Primes up to and including limit, ascending (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

} // namespace qseries
