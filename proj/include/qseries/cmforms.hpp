#pragma once

#include <cstdint>

#include "qseries/bigint.hpp"
#include "qseries/etaq.hpp"

namespace qseries {

/// p = x^2 + 3y^2 with x = 1 (mod 3) and y >= 0. Unique for prime p = 1 (mod 3).
struct QuadRepXY {
    std::int64_t x;
    std::int64_t y;
    std::uint64_t p;

    friend bool operator==(const QuadRepXY &, const QuadRepXY &) = default;
};

/// p = m^2 + mn + n^2 with m = 1 and n = 0 (mod 3). Exactly two such pairs
/// exist, related by (m, n) -> (m + n, -n); rep_mn returns the one with n < 0.
struct QuadRepMN {
    std::int64_t m;
    std::int64_t n;
    std::uint64_t p;

    friend bool operator==(const QuadRepMN &, const QuadRepMN &) = default;
};

/// Cornacchia's algorithm on x^2 + 3y^2, using sqrt(-3) = 2w + 1 for a cube
/// root of unity w mod p. Throws std::domain_error unless p is a prime = 1 (mod 3).
QuadRepXY rep_xy(std::uint64_t p);

QuadRepMN rep_mn(std::uint64_t p);

/// Coefficient of q^p in eta(3z)^8: 0 for p = 3 or p = 2 (mod 3), otherwise
/// 2x^3 - 18xy^2 from rep_xy.
BigInt a_star_prime(std::uint64_t p);

/// Coefficient of q^p in eta(3z)^2 eta(9z)^2: 0 for p = 3 or p = 2 (mod 3),
/// otherwise 2m + n from rep_mn.
BigInt c_star_prime(std::uint64_t p);

/// A(p^t) from A(1) = 1, A(p) = ap and
/// A(p^{t+1}) = ap A(p^t) - p^{k-1} A(p^{t-1}). Rejects p = 3, where the
/// coefficient is identically zero for t >= 1.
BigInt prime_power_coeff(const BigInt &ap, std::uint64_t p, unsigned weight, unsigned t);

/// Coefficient of q^n in the named form, assembled multiplicatively from
/// prime powers (A, C) or from the divisor sum (B). n must be positive.
BigInt coeff(FormId form, std::uint64_t n);

} // namespace qseries
