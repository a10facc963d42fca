#include "qseries/cmforms.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qseries/arith.hpp"

namespace qseries {

namespace {

using u128 = unsigned __int128;

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (static_cast<u128>(r) * r > n) {
        --r;
    }
    while (static_cast<u128>(r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1;
    base %= m;
    while (e > 0) {
        if (e & 1U) {
            r = static_cast<std::uint64_t>(static_cast<u128>(r) * base % m);
        }
        base = static_cast<std::uint64_t>(static_cast<u128>(base) * base % m);
        e >>= 1U;
    }
    return r;
}

int mod3(std::int64_t v)
{
    const auto r = static_cast<int>(v % 3);
    return r < 0 ? r + 3 : r;
}

void require_split_prime(std::uint64_t p, const char *who)
{
    if (p % 3 != 1) {
        throw std::domain_error(std::string(who) + ": " + std::to_string(p) + " is not 1 mod 3");
    }
    if (!is_prime(p)) {
        throw std::domain_error(std::string(who) + ": " + std::to_string(p) + " is not prime");
    }
}

std::uint64_t sqrt_minus_three(std::uint64_t p)
{
    for (std::uint64_t a = 2;; ++a) {
        const std::uint64_t w = pow_mod(a, (p - 1) / 3, p);
        if (w != 1) {
            // w is a primitive cube root of unity and (2w + 1)^2 = -3.
            return static_cast<std::uint64_t>((2 * static_cast<u128>(w) + 1) % p);
        }
    }
}

bool admissible_mn(std::int64_t m, std::int64_t n)
{
    return mod3(m) == 1 && mod3(n) == 0 && n < 0;
}

} // namespace

QuadRepXY rep_xy(std::uint64_t p)
{
    require_split_prime(p, "rep_xy");
    std::uint64_t a = p;
    std::uint64_t b = sqrt_minus_three(p);
    if (b > p / 2) {
        b = p - b;
    }
    const std::uint64_t bound = isqrt(p);
    while (b > bound) {
        const std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    const std::uint64_t rest = p - b * b;
    const std::uint64_t y = isqrt(rest / 3);
    if (rest % 3 != 0 || 3 * y * y != rest) {
        throw std::domain_error("rep_xy: descent failed for " + std::to_string(p));
    }
    auto x = static_cast<std::int64_t>(b);
    if (mod3(x) != 1) {
        x = -x;
    }
    return QuadRepXY{x, static_cast<std::int64_t>(y), p};
}

QuadRepMN rep_mn(std::uint64_t p)
{
    const auto [x, y, prime] = rep_xy(p);
    // (x - y, 2y) always represents p; walk the twelve automorphs of the form
    // (six unit rotations, each with and without conjugation).
    std::array<std::int64_t, 2> seeds[2] = {{x - y, 2 * y}, {x + y, -2 * y}};
    for (auto [m, n] : seeds) {
        for (int k = 0; k < 6; ++k) {
            if (admissible_mn(m, n)) {
                return QuadRepMN{m, n, prime};
            }
            const std::int64_t rotated = m + n;
            m = -n;
            n = rotated;
        }
    }

    // Unreachable for primes; kept as a bounded direct search.
    const auto bound = static_cast<std::int64_t>(2 * isqrt(p / 3 + 1) + 2);
    for (std::int64_t n = -bound; n <= 0; ++n) {
        for (std::int64_t m = -bound; m <= bound; ++m) {
            if (admissible_mn(m, n)
                && static_cast<__int128>(m) * m + static_cast<__int128>(m) * n + static_cast<__int128>(n) * n
                       == static_cast<__int128>(p)) {
                return QuadRepMN{m, n, p};
            }
        }
    }
    throw std::domain_error("rep_mn: no admissible representation of " + std::to_string(p));
}

BigInt a_star_prime(std::uint64_t p)
{
    if (p % 3 != 1) {
        return 0;
    }
    const auto rep = rep_xy(p);
    const BigInt x = to_big(rep.x);
    const BigInt y = to_big(rep.y);
    return BigInt(2 * x * x * x - 18 * x * y * y);
}

BigInt c_star_prime(std::uint64_t p)
{
    if (p % 3 != 1) {
        return 0;
    }
    const auto rep = rep_mn(p);
    return to_big(2 * rep.m + rep.n);
}

BigInt prime_power_coeff(const BigInt &ap, std::uint64_t p, unsigned weight, unsigned t)
{
    if (p == 3) {
        throw std::domain_error("prime_power_coeff: p = 3 divides the level");
    }
    if (weight == 0) {
        throw std::invalid_argument("prime_power_coeff: weight must be positive");
    }
    if (t == 0) {
        return 1;
    }
    BigInt pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), weight - 1);
    BigInt prev = 1;
    BigInt cur = ap;
    for (unsigned i = 1; i < t; ++i) {
        BigInt next = ap * cur - pk * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigInt coeff(FormId form, std::uint64_t n)
{
    if (n == 0) {
        throw std::invalid_argument("coeff: index must be positive");
    }
    if (form == FormId::B) {
        return to_big(b_star_divisor_sum(n));
    }
    if (n % 3 == 0) {
        return 0;
    }
    const unsigned weight = named_form(form).weight;
    BigInt result = 1;
    for (const auto &[p, t] : factorize(n).factors) {
        const BigInt ap = form == FormId::A ? a_star_prime(p) : c_star_prime(p);
        result *= prime_power_coeff(ap, p, weight, t);
        if (sgn(result) == 0) {
            break;
        }
    }
    return result;
}

} // namespace qseries
