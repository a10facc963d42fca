#include "qseries/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qseries {

namespace {

constexpr std::uint64_t kTrialBound = 1'000'000;

// Once the primes below this have been tried, the cofactor is tested for
// primality before continuing trial division up to kTrialBound.
constexpr std::uint64_t kEarlyPrimeCheck = 1'000;

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1U) {
            r = mul_mod(r, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1U;
    }
    return r;
}

const std::vector<std::uint64_t> &trial_primes()
{
    static const std::vector<std::uint64_t> primes = primes_up_to(kTrialBound);
    return primes;
}

std::uint64_t brent_step(std::uint64_t x, std::uint64_t c, std::uint64_t n)
{
    return static_cast<std::uint64_t>((static_cast<u128>(x) * x + c) % n);
}

// Pollard rho with Brent's cycle detection and batched gcds. n must be an odd
// composite with no factor below kTrialBound. Seeds advance deterministically.
std::uint64_t pollard_brent(std::uint64_t n)
{
    constexpr std::uint64_t batch = 128;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t y = 2;
        std::uint64_t x = y;
        std::uint64_t ys = y;
        std::uint64_t q = 1;
        std::uint64_t g = 1;
        for (std::uint64_t r = 1; g == 1; r <<= 1U) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) {
                y = brent_step(y, c, n);
            }
            for (std::uint64_t k = 0; k < r && g == 1; k += batch) {
                ys = y;
                const std::uint64_t steps = std::min(batch, r - k);
                for (std::uint64_t i = 0; i < steps; ++i) {
                    y = brent_step(y, c, n);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            // The batch overshot; replay it one step at a time.
            do {
                ys = brent_step(ys, c, n);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

void factor_large(std::uint64_t n, std::vector<std::uint64_t> &out)
{
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    const std::uint64_t d = pollard_brent(n);
    factor_large(d, out);
    factor_large(n / d, out);
}

} // namespace

unsigned Factorization::ord(std::uint64_t p) const noexcept
{
    for (const auto &f : factors) {
        if (f.p == p) {
            return f.t;
        }
    }
    return 0;
}

int chi3(std::uint64_t d) noexcept
{
    switch (d % 3) {
    case 1:
        return 1;
    case 2:
        return -1;
    default:
        return 0;
    }
}

bool is_prime(std::uint64_t n) noexcept
{
    constexpr std::uint64_t witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    if (n < 2) {
        return false;
    }
    for (const std::uint64_t p : witnesses) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (const std::uint64_t a : witnesses) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

Factorization factorize(std::uint64_t n)
{
    if (n == 0) {
        throw std::invalid_argument("factorize: n must be positive");
    }
    Factorization f;
    f.value = n;
    std::uint64_t rest = n;
    bool checked_early = false;
    for (const std::uint64_t p : trial_primes()) {
        if (p * p > rest) {
            break;
        }
        if (!checked_early && p > kEarlyPrimeCheck) {
            checked_early = true;
            if (is_prime(rest)) {
                break;
            }
        }
        if (rest % p == 0) {
            unsigned t = 0;
            do {
                rest /= p;
                ++t;
            } while (rest % p == 0);
            f.factors.push_back({p, t});
        }
    }
    if (rest == 1) {
        return f;
    }

    std::vector<std::uint64_t> large;
    factor_large(rest, large);
    std::sort(large.begin(), large.end());
    for (std::size_t i = 0; i < large.size();) {
        std::size_t j = i;
        while (j < large.size() && large[j] == large[i]) {
            ++j;
        }
        f.factors.push_back({large[i], static_cast<unsigned>(j - i)});
        i = j;
    }
    return f;
}

std::vector<std::uint64_t> divisors(const Factorization &f)
{
    std::vector<std::uint64_t> out{1};
    for (const auto &[p, t] : f.factors) {
        const std::size_t existing = out.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= t; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < existing; ++i) {
                out.push_back(out[i] * pk);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t b_star_divisor_sum(std::uint64_t N)
{
    if (N % 3 != 1) {
        return 0;
    }
    std::int64_t sum = 0;
    for (const std::uint64_t d : divisors(factorize(N))) {
        sum += chi3(d);
    }
    return sum;
}

bool support_vanishes(std::uint64_t n)
{
    if (n == 0) {
        throw std::invalid_argument("support_vanishes: n must be positive");
    }
    if (n % 3 == 0) {
        return true;
    }
    const auto f = factorize(n);
    return std::any_of(f.factors.begin(), f.factors.end(),
                       [](const PrimePower &pp) { return pp.p % 3 == 2 && pp.t % 2 == 1; });
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit)
{
    std::vector<std::uint64_t> primes;
    if (limit < 2) {
        return primes;
    }
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) {
            continue;
        }
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) {
            composite[j] = true;
        }
    }
    return primes;
}

} // namespace qseries
