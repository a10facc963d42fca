#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace qseries {

/// Arbitrary-precision signed integer used for every series coefficient.
using BigInt = mpz_class;

/// Exact reduced rational; only the hook-length sums need it.
using Rational = mpq_class;

inline BigInt to_big(std::int64_t v)
{
    // mpz_class has no constructor for long long on every platform.
    BigInt r;
    mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
    return r;
}

inline BigInt to_big_unsigned(std::uint64_t v)
{
    BigInt r;
    mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
    return r;
}

inline std::string to_decimal(const BigInt &v) { return v.get_str(10); }

} // namespace qseries
