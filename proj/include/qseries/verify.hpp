#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qseries/bigint.hpp"
#include "qseries/etaq.hpp"
#include "qseries/partitions.hpp"

namespace qseries {

struct Counterexample {
    std::string input;
    std::string expected;
    std::string actual;

    friend bool operator==(const Counterexample &, const Counterexample &) = default;
};

/// Outcome of one check. A report passes exactly when it carries no
/// counterexamples, so status is derived rather than stored.
struct VerificationReport {
    std::string check_id;
    std::string range;
    std::vector<Counterexample> counterexamples;
    std::int64_t elapsed_ms = 0;

    bool passed() const noexcept { return counterexamples.empty(); }
    const char *status() const noexcept { return passed() ? "pass" : "fail"; }
};

struct VerifyOptions {
    /// Scanning continues past the first failure until this many are held.
    std::size_t max_counterexamples = 16;
    /// 0 uses every available thread.
    int workers = 0;
    unsigned partition_cap = kDefaultPartitionCap;
};

/// Closed-form coefficient source; tests swap in a corrupted one.
using CoeffSource = std::function<BigInt(FormId, std::uint64_t)>;

namespace defaults {
inline constexpr std::uint64_t kSupportsLimit = 10'000;
inline constexpr std::size_t kClosedFormsLimit = 5'000;
inline constexpr unsigned kIdentitiesLimit = 20;
inline const std::vector<long> kIdentityZs = {0, 1, 2, 4, 9};
inline constexpr unsigned kThreeCoreLimit = 30;
inline constexpr std::uint64_t kDivisibilityPrimeLimit = 100'000;
} // namespace defaults

/// coeff(A,n) = 0 <=> coeff(B,n) = 0 <=> coeff(C,n) = 0 <=> support_vanishes(n)
/// for 1 <= n <= limit.
VerificationReport verify_supports(std::uint64_t limit, const VerifyOptions &opts = {});

/// Eta-quotient expansion of every named form to `limit` against the closed
/// forms at each index below limit.
VerificationReport verify_closed_forms(std::size_t limit, const VerifyOptions &opts = {});
VerificationReport verify_closed_forms(std::size_t limit, const CoeffSource &source,
                                       const VerifyOptions &opts = {});

/// Hook-length sums against coefficients of prod (1 - x^m)^(z-1), n <= limit.
VerificationReport verify_identities(unsigned limit, const std::vector<long> &zs,
                                     const VerifyOptions &opts = {});

/// Brute-force 3-core counts against coeff(B, 3n+1) and the product
/// prod (1 - x^{3m})^3 / (1 - x^m), n <= limit.
VerificationReport verify_three_core_oracle(unsigned limit, const VerifyOptions &opts = {});

/// For primes p = 1 (mod 3), p <= prime_limit: c*(p) | a*(p),
/// a*(p) = c*(p)(m+2n)(m-n) and a*(p) = c*(p) (mod 3).
VerificationReport verify_divisibility(std::uint64_t prime_limit, const VerifyOptions &opts = {});

/// Every check at its default limit, in a fixed order.
std::vector<VerificationReport> verify_all(const VerifyOptions &opts = {});

nlohmann::ordered_json to_json(const VerificationReport &report);

} // namespace qseries
