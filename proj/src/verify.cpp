#include "qseries/verify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>
#include <utility>

#include "qseries/arith.hpp"
#include "qseries/cmforms.hpp"
#include "qseries/parallel.hpp"
#include "qseries/series.hpp"

namespace qseries {

namespace {

using Hit = std::pair<std::uint64_t, Counterexample>;

void keep_lowest(std::vector<Hit> &hits, std::size_t cap)
{
    std::sort(hits.begin(), hits.end(), [](const Hit &a, const Hit &b) { return a.first < b.first; });
    if (hits.size() > cap) {
        hits.resize(cap);
    }
}

// Runs check(i) for every i in [first, last]. The whole range is always
// scanned and the `cap` lowest-keyed failures are kept, so the report does
// not depend on thread scheduling.
template <class Check>
std::vector<Counterexample> sweep(std::uint64_t first, std::uint64_t last, const VerifyOptions &opts,
                                  Check check)
{
    std::vector<Hit> merged;
    if (first > last) {
        return {};
    }
    const std::size_t cap = opts.max_counterexamples;
    const auto count = static_cast<std::int64_t>(last - first + 1);
    const int threads = resolve_workers(opts.workers);
    (void)threads;

#ifdef QSERIES_USE_OPENMP
#pragma omp parallel num_threads(threads)
#endif
    {
        std::vector<Hit> local;
#ifdef QSERIES_USE_OPENMP
#pragma omp for schedule(dynamic, 64) nowait
#endif
        for (std::int64_t k = 0; k < count; ++k) {
            const std::uint64_t i = first + static_cast<std::uint64_t>(k);
            std::optional<Counterexample> bad;
            try {
                bad = check(i);
            } catch (const std::exception &e) {
                bad = Counterexample{std::to_string(i), "no exception", std::string("error: ") + e.what()};
            }
            if (bad) {
                local.emplace_back(i, std::move(*bad));
                if (local.size() > 4 * cap + 16) {
                    keep_lowest(local, cap);
                }
            }
        }
#ifdef QSERIES_USE_OPENMP
#pragma omp critical(qseries_sweep_merge)
#endif
        merged.insert(merged.end(), std::make_move_iterator(local.begin()),
                      std::make_move_iterator(local.end()));
    }

    keep_lowest(merged, cap);
    std::vector<Counterexample> out;
    out.reserve(merged.size());
    for (auto &h : merged) {
        out.push_back(std::move(h.second));
    }
    return out;
}

class Stopwatch
{
public:
    std::int64_t elapsed_ms() const
    {
        const auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string join_zs(const std::vector<long> &zs)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        os << (i ? "," : "") << zs[i];
    }
    return os.str();
}

// prod (1 - x^m)^e to the given order, for any integer e.
TruncatedSeries euler_power(long e, std::size_t order)
{
    const auto base = euler_series(order);
    if (e >= 0) {
        return pow(base, static_cast<std::uint64_t>(e));
    }
    return pow(inverse(base), static_cast<std::uint64_t>(-e));
}

} // namespace

VerificationReport verify_supports(std::uint64_t limit, const VerifyOptions &opts)
{
    Stopwatch clock;
    VerificationReport r;
    r.check_id = "supports";
    r.range = "1 <= n <= " + std::to_string(limit);
    r.counterexamples = sweep(1, limit, opts, [](std::uint64_t n) -> std::optional<Counterexample> {
        const bool predicted = support_vanishes(n);
        const bool za = sgn(coeff(FormId::A, n)) == 0;
        const bool zb = sgn(coeff(FormId::B, n)) == 0;
        const bool zc = sgn(coeff(FormId::C, n)) == 0;
        if (za == predicted && zb == predicted && zc == predicted) {
            return std::nullopt;
        }
        auto flag = [](bool z) { return z ? "zero" : "nonzero"; };
        return Counterexample{"n=" + std::to_string(n),
                              std::string("A,B,C all ") + flag(predicted),
                              std::string("A ") + flag(za) + ", B " + flag(zb) + ", C " + flag(zc)};
    });
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

VerificationReport verify_closed_forms(std::size_t limit, const VerifyOptions &opts)
{
    return verify_closed_forms(limit, CoeffSource(coeff), opts);
}

VerificationReport verify_closed_forms(std::size_t limit, const CoeffSource &source, const VerifyOptions &opts)
{
    Stopwatch clock;
    VerificationReport r;
    r.check_id = "closed-forms";
    r.range = "forms A,B,C; 0 <= n < " + std::to_string(limit);
    if (limit == 0) {
        r.elapsed_ms = clock.elapsed_ms();
        return r;
    }

    std::vector<TruncatedSeries> expansions;
    for (const FormId id : kAllForms) {
        expansions.push_back(expand(named_form(id).spec, limit));
    }

    // Keys interleave the forms so counterexamples sort by index first.
    const std::uint64_t forms = std::size(kAllForms);
    r.counterexamples = sweep(0, forms * limit - 1, opts, [&](std::uint64_t key) -> std::optional<Counterexample> {
        const std::uint64_t n = key / forms;
        const std::size_t f = key % forms;
        const FormId id = kAllForms[f];
        const BigInt &expected = expansions[f][n];
        const BigInt actual = n == 0 ? BigInt(0) : source(id, n);
        if (actual == expected) {
            return std::nullopt;
        }
        return Counterexample{std::string(1, form_letter(id)) + ":" + std::to_string(n), to_decimal(expected),
                              to_decimal(actual)};
    });
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

VerificationReport verify_identities(unsigned limit, const std::vector<long> &zs, const VerifyOptions &opts)
{
    Stopwatch clock;
    VerificationReport r;
    r.check_id = "identities";
    r.range = "z in {" + join_zs(zs) + "}; 0 <= n <= " + std::to_string(limit);
    if (limit > opts.partition_cap) {
        throw std::out_of_range("verify_identities: limit " + std::to_string(limit) + " exceeds partition cap "
                                + std::to_string(opts.partition_cap));
    }
    if (zs.empty()) {
        r.elapsed_ms = clock.elapsed_ms();
        return r;
    }

    std::vector<TruncatedSeries> products;
    for (const long z : zs) {
        products.push_back(euler_power(z - 1, limit + 1));
    }

    const std::uint64_t per_z = limit + 1;
    r.counterexamples = sweep(0, zs.size() * per_z - 1, opts, [&](std::uint64_t key) -> std::optional<Counterexample> {
        const std::size_t zi = key / per_z;
        const auto n = static_cast<unsigned>(key % per_z);
        const Rational sum = nekrasov_okounkov_sum(Rational(zs[zi]), n, opts.partition_cap);
        const BigInt &expected = products[zi][n];
        if (sum.get_den() == 1 && sum.get_num() == expected) {
            return std::nullopt;
        }
        return Counterexample{"z=" + std::to_string(zs[zi]) + ",n=" + std::to_string(n), to_decimal(expected),
                              sum.get_str()};
    });
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

VerificationReport verify_three_core_oracle(unsigned limit, const VerifyOptions &opts)
{
    Stopwatch clock;
    VerificationReport r;
    r.check_id = "three-core";
    r.range = "0 <= n <= " + std::to_string(limit);
    if (limit > opts.partition_cap) {
        throw std::out_of_range("verify_three_core_oracle: limit " + std::to_string(limit)
                                + " exceeds partition cap " + std::to_string(opts.partition_cap));
    }

    // C3(x) = prod (1 - x^{3m})^3 / (1 - x^m).
    const std::size_t order = limit + 1;
    const auto numerator = rescale(jacobi_cube_series((order + 2) / 3), 3, order);
    const auto c3 = mul(numerator, inverse(euler_series(order)));

    r.counterexamples = sweep(0, limit, opts, [&](std::uint64_t n) -> std::optional<Counterexample> {
        const BigInt brute = three_core_count(static_cast<unsigned>(n), opts.partition_cap);
        const BigInt divisor_sum = coeff(FormId::B, 3 * n + 1);
        const BigInt &product = c3[n];
        if (brute == divisor_sum && brute == product) {
            return std::nullopt;
        }
        return Counterexample{"n=" + std::to_string(n),
                              "product " + to_decimal(product) + ", divisor sum " + to_decimal(divisor_sum),
                              "brute force " + to_decimal(brute)};
    });
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

VerificationReport verify_divisibility(std::uint64_t prime_limit, const VerifyOptions &opts)
{
    Stopwatch clock;
    VerificationReport r;
    r.check_id = "divisibility";
    r.range = "primes p = 1 (mod 3), p <= " + std::to_string(prime_limit);

    std::vector<std::uint64_t> primes;
    for (const std::uint64_t p : primes_up_to(prime_limit)) {
        if (p % 3 == 1) {
            primes.push_back(p);
        }
    }
    if (primes.empty()) {
        r.elapsed_ms = clock.elapsed_ms();
        return r;
    }

    r.counterexamples = sweep(0, primes.size() - 1, opts, [&](std::uint64_t idx) -> std::optional<Counterexample> {
        const std::uint64_t p = primes[idx];
        const BigInt a = a_star_prime(p);
        const BigInt c = c_star_prime(p);
        const auto [m, n, prime] = rep_mn(p);
        const BigInt factored = c * to_big(m + 2 * n) * to_big(m - n);
        const BigInt diff = a - c;
        const bool divides = sgn(c) != 0 && mpz_divisible_p(a.get_mpz_t(), c.get_mpz_t()) != 0;
        const bool congruent = mpz_divisible_ui_p(diff.get_mpz_t(), 3) != 0;
        if (divides && factored == a && congruent) {
            return std::nullopt;
        }
        return Counterexample{"p=" + std::to_string(p),
                              "a*(p)=" + to_decimal(a) + " divisible by c*(p)=" + to_decimal(c)
                                  + ", congruent mod 3",
                              "c*(m+2n)(m-n)=" + to_decimal(factored) + (divides ? "" : ", not divisible")
                                  + (congruent ? "" : ", not congruent")};
    });
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

std::vector<VerificationReport> verify_all(const VerifyOptions &opts)
{
    std::vector<VerificationReport> out;
    out.push_back(verify_supports(defaults::kSupportsLimit, opts));
    out.push_back(verify_closed_forms(defaults::kClosedFormsLimit, opts));
    out.push_back(verify_identities(defaults::kIdentitiesLimit, defaults::kIdentityZs, opts));
    out.push_back(verify_three_core_oracle(defaults::kThreeCoreLimit, opts));
    out.push_back(verify_divisibility(defaults::kDivisibilityPrimeLimit, opts));
    return out;
}

nlohmann::ordered_json to_json(const VerificationReport &report)
{
    nlohmann::ordered_json j;
    j["check_id"] = report.check_id;
    j["range"] = report.range;
    j["status"] = report.status();
    auto list = nlohmann::ordered_json::array();
    for (const auto &c : report.counterexamples) {
        nlohmann::ordered_json item;
        item["input"] = c.input;
        item["expected"] = c.expected;
        item["actual"] = c.actual;
        list.push_back(std::move(item));
    }
    j["counterexamples"] = std::move(list);
    j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

} // namespace qseries
