#include "qseries/series.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "qseries/series_kernels.hpp"

namespace qseries {

namespace {

void require_positive_order(std::size_t order)
{
    if (order == 0) {
        throw std::invalid_argument("series order must be positive");
    }
}

} // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order)
{
    require_positive_order(order);
}

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    require_positive_order(coeffs_.size());
}

TruncatedSeries TruncatedSeries::constant(const BigInt &c, std::size_t order)
{
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

std::vector<std::size_t> TruncatedSeries::support() const
{
    return kernels::nonzero_indices(coeffs_, coeffs_.size());
}

TruncatedSeries make_series(std::vector<BigInt> coeffs, std::size_t order)
{
    require_positive_order(order);
    if (coeffs.size() > order) {
        throw std::invalid_argument("make_series: " + std::to_string(coeffs.size())
                                    + " coefficients do not fit in order " + std::to_string(order));
    }
    coeffs.resize(order);
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries make_series(std::initializer_list<long> coeffs, std::size_t order)
{
    std::vector<BigInt> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) {
        v.emplace_back(c);
    }
    return make_series(std::move(v), order);
}

TruncatedSeries add(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<BigInt> c(order);
    for (std::size_t i = 0; i < order; ++i) {
        c[i] = a[i] + b[i];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries sub(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<BigInt> c(order);
    for (std::size_t i = 0; i < order; ++i) {
        c[i] = a[i] - b[i];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries negate(const TruncatedSeries &a)
{
    std::vector<BigInt> c(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) {
        c[i] = -a[i];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const std::size_t order = std::min(a.order(), b.order());
    return TruncatedSeries(kernels::convolve_parallel(a.coeffs(), b.coeffs(), order));
}

TruncatedSeries pow(const TruncatedSeries &a, std::uint64_t e)
{
    const std::size_t order = a.order();
    TruncatedSeries result = TruncatedSeries::constant(1, order);
    if (e == 0) {
        return result;
    }

    // Sparse bases (rescaled Euler products) are cheapest to multiply in one
    // at a time; dense ones go through repeated squaring.
    const std::size_t nnz = a.support().size();
    const auto bits = static_cast<std::uint64_t>(std::bit_width(e));
    if ((e - 1) * nnz <= 2 * bits * order) {
        result = a;
        for (std::uint64_t i = 1; i < e; ++i) {
            result = mul(result, a);
        }
        return result;
    }

    TruncatedSeries base = a;
    bool first = true;
    while (e > 0) {
        if (e & 1U) {
            result = first ? base : mul(result, base);
            first = false;
        }
        e >>= 1U;
        if (e > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

TruncatedSeries inverse(const TruncatedSeries &a)
{
    const BigInt &c0 = a[0];
    if (c0 != 1 && c0 != -1) {
        throw std::domain_error("inverse: constant term " + c0.get_str() + " is not a unit");
    }
    const std::size_t order = a.order();
    const auto nz = a.support();
    std::vector<BigInt> b(order);
    b[0] = c0;
    // b_k = -c0 * sum_{i>=1} a_i b_{k-i}, using c0^-1 == c0.
    for (std::size_t k = 1; k < order; ++k) {
        BigInt acc;
        for (const std::size_t i : nz) {
            if (i == 0) {
                continue;
            }
            if (i > k) {
                break;
            }
            mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[k - i].get_mpz_t());
        }
        b[k] = c0 == 1 ? BigInt(-acc) : acc;
    }
    return TruncatedSeries(std::move(b));
}

TruncatedSeries truncate(const TruncatedSeries &a, std::size_t order)
{
    if (order > a.order()) {
        throw std::invalid_argument("truncate: order " + std::to_string(order) + " exceeds "
                                    + std::to_string(a.order()));
    }
    std::vector<BigInt> c(a.coeffs().begin(), a.coeffs().begin() + static_cast<std::ptrdiff_t>(order));
    return TruncatedSeries(std::move(c));
}

TruncatedSeries euler_series(std::size_t order)
{
    require_positive_order(order);
    std::vector<BigInt> c(order);
    c[0] = 1;
    // Generalized pentagonal numbers k(3k-1)/2 and k(3k+1)/2, sign (-1)^k.
    for (std::size_t k = 1;; ++k) {
        const std::size_t lo = k * (3 * k - 1) / 2;
        if (lo >= order) {
            break;
        }
        const long sign = (k % 2 == 0) ? 1 : -1;
        c[lo] = sign;
        const std::size_t hi = k * (3 * k + 1) / 2;
        if (hi < order) {
            c[hi] = sign;
        }
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries jacobi_cube_series(std::size_t order)
{
    require_positive_order(order);
    std::vector<BigInt> c(order);
    for (std::size_t n = 0; n * (n + 1) / 2 < order; ++n) {
        const long v = static_cast<long>(2 * n + 1);
        c[n * (n + 1) / 2] = (n % 2 == 0) ? v : -v;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries rescale(const TruncatedSeries &a, std::size_t t, std::optional<std::size_t> max_order)
{
    if (t == 0) {
        throw std::invalid_argument("rescale: factor must be positive");
    }
    std::size_t order = a.order() * t;
    if (max_order) {
        require_positive_order(*max_order);
        order = std::min(order, *max_order);
    }
    std::vector<BigInt> c(order);
    for (std::size_t i = 0; i * t < order; ++i) {
        c[i * t] = a[i];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries shift(const TruncatedSeries &a, std::size_t s)
{
    std::vector<BigInt> c(a.order() + s);
    std::copy(a.coeffs().begin(), a.coeffs().end(), c.begin() + static_cast<std::ptrdiff_t>(s));
    return TruncatedSeries(std::move(c));
}

} // namespace qseries
