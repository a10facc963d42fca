#include "qseries/series_kernels.hpp"

#include <algorithm>

#include "qseries/parallel.hpp"

namespace qseries::kernels {

std::vector<std::size_t> nonzero_indices(std::span<const BigInt> a, std::size_t limit)
{
    std::vector<std::size_t> nz;
    const std::size_t n = std::min(limit, a.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a[i]) != 0) {
            nz.push_back(i);
        }
    }
    return nz;
}

std::vector<BigInt> convolve_serial(std::span<const BigInt> a, std::span<const BigInt> b,
                                    std::size_t order)
{
    std::vector<BigInt> c(order);
    for (std::size_t i = 0; i < std::min(order, a.size()); ++i) {
        for (std::size_t j = 0; i + j < order && j < b.size(); ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

std::vector<BigInt> convolve_parallel(std::span<const BigInt> a, std::span<const BigInt> b,
                                      std::size_t order, int workers)
{
    auto nz_a = nonzero_indices(a, order);
    auto nz_b = nonzero_indices(b, order);
    if (nz_b.size() < nz_a.size()) {
        std::swap(a, b);
        std::swap(nz_a, nz_b);
    }
    // From here on `a` is the sparser side and nz_a its support.
    std::vector<BigInt> c(order);
    if (nz_a.empty()) {
        return c;
    }
    const auto n = static_cast<std::ptrdiff_t>(order);
    const std::span<const std::size_t> sparse(nz_a);
    const int threads = resolve_workers(workers);
    (void)threads;

#ifdef QSERIES_USE_OPENMP
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads) if (n >= 256)
#endif
    for (std::ptrdiff_t kk = 0; kk < n; ++kk) {
        const auto k = static_cast<std::size_t>(kk);
        BigInt acc;
        for (const std::size_t i : sparse) {
            if (i > k) {
                break;
            }
            const std::size_t j = k - i;
            if (j < b.size()) {
                mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
            }
        }
        c[k] = std::move(acc);
    }
    return c;
}

} // namespace qseries::kernels
