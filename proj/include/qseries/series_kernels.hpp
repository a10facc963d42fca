#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qseries/bigint.hpp"

// Convolution kernels behind qseries::mul. The serial version is the literal
// schoolbook double loop and serves as the reference in tests and benchmarks.
namespace qseries::kernels {

std::vector<BigInt> convolve_serial(std::span<const BigInt> a, std::span<const BigInt> b,
                                    std::size_t order);

/// Parallel over output indices. Iterates only the nonzero terms of the
/// sparser operand, so products against rescaled Euler factors stay cheap.
/// workers = 0 uses every available thread.
std::vector<BigInt> convolve_parallel(std::span<const BigInt> a, std::span<const BigInt> b,
                                      std::size_t order, int workers = 0);

std::vector<std::size_t> nonzero_indices(std::span<const BigInt> a, std::size_t limit);

} // namespace qseries::kernels
