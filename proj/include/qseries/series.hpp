#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "qseries/bigint.hpp"

namespace qseries {

/// Dense q-expansion truncated at an exclusive order: position i holds the
/// coefficient of q^i and the number of stored coefficients equals order().
///
/// Values are immutable once built. Every binary operation truncates to the
/// minimum order of its inputs.
class TruncatedSeries
{
public:
    /// The zero series of the given order (order must be positive).
    explicit TruncatedSeries(std::size_t order);

    /// Takes ownership of a coefficient vector; its length is the order.
    explicit TruncatedSeries(std::vector<BigInt> coeffs);

    static TruncatedSeries constant(const BigInt &c, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size(); }
    const BigInt &operator[](std::size_t i) const { return coeffs_[i]; }
    const BigInt &at(std::size_t i) const { return coeffs_.at(i); }
    std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

    /// Indices with a nonzero coefficient, ascending.
    std::vector<std::size_t> support() const;

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// Zero-pads coeffs to order; rejects more coefficients than the order holds.
TruncatedSeries make_series(std::vector<BigInt> coeffs, std::size_t order);
TruncatedSeries make_series(std::initializer_list<long> coeffs, std::size_t order);

TruncatedSeries add(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries sub(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries negate(const TruncatedSeries &a);

/// Cauchy product truncated to min(a.order(), b.order()). Runs the parallel
/// kernel; see series_kernels.hpp for the serial reference.
TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b);

/// a^e at a.order(); e = 0 gives the constant 1.
TruncatedSeries pow(const TruncatedSeries &a, std::uint64_t e);

/// Multiplicative inverse; the constant term must be +1 or -1.
TruncatedSeries inverse(const TruncatedSeries &a);

/// Keeps the first `order` coefficients; order may not exceed a.order().
TruncatedSeries truncate(const TruncatedSeries &a, std::size_t order);

/// prod_{n>=1} (1 - q^n) from the pentagonal number theorem.
TruncatedSeries euler_series(std::size_t order);

/// prod_{n>=1} (1 - q^n)^3 from Jacobi's triangular-number identity.
TruncatedSeries jacobi_cube_series(std::size_t order);

/// Substitutes q -> q^t. The result has order a.order() * t, or max_order
/// when that is given and smaller.
TruncatedSeries rescale(const TruncatedSeries &a, std::size_t t,
                        std::optional<std::size_t> max_order = std::nullopt);

/// Multiplies by q^s; the order grows by s.
TruncatedSeries shift(const TruncatedSeries &a, std::size_t s);

} // namespace qseries
