#pragma once

#include <cstddef>
#include <iterator>
#include <vector>

#include "qseries/bigint.hpp"

namespace qseries {

inline constexpr unsigned kDefaultPartitionCap = 40;

/// An integer partition: weakly decreasing positive parts.
struct Partition {
    std::vector<unsigned> parts;

    unsigned size() const noexcept;

    friend bool operator==(const Partition &, const Partition &) = default;
};

/// Hook lengths of a partition's Young diagram, sorted descending.
struct HookMultiset {
    std::vector<unsigned> hooks;

    friend bool operator==(const HookMultiset &, const HookMultiset &) = default;
};

/// Streams the partitions of n in descending lexicographic order, starting at
/// (n) and ending at (1, ..., 1). Only the current partition is held.
class PartitionRange
{
public:
    class iterator
    {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Partition *;
        using reference = const Partition &;

        iterator() = default;

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator &operator++();
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator &a, const iterator &b) { return a.done_ == b.done_; }

    private:
        friend class PartitionRange;
        explicit iterator(unsigned n);

        Partition current_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(n_); }
    iterator end() const { return iterator(); }

private:
    friend PartitionRange partitions_of(unsigned n, unsigned cap);
    explicit PartitionRange(unsigned n) : n_(n) {}

    unsigned n_;
};

/// Throws std::out_of_range if n exceeds cap.
PartitionRange partitions_of(unsigned n, unsigned cap = kDefaultPartitionCap);

Partition conjugate(const Partition &lambda);

/// Hook of cell (i, j): lambda_i - j + lambda'_j - i + 1 (1-based).
HookMultiset hook_multiset(const Partition &lambda);

/// No hook length divisible by 3.
bool is_three_core(const Partition &lambda);

BigInt three_core_count(unsigned n, unsigned cap = kDefaultPartitionCap);

/// Sum over partitions of n of prod over hooks h of (1 - z/h^2), exactly.
Rational nekrasov_okounkov_sum(const Rational &z, unsigned n, unsigned cap = kDefaultPartitionCap);

} // namespace qseries
