#include "qseries/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qseries {

unsigned Partition::size() const noexcept
{
    return std::accumulate(parts.begin(), parts.end(), 0U);
}

PartitionRange::iterator::iterator(unsigned n) : done_(false)
{
    if (n > 0) {
        current_.parts.push_back(n);
    }
}

PartitionRange::iterator &PartitionRange::iterator::operator++()
{
    auto &parts = current_.parts;
    // Strip the trailing 1s; they are redistributed below.
    unsigned freed = 0;
    while (!parts.empty() && parts.back() == 1) {
        parts.pop_back();
        ++freed;
    }
    if (parts.empty()) {
        done_ = true;
        return *this;
    }
    // Decrement the last part > 1 and refill greedily with parts no larger.
    const unsigned cap = --parts.back();
    ++freed;
    while (freed > 0) {
        const unsigned next = std::min(cap, freed);
        parts.push_back(next);
        freed -= next;
    }
    return *this;
}

PartitionRange partitions_of(unsigned n, unsigned cap)
{
    if (n > cap) {
        throw std::out_of_range("partition size " + std::to_string(n) + " exceeds cap "
                                + std::to_string(cap));
    }
    return PartitionRange(n);
}

Partition conjugate(const Partition &lambda)
{
    Partition out;
    if (lambda.parts.empty()) {
        return out;
    }
    out.parts.resize(lambda.parts.front(), 0);
    for (const unsigned part : lambda.parts) {
        for (unsigned j = 0; j < part; ++j) {
            ++out.parts[j];
        }
    }
    return out;
}

HookMultiset hook_multiset(const Partition &lambda)
{
    const Partition conj = conjugate(lambda);
    HookMultiset h;
    h.hooks.reserve(lambda.size());
    for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
        for (std::size_t j = 0; j < lambda.parts[i]; ++j) {
            // 0-based form of lambda_i - j + lambda'_j - i + 1.
            h.hooks.push_back(static_cast<unsigned>(lambda.parts[i] - j + conj.parts[j] - i - 1));
        }
    }
    std::sort(h.hooks.begin(), h.hooks.end(), std::greater<>());
    return h;
}

bool is_three_core(const Partition &lambda)
{
    const auto h = hook_multiset(lambda);
    return std::none_of(h.hooks.begin(), h.hooks.end(), [](unsigned v) { return v % 3 == 0; });
}

BigInt three_core_count(unsigned n, unsigned cap)
{
    BigInt count = 0;
    for (const auto &lambda : partitions_of(n, cap)) {
        if (is_three_core(lambda)) {
            ++count;
        }
    }
    return count;
}

Rational nekrasov_okounkov_sum(const Rational &z, unsigned n, unsigned cap)
{
    Rational total = 0;
    for (const auto &lambda : partitions_of(n, cap)) {
        Rational term = 1;
        for (const unsigned h : hook_multiset(lambda).hooks) {
            const Rational h2(static_cast<unsigned long>(h) * h);
            term *= 1 - z / h2;
            if (sgn(term) == 0) {
                break;
            }
        }
        total += term;
    }
    total.canonicalize();
    return total;
}

} // namespace qseries
