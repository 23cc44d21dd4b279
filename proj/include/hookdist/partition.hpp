#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hookdist/numeric.hpp"

namespace hookdist {

// A partition of n: weakly decreasing positive parts.  The empty partition
// is the unique partition of 0.  Immutable after construction.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<long> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
            weight_ += parts_[i];
        }
    }

    const std::vector<long>& parts() const { return parts_; }
    long weight() const { return weight_; }
    std::size_t rows() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<long> parts_;
    long weight_ = 0;
};

/// Streams the partitions of n in reverse-lexicographic order,
/// (n), (n-1,1), ..., (1,...,1).  Single consumer.
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(long n) : n_(n) {
        if (n < 0) throw std::invalid_argument("PartitionEnumerator: negative n");
        if (n > 0) current_.push_back(n);
    }

    std::optional<Partition> next() {
        if (done_) return std::nullopt;
        Partition out{std::vector<long>(current_)};
        advance();
        return out;
    }

private:
    void advance() {
        // drop trailing 1s, decrement the last part > 1, refill greedily
        std::size_t k = current_.size();
        while (k > 0 && current_[k - 1] == 1) --k;
        if (k == 0) {
            done_ = true;
            return;
        }
        long freed = static_cast<long>(current_.size() - k) + 1;
        long v = current_[k - 1] - 1;
        current_.resize(k);
        current_[k - 1] = v;
        while (freed >= v) {
            current_.push_back(v);
            freed -= v;
        }
        if (freed > 0) current_.push_back(freed);
    }

    long n_ = 0;
    std::vector<long> current_;
    bool done_ = false;
};

template <class F>
void for_each_partition(long n, F&& f) {
    PartitionEnumerator it(n);
    while (auto p = it.next()) f(*p);
}

/// Transpose of the Young diagram: part j of the result counts the parts
/// of lambda that are >= j+1.  Involution.
inline Partition conjugate(const Partition& lambda) {
    const auto& parts = lambda.parts();
    if (parts.empty()) return {};
    std::vector<long> cols(static_cast<std::size_t>(parts[0]));
    for (long j = 0; j < parts[0]; ++j)
        cols[static_cast<std::size_t>(j)] = static_cast<long>(
            std::count_if(parts.begin(), parts.end(), [j](long p) { return p >= j + 1; }));
    return Partition(std::move(cols));
}

/// Visits the hook length of every cell: arm + leg + 1.
template <class F>
void for_each_hook(const Partition& lambda, F&& f) {
    const auto& parts = lambda.parts();
    if (parts.empty()) return;
    std::vector<long> colheight(static_cast<std::size_t>(parts[0]));
    for (const long p : parts)
        for (long j = 0; j < p; ++j) ++colheight[static_cast<std::size_t>(j)];
    for (std::size_t k = 0; k < parts.size(); ++k)
        for (long j = 1; j <= parts[k]; ++j) {
            long arm = parts[k] - j;
            long leg = colheight[static_cast<std::size_t>(j - 1)] - static_cast<long>(k) - 1;
            f(arm + leg + 1);
        }
}

struct HookMultiset {
    std::vector<long> values;  // sorted descending
};

inline HookMultiset hook_lengths(const Partition& lambda) {
    HookMultiset h;
    h.values.reserve(static_cast<std::size_t>(lambda.weight()));
    for_each_hook(lambda, [&](long v) { h.values.push_back(v); });
    std::sort(h.values.begin(), h.values.end(), std::greater<>());
    return h;
}

inline long count_hooks_equal(const Partition& lambda, long t) {
    if (t < 1) throw std::invalid_argument("count_hooks_equal: t must be >= 1");
    long c = 0;
    for_each_hook(lambda, [&](long v) { c += (v == t); });
    return c;
}

/// Cardinality of the multiset of hook lengths divisible by t.
inline long count_hooks_multiple(const Partition& lambda, long t) {
    if (t < 1) throw std::invalid_argument("count_hooks_multiple: t must be >= 1");
    long c = 0;
    for_each_hook(lambda, [&](long v) { c += (v % t == 0); });
    return c;
}

/// Number of standard Young tableaux of shape lambda: n! / prod(hooks).
/// The division is exact; a nonzero remainder means the hook computation
/// is broken, so it is reported as a logic error.
inline BigInt standard_tableau_count(const Partition& lambda) {
    BigInt num = factorial(lambda.weight());
    BigInt den = 1;
    for_each_hook(lambda, [&](long v) { den *= v; });
    BigInt q, r;
    divide_qr(num, den, q, r);
    if (r != 0) throw std::logic_error("standard_tableau_count: inexact hook division");
    return q;
}

}  // namespace hookdist
