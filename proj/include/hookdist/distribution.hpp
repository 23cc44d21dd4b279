#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hookdist/numeric.hpp"
#include "hookdist/partition.hpp"

namespace hookdist {

enum class Flavor {
    equal,    // statistic = number of hooks of length exactly t
    multiple  // statistic = number of hooks with length divisible by t
};

inline const char* to_string(Flavor f) {
    return f == Flavor::equal ? "equal" : "multiple";
}

inline Flavor flavor_from_string(const std::string& s) {
    if (s == "equal") return Flavor::equal;
    if (s == "multiple") return Flavor::multiple;
    throw std::invalid_argument("unknown flavor: " + s);
}

// Exact distribution of a hook statistic over all partitions of n:
// counts[m] = number of partitions whose statistic equals m.
struct HookDistribution {
    long n = 0;
    long t = 1;
    Flavor flavor = Flavor::equal;
    std::vector<BigInt> counts;  // indexed by m, trailing zeros trimmed
    BigInt total = 0;            // = p(n)

    long max_m() const { return static_cast<long>(counts.size()) - 1; }

    const BigInt& count(long m) const {
        static const BigInt zero = 0;
        if (m < 0 || m > max_m()) return zero;
        return counts[static_cast<std::size_t>(m)];
    }

    void trim() {
        while (!counts.empty() && counts.back() == 0) counts.pop_back();
    }

    /// Internal consistency: counts nonnegative and summing to total.
    void validate() const {
        BigInt sum = 0;
        for (const auto& c : counts) {
            if (c < 0) throw std::logic_error("HookDistribution: negative count");
            sum += c;
        }
        if (sum != total) throw std::logic_error("HookDistribution: counts do not sum to p(n)");
    }
};

inline constexpr long kBruteForceGuard = 40;

/// Ground-truth distribution by enumerating all partitions of n.  Guarded:
/// p(n) grows too fast for this to make sense much beyond n = 40.
inline HookDistribution brute_force_distribution(long n, long t, Flavor flavor,
                                                 long guard = kBruteForceGuard) {
    if (n < 0) throw std::invalid_argument("brute_force_distribution: negative n");
    if (t < 1) throw std::invalid_argument("brute_force_distribution: t must be >= 1");
    if (n > guard)
        throw resource_guard_error("brute_force_distribution: n = " + std::to_string(n) +
                                   " exceeds the enumeration guard " + std::to_string(guard) +
                                   " (raise the guard explicitly if you mean it)");
    HookDistribution d;
    d.n = n;
    d.t = t;
    d.flavor = flavor;
    d.counts.resize(static_cast<std::size_t>(n) + 1);
    for_each_partition(n, [&](const Partition& lambda) {
        long m = flavor == Flavor::equal ? count_hooks_equal(lambda, t)
                                         : count_hooks_multiple(lambda, t);
        ++d.counts[static_cast<std::size_t>(m)];
        ++d.total;
    });
    d.trim();
    return d;
}

}  // namespace hookdist
