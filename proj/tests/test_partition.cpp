#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hookdist/distribution.hpp"
#include "hookdist/partition.hpp"

using namespace hookdist;

namespace {

// independent oracle: standard Young tableaux counted by direct recursive
// filling (place 1..n, rows/columns must stay increasing)
long syt_brute(const std::vector<long>& shape, std::vector<long>& filled, long placed, long n) {
    if (placed == n) return 1;
    long total = 0;
    for (std::size_t r = 0; r < shape.size(); ++r) {
        if (filled[r] >= shape[r]) continue;
        if (r > 0 && filled[r] >= filled[r - 1]) continue;
        ++filled[r];
        total += syt_brute(shape, filled, placed + 1, n);
        --filled[r];
    }
    return total;
}

long syt_brute(const Partition& p) {
    std::vector<long> filled(p.rows(), 0);
    return syt_brute(p.parts(), filled, 0, p.weight());
}

}  // namespace

TEST_CASE("partition enumeration counts match the pentagonal recurrence") {
    // independent oracle: Euler's recurrence, written out locally
    std::vector<long> p{1};
    for (long m = 1; m <= 25; ++m) {
        long acc = 0;
        for (long k = 1;; ++k) {
            const long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            long term = p[m - g1] + (g2 <= m ? p[m - g2] : 0);
            acc += (k & 1) ? term : -term;
        }
        p.push_back(acc);
    }
    REQUIRE(p[5] == 7);
    REQUIRE(p[19] == 490);

    for (long n : {0L, 1L, 5L, 12L, 19L, 25L}) {
        long count = 0;
        for_each_partition(n, [&](const Partition&) { ++count; });
        CHECK(count == p[n]);
    }
}

TEST_CASE("enumeration is reverse-lexicographic without repeats") {
    std::vector<std::vector<long>> seen;
    for_each_partition(6, [&](const Partition& q) { seen.push_back(q.parts()); });
    REQUIRE(seen.size() == 11);
    CHECK(seen.front() == std::vector<long>{6});
    CHECK(seen.back() == std::vector<long>{1, 1, 1, 1, 1, 1});
    CHECK(std::is_sorted(seen.begin(), seen.end(), std::greater<>()));
    CHECK(std::set<std::vector<long>>(seen.begin(), seen.end()).size() == seen.size());
    for (const auto& parts : seen) {
        CHECK(std::accumulate(parts.begin(), parts.end(), 0L) == 6);
        CHECK(std::is_sorted(parts.begin(), parts.end(), std::greater_equal<>()));
    }
}

TEST_CASE("n = 0 yields exactly the empty partition") {
    PartitionEnumerator it(0);
    auto first = it.next();
    REQUIRE(first.has_value());
    CHECK(first->empty());
    CHECK(first->weight() == 0);
    CHECK_FALSE(it.next().has_value());
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition({5, 4, 1}).weight() == 10);
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition({5, 4, 1})) == Partition({3, 2, 2, 2, 1}));
    CHECK(conjugate(Partition({7})) == Partition({1, 1, 1, 1, 1, 1, 1}));
    CHECK(conjugate(Partition()) == Partition());

    // column-count oracle and involution, all partitions of 10
    for_each_partition(10, [&](const Partition& lambda) {
        const auto c = conjugate(lambda);
        for (long j = 1; j <= lambda.parts()[0]; ++j) {
            long expect = 0;
            for (long part : lambda.parts()) expect += (part >= j);
            CHECK(c.parts()[j - 1] == expect);
        }
        CHECK(conjugate(c) == lambda);
    });
}

TEST_CASE("hook lengths") {
    auto h = hook_lengths(Partition({5, 4, 1}));
    CHECK(h.values == std::vector<long>{7, 5, 5, 4, 3, 3, 2, 1, 1, 1});
    CHECK(hook_lengths(Partition({1})).values == std::vector<long>{1});
    CHECK(hook_lengths(Partition({2, 1})).values == std::vector<long>{3, 1, 1});
}

TEST_CASE("hook multiset invariants, n <= 15") {
    for (long n = 0; n <= 15; ++n)
        for_each_partition(n, [&](const Partition& lambda) {
            const auto h = hook_lengths(lambda);
            CHECK(static_cast<long>(h.values.size()) == lambda.weight());
            if (!lambda.empty())
                CHECK(h.values.front() ==
                      lambda.parts()[0] + static_cast<long>(lambda.rows()) - 1);
            // multiset is conjugation invariant
            CHECK(hook_lengths(conjugate(lambda)).values == h.values);
        });
}

TEST_CASE("hook counting") {
    CHECK(count_hooks_equal(Partition({2, 1}), 1) == 2);
    CHECK(count_hooks_equal(Partition({2, 1}), 2) == 0);
    CHECK(count_hooks_equal(Partition({1}), 1) == 1);
    CHECK(count_hooks_multiple(Partition({3}), 2) == 1);
    CHECK(count_hooks_multiple(Partition({2, 1}), 2) == 0);
    for_each_partition(9, [&](const Partition& lambda) {
        CHECK(count_hooks_multiple(lambda, 1) == lambda.weight());
    });
    CHECK_THROWS_AS(count_hooks_equal(Partition({2, 1}), 0), std::invalid_argument);
}

TEST_CASE("standard tableau counts") {
    CHECK(standard_tableau_count(Partition({6})) == 1);
    CHECK(standard_tableau_count(Partition({2, 1})) == 2);
    CHECK(standard_tableau_count(Partition({2, 2})) == 2);
    // brute-force filling oracle on everything up to n = 7
    for (long n = 1; n <= 7; ++n)
        for_each_partition(n, [&](const Partition& lambda) {
            CHECK(standard_tableau_count(lambda) == syt_brute(lambda));
        });
}

TEST_CASE("sum of squared tableau counts is n!  (n <= 12)") {
    for (long n = 1; n <= 12; ++n) {
        BigInt sum = 0;
        for_each_partition(n, [&](const Partition& lambda) {
            const BigInt d = standard_tableau_count(lambda);
            sum += d * d;
        });
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("brute force distribution") {
    auto d = brute_force_distribution(3, 1, Flavor::equal);
    CHECK(d.count(1) == 2);
    CHECK(d.count(2) == 1);
    CHECK(d.total == 3);

    auto d0 = brute_force_distribution(0, 5, Flavor::multiple);
    CHECK(d0.count(0) == 1);
    CHECK(d0.total == 1);

    auto d19 = brute_force_distribution(19, 2, Flavor::multiple);
    CHECK(d19.count(9) == 300);
    CHECK(d19.count(8) == 185);
    CHECK(d19.count(2) == 5);
    CHECK(d19.total == 490);
    BigInt sum = 0;
    for (long m = 0; m <= d19.max_m(); ++m) sum += d19.count(m);
    CHECK(sum == 490);

    CHECK_THROWS_AS(brute_force_distribution(41, 2, Flavor::equal), resource_guard_error);
    CHECK_NOTHROW(brute_force_distribution(41, 2, Flavor::equal, 45));
}
