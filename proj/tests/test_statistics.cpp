#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hookdist/qseries.hpp"
#include "hookdist/statistics.hpp"

using namespace hookdist;

TEST_CASE("cumulative values") {
    const auto d = tmult_distribution(19, 2);
    CHECK(cumulative_rational(d, 8.0) == BigRat(190, 490));
    CHECK(cumulative_rational(d, 8.9) == BigRat(190, 490));
    CHECK(cumulative_rational(d, -0.5) == 0);
    CHECK(cumulative_rational(d, 9.0) == 1);
    CHECK(cumulative(d, 1e9) == 1.0);

    // nondecreasing in k, reaching exactly 1 at the top of the support
    BigRat prev = 0;
    for (long k = 0; k <= d.max_m(); ++k) {
        const auto v = cumulative_rational(d, static_cast<double>(k));
        CHECK(v >= prev);
        prev = v;
    }
    CHECK(prev == 1);
}

TEST_CASE("exact moments") {
    const auto d = tmult_distribution(19, 2);
    const auto mo = exact_moments(d);
    CHECK(mo.mean == BigRat(4190, 490));
    CHECK(mo.mode == 9);

    const auto d0 = tmult_distribution(0, 4);
    const auto mo0 = exact_moments(d0);
    CHECK(mo0.variance == 0);
    CHECK(mo0.mean == 0);

    const auto d3 = thook_distribution(3, 1);
    CHECK(exact_moments(d3).mean == BigRat(4, 3));

    // tie in the counts breaks toward smaller m
    HookDistribution tie;
    tie.n = 0;
    tie.total = 4;
    tie.counts = {BigInt(2), BigInt(2)};
    CHECK(exact_moments(tie).mode == 0);
}

TEST_CASE("mgf basics") {
    const auto d = thook_distribution(60, 2);
    CHECK(mgf(d, 3.0, 2.0, 0.0) == Catch::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(mgf(d, 0.0, 0.0, 1.0), std::invalid_argument);

    // log-convexity in r on a grid (midpoint version)
    const auto mo = exact_moments(d);
    const double mean = to_double(mo.mean), sd = std::sqrt(to_double(mo.variance));
    std::vector<double> lg;
    for (double r = -1.0; r <= 1.0 + 1e-9; r += 0.1)
        lg.push_back(std::log(mgf(d, mean, sd, r)));
    for (std::size_t i = 1; i + 1 < lg.size(); ++i)
        CHECK(lg[i] <= (lg[i - 1] + lg[i + 1]) / 2 + 1e-12);
}

TEST_CASE("standardized distribution") {
    const auto d = thook_distribution(200, 2);
    const auto p = thook_limit_params(200, 2);
    const auto s = standardize(d, p);
    REQUIRE(!s.x.empty());
    double sum = 0.0;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (i > 0) CHECK(s.x[i] > s.x[i - 1]);
        CHECK(s.prob[i] > 0.0);
        sum += s.prob[i];
    }
    CHECK(sum == Catch::Approx(1.0).margin(1e-12));
    CHECK(s.cdf.back() == 1.0);
    CHECK_THROWS_AS(standardize(d, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("ks distance") {
    const auto d = thook_distribution(500, 2);
    const auto s = standardize(d, thook_limit_params(500, 2));

    // degenerate check: the empirical step function itself has distance 0
    auto self_cdf = [&s](double x) {
        double v = 0.0;
        for (std::size_t i = 0; i < s.x.size() && s.x[i] <= x; ++i) v = s.cdf[i];
        return v;
    };
    CHECK(ks_distance_cdf(s, self_cdf) == 0.0);

    const double ks = ks_distance(s, LimitModel::normal_model(0.0, 1.0));
    CHECK(ks > 0.0);
    CHECK(ks < 0.2);
    // a clearly wrong model is farther away
    CHECK(ks_distance(s, LimitModel::normal_model(3.0, 1.0)) > ks);
}

TEST_CASE("table rows") {
    const auto d = thook_distribution(500, 2);
    const auto r = table_row(d, 0.0);
    CHECK(r.limit == 0.5);
    CHECK(r.k == static_cast<long>(std::floor(thook_limit_params(500, 2).mean)));
    CHECK(r.cumulative == Catch::Approx(0.5).margin(0.2));
    CHECK(r.ratio == Catch::Approx(r.cumulative / r.limit).epsilon(1e-14));

    const auto rows = table_rows(d, {-1.0, 0.0, 1.0});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].cumulative <= rows[1].cumulative);
    CHECK(rows[1].cumulative <= rows[2].cumulative);

    // the divisible flavor needs the Gamma limit, hence t >= 4
    const auto bad = tmult_distribution(30, 2);
    CHECK_THROWS_AS(table_row(bad, 0.0), std::invalid_argument);
}
