#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hookdist/special_functions.hpp"

using namespace hookdist;

namespace {

// plain Simpson rule on [a, b]
template <class F>
double simpson(F&& f, double a, double b, int intervals) {
    const double h = (b - a) / intervals;
    double acc = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

// oracle: dilog by long-double series, usable for |x| <= 0.9
long double dilog_series_oracle(long double x) {
    long double term = x, acc = x;
    for (int k = 2; k < 2000; ++k) {
        term *= x;
        acc += term / (static_cast<long double>(k) * k);
    }
    return acc;
}

}  // namespace

TEST_CASE("normal cdf") {
    CHECK(normal_cdf(0.0) == 0.5);
    CHECK(normal_cdf(2.0) == Catch::Approx(0.9772).margin(1e-4));
    CHECK(normal_cdf(-1.5) == Catch::Approx(0.0668).margin(1e-4));
    CHECK(normal_cdf(1.0) == Catch::Approx(0.8413).margin(1e-4));
    for (double x = -6.0; x <= 6.0; x += 0.17)
        CHECK(normal_cdf(x) + normal_cdf(-x) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("dilog special values and series oracle") {
    CHECK(dilog(0.0) == 0.0);
    CHECK(dilog(1.0) == Catch::Approx(kPiSq6).margin(1e-13));
    CHECK(dilog(-1.0) == Catch::Approx(-kPiSq6 / 2).margin(1e-13));
    for (double x : {-0.9, -0.7, -0.45, -0.2, 0.2, 0.45, 0.7, 0.9})
        CHECK(dilog(x) ==
              Catch::Approx(static_cast<double>(dilog_series_oracle(x))).margin(1e-13));
    CHECK_THROWS_AS(dilog(1.0001), std::domain_error);
}

TEST_CASE("dilog reflection identity on a 100-point grid") {
    for (int i = 1; i < 100; ++i) {
        const double x = i / 100.0;
        const double residual =
            dilog(x) + dilog(1.0 - x) - (kPiSq6 - std::log(x) * std::log1p(-x));
        CHECK(std::fabs(residual) < 1e-10);
    }
}

TEST_CASE("dilog inversion range and derivative") {
    // Li2(x) + Li2(1/x) = -pi^2/6 - log^2(-x)/2 for x < 0
    for (double x : {-1.5, -3.0, -20.0}) {
        const double lg = std::log(-x);
        CHECK(dilog(x) + dilog(1.0 / x) ==
              Catch::Approx(-kPiSq6 - 0.5 * lg * lg).margin(1e-12));
    }
    // derivative -log(1-x)/x by central differences
    for (double x : {-2.0, -0.4, 0.3, 0.8}) {
        const double h = 1e-6;
        const double fd = (dilog(x + h) - dilog(x - h)) / (2 * h);
        CHECK(fd == Catch::Approx(-std::log1p(-x) / x).epsilon(1e-7));
    }
}

TEST_CASE("growth constant c(T)") {
    CHECK(gf_growth_constant(1.0) == Catch::Approx(kPi / std::sqrt(6.0)).margin(1e-13));
    double prev = 0.0;
    for (double T : {0.1, 0.5, 1.0, 2.0, 10.0}) {
        const double c = gf_growth_constant(T);
        CHECK(c > prev);
        prev = c;
    }
    CHECK_THROWS_AS(gf_growth_constant(0.0), std::domain_error);
    CHECK_THROWS_AS(gf_growth_constant(-1.0), std::domain_error);
}

TEST_CASE("growth constant expansion around T = 1") {
    // c(e^s) = pi/sqrt6 + sqrt(3/2) s/pi + sqrt(3/2)(pi^2-6) s^2/(4 pi^3) + O(s^3)
    auto model = [](double s) {
        return kPi / std::sqrt(6.0) + std::sqrt(1.5) * s / kPi +
               std::sqrt(1.5) * (kPi * kPi - 6.0) * s * s / (4.0 * kPi * kPi * kPi);
    };
    auto residual = [&](double s) { return std::fabs(gf_growth_constant(std::exp(s)) - model(s)); };
    for (double s : {0.02, -0.02, 0.01}) {
        CHECK(residual(s) < 1e-5);
        // cubic remainder: halving s shrinks it by about 8
        CHECK(residual(s / 2) <= residual(s) / 4.0 + 1e-14);
    }
}

TEST_CASE("lower incomplete gamma") {
    CHECK(lower_incomplete_gamma(5.0, 0.0) == 0.0);
    CHECK(regularized_gamma_p(5.0, std::sqrt(5.0) * 1.0 + 5.0) ==
          Catch::Approx(0.8474).margin(1e-4));
    CHECK(regularized_gamma_p(5.0, std::sqrt(5.0) * -1.0 + 5.0) ==
          Catch::Approx(0.1467).margin(1e-4));
    // gamma(5, x)/Gamma(5) with Gamma(5) = 24
    CHECK(lower_incomplete_gamma(5.0, 7.0) / 24.0 ==
          Catch::Approx(regularized_gamma_p(5.0, 7.0)).epsilon(1e-12));
    CHECK_THROWS_AS(regularized_gamma_p(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(regularized_gamma_p(2.0, -0.5), std::domain_error);
}

TEST_CASE("log gamma against the standard library") {
    for (double z = 0.05; z <= 50.0; z += 0.0831) {
        const double mine = log_gamma(z);
        const double ref = std::lgamma(z);
        CHECK(std::fabs(mine - ref) <= 1e-13 * std::max(1.0, std::fabs(ref)));
    }
    CHECK(gamma_function(5.0) == Catch::Approx(24.0).epsilon(1e-13));
    CHECK(gamma_function(0.5) == Catch::Approx(std::sqrt(kPi)).epsilon(1e-13));
}

TEST_CASE("gamma distribution pdf/cdf") {
    CHECK(gamma_cdf(2.5, 1.5, 0.0) == 0.0);
    CHECK(gamma_pdf(2.5, 1.5, -1.0) == 0.0);

    for (double k : {1.5, 2.5, 5.0}) {
        const double theta = 1.3;
        // cdf matches quadrature of the pdf
        for (double x : {0.8, 3.0, 9.0, 20.0}) {
            const double quad =
                simpson([&](double u) { return gamma_pdf(k, theta, u); }, 0.0, x, 40000);
            CHECK(gamma_cdf(k, theta, x) == Catch::Approx(quad).margin(1e-8));
        }
        // moments by quadrature
        const double top = 80.0 * theta;
        const double mean =
            simpson([&](double u) { return u * gamma_pdf(k, theta, u); }, 0.0, top, 200000);
        const double second = simpson([&](double u) { return u * u * gamma_pdf(k, theta, u); },
                                      0.0, top, 200000);
        CHECK(mean == Catch::Approx(k * theta).epsilon(1e-8));
        CHECK(second - mean * mean == Catch::Approx(k * theta * theta).epsilon(1e-6));
        // mode by fine grid argmax
        double best = 0.0, best_x = 0.0;
        for (double u = 0.0; u <= 6.0 * theta; u += 1e-4) {
            const double v = gamma_pdf(k, theta, u);
            if (v > best) {
                best = v;
                best_x = u;
            }
        }
        CHECK(best_x == Catch::Approx((k - 1) * theta).margin(2e-4));
    }
}

TEST_CASE("limit models") {
    const auto nm = LimitModel::normal_model(3.0, 4.0);
    CHECK(nm.cdf(3.0) == 0.5);
    CHECK(nm.cdf(5.0) == Catch::Approx(normal_cdf(1.0)).epsilon(1e-14));

    const auto gm = LimitModel::tmult_limit_standardized(11);
    CHECK(gm.cdf(1.25) == Catch::Approx(0.8880).margin(1e-4));
    CHECK(gm.cdf(-1.00) == Catch::Approx(0.1467).margin(1e-4));

    // a negative affine scale mirrors the law but stays a valid cdf
    const auto mirrored = LimitModel::shifted_gamma_model(5.0, 0.4472135954999579, -1.0,
                                                          5.0 * 0.4472135954999579);
    double prev_m = -0.1, prev_g = -0.1;
    for (int i = 0; i <= 1000; ++i) {
        const double x = -8.0 + i * 16.0 / 1000.0;
        const double vm = mirrored.cdf(x), vg = gm.cdf(x);
        CHECK(vm >= prev_m);
        CHECK(vg >= prev_g);
        CHECK((0.0 <= vm && vm <= 1.0));
        CHECK((0.0 <= vg && vg <= 1.0));
        prev_m = vm;
        prev_g = vg;
    }
    CHECK(mirrored.cdf(-8.0) == Catch::Approx(0.0).margin(1e-9));
    CHECK(mirrored.cdf(8.0) == Catch::Approx(1.0).margin(1e-9));

    CHECK_THROWS_AS(LimitModel::normal_model(0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(LimitModel::shifted_gamma_model(0.0, 1.0, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(LimitModel::tmult_limit_standardized(3), std::invalid_argument);
    CHECK(limit_cdf(nm, 3.0) == 0.5);
}
