#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hookdist/asymptotics.hpp"
#include "hookdist/distribution.hpp"
#include "hookdist/numeric.hpp"
#include "hookdist/special_functions.hpp"

namespace hookdist {

/// Fraction of partitions of n whose statistic is <= floor(k), as an exact
/// rational.
inline BigRat cumulative_rational(const HookDistribution& d, double k) {
    if (d.total == 0) throw std::invalid_argument("cumulative_rational: empty distribution");
    const double fk = std::floor(k);
    if (fk < 0) return BigRat(0);
    BigInt acc = 0;
    const long top = fk >= static_cast<double>(d.max_m()) ? d.max_m() : static_cast<long>(fk);
    for (long m = 0; m <= top; ++m) acc += d.count(m);
    return BigRat(acc, d.total);
}

inline double cumulative(const HookDistribution& d, double k) {
    return to_double(cumulative_rational(d, k));
}

struct Moments {
    BigRat mean;
    BigRat variance;
    long mode = 0;  // argmax of counts; ties break toward smaller m
};

inline Moments exact_moments(const HookDistribution& d) {
    if (d.total == 0) throw std::invalid_argument("exact_moments: empty distribution");
    BigInt s1 = 0, s2 = 0;
    long mode = 0;
    for (long m = 0; m <= d.max_m(); ++m) {
        const BigInt& c = d.count(m);
        s1 += m * c;
        s2 += BigInt(m) * m * c;
        if (c > d.count(mode)) mode = m;
    }
    Moments mo;
    mo.mean = BigRat(s1, d.total);
    mo.variance = BigRat(s2, d.total) - mo.mean * mo.mean;
    mo.mode = mode;
    return mo;
}

/// Empirical moment generating function of the standardized statistic:
/// (1/p(n)) sum_m counts[m] e^{(m - center) r / spread}.  Accumulated in
/// log scale so huge counts and large exponents cannot overflow.
inline double mgf(const HookDistribution& d, double center, double spread, double r) {
    if (!(spread > 0)) throw std::invalid_argument("mgf: spread must be positive");
    if (d.total == 0) throw std::invalid_argument("mgf: empty distribution");
    // log-sum-exp over terms log(counts[m]) + (m - center) r / spread
    double peak = -std::numeric_limits<double>::infinity();
    std::vector<double> logs;
    logs.reserve(d.counts.size());
    for (long m = 0; m <= d.max_m(); ++m) {
        if (d.count(m) == 0) continue;
        const double lg = log_of(d.count(m)) + (static_cast<double>(m) - center) * r / spread;
        logs.push_back(lg);
        peak = std::max(peak, lg);
    }
    double acc = 0.0;
    for (double lg : logs) acc += std::exp(lg - peak);
    return std::exp(peak + std::log(acc) - log_of(d.total));
}

// A hook distribution mapped to standardized coordinates
// x_m = (m - center)/spread, keeping only points of positive mass.
struct StandardizedDistribution {
    double center = 0.0;
    double spread = 1.0;
    std::vector<double> x;     // strictly increasing
    std::vector<double> prob;  // point masses, sum 1
    std::vector<double> cdf;   // inclusive prefix sums
};

inline StandardizedDistribution standardize(const HookDistribution& d, double center,
                                            double spread) {
    if (!(spread > 0)) throw std::invalid_argument("standardize: spread must be positive");
    StandardizedDistribution s;
    s.center = center;
    s.spread = spread;
    BigInt acc = 0;
    for (long m = 0; m <= d.max_m(); ++m) {
        const BigInt& c = d.count(m);
        if (c == 0) continue;
        acc += c;
        s.x.push_back((static_cast<double>(m) - center) / spread);
        s.prob.push_back(ratio_as_double(c, d.total));
        s.cdf.push_back(ratio_as_double(acc, d.total));
    }
    return s;
}

inline StandardizedDistribution standardize(const HookDistribution& d,
                                            const NormalLimitParams& p) {
    return standardize(d, p.mean, p.sigma());
}

inline StandardizedDistribution standardize(const HookDistribution& d,
                                            const GammaLimitParams& p) {
    return standardize(d, p.mean, p.sigma());
}

/// Kolmogorov-Smirnov distance between the empirical step CDF and any
/// model CDF, taking both one-sided limits at every step point.
template <class Cdf>
double ks_distance_cdf(const StandardizedDistribution& s, Cdf&& model_cdf) {
    double sup = 0.0;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        const double fm = model_cdf(s.x[i]);
        const double before = i > 0 ? s.cdf[i - 1] : 0.0;
        sup = std::max({sup, std::fabs(s.cdf[i] - fm), std::fabs(before - fm)});
    }
    return sup;
}

inline double ks_distance(const StandardizedDistribution& s, const LimitModel& model) {
    return ks_distance_cdf(s, [&model](double x) { return model.cdf(x); });
}

struct TableRow {
    double x = 0.0;
    long k = 0;           // floor(mean + sigma x) from the asymptotic parameters
    double cumulative = 0.0;
    double limit = 0.0;
    double ratio = 0.0;
};

/// One comparison row: exact cumulative value at the standardized abscissa
/// against the limiting CDF.  Parameters come from the asymptotic formulas
/// (not the exact moments); k is floored to an integer cutoff.
inline TableRow table_row(const HookDistribution& d, double x) {
    TableRow row;
    row.x = x;
    double kx = 0.0;
    if (d.flavor == Flavor::equal) {
        const auto p = thook_limit_params(d.n, d.t);
        kx = p.k_of(x);
        row.limit = normal_cdf(x);
    } else {
        const auto p = tmult_limit_params(d.n, d.t);
        kx = p.k_of(x);
        row.limit = LimitModel::tmult_limit_standardized(d.t).cdf(x);
    }
    row.k = static_cast<long>(std::floor(kx));
    row.cumulative = cumulative(d, kx);
    row.ratio = row.limit != 0.0 ? row.cumulative / row.limit
                                 : std::numeric_limits<double>::quiet_NaN();
    return row;
}

inline std::vector<TableRow> table_rows(const HookDistribution& d, const std::vector<double>& xs) {
    std::vector<TableRow> rows;
    rows.reserve(xs.size());
    for (double x : xs) rows.push_back(table_row(d, x));
    return rows;
}

}  // namespace hookdist
