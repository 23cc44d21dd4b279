#pragma once

#include <cmath>
#include <stdexcept>

#include "hookdist/special_functions.hpp"

namespace hookdist {

namespace detail {

/// Sums f(1) + f(2) + ... until the terms drop below 1e-18 of the running
/// total (three consecutive times, to ride out non-monotone starts).
template <class F>
double sum_series(F&& f, long max_terms = 100000000) {
    double acc = 0.0;
    int quiet = 0;
    for (long j = 1; j <= max_terms; ++j) {
        const double term = f(j);
        acc += term;
        if (std::fabs(term) <= 1e-18 * (std::fabs(acc) + 1e-300)) {
            if (++quiet >= 3) return acc;
        } else {
            quiet = 0;
        }
    }
    throw std::runtime_error("sum_series: no convergence within term budget");
}

/// Li2(1 - T) / (T - 1), continued through the removable point T = 1.
inline double dilog_ratio(double T) {
    const double u = 1.0 - T;
    if (std::fabs(u) < 1e-5) {
        // Li2(u)/u = 1 + u/4 + u^2/9 + ...
        return -(1.0 + u / 4.0 + u * u / 9.0);
    }
    return dilog(u) / (T - 1.0);
}

inline double bose_sum(double x) {
    // sum_j j / (e^{jx} - 1)
    return sum_series([x](long j) { return static_cast<double>(j) / std::expm1(j * x); });
}

}  // namespace detail

// Left-hand sums of the four Euler-Maclaurin estimates used by the saddle
// analysis, next to their closed-form main terms.  The tails beyond the
// main terms scale as O(alpha) for a0/b/c and O(1) for a.
struct EmSums {
    double sum_log_euler;     // sum log(1 - e^{-j alpha})
    double sum_weighted;      // sum t^2 j (T-1) / (T-1 + e^{t j alpha})
    double sum_log_factor;    // sum log(1 + (T-1) e^{-t j alpha})
    double sum_second_deriv;  // sum t^3 j^2 e^{-t j alpha} / (1 + (T-1) e^{-t j alpha})^2
    double main_log_euler;
    double main_weighted;
    double main_log_factor;
    double main_second_deriv;
};

inline EmSums em_sums(double alpha, long t, double T) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("em_sums: alpha must lie in (0,1)");
    if (!(T > 0.0)) throw std::domain_error("em_sums: T must be positive");
    if (t < 1) throw std::domain_error("em_sums: t must be >= 1");
    const double td = static_cast<double>(t);
    const double li2 = dilog(1.0 - T);
    EmSums r;
    r.sum_log_euler =
        detail::sum_series([&](long j) { return std::log1p(-std::exp(-j * alpha)); });
    r.sum_weighted = detail::sum_series(
        [&](long j) { return td * td * j * (T - 1.0) / (T - 1.0 + std::exp(td * j * alpha)); });
    r.sum_log_factor =
        detail::sum_series([&](long j) { return std::log1p((T - 1.0) * std::exp(-td * j * alpha)); });
    r.sum_second_deriv = detail::sum_series([&](long j) {
        const double e = std::exp(-td * j * alpha);
        const double d = 1.0 + (T - 1.0) * e;
        return td * td * td * j * static_cast<double>(j) * e / (d * d);
    });
    r.main_log_euler = -kPiSq6 / alpha - 0.5 * std::log(alpha / (2.0 * kPi));
    r.main_weighted = -li2 / (alpha * alpha);
    r.main_log_factor = -li2 / (td * alpha) - 0.5 * std::log(T);
    r.main_second_deriv = -2.0 / (alpha * alpha * alpha) * detail::dilog_ratio(T);
    return r;
}

// The two auxiliary sums entering the saddle equations, with their
// second-order main terms.
struct SaddleAuxSums {
    double sum_weight;        // sum j / (e^{j alpha} - 1)
    double sum_weight_sq;     // sum j^2 e^{-j alpha} / (1 - e^{-j alpha})^2
    double main_weight;       // pi^2/(6 alpha^2) - 1/(2 alpha)
    double main_weight_sq;    // pi^2/(3 alpha^3) - 1/(2 alpha^2)
};

inline SaddleAuxSums saddle_aux_sums(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("saddle_aux_sums: alpha must lie in (0,1)");
    SaddleAuxSums r;
    r.sum_weight = detail::bose_sum(alpha);
    r.sum_weight_sq = detail::sum_series([alpha](long j) {
        const double e = std::exp(-j * alpha);
        const double d = -std::expm1(-j * alpha);  // 1 - e^{-j alpha}
        return static_cast<double>(j) * j * e / (d * d);
    });
    r.main_weight = kPiSq6 / (alpha * alpha) - 0.5 / alpha;
    r.main_weight_sq = 2.0 * kPiSq6 / (alpha * alpha * alpha) - 0.5 / (alpha * alpha);
    return r;
}

struct SaddleSolution {
    long n = 0;
    long t = 1;
    double marker = 1.0;    // T for the equal flavor; alpha(T) for the multiple flavor
    double alpha = 0.0;     // solved saddle exponent (z = e^{-alpha})
    double residual = 0.0;  // saddle equation LHS - n at the solution
    double expansion = 0.0; // closed-form approximation of alpha
};

namespace detail {

/// Bisection for a strictly decreasing lhs; brackets are grown from the
/// initial guesses until they straddle the target.
template <class F>
double solve_decreasing(F&& lhs, double target, double lo, double hi, double rel_tol) {
    for (int i = 0; lhs(lo) < target; ++i) {
        lo *= 0.5;
        if (i > 900 || lo < 1e-280)
            throw std::runtime_error("saddle solver: cannot bracket from below");
    }
    for (int i = 0; lhs(hi) > target; ++i) {
        hi *= 2.0;
        if (i > 60) throw std::runtime_error("saddle solver: cannot bracket from above");
    }
    while (hi - lo > rel_tol * lo) {
        const double mid = 0.5 * (lo + hi);
        if (lhs(mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/// Saddle exponent for the t-hook generating function at marker value T:
/// solves  sum t^2 j (T-1)/(T-1+e^{t j a}) + sum j/(e^{j a}-1) = n.
/// The expansion field carries c(T) n^{-1/2} - n^{-1}/4.
inline SaddleSolution solve_thook_saddle(long n, long t, double T, double tol = 1e-9) {
    if (n < 1 || t < 1) throw std::domain_error("solve_thook_saddle: need n >= 1, t >= 1");
    if (!(T > 0.0)) throw std::domain_error("solve_thook_saddle: T must be positive");
    const double td = static_cast<double>(t);
    auto lhs = [&](double a) {
        double s = detail::bose_sum(a);
        if (T != 1.0)
            s += detail::sum_series(
                [&](long j) { return td * td * j * (T - 1.0) / (T - 1.0 + std::exp(td * j * a)); });
        return s;
    };
    const double c = gf_growth_constant(T);
    SaddleSolution sol;
    sol.n = n;
    sol.t = t;
    sol.marker = T;
    sol.expansion = c / std::sqrt(static_cast<double>(n)) - 0.25 / static_cast<double>(n);
    const double guess = std::max(sol.expansion, 1e-8);
    sol.alpha = detail::solve_decreasing(lhs, static_cast<double>(n), guess, 2.0 * guess, 1e-13);
    sol.residual = lhs(sol.alpha) - static_cast<double>(n);
    if (std::fabs(sol.residual) > tol * static_cast<double>(n))
        throw std::runtime_error("solve_thook_saddle: residual above tolerance");
    return sol;
}

/// Saddle exponent for the divisible-by-t generating function along the
/// calibrated marker sequence T_n = e^{alphaT / sqrt(n)}:
/// solves  -sum t^2 j/(e^{t j b}-1) + sum t^2 j/(e^{j(t b - a)}-1)
///         + sum j/(e^{j b}-1) = n   with a = alphaT/sqrt(n).
/// Requires pi t + sqrt(6) alphaT > 0; expansion is (pi/sqrt6 + alphaT/t)/sqrt(n).
inline SaddleSolution solve_tmult_saddle(long n, long t, double alphaT, double tol = 1e-9) {
    if (n < 1 || t < 1) throw std::domain_error("solve_tmult_saddle: need n >= 1, t >= 1");
    const double td = static_cast<double>(t);
    if (kPi * td + std::sqrt(6.0) * alphaT <= 0.0)
        throw std::domain_error("solve_tmult_saddle: need pi t + sqrt(6) alphaT > 0");
    const double sqn = std::sqrt(static_cast<double>(n));
    const double a = alphaT / sqn;
    const double base = std::max(0.0, a / td);  // lhs valid only for t*beta > a
    auto lhs = [&](double offset) {
        const double beta = base + offset;
        double s = detail::bose_sum(beta);
        s -= td * td * detail::bose_sum(td * beta);
        s += td * td * detail::bose_sum(td * beta - a);
        return s;
    };
    SaddleSolution sol;
    sol.n = n;
    sol.t = t;
    sol.marker = alphaT;
    sol.expansion = (kPi / std::sqrt(6.0) + alphaT / td) / sqn;
    const double guess = std::max(sol.expansion - base, 1e-8);
    const double offset =
        detail::solve_decreasing(lhs, static_cast<double>(n), guess, 2.0 * guess, 1e-13);
    sol.alpha = base + offset;
    sol.residual = lhs(offset) - static_cast<double>(n);
    if (std::fabs(sol.residual) > tol * static_cast<double>(n))
        throw std::runtime_error("solve_tmult_saddle: residual above tolerance");
    return sol;
}

// Sign + log-magnitude carrier for quantities like e^{pi sqrt(2n/3)} that
// leave double range near n ~ 5 * 10^4.
struct LogValue {
    double log_abs = 0.0;
    int sign = 1;

    double to_double() const { return sign * std::exp(log_abs); }
};

/// Saddle-point main term of the t-hook generating polynomial at marker T:
///   c(T) / (2 sqrt(2) pi n T^{t/2}) * e^{c(T)(2 sqrt(n) - 1/sqrt(n))}.
inline LogValue thook_gf_main_term(long n, long t, double T) {
    if (n < 1) throw std::domain_error("thook_gf_main_term: need n >= 1");
    const double c = gf_growth_constant(T);
    const double sqn = std::sqrt(static_cast<double>(n));
    LogValue v;
    v.log_abs = std::log(c) - std::log(2.0 * std::sqrt(2.0) * kPi * static_cast<double>(n)) -
                0.5 * static_cast<double>(t) * std::log(T) + c * (2.0 * sqn - 1.0 / sqn);
    return v;
}

/// Saddle-point main term of the divisible-by-t generating function along
/// T_n = e^{(alphaT + epsT)/sqrt(n)}.
inline LogValue tmult_gf_main_term(long n, long t, double alphaT, double epsT = 0.0) {
    if (n < 1) throw std::domain_error("tmult_gf_main_term: need n >= 1");
    const double td = static_cast<double>(t);
    const double shift = alphaT + epsT;
    const double pt = kPi * td;
    if (pt + std::sqrt(6.0) * shift <= 0.0)
        throw std::domain_error("tmult_gf_main_term: need pi t + sqrt(6)(alphaT + epsT) > 0");
    const double sqn = std::sqrt(static_cast<double>(n));
    LogValue v;
    v.log_abs = -std::log(std::pow(2.0, 1.75) * std::pow(3.0, 0.25) * static_cast<double>(n)) +
                0.5 * std::log(1.0 / std::sqrt(6.0) + shift / pt) +
                0.5 * td * std::log(pt / (pt + std::sqrt(6.0) * shift)) +
                kPi * sqn * (std::sqrt(2.0 / 3.0) + shift / pt);
    return v;
}

// Asymptotic parameters of the normal limit of the t-hook count.
struct NormalLimitParams {
    long n = 0;
    long t = 1;
    double mean = 0.0;
    double variance = 1.0;

    double sigma() const { return std::sqrt(variance); }
    double k_of(double x) const { return mean + sigma() * x; }
};

inline NormalLimitParams thook_limit_params(long n, long t) {
    if (n < 1 || t < 1) throw std::domain_error("thook_limit_params: need n >= 1, t >= 1");
    NormalLimitParams p;
    p.n = n;
    p.t = t;
    const double s6n = std::sqrt(6.0 * static_cast<double>(n));
    p.mean = s6n / kPi - static_cast<double>(t) / 2.0;
    p.variance = (kPi * kPi - 6.0) * s6n / (2.0 * kPi * kPi * kPi);
    return p;
}

// Asymptotic parameters of the shifted-Gamma limit of the divisible-by-t
// hook count (t >= 4) in standardized coordinates: the limit compares to
// a X_{shape,scale} + b with a = -1, b = shape * scale.
struct GammaLimitParams {
    long n = 0;
    long t = 4;
    double mean = 0.0;
    double mode = 0.0;
    double variance = 1.0;
    double shape = 1.0;
    double scale = 1.0;
    double a = -1.0;
    double b = 0.0;

    double sigma() const { return std::sqrt(variance); }
    double k_of(double x) const { return mean + sigma() * x; }
};

inline GammaLimitParams tmult_limit_params(long n, long t) {
    if (n < 1) throw std::domain_error("tmult_limit_params: need n >= 1");
    if (t < 4)
        throw std::invalid_argument(
            "tmult_limit_params: continuous limiting laws require t >= 4 "
            "(shape (t-1)/2 must exceed 1; t = 2, 3 have lacunary support)");
    GammaLimitParams p;
    p.n = n;
    p.t = t;
    const double td = static_cast<double>(t);
    const double s6n = std::sqrt(6.0 * static_cast<double>(n));
    p.mean = static_cast<double>(n) / td - (td - 1.0) * s6n / (2.0 * kPi * td);
    p.mode = static_cast<double>(n) / td - (td - 3.0) * s6n / (2.0 * kPi * td);
    p.variance = 3.0 * (td - 1.0) * static_cast<double>(n) / (kPi * kPi * td * td);
    p.shape = (td - 1.0) / 2.0;
    p.scale = std::sqrt(2.0 / (td - 1.0));
    p.a = -1.0;
    p.b = std::sqrt(2.0 * (td - 1.0)) / 2.0;
    return p;
}

}  // namespace hookdist
