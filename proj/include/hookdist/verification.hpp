#pragma once

#include <atomic>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hookdist/asymptotics.hpp"
#include "hookdist/identities.hpp"
#include "hookdist/qseries.hpp"
#include "hookdist/special_functions.hpp"
#include "hookdist/statistics.hpp"

namespace hookdist {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

inline bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

namespace detail {

inline std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

/// Runs tasks[i]() for every i on the requested number of threads.
/// Each task owns its output slot, so the result is thread-count invariant.
inline void run_tasks(std::vector<std::function<void()>>& tasks, unsigned threads) {
    if (threads <= 1) {
        for (auto& t : tasks) t();
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            tasks[i]();
        }
    };
    std::vector<std::thread> pool;
    const unsigned use = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
    pool.reserve(use);
    for (unsigned i = 0; i < use; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace detail

/// Exact q-series identity checks (rational arithmetic throughout).
inline std::vector<CheckResult> identity_suite(long no_order = 10, long han_order = 8) {
    std::vector<CheckResult> out;

    {
        auto rep = nekrasov_okounkov_check(no_order);
        out.push_back({"nekrasov-okounkov identity exact to q^" + std::to_string(no_order), rep.ok,
                       rep.ok ? "full z-degree, exact rational match" : rep.detail});
    }
    for (long t : {2L, 3L}) {
        auto rep = han_identity_check(han_order, t);
        out.push_back({"han y,z identity exact to q^" + std::to_string(han_order) +
                           " (t = " + std::to_string(t) + ")",
                       rep.ok, rep.ok ? "exact rational match in (y, z)" : rep.detail});
    }
    {
        // z = 0, y = T specialization must reproduce the divisible-hook counts
        bool ok = true;
        std::string detail = "q^0..q^8 match tmult counts";
        for (long n = 0; n <= 8 && ok; ++n) {
            RatPoly2 coeff;
            for_each_partition(n, [&](const Partition& lambda) {
                coeff += RatPoly2::monomial(1, static_cast<int>(count_hooks_multiple(lambda, 2)), 0);
            });
            auto ys = coeff.z_zero_coeffs();
            auto dist = tmult_distribution(n, 2);
            for (long m = 0; m <= std::max<long>(dist.max_m(), static_cast<long>(ys.size()) - 1);
                 ++m) {
                BigRat lhs = m < static_cast<long>(ys.size()) ? ys[static_cast<std::size_t>(m)]
                                                              : BigRat(0);
                if (lhs != BigRat(dist.count(m))) {
                    ok = false;
                    detail = "mismatch at n=" + std::to_string(n) + ", m=" + std::to_string(m);
                    break;
                }
            }
        }
        out.push_back({"y-marker specialization matches divisible-hook counts (t = 2)", ok, detail});
    }
    {
        // below q^t no hook length is divisible by t, so both sides reduce
        // to the plain partition series
        bool ok = true;
        for (long n = 0; n <= 4 && ok; ++n)
            for_each_partition(n, [&](const Partition& lambda) {
                if (count_hooks_multiple(lambda, 5) != 0) ok = false;
            });
        auto rep = han_identity_check(4, 5);
        ok = ok && rep.ok;
        out.push_back({"empty-product normalization below q^t (t = 5)", ok,
                       ok ? "orders q^0..q^4 are the partition series" : rep.detail});
    }
    return out;
}

/// Saddle-point and Euler-Maclaurin scaling checks.
inline std::vector<CheckResult> asymptotics_suite() {
    std::vector<CheckResult> out;

    {
        // |alpha_solved - expansion| * n^{3/2} stays within a factor 3 of its
        // n = 100 value as n grows to 10^4
        bool ok = true;
        std::string detail;
        double worst = 1.0;
        for (long t : {1L, 2L, 5L})
            for (double T : {0.5, 1.0, 2.0}) {
                double base = 0.0;
                for (long n : {100L, 1000L, 10000L}) {
                    auto s = solve_thook_saddle(n, t, T);
                    const double e =
                        std::fabs(s.alpha - s.expansion) * std::pow(static_cast<double>(n), 1.5);
                    if (n == 100) {
                        base = e;
                        continue;
                    }
                    const double r = e / base;
                    worst = std::max({worst, r, 1.0 / r});
                    if (r > 3.0 || r < 1.0 / 3.0) {
                        ok = false;
                        detail = "t=" + std::to_string(t) + " T=" + detail::fmt(T) +
                                 " n=" + std::to_string(n) + ": ratio " + detail::fmt(r);
                    }
                }
            }
        if (ok) detail = "max ratio " + detail::fmt(worst) + " (allowed 3)";
        out.push_back({"saddle expansion error scales like n^{-3/2}", ok, detail});
    }
    {
        // solved saddle decreases in n
        bool ok = true;
        double prev = 1e9;
        for (long n : {100L, 400L, 1600L, 6400L}) {
            const double a = solve_thook_saddle(n, 2, 2.0).alpha;
            if (a >= prev) ok = false;
            prev = a;
        }
        out.push_back({"solved saddle decreasing in n", ok, ""});
    }
    {
        // Euler-Maclaurin tails: halving alpha halves the defect for the
        // alpha-order estimates; the remaining one stays bounded.  A defect
        // already at the rounding floor counts as converged (its leading
        // alpha-coefficient can vanish, e.g. the second-derivative sum at
        // T = 2).
        bool ok = true;
        std::string detail;
        const double alphas[3] = {0.1, 0.05, 0.025};
        for (long t : {1L, 2L})
            for (double T : {0.5, 2.0}) {
                double err[3][4], mains[3][4];
                for (int i = 0; i < 3; ++i) {
                    auto e = em_sums(alphas[i], t, T);
                    err[i][0] = e.sum_log_euler - e.main_log_euler;
                    err[i][1] = e.sum_weighted - e.main_weighted;
                    err[i][2] = e.sum_log_factor - e.main_log_factor;
                    err[i][3] = e.sum_second_deriv - e.main_second_deriv;
                    mains[i][0] = e.main_log_euler;
                    mains[i][1] = e.main_weighted;
                    mains[i][2] = e.main_log_factor;
                    mains[i][3] = e.main_second_deriv;
                }
                for (int which : {0, 2, 3}) {
                    for (int i = 0; i + 1 < 3; ++i) {
                        const double floor = 1e-9 * (1.0 + std::fabs(mains[i + 1][which]));
                        if (std::fabs(err[i][which]) < floor && std::fabs(err[i + 1][which]) < floor)
                            continue;  // defect already at the rounding floor
                        const double r = err[i][which] / err[i + 1][which];
                        if (!(r >= 1.4 && r <= 2.6)) {
                            ok = false;
                            detail = "estimate " + std::to_string(which) + " t=" + std::to_string(t) +
                                     " T=" + detail::fmt(T) + ": halving ratio " + detail::fmt(r);
                        }
                    }
                }
                for (int i = 1; i < 3; ++i)
                    if (std::fabs(err[i][1]) > 1.5 * std::fabs(err[0][1]) + 0.01) {
                        ok = false;
                        detail = "weighted sum defect grows: t=" + std::to_string(t) +
                                 " T=" + detail::fmt(T);
                    }
            }
        if (ok) detail = "defect halves for the alpha-order estimates, stays bounded otherwise";
        out.push_back({"euler-maclaurin defect scaling", ok, detail});
    }
    {
        // main-term ratio against the exact generating-function value,
        // equal flavor
        bool ok = true;
        std::string detail;
        double worst = 0.0;
        for (long t : {1L, 2L})
            for (double T : {0.5, 1.0, 2.0}) {
                double prev = 1e9;
                for (long n : {400L, 1600L, 6400L}) {
                    const auto exact = evaluate_hook_gf<ScaledFloat>(n, t, Flavor::equal,
                                                                     ScaledFloat(T));
                    const auto mt = thook_gf_main_term(n, t, T);
                    const double gap = std::fabs(std::exp(exact.log_abs() - mt.log_abs) - 1.0);
                    if (gap >= prev) {
                        ok = false;
                        detail = "not improving at t=" + std::to_string(t) + " T=" + detail::fmt(T) +
                                 " n=" + std::to_string(n);
                    }
                    prev = gap;
                    if (n == 6400) {
                        worst = std::max(worst, gap);
                        if (gap >= 0.5) {
                            ok = false;
                            detail = "gap " + detail::fmt(gap) + " at n=6400, t=" +
                                     std::to_string(t) + ", T=" + detail::fmt(T);
                        }
                    }
                }
            }
        if (ok) detail = "worst |exact/main - 1| at n=6400: " + detail::fmt(worst);
        out.push_back({"t-hook main term converges to the exact value", ok, detail});
    }
    {
        // same for the divisible-hook generating function along
        // T_n = e^{alphaT/sqrt(n)}
        bool ok = true;
        std::string detail;
        double worst = 0.0;
        for (long t : {1L, 2L})
            for (double alphaT : {0.0, 1.0}) {
                double prev = 1e9;
                for (long n : {400L, 1600L, 6400L}) {
                    const double tn = std::exp(alphaT / std::sqrt(static_cast<double>(n)));
                    const auto exact = evaluate_hook_gf<ScaledFloat>(n, t, Flavor::multiple,
                                                                     ScaledFloat(tn));
                    const auto mt = tmult_gf_main_term(n, t, alphaT, 0.0);
                    const double gap = std::fabs(std::exp(exact.log_abs() - mt.log_abs) - 1.0);
                    if (gap >= prev) {
                        ok = false;
                        detail = "not improving at t=" + std::to_string(t) +
                                 " alphaT=" + detail::fmt(alphaT) + " n=" + std::to_string(n);
                    }
                    prev = gap;
                    if (n == 6400) {
                        worst = std::max(worst, gap);
                        if (gap >= 0.5) {
                            ok = false;
                            detail = "gap " + detail::fmt(gap) + " at n=6400";
                        }
                    }
                }
            }
        if (ok) detail = "worst |exact/main - 1| at n=6400: " + detail::fmt(worst);
        out.push_back({"divisible-hook main term converges to the exact value", ok, detail});
    }
    return out;
}

/// Distributional convergence checks: KS distances, moment generating
/// functions, and exact moments against the limiting laws.
inline std::vector<CheckResult> convergence_suite(unsigned threads = 1) {
    std::vector<CheckResult> out;

    const std::vector<long> ladder = {500, 1000, 2000, 4000};
    std::vector<HookDistribution> y2(ladder.size());
    HookDistribution y1_4000, y3_4000, yhat11;
    {
        std::vector<std::function<void()>> tasks;
        for (std::size_t i = 0; i < ladder.size(); ++i)
            tasks.push_back([&, i] { y2[i] = thook_distribution(ladder[i], 2); });
        tasks.push_back([&] { y1_4000 = thook_distribution(4000, 1); });
        tasks.push_back([&] { y3_4000 = thook_distribution(4000, 3); });
        tasks.push_back([&] { yhat11 = tmult_distribution(1000, 11); });
        detail::run_tasks(tasks, threads);
    }

    const auto normal01 = LimitModel::normal_model(0.0, 1.0);
    {
        bool ok = true;
        std::string detail_s = "KS:";
        double prev = 1e9;
        for (std::size_t i = 0; i < ladder.size(); ++i) {
            const auto params = thook_limit_params(ladder[i], 2);
            const double ks = ks_distance(standardize(y2[i], params), normal01);
            detail_s += " " + detail::fmt(ks);
            if (ks >= prev) ok = false;
            prev = ks;
            if (i + 1 == ladder.size() && ks >= 0.05) ok = false;
        }
        out.push_back({"2-hook law approaches the normal limit (KS ladder)", ok, detail_s});
    }
    {
        bool ok = true;
        std::string detail_s;
        const auto params = thook_limit_params(4000, 2);
        for (double r : {-1.0, 0.5, 1.0}) {
            const double target = std::exp(r * r / 2.0);
            const double first = mgf(y2[0], thook_limit_params(500, 2).mean,
                                     thook_limit_params(500, 2).sigma(), r);
            const double last = mgf(y2[3], params.mean, params.sigma(), r);
            const double gap = std::fabs(last - target);
            detail_s += "r=" + detail::fmt(r) + ": gap " + detail::fmt(gap) + "  ";
            if (gap >= 0.1) ok = false;
            if (gap > std::fabs(first - target) + 1e-12) ok = false;
        }
        out.push_back({"standardized MGF approaches e^{r^2/2}", ok, detail_s});
    }
    {
        bool ok = true;
        std::string detail_s = "mean ratios:";
        for (const auto* d : {&y1_4000, &y2[3], &y3_4000}) {
            const auto params = thook_limit_params(4000, d->t);
            const auto mo = exact_moments(*d);
            const double mean_gap = std::fabs(to_double(mo.mean) / params.mean - 1.0);
            const double var_ratio = to_double(mo.variance) / params.variance;
            detail_s += " t=" + std::to_string(d->t) + ":" + detail::fmt(mean_gap);
            if (mean_gap >= 0.05 || var_ratio < 0.8 || var_ratio > 1.2) ok = false;
        }
        out.push_back({"exact t-hook moments near the normal-limit formulas (n = 4000)", ok,
                       detail_s});
    }
    {
        const auto params = tmult_limit_params(1000, 11);
        const auto model = LimitModel::tmult_limit_standardized(11);
        const double ks = ks_distance(standardize(yhat11, params), model);
        out.push_back({"divisible-hook law near the shifted-Gamma limit (KS)", ks < 0.08,
                       "KS = " + detail::fmt(ks) + " (allowed 0.08)"});

        const auto mo = exact_moments(yhat11);
        const double mean_gap = std::fabs(to_double(mo.mean) / params.mean - 1.0);
        const double mode_gap =
            std::fabs(static_cast<double>(mo.mode) / params.mode - 1.0);
        const double var_gap = std::fabs(to_double(mo.variance) / params.variance - 1.0);
        out.push_back({"divisible-hook moments near the Gamma-limit formulas (n = 1000, t = 11)",
                       mean_gap < 0.10 && mode_gap < 0.10 && var_gap < 0.15,
                       "mean " + detail::fmt(mean_gap) + ", mode " + detail::fmt(mode_gap) +
                           ", variance " + detail::fmt(var_gap)});

        // limiting MGF of the comparison variable a X + b at r = 1/2
        const double r = 0.5;
        const double target = std::exp(params.b * r) /
                              std::pow(1.0 + params.scale * r, params.shape);
        const double got = mgf(yhat11, params.mean, params.sigma(), r);
        out.push_back({"divisible-hook MGF near the shifted-Gamma form (r = 1/2)",
                       std::fabs(got / target - 1.0) < 0.15,
                       "mgf " + detail::fmt(got) + " vs limit " + detail::fmt(target)});
    }
    return out;
}

}  // namespace hookdist
