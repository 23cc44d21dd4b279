// hookdist command-line interface
//
//   dist    exact / floating distribution of a hook statistic, JSON or CSV
//   table   cumulative-distribution comparison against the limiting law
//   verify  identity / asymptotics / convergence check suites
//   asym    saddle-point main terms and solved saddles
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
// 3 resource-guard refusal.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hookdist/hookdist.hpp"

namespace {

using namespace hookdist;

unsigned env_threads() {
    const char* v = std::getenv("HOOKDIST_THREADS");
    if (!v) return 1;
    const long n = std::atol(v);
    return n > 0 ? static_cast<unsigned>(n) : 1;
}

std::ostream& open_sink(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    return file;
}

struct DistOptions {
    long n = 0;
    long t = 1;
    std::string flavor = "equal";
    std::string ring = "exact";
    std::string format = "json";
    std::string out;
    double max_cost = 2e8;
};

int run_dist(const DistOptions& opt) {
    const Flavor flavor = flavor_from_string(opt.flavor);
    if (opt.ring == "exact") {
        const double cost = static_cast<double>(opt.n) * (static_cast<double>(opt.n) / opt.t);
        if (cost > opt.max_cost) {
            std::cerr << "dist: exact-ring work estimate n*(n/t) = " << cost
                      << " exceeds the ceiling " << opt.max_cost
                      << "; use --ring float or raise --max-cost\n";
            return 3;
        }
        const auto d = hook_distribution(opt.n, opt.t, flavor);
        std::ofstream file;
        auto& os = open_sink(file, opt.out);
        if (opt.format == "json")
            os << export_record(d).dump(2) << '\n';
        else
            write_distribution_csv(os, d);
    } else if (opt.ring == "float") {
        const auto poly = hook_marker_polynomial<ScaledFloat>(opt.n, opt.t, flavor);
        const auto total = partition_numbers(opt.n).back();
        std::ofstream file;
        auto& os = open_sink(file, opt.out);
        if (opt.format == "json")
            os << export_record(opt.n, opt.t, flavor, poly.coeffs(), total).dump(2) << '\n';
        else
            write_distribution_csv(os, opt.n, opt.t, flavor, poly.coeffs(), total);
    } else {
        throw std::invalid_argument("unknown ring: " + opt.ring);
    }
    return 0;
}

struct TableOptions {
    int preset = 0;  // 1 or 2; 0 = custom
    long n = 0;
    long t = 0;
    std::string flavor;
    std::vector<double> xs;
    std::string out;
};

int run_table(const TableOptions& opt) {
    long n = opt.n, t = opt.t;
    Flavor flavor = Flavor::equal;
    std::vector<double> xs = opt.xs;
    if (opt.preset == 1) {
        n = 5000;
        t = 2;
        flavor = Flavor::equal;
        if (xs.empty()) xs = {-1.5, 0.0, 1.0, 2.0};
    } else if (opt.preset == 2) {
        n = 1000;
        t = 11;
        flavor = Flavor::multiple;
        if (xs.empty()) xs = {-1.00, 0.75, 1.00, 1.25};
    } else {
        if (n <= 0 || t <= 0 || opt.flavor.empty())
            throw std::invalid_argument("custom table needs --n, --t and --flavor");
        flavor = flavor_from_string(opt.flavor);
    }
    if (flavor == Flavor::multiple && t < 4)
        throw std::invalid_argument("table: the divisible-hook limit law needs t >= 4");

    const auto dist = hook_distribution(n, t, flavor);
    const auto rows = table_rows(dist, xs);
    std::printf("# n = %ld, t = %ld, flavor = %s\n", n, t, to_string(flavor));
    std::printf("%8s %8s %14s %14s %12s\n", "x", "k", "cumulative", "limit", "ratio");
    for (const auto& r : rows)
        std::printf("%8.2f %8ld %14.6f %14.6f %12.6f\n", r.x, r.k, r.cumulative, r.limit, r.ratio);
    if (!opt.out.empty()) {
        std::ofstream file;
        auto& os = open_sink(file, opt.out);
        write_table_csv(os, rows);
    }
    return 0;
}

int run_verify(const std::string& suite, long order) {
    std::vector<CheckResult> results;
    if (suite == "identities")
        results = identity_suite(order, std::min<long>(order, 8));
    else if (suite == "asymptotics")
        results = asymptotics_suite();
    else if (suite == "convergence")
        results = convergence_suite(env_threads());
    else
        throw std::invalid_argument("unknown suite: " + suite);
    for (const auto& r : results)
        std::printf("[%s] %s%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.empty() ? "" : " — ", r.detail.c_str());
    return all_pass(results) ? 0 : 1;
}

struct AsymOptions {
    int prop = 1;
    long n = 1000;
    long t = 1;
    double T = 1.0;
    double alphaT = 0.0;
    double epsT = 0.0;
    bool check = false;
    double tol = 1e-9;
};

int run_asym(const AsymOptions& opt) {
    if (opt.prop == 1) {
        const auto mt = thook_gf_main_term(opt.n, opt.t, opt.T);
        const auto sol = solve_thook_saddle(opt.n, opt.t, opt.T, opt.tol);
        std::printf("main term: log = %.12g  (value %.6g)\n", mt.log_abs, mt.to_double());
        std::printf("saddle:    alpha = %.15g  residual = %.3g\n", sol.alpha, sol.residual);
        std::printf("expansion: c(T)/sqrt(n) - 1/(4n) = %.15g  (gap %.3g)\n", sol.expansion,
                    sol.alpha - sol.expansion);
        if (opt.check) {
            const auto exact = evaluate_hook_gf<ScaledFloat>(opt.n, opt.t, Flavor::equal,
                                                             ScaledFloat(opt.T));
            std::printf("exact:     log = %.12g   exact/main = %.6f\n", exact.log_abs(),
                        std::exp(exact.log_abs() - mt.log_abs));
        }
    } else if (opt.prop == 2) {
        const auto mt = tmult_gf_main_term(opt.n, opt.t, opt.alphaT, opt.epsT);
        const auto sol = solve_tmult_saddle(opt.n, opt.t, opt.alphaT, opt.tol);
        std::printf("main term: log = %.12g  (value %.6g)\n", mt.log_abs, mt.to_double());
        std::printf("saddle:    beta = %.15g  residual = %.3g\n", sol.alpha, sol.residual);
        std::printf("expansion: (pi/sqrt6 + alphaT/t)/sqrt(n) = %.15g  (gap %.3g)\n",
                    sol.expansion, sol.alpha - sol.expansion);
        if (opt.check) {
            const double tn =
                std::exp((opt.alphaT + opt.epsT) / std::sqrt(static_cast<double>(opt.n)));
            const auto exact = evaluate_hook_gf<ScaledFloat>(opt.n, opt.t, Flavor::multiple,
                                                             ScaledFloat(tn));
            std::printf("exact:     log = %.12g   exact/main = %.6f\n", exact.log_abs(),
                        std::exp(exact.log_abs() - mt.log_abs));
        }
    } else {
        throw std::invalid_argument("asym: --prop must be 1 or 2");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hook-length statistics over integer partitions"};
    app.require_subcommand(1);

    DistOptions dist_opt;
    auto* dist = app.add_subcommand("dist", "compute a hook-statistic distribution");
    dist->add_option("--n", dist_opt.n, "partition weight")->required()->check(CLI::NonNegativeNumber);
    dist->add_option("--t", dist_opt.t, "hook modulus")->required()->check(CLI::PositiveNumber);
    dist->add_option("--flavor", dist_opt.flavor, "equal | multiple")
        ->check(CLI::IsMember({"equal", "multiple"}));
    dist->add_option("--ring", dist_opt.ring, "exact | float")
        ->check(CLI::IsMember({"exact", "float"}));
    dist->add_option("--format", dist_opt.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    dist->add_option("--out", dist_opt.out, "output path (stdout when omitted)");
    dist->add_option("--max-cost", dist_opt.max_cost, "exact-ring work ceiling, n*(n/t)");

    TableOptions table_opt;
    auto* table = app.add_subcommand("table", "cumulative distribution vs limiting law");
    table->add_option("--table", table_opt.preset, "built-in preset: 1 (n=5000 2-hooks) or 2 (n=1000 11-multiples)")
        ->check(CLI::Range(1, 2));
    table->add_option("--n", table_opt.n, "partition weight (custom)");
    table->add_option("--t", table_opt.t, "hook modulus (custom)");
    table->add_option("--flavor", table_opt.flavor, "equal | multiple (custom)")
        ->check(CLI::IsMember({"equal", "multiple"}));
    table->add_option("--x", table_opt.xs, "standardized abscissas")->delimiter(',');
    table->add_option("--out", table_opt.out, "CSV output path");

    std::string suite;
    long order = 10;
    auto* verify = app.add_subcommand("verify", "run a check suite");
    verify->add_option("--suite", suite, "identities | asymptotics | convergence")
        ->required()
        ->check(CLI::IsMember({"identities", "asymptotics", "convergence"}));
    verify->add_option("--order", order, "series truncation order for the identity suite")
        ->check(CLI::Range(0L, 14L));

    AsymOptions asym_opt;
    auto* asym = app.add_subcommand("asym", "saddle-point main terms");
    asym->add_option("--prop", asym_opt.prop, "1: equal flavor, 2: multiple flavor")->required();
    asym->add_option("--n", asym_opt.n, "partition weight")->required();
    asym->add_option("--t", asym_opt.t, "hook modulus")->required();
    asym->add_option("--T", asym_opt.T, "marker value (prop 1)");
    asym->add_option("--alphaT", asym_opt.alphaT, "marker exponent coefficient (prop 2)");
    asym->add_option("--epsT", asym_opt.epsT, "marker exponent correction (prop 2)");
    asym->add_flag("--check", asym_opt.check, "also compute the exact/main-term ratio");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        if (dist->parsed()) return run_dist(dist_opt);
        if (table->parsed()) return run_table(table_opt);
        if (verify->parsed()) return run_verify(suite, order);
        if (asym->parsed()) return run_asym(asym_opt);
    } catch (const resource_guard_error& e) {
        std::cerr << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
