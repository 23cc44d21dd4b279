#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

#include "hookdist/distribution.hpp"
#include "hookdist/numeric.hpp"
#include "hookdist/polynomial.hpp"
#include "hookdist/statistics.hpp"

namespace hookdist {

inline std::string count_to_string(const BigInt& v) {
    return v.str();
}

inline std::string count_to_string(const ScaledFloat& v) {
    if (v.is_zero()) return "0";
    char buf[64];
    const double d = v.to_double();
    if (std::isfinite(d)) {
        std::snprintf(buf, sizeof buf, "%.17g", d);
        return buf;
    }
    // out of double range: emit mantissa/decimal-exponent form from the log
    const double lg10 = v.log_abs() / 2.30258509299404568401799145468436;
    const double e10 = std::floor(lg10);
    const double mant = (v.sign() < 0 ? -1.0 : 1.0) * std::pow(10.0, lg10 - e10);
    std::snprintf(buf, sizeof buf, "%.17ge%+.0f", mant, e10);
    return buf;
}

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Export record schema shared by the CLI and downstream consumers:
//   {"n": .., "t": .., "flavor": "equal"|"multiple", "total": "<decimal>",
//    "counts": [[m, "<decimal>"], ...]}   (zero counts omitted, m ascending)
// Counts are strings because they exceed native integer widths.
template <class R>
nlohmann::ordered_json export_record(long n, long t, Flavor flavor,
                                     const std::vector<R>& counts, const BigInt& total) {
    nlohmann::ordered_json rec;
    rec["n"] = n;
    rec["t"] = t;
    rec["flavor"] = to_string(flavor);
    rec["total"] = total.str();
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t m = 0; m < counts.size(); ++m) {
        if (is_zero_value(counts[m])) continue;
        arr.push_back({m, count_to_string(counts[m])});
    }
    rec["counts"] = std::move(arr);
    return rec;
}

inline nlohmann::ordered_json export_record(const HookDistribution& d) {
    return export_record(d.n, d.t, d.flavor, d.counts, d.total);
}

namespace detail {

inline double probability_of(const BigInt& c, const BigInt& total) {
    return ratio_as_double(c, total);
}
inline double probability_of(const ScaledFloat& c, const BigInt& total) {
    return (c / ScaledFloat::from_bigint(total)).to_double();
}

}  // namespace detail

/// Histogram CSV with one row per m (zeros included), ready for plotting.
template <class R>
void write_distribution_csv(std::ostream& os, long /*n*/, long /*t*/, Flavor /*flavor*/,
                            const std::vector<R>& counts, const BigInt& total) {
    os << "m,count,probability\n";
    for (std::size_t m = 0; m < counts.size(); ++m)
        os << m << ',' << count_to_string(counts[m]) << ','
           << format_double(detail::probability_of(counts[m], total)) << '\n';
}

inline void write_distribution_csv(std::ostream& os, const HookDistribution& d) {
    write_distribution_csv(os, d.n, d.t, d.flavor, d.counts, d.total);
}

inline void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows) {
    os << "x,k,cumulative,limit,ratio\n";
    for (const auto& r : rows)
        os << format_double(r.x) << ',' << r.k << ',' << format_double(r.cumulative) << ','
           << format_double(r.limit) << ',' << format_double(r.ratio) << '\n';
}

}  // namespace hookdist
