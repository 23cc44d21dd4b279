#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hookdist/numeric.hpp"
#include "hookdist/partition.hpp"
#include "hookdist/polynomial.hpp"
#include "hookdist/qseries.hpp"
#include "hookdist/series.hpp"

namespace hookdist {

// Sparse bivariate polynomial in (y, z) over exact rationals.  Degrees stay
// tiny here (bounded by the series truncation order), so a map keeps the
// arithmetic simple and exact.
class RatPoly2 {
public:
    using Key = std::pair<int, int>;  // (y-degree, z-degree)

    RatPoly2() = default;
    RatPoly2(long v) {
        if (v != 0) c_[{0, 0}] = v;
    }
    static RatPoly2 constant(BigRat v) {
        RatPoly2 p;
        if (v != 0) p.c_[{0, 0}] = std::move(v);
        return p;
    }
    static RatPoly2 monomial(BigRat v, int ydeg, int zdeg) {
        RatPoly2 p;
        if (v != 0) p.c_[{ydeg, zdeg}] = std::move(v);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<Key, BigRat>& terms() const { return c_; }

    RatPoly2& operator+=(const RatPoly2& o) {
        for (const auto& [k, v] : o.c_) add_term(k, v);
        return *this;
    }
    RatPoly2& operator-=(const RatPoly2& o) {
        for (const auto& [k, v] : o.c_) add_term(k, -v);
        return *this;
    }
    RatPoly2& operator*=(const BigRat& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& [k, v] : c_) v *= s;
        return *this;
    }
    friend RatPoly2 operator*(const RatPoly2& a, const RatPoly2& b) {
        RatPoly2 r;
        for (const auto& [ka, va] : a.c_)
            for (const auto& [kb, vb] : b.c_)
                r.add_term({ka.first + kb.first, ka.second + kb.second}, va * vb);
        return r;
    }
    friend RatPoly2 operator+(RatPoly2 a, const RatPoly2& b) { return a += b; }
    friend RatPoly2 operator-(RatPoly2 a, const RatPoly2& b) { return a -= b; }
    friend bool operator==(const RatPoly2& a, const RatPoly2& b) { return a.c_ == b.c_; }

    BigRat evaluate(const BigRat& y, const BigRat& z) const {
        BigRat acc = 0;
        for (const auto& [k, v] : c_) {
            BigRat term = v;
            for (int i = 0; i < k.first; ++i) term *= y;
            for (int i = 0; i < k.second; ++i) term *= z;
            acc += term;
        }
        return acc;
    }

    /// Coefficients of y^i among the z-free terms (specialization z = 0).
    std::vector<BigRat> z_zero_coeffs() const {
        std::vector<BigRat> out;
        for (const auto& [k, v] : c_) {
            if (k.second != 0) continue;
            if (out.size() <= static_cast<std::size_t>(k.first))
                out.resize(static_cast<std::size_t>(k.first) + 1);
            out[static_cast<std::size_t>(k.first)] = v;
        }
        return out;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, v] : c_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << v << ")";
            if (k.first) os << " y^" << k.first;
            if (k.second) os << " z^" << k.second;
        }
        return os.str();
    }

private:
    void add_term(const Key& k, const BigRat& v) {
        auto it = c_.find(k);
        if (it == c_.end()) {
            if (v != 0) c_.emplace(k, v);
            return;
        }
        it->second += v;
        if (it->second == 0) c_.erase(it);
    }

    std::map<Key, BigRat> c_;
};

struct IdentityReport {
    std::string name;
    long order = 0;
    bool ok = false;
    long first_mismatch = -1;          // q-power of the first discrepancy, -1 if none
    std::vector<bool> order_ok;        // one flag per q-power 0..order
    std::string detail;                // mismatch description, empty when ok
};

namespace detail {

/// Hook-product side of the identities: per q-power n, the sum over
/// partitions of n of a per-partition (y, z)-polynomial supplied by make.
template <class Make>
TruncatedSeries<RatPoly2> partition_sum_series(long order, Make&& make) {
    TruncatedSeries<RatPoly2> s(order);
    for (long n = 0; n <= order; ++n)
        for_each_partition(n, [&](const Partition& lambda) { s[static_cast<std::size_t>(n)] += make(lambda); });
    return s;
}

inline IdentityReport compare_series(std::string name, const TruncatedSeries<RatPoly2>& lhs,
                                     const TruncatedSeries<RatPoly2>& rhs) {
    IdentityReport rep;
    rep.name = std::move(name);
    rep.order = lhs.order();
    rep.ok = true;
    rep.order_ok.resize(static_cast<std::size_t>(lhs.order()) + 1, true);
    for (long k = 0; k <= lhs.order(); ++k) {
        if (lhs[static_cast<std::size_t>(k)] == rhs[static_cast<std::size_t>(k)]) continue;
        rep.order_ok[static_cast<std::size_t>(k)] = false;
        if (rep.ok) {
            rep.ok = false;
            rep.first_mismatch = k;
            std::ostringstream os;
            os << "q^" << k << ": partition side " << lhs[static_cast<std::size_t>(k)].str()
               << " vs product side " << rhs[static_cast<std::size_t>(k)].str();
            rep.detail = os.str();
        }
    }
    return rep;
}

}  // namespace detail

/// Checks the Nekrasov-Okounkov identity
///   sum_lambda q^|lambda| prod_h (1 - z/h^2) = prod_n (1 - q^n)^(z-1)
/// to the given order, with exact rational z-polynomial coefficients on
/// both sides.  The right side is expanded as exp((z-1) sum log(1 - q^n)).
inline IdentityReport nekrasov_okounkov_check(long order) {
    if (order < 0 || order > 14)
        throw std::invalid_argument("nekrasov_okounkov_check: order must lie in [0, 14]");

    auto lhs = detail::partition_sum_series(order, [&](const Partition& lambda) {
        RatPoly2 prod(1);
        for_each_hook(lambda, [&](long h) {
            RatPoly2 factor(1);
            factor += RatPoly2::monomial(BigRat(-1, BigInt(h) * h), 0, 1);
            prod = prod * factor;
        });
        return prod;
    });

    // log of the Euler product: sum_n log(1 - q^n) = -sum_m (sum_{d|m} 1/d) q^m
    TruncatedSeries<RatPoly2> lg(order);
    for (long n = 1; n <= order; ++n)
        for (long k = 1; n * k <= order; ++k)
            lg[static_cast<std::size_t>(n * k)] += RatPoly2::constant(BigRat(-1, k));
    TruncatedSeries<RatPoly2> exponent(order);
    const RatPoly2 z_minus_1 = RatPoly2::monomial(1, 0, 1) - RatPoly2(1);
    for (long k = 1; k <= order; ++k)
        exponent[static_cast<std::size_t>(k)] = z_minus_1 * lg[static_cast<std::size_t>(k)];
    auto rhs = series_exp(exponent);

    return detail::compare_series("nekrasov-okounkov", lhs, rhs);
}

/// Checks the divisible-hook identity (Han):
///   sum_lambda q^|lambda| prod_{h in H_t} (y - t y z / h^2)
///     = prod_n (1 - q^{tn})^t / ((1 - (y q^t)^n)^{t-z} (1 - q^n))
/// to the given order, exact in (y, z).  The non-integer exponent is
/// expanded as exp((z - t) sum log(1 - y^n q^{tn})).
inline IdentityReport han_identity_check(long order, long t) {
    if (order < 0 || order > 12)
        throw std::invalid_argument("han_identity_check: order must lie in [0, 12]");
    if (t < 1) throw std::invalid_argument("han_identity_check: t must be >= 1");

    auto lhs = detail::partition_sum_series(order, [&](const Partition& lambda) {
        RatPoly2 prod(1);
        int hooks_in_tn = 0;
        for_each_hook(lambda, [&](long h) {
            if (h % t != 0) return;
            ++hooks_in_tn;
            RatPoly2 factor(1);
            factor += RatPoly2::monomial(BigRat(-t, BigInt(h) * h), 0, 1);
            prod = prod * factor;
        });
        return prod * RatPoly2::monomial(1, hooks_in_tn, 0);
    });

    // prod_n (1 - q^{tn})^t, plain integer coefficients
    auto euler_t = TruncatedSeries<RatPoly2>::one(order);
    for (long n = 1; t * n <= order; ++n) {
        TruncatedSeries<RatPoly2> factor = TruncatedSeries<RatPoly2>::one(order);
        for (long i = 1; t * n * i <= order; ++i) {
            const BigInt sign = (i & 1) ? -1 : 1;
            factor[static_cast<std::size_t>(t * n * i)] =
                RatPoly2::constant(BigRat(sign * binomial(t, i)));
            if (i == t) break;
        }
        euler_t = euler_t * factor;
    }

    // exp((z - t) sum_n log(1 - y^n q^{tn}))
    TruncatedSeries<RatPoly2> lg(order);
    for (long n = 1; t * n <= order; ++n)
        for (long k = 1; t * n * k <= order; ++k)
            lg[static_cast<std::size_t>(t * n * k)] +=
                RatPoly2::monomial(BigRat(-1, k), static_cast<int>(n * k), 0);
    const RatPoly2 z_minus_t = RatPoly2::monomial(1, 0, 1) - RatPoly2(t);
    TruncatedSeries<RatPoly2> exponent(order);
    for (long k = 1; k <= order; ++k)
        exponent[static_cast<std::size_t>(k)] = z_minus_t * lg[static_cast<std::size_t>(k)];
    auto geom = series_exp(exponent);

    // partition series prod (1 - q^n)^{-1}
    auto pnum = partition_numbers(order);
    TruncatedSeries<RatPoly2> parts(order);
    for (long k = 0; k <= order; ++k)
        parts[static_cast<std::size_t>(k)] = RatPoly2::constant(BigRat(pnum[static_cast<std::size_t>(k)]));

    auto rhs = euler_t * geom * parts;
    return detail::compare_series("han-y-z (t = " + std::to_string(t) + ")", lhs, rhs);
}

}  // namespace hookdist
