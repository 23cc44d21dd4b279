#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hookdist/distribution.hpp"
#include "hookdist/numeric.hpp"
#include "hookdist/polynomial.hpp"

namespace hookdist {

/// p(0..N) by Euler's pentagonal-number recurrence.
inline std::vector<BigInt> partition_numbers(long N) {
    if (N < 0) throw std::invalid_argument("partition_numbers: negative order");
    std::vector<BigInt> p(static_cast<std::size_t>(N) + 1);
    p[0] = 1;
    for (long m = 1; m <= N; ++m) {
        BigInt acc = 0;
        for (long k = 1;; ++k) {
            const long g1 = k * (3 * k - 1) / 2;
            const long g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            BigInt term = p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) term += p[static_cast<std::size_t>(m - g2)];
            if (k & 1)
                acc += term;
            else
                acc -= term;
        }
        p[static_cast<std::size_t>(m)] = acc;
    }
    return p;
}

namespace detail {

// Factor product for the equal flavor, in the shifted variable U = T - 1:
//   A(U, Q) = prod_{j=1..nq} (1 + U Q^j)^t   truncated at Q^nq,
// where Q stands for q^t.  The shifted variable keeps the coefficient
// polynomials at degree O(sqrt(t M)) instead of O(M).
//
// Factors are applied one j at a time; within a factor, coefficients are
// updated in a fixed descending order, so results are deterministic.
template <class R>
std::vector<Polynomial<R>> thook_factor_product(long nq, long t) {
    std::vector<R> binom(static_cast<std::size_t>(t) + 1);
    for (long i = 0; i <= t; ++i) binom[static_cast<std::size_t>(i)] = ring_cast<R>(binomial(t, i));
    std::vector<Polynomial<R>> s(static_cast<std::size_t>(nq) + 1);
    s[0] = Polynomial<R>::constant(R(1));
    for (long j = 1; j <= nq; ++j) {
        for (long M = nq; M >= j; --M) {
            auto& dst = s[static_cast<std::size_t>(M)];
            for (long i = 1; i <= t && j * i <= M; ++i) {
                const auto& src = s[static_cast<std::size_t>(M - j * i)];
                if (i == t)
                    dst.add_shifted(src, static_cast<std::size_t>(i));
                else
                    dst.add_scaled(src, binom[static_cast<std::size_t>(i)],
                                   static_cast<std::size_t>(i));
            }
        }
    }
    return s;
}

// Factor product for the multiple flavor, directly in the marker variable:
//   B(T, Q) = prod_{j=1..nq} (1 - Q^j)^t * (1 - (T Q)^j)^{-t}  truncated at Q^nq.
// Expansion of the negative power uses C(k+t-1, t-1) with a T^{jk} shift.
template <class R>
std::vector<Polynomial<R>> tmult_factor_product(long nq, long t) {
    std::vector<R> binom(static_cast<std::size_t>(t) + 1);
    for (long i = 0; i <= t; ++i) binom[static_cast<std::size_t>(i)] = ring_cast<R>(binomial(t, i));
    std::vector<R> negbinom(static_cast<std::size_t>(nq) + 1);
    for (long k = 0; k <= nq; ++k)
        negbinom[static_cast<std::size_t>(k)] = ring_cast<R>(binomial(k + t - 1, t - 1));
    std::vector<Polynomial<R>> s(static_cast<std::size_t>(nq) + 1);
    s[0] = Polynomial<R>::constant(R(1));
    for (long j = 1; j <= nq; ++j) {
        for (long M = nq; M >= j; --M) {
            auto& dst = s[static_cast<std::size_t>(M)];
            for (long i = 1; i <= t && j * i <= M; ++i) {
                const auto& src = s[static_cast<std::size_t>(M - j * i)];
                if (i & 1)
                    dst.sub_scaled(src, binom[static_cast<std::size_t>(i)]);
                else
                    dst.add_scaled(src, binom[static_cast<std::size_t>(i)]);
            }
        }
        for (long M = nq; M >= j; --M) {
            auto& dst = s[static_cast<std::size_t>(M)];
            for (long k = 1; j * k <= M; ++k)
                dst.add_scaled(s[static_cast<std::size_t>(M - j * k)],
                               negbinom[static_cast<std::size_t>(k)],
                               static_cast<std::size_t>(j * k));
        }
    }
    return s;
}

}  // namespace detail

/// Marker polynomial of the t-hook count statistic: coefficient m is the
/// number of partitions of n with exactly m hooks of length t (over the
/// exact ring; an approximation over floating rings).
template <class R>
Polynomial<R> thook_polynomial(long n, long t) {
    if (n < 0 || t < 1) throw std::invalid_argument("thook_polynomial: need n >= 0, t >= 1");
    const long nq = n / t;
    auto factors = detail::thook_factor_product<R>(nq, t);
    auto p = partition_numbers(n);
    Polynomial<R> acc;
    for (long m = 0; m <= nq; ++m)
        acc.add_scaled(factors[static_cast<std::size_t>(m)],
                       ring_cast<R>(p[static_cast<std::size_t>(n - t * m)]));
    return shifted_to_marker_basis(acc);
}

/// Marker polynomial of the divisible-by-t hook count statistic.
template <class R>
Polynomial<R> tmult_polynomial(long n, long t) {
    if (n < 0 || t < 1) throw std::invalid_argument("tmult_polynomial: need n >= 0, t >= 1");
    const long nq = n / t;
    auto factors = detail::tmult_factor_product<R>(nq, t);
    auto p = partition_numbers(n);
    Polynomial<R> acc;
    for (long m = 0; m <= nq; ++m)
        acc.add_scaled(factors[static_cast<std::size_t>(m)],
                       ring_cast<R>(p[static_cast<std::size_t>(n - t * m)]));
    return acc;
}

template <class R>
Polynomial<R> hook_marker_polynomial(long n, long t, Flavor flavor) {
    return flavor == Flavor::equal ? thook_polynomial<R>(n, t) : tmult_polynomial<R>(n, t);
}

namespace detail {

inline HookDistribution distribution_from_polynomial(long n, long t, Flavor flavor,
                                                     Polynomial<BigInt> poly) {
    HookDistribution d;
    d.n = n;
    d.t = t;
    d.flavor = flavor;
    d.counts = poly.coeffs();
    d.total = partition_numbers(n)[static_cast<std::size_t>(n)];
    d.validate();
    return d;
}

}  // namespace detail

/// Exact distribution of the number of hooks of length exactly t.
inline HookDistribution thook_distribution(long n, long t) {
    return detail::distribution_from_polynomial(n, t, Flavor::equal,
                                                thook_polynomial<BigInt>(n, t));
}

/// Exact distribution of the number of hook lengths divisible by t.
inline HookDistribution tmult_distribution(long n, long t) {
    return detail::distribution_from_polynomial(n, t, Flavor::multiple,
                                                tmult_polynomial<BigInt>(n, t));
}

inline HookDistribution hook_distribution(long n, long t, Flavor flavor) {
    return flavor == Flavor::equal ? thook_distribution(n, t) : tmult_distribution(n, t);
}

/// Coefficients of prod_{j=1..order} (1 - x^j)^t truncated at x^order.
/// Small alternating integers (eta-power expansion).
inline std::vector<BigInt> eta_power_coeffs(long order, long t) {
    if (order < 0 || t < 1) throw std::invalid_argument("eta_power_coeffs: need order >= 0, t >= 1");
    std::vector<BigInt> binom(static_cast<std::size_t>(t) + 1);
    for (long i = 0; i <= t; ++i) binom[static_cast<std::size_t>(i)] = binomial(t, i);
    std::vector<BigInt> s(static_cast<std::size_t>(order) + 1);
    s[0] = 1;
    for (long j = 1; j <= order; ++j)
        for (long M = order; M >= j; --M)
            for (long i = 1; i <= t && j * i <= M; ++i) {
                const auto& src = s[static_cast<std::size_t>(M - j * i)];
                if (i & 1)
                    s[static_cast<std::size_t>(M)] -= binom[static_cast<std::size_t>(i)] * src;
                else
                    s[static_cast<std::size_t>(M)] += binom[static_cast<std::size_t>(i)] * src;
            }
    return s;
}

/// Number of t-core partitions (no hook length divisible by t) of each
/// 0..n, from prod (1-q^{tj})^t / (1-q^j) via Euler's pentagonal recurrence
/// run against the eta-power coefficients.  All-integer and cheap.
inline std::vector<BigInt> t_core_counts(long n, long t) {
    if (n < 0 || t < 1) throw std::invalid_argument("t_core_counts: need n >= 0, t >= 1");
    auto eta = eta_power_coeffs(n / t, t);
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    c[0] = 1;
    for (long k = 1; k <= n; ++k) {
        BigInt acc = (k % t == 0) ? eta[static_cast<std::size_t>(k / t)] : BigInt(0);
        for (long i = 1;; ++i) {
            const long g1 = i * (3 * i - 1) / 2;
            const long g2 = i * (3 * i + 1) / 2;
            if (g1 > k) break;
            BigInt term = c[static_cast<std::size_t>(k - g1)];
            if (g2 <= k) term += c[static_cast<std::size_t>(k - g2)];
            if (i & 1)
                acc += term;
            else
                acc -= term;
        }
        c[static_cast<std::size_t>(k)] = acc;
    }
    return c;
}

/// Value of the marker generating polynomial at a fixed marker value,
/// computed by factor recurrences with the marker specialized before
/// convolution.  No polynomial blowup; safe far beyond double range when
/// R = ScaledFloat.
///
/// The equal flavor goes through the core/quotient split
///   prod (1+(T-1)q^{tj})^t/(1-q^j)
///     = [prod (1-q^{tj})^t/(1-q^j)] * prod (1 + T q^{tj}/(1-q^{tj}))^t,
/// whose factors all have nonnegative coefficients for T > 0; the naive
/// shifted-variable route loses every significant digit for T < 1 once n
/// is large (the assembly cancels by a factor ~ e^{2(c(1)-c(T)) sqrt(n)}).
template <class R>
R evaluate_hook_gf(long n, long t, Flavor flavor, const R& marker_value) {
    if (n < 0 || t < 1) throw std::invalid_argument("evaluate_hook_gf: need n >= 0, t >= 1");
    const long nq = n / t;
    std::vector<R> s(static_cast<std::size_t>(nq) + 1);
    s[0] = R(1);
    if (flavor == Flavor::equal) {
        // weights of the quotient factor 1 + sum_k w_k x^{jk} with
        // w_k = sum_i C(t,i) C(k-1,i-1) T^i, the same for every j
        std::vector<R> w(static_cast<std::size_t>(nq) + 1);
        for (long k = 1; k <= nq; ++k) {
            R acc{};
            R tpow(1);
            for (long i = 1; i <= std::min(t, k); ++i) {
                tpow *= marker_value;
                acc += ring_cast<R>(binomial(t, i) * binomial(k - 1, i - 1)) * tpow;
            }
            w[static_cast<std::size_t>(k)] = acc;
        }
        for (long j = 1; j <= nq; ++j)
            for (long M = nq; M >= j; --M)
                for (long k = 1; j * k <= M; ++k)
                    s[static_cast<std::size_t>(M)] += w[static_cast<std::size_t>(k)] *
                                                      s[static_cast<std::size_t>(M - j * k)];
        auto cores = t_core_counts(n, t);
        R acc{};
        for (long m = 0; m <= nq; ++m)
            acc += s[static_cast<std::size_t>(m)] *
                   ring_cast<R>(cores[static_cast<std::size_t>(n - t * m)]);
        return acc;
    }
    {
        std::vector<R> tpow(static_cast<std::size_t>(nq) + 1);
        tpow[0] = R(1);
        for (long k = 1; k <= nq; ++k)
            tpow[static_cast<std::size_t>(k)] = tpow[static_cast<std::size_t>(k - 1)] * marker_value;
        std::vector<R> binom(static_cast<std::size_t>(t) + 1);
        for (long i = 0; i <= t; ++i)
            binom[static_cast<std::size_t>(i)] = ring_cast<R>(binomial(t, i));
        std::vector<R> negbinom(static_cast<std::size_t>(nq) + 1);
        for (long k = 0; k <= nq; ++k)
            negbinom[static_cast<std::size_t>(k)] = ring_cast<R>(binomial(k + t - 1, t - 1));
        for (long j = 1; j <= nq; ++j) {
            for (long M = nq; M >= j; --M)
                for (long i = 1; i <= t && j * i <= M; ++i) {
                    R c = binom[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(M - j * i)];
                    if (i & 1)
                        s[static_cast<std::size_t>(M)] -= c;
                    else
                        s[static_cast<std::size_t>(M)] += c;
                }
            for (long M = nq; M >= j; --M)
                for (long k = 1; j * k <= M; ++k)
                    s[static_cast<std::size_t>(M)] += negbinom[static_cast<std::size_t>(k)] *
                                                      tpow[static_cast<std::size_t>(j * k)] *
                                                      s[static_cast<std::size_t>(M - j * k)];
        }
    }
    auto p = partition_numbers(n);
    R acc{};
    for (long m = 0; m <= nq; ++m)
        acc += s[static_cast<std::size_t>(m)] * ring_cast<R>(p[static_cast<std::size_t>(n - t * m)]);
    return acc;
}

}  // namespace hookdist
