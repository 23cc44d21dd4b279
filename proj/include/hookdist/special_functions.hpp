#pragma once

#include <cmath>
#include <stdexcept>

namespace hookdist {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kPiSq6 = kPi * kPi / 6.0;

/// Standard normal CDF.
inline double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / 1.41421356237309504880168872420969808);
}

namespace detail {

// Lanczos approximation for the gamma function, 13-term rational form for
// double precision, g = 6.024680040776729583740234375.
inline double lanczos_sum(double z) {
    static const double num[13] = {
        23531376880.41075968857200767445163675473,
        42919803642.64909876895789904700198885093,
        35711959237.35566804944018545154716670596,
        17921034426.03720969991975575445893111267,
        6039542586.35202800506429164430729792107,
        1439720407.311721673663223072794912393972,
        248874557.8620541565114603864132294232163,
        31426415.58540019438061423162831820536287,
        2876370.628935372441225409051620849613599,
        186056.2653952234950402949897160456992822,
        8071.672002365816210638002902272250613822,
        210.8242777515793458725097339207133627117,
        2.506628274631000270164908177133837338626,
    };
    static const double den[13] = {
        0.0, 39916800.0, 120543840.0, 150917976.0, 105258076.0, 45995730.0, 13339535.0,
        2637558.0, 357423.0, 32670.0, 1925.0, 66.0, 1.0,
    };
    double p = num[12], q = den[12];
    for (int i = 11; i >= 0; --i) {
        p = p * z + num[i];
        q = q * z + den[i];
    }
    return p / q;
}

inline constexpr double kLanczosG = 6.024680040776729583740234375;

}  // namespace detail

/// log Gamma for positive arguments (Lanczos).
inline double log_gamma(double z) {
    if (!(z > 0)) throw std::domain_error("log_gamma: argument must be positive");
    if (z < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return std::log(kPi / std::sin(kPi * z)) - log_gamma(1.0 - z);
    }
    const double zgh = z + detail::kLanczosG - 0.5;
    return std::log(detail::lanczos_sum(z)) + (z - 0.5) * std::log(zgh) - zgh;
}

inline double gamma_function(double z) {
    if (z >= 0.5) {
        const double zgh = z + detail::kLanczosG - 0.5;
        return detail::lanczos_sum(z) * std::pow(zgh, z - 0.5) * std::exp(-zgh);
    }
    return std::exp(log_gamma(z));
}

namespace detail {

inline double dilog_series(double x) {
    // |x| <= 1/2: plain power series sum x^k / k^2
    double term = x, acc = x;
    for (int k = 2; k < 200; ++k) {
        term *= x;
        double add = term / (static_cast<double>(k) * k);
        acc += add;
        if (std::fabs(add) < 1e-18 * std::fabs(acc) + 1e-300) break;
    }
    return acc;
}

}  // namespace detail

/// Real dilogarithm Li2(x) for x <= 1.  Power series on |x| <= 1/2;
/// reflection / Landen / inversion identities move other arguments there.
inline double dilog(double x) {
    if (x > 1.0) throw std::domain_error("dilog: real branch requires x <= 1");
    if (x == 1.0) return kPiSq6;
    if (x < -1.0) {
        const double lg = std::log(-x);
        return -kPiSq6 - 0.5 * lg * lg - dilog(1.0 / x);
    }
    if (x < -0.5) {
        const double lg = std::log1p(-x);
        return -0.5 * lg * lg - dilog(x / (x - 1.0));
    }
    if (x > 0.5) {
        return kPiSq6 - std::log(x) * std::log1p(-x) - detail::dilog_series(1.0 - x);
    }
    return detail::dilog_series(x);
}

/// Exponential growth constant of the t-hook generating function:
/// c(T) = sqrt(pi^2/6 - Li2(1 - T)), defined for T > 0.
inline double gf_growth_constant(double T) {
    if (!(T > 0)) throw std::domain_error("gf_growth_constant: T must be positive");
    return std::sqrt(kPiSq6 - dilog(1.0 - T));
}

/// Regularized lower incomplete gamma P(s, x) = gamma(s, x) / Gamma(s).
/// Series for x < s + 1, Lentz continued fraction otherwise.
inline double regularized_gamma_p(double s, double x) {
    if (!(s > 0)) throw std::domain_error("regularized_gamma_p: s must be positive");
    if (x < 0) throw std::domain_error("regularized_gamma_p: x must be nonnegative");
    if (x == 0.0) return 0.0;
    const double prefix = std::exp(-x + s * std::log(x) - log_gamma(s));
    if (x < s + 1.0) {
        double ap = s, del = 1.0 / s, sum = del;
        for (int i = 0; i < 1000; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-17) break;
        }
        return prefix * sum;
    }
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - s, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 1000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-17) break;
    }
    return 1.0 - prefix * h;
}

/// Lower incomplete gamma (unregularized).
inline double lower_incomplete_gamma(double s, double x) {
    return regularized_gamma_p(s, x) * gamma_function(s);
}

/// Gamma(k, theta) density; zero for x <= 0.
inline double gamma_pdf(double k, double theta, double x) {
    if (!(k > 0) || !(theta > 0)) throw std::domain_error("gamma_pdf: need k > 0, theta > 0");
    if (x <= 0.0) return 0.0;
    return std::exp((k - 1.0) * std::log(x) - x / theta - log_gamma(k) - k * std::log(theta));
}

inline double gamma_cdf(double k, double theta, double x) {
    if (!(k > 0) || !(theta > 0)) throw std::domain_error("gamma_cdf: need k > 0, theta > 0");
    if (x <= 0.0) return 0.0;
    return regularized_gamma_p(k, x / theta);
}

// A limiting law with an evaluatable CDF: either a normal distribution or
// an affinely mapped Gamma variable a*X + b.
struct LimitModel {
    enum class Kind { normal, shifted_gamma };

    Kind kind = Kind::normal;
    double mean = 0.0, variance = 1.0;               // normal
    double shape = 1.0, scale = 1.0, a = 1.0, b = 0.0;  // shifted gamma

    static LimitModel normal_model(double mean, double variance) {
        if (!(variance > 0)) throw std::domain_error("LimitModel: variance must be positive");
        LimitModel m;
        m.kind = Kind::normal;
        m.mean = mean;
        m.variance = variance;
        return m;
    }

    static LimitModel shifted_gamma_model(double shape, double scale, double a, double b) {
        if (!(shape > 0) || !(scale > 0))
            throw std::domain_error("LimitModel: need shape > 0 and scale > 0");
        if (a == 0.0) throw std::domain_error("LimitModel: affine scale must be nonzero");
        LimitModel m;
        m.kind = Kind::shifted_gamma;
        m.shape = shape;
        m.scale = scale;
        m.a = a;
        m.b = b;
        return m;
    }

    /// Standardized limit law of the divisible-by-t hook count for t >= 4:
    /// the centered unit-variance Gamma law with shape (t-1)/2, whose CDF at
    /// x is P((t-1)/2, sqrt((t-1)/2) x + (t-1)/2).
    static LimitModel tmult_limit_standardized(long t) {
        if (t < 4)
            throw std::invalid_argument(
                "tmult_limit_standardized: continuous limit laws require t >= 4");
        const double k = (static_cast<double>(t) - 1.0) / 2.0;
        const double theta = std::sqrt(2.0 / (static_cast<double>(t) - 1.0));
        return shifted_gamma_model(k, theta, 1.0, -k * theta);
    }

    double cdf(double x) const {
        if (kind == Kind::normal) return normal_cdf((x - mean) / std::sqrt(variance));
        const double y = (x - b) / a;
        return a > 0 ? gamma_cdf(shape, scale, y) : 1.0 - gamma_cdf(shape, scale, y);
    }
};

inline double limit_cdf(const LimitModel& model, double x) {
    return model.cdf(x);
}

}  // namespace hookdist
