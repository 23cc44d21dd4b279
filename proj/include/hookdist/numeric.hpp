#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace hookdist {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Thrown when a computation would exceed a configured resource ceiling.
class resource_guard_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline BigInt factorial(long n) {
    BigInt r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

// Extended-range floating point: value = mant * 2^exp2 with |mant| in [0.5, 1)
// or exactly 0.  Keeps q-series coefficients finite far beyond double range.
class ScaledFloat {
public:
    ScaledFloat() = default;
    ScaledFloat(double v) : mant_(v) { normalize(); }

    static ScaledFloat from_parts(double mant, std::int64_t e) {
        ScaledFloat r;
        r.mant_ = mant;
        r.exp2_ = e;
        r.normalize();
        return r;
    }

    static ScaledFloat from_bigint(const BigInt& v) {
        if (v == 0) return {};
        BigInt a = abs(v);
        std::int64_t bits = static_cast<std::int64_t>(msb(a));  // index of top set bit
        std::int64_t shift = bits > 52 ? bits - 52 : 0;
        double m = BigInt(a >> shift).convert_to<double>();
        if (v < 0) m = -m;
        return from_parts(m, shift);
    }

    bool is_zero() const { return mant_ == 0.0; }
    int sign() const { return mant_ > 0 ? 1 : (mant_ < 0 ? -1 : 0); }
    double mantissa() const { return mant_; }
    std::int64_t exponent2() const { return exp2_; }

    /// Natural log of |value|; -inf for zero.
    double log_abs() const {
        if (is_zero()) return -std::numeric_limits<double>::infinity();
        return std::log(std::fabs(mant_)) + static_cast<double>(exp2_) * ln2_;
    }

    /// Saturates to +-inf / 0 outside double range.
    double to_double() const {
        if (is_zero()) return 0.0;
        if (exp2_ > 1024) return mant_ > 0 ? std::numeric_limits<double>::infinity()
                                           : -std::numeric_limits<double>::infinity();
        if (exp2_ < -1074) return 0.0;
        return std::ldexp(mant_, static_cast<int>(exp2_));
    }

    ScaledFloat operator-() const {
        ScaledFloat r = *this;
        r.mant_ = -r.mant_;
        return r;
    }

    ScaledFloat& operator+=(const ScaledFloat& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        std::int64_t d = exp2_ - o.exp2_;
        // beyond 60 bits the smaller addend is lost in double precision anyway
        if (d >= 60) return *this;
        if (d <= -60) return *this = o;
        mant_ += std::ldexp(o.mant_, static_cast<int>(-d));
        normalize();
        return *this;
    }
    ScaledFloat& operator-=(const ScaledFloat& o) { return *this += -o; }
    ScaledFloat& operator*=(const ScaledFloat& o) {
        if (is_zero() || o.is_zero()) return *this = {};
        mant_ *= o.mant_;
        exp2_ += o.exp2_;
        normalize();
        return *this;
    }
    ScaledFloat& operator/=(const ScaledFloat& o) {
        if (o.is_zero()) throw std::domain_error("ScaledFloat: division by zero");
        if (is_zero()) return *this;
        mant_ /= o.mant_;
        exp2_ -= o.exp2_;
        normalize();
        return *this;
    }

    friend ScaledFloat operator+(ScaledFloat a, const ScaledFloat& b) { return a += b; }
    friend ScaledFloat operator-(ScaledFloat a, const ScaledFloat& b) { return a -= b; }
    friend ScaledFloat operator*(ScaledFloat a, const ScaledFloat& b) { return a *= b; }
    friend ScaledFloat operator/(ScaledFloat a, const ScaledFloat& b) { return a /= b; }
    friend bool operator==(const ScaledFloat& a, const ScaledFloat& b) {
        return a.mant_ == b.mant_ && (a.is_zero() || a.exp2_ == b.exp2_);
    }

private:
    void normalize() {
        if (mant_ == 0.0) {
            exp2_ = 0;
            return;
        }
        int e = 0;
        mant_ = std::frexp(mant_, &e);
        exp2_ += e;
    }

    static constexpr double ln2_ = 0.69314718055994530941723212145818;

    double mant_ = 0.0;
    std::int64_t exp2_ = 0;
};

inline ScaledFloat pow(ScaledFloat base, long e) {
    ScaledFloat r = 1.0;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= base;
        base *= base;
    }
    return r;
}

/// a/b as a double with full mantissa precision, independent of magnitude.
inline double ratio_as_double(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::domain_error("ratio_as_double: zero denominator");
    return (ScaledFloat::from_bigint(a) / ScaledFloat::from_bigint(b)).to_double();
}

inline double to_double(const BigRat& r) {
    return ratio_as_double(numerator(r), denominator(r));
}

inline double log_of(const BigInt& v) {
    if (v <= 0) throw std::domain_error("log_of: nonpositive argument");
    return ScaledFloat::from_bigint(v).log_abs();
}

// ring_cast: converts exact integers into any coefficient ring used by the
// series engine (BigInt, BigRat, ScaledFloat, double).
template <class R>
inline R ring_cast(const BigInt& v) {
    return R(v);
}
template <>
inline ScaledFloat ring_cast<ScaledFloat>(const BigInt& v) {
    return ScaledFloat::from_bigint(v);
}
template <>
inline double ring_cast<double>(const BigInt& v) {
    return v.convert_to<double>();
}

template <class R>
inline bool is_zero_value(const R& v) {
    return v == 0;
}
inline bool is_zero_value(const ScaledFloat& v) { return v.is_zero(); }

}  // namespace hookdist
