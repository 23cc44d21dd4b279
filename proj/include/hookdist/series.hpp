#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hookdist/numeric.hpp"

namespace hookdist {

// Formal power series in q truncated at a fixed order N: terms q^0..q^N are
// retained, every operation discards higher powers.  The coefficient type C
// is any ring (scalars, marker polynomials, bivariate polynomials).
template <class C>
class TruncatedSeries {
public:
    explicit TruncatedSeries(long order) : c_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    }

    static TruncatedSeries one(long order) {
        TruncatedSeries s(order);
        s.c_[0] = C(1);
        return s;
    }

    long order() const { return static_cast<long>(c_.size()) - 1; }
    C& operator[](std::size_t k) { return c_[k]; }
    const C& operator[](std::size_t k) const { return c_[k]; }
    std::vector<C>& coeffs() { return c_; }
    const std::vector<C>& coeffs() const { return c_; }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_order(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_order(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_order(b);
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == C{}) continue;
            for (std::size_t j = 0; i + j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.c_ == b.c_;
    }

private:
    void check_order(const TruncatedSeries& o) const {
        if (o.c_.size() != c_.size())
            throw std::invalid_argument("TruncatedSeries: mixed truncation orders");
    }

    std::vector<C> c_;
};

/// exp of a series with zero constant term, via sum of powers f^j / j!.
/// The coefficient ring must support scaling by BigRat.
template <class C>
TruncatedSeries<C> series_exp(const TruncatedSeries<C>& f) {
    if (!(f[0] == C{}))
        throw std::invalid_argument("series_exp: nonzero constant term");
    TruncatedSeries<C> result = TruncatedSeries<C>::one(f.order());
    TruncatedSeries<C> power = TruncatedSeries<C>::one(f.order());
    BigInt fact = 1;
    for (long j = 1; j <= f.order(); ++j) {
        power = power * f;
        fact *= j;
        TruncatedSeries<C> term = power;
        BigRat inv(1, fact);
        for (auto& coef : term.coeffs()) coef *= inv;
        result += term;
    }
    return result;
}

}  // namespace hookdist
