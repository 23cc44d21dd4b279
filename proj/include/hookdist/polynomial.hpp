#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hookdist/numeric.hpp"

namespace hookdist {

// Dense polynomial in one marker variable over a coefficient ring R.
// Canonical form: no stored trailing zeros; the zero polynomial is empty.
template <class R>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(R v) {
        Polynomial p;
        if (!is_zero_value(v)) p.c_.push_back(std::move(v));
        return p;
    }
    static Polynomial monomial(R v, std::size_t k) {
        Polynomial p;
        if (!is_zero_value(v)) {
            p.c_.resize(k + 1);
            p.c_[k] = std::move(v);
        }
        return p;
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }
    const std::vector<R>& coeffs() const { return c_; }

    R coeff(std::size_t k) const { return k < c_.size() ? c_[k] : R{}; }

    /// this += scale * X^shift * src.  Hot path of the series engine.
    void add_scaled(const Polynomial& src, const R& scale, std::size_t shift = 0) {
        if (src.is_zero() || is_zero_value(scale)) return;
        if (c_.size() < src.c_.size() + shift) c_.resize(src.c_.size() + shift);
        for (std::size_t k = 0; k < src.c_.size(); ++k) c_[k + shift] += scale * src.c_[k];
        if (c_.back() == R{}) trim();
    }
    /// this += X^shift * src
    void add_shifted(const Polynomial& src, std::size_t shift = 0) {
        if (src.is_zero()) return;
        if (c_.size() < src.c_.size() + shift) c_.resize(src.c_.size() + shift);
        for (std::size_t k = 0; k < src.c_.size(); ++k) c_[k + shift] += src.c_[k];
        if (c_.back() == R{}) trim();
    }
    void sub_scaled(const Polynomial& src, const R& scale, std::size_t shift = 0) {
        if (src.is_zero() || is_zero_value(scale)) return;
        if (c_.size() < src.c_.size() + shift) c_.resize(src.c_.size() + shift);
        for (std::size_t k = 0; k < src.c_.size(); ++k) c_[k + shift] -= scale * src.c_[k];
        if (c_.back() == R{}) trim();
    }

    Polynomial& operator+=(const Polynomial& o) {
        add_shifted(o);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.is_zero()) return *this;
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator*=(const R& s) {
        if (is_zero_value(s)) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.resize(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Horner evaluation at a point of the same ring.
    R eval(const R& x) const {
        R acc{};
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    /// Horner evaluation into a wider ring (e.g. BigInt coefficients at a
    /// BigRat or ScaledFloat point).
    template <class X>
    X eval_as(const X& x) const {
        X acc{};
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + ring_cast_coeff<X>(c_[k]);
        return acc;
    }

private:
    template <class X>
    static X ring_cast_coeff(const R& c) {
        if constexpr (std::is_same_v<R, BigInt>)
            return ring_cast<X>(c);
        else
            return X(c);
    }

    void trim() {
        while (!c_.empty() && c_.back() == R{}) c_.pop_back();
    }

    std::vector<R> c_;
};

/// p(X + delta) by Horner: repeated multiply-by-(X + delta) and add.
/// Used to move marker polynomials between the shifted basis U = T - 1
/// (delta = +1: U-coefficients -> T-coefficients requires p(T-1), i.e.
/// taylor_shift(p, -1); the inverse is taylor_shift(q, +1)).
template <class R>
Polynomial<R> taylor_shift(const Polynomial<R>& p, const R& delta) {
    std::vector<R> acc;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        // acc = acc*(X + delta) + c[k]
        std::vector<R> next(acc.size() + 1);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i];
            next[i] += delta * acc[i];
        }
        acc = std::move(next);
        if (acc.empty()) acc.resize(1);
        acc[0] += c[k];
    }
    return Polynomial<R>(std::move(acc));
}

/// Reinterprets coefficients in the shifted variable U as coefficients in
/// T where U = T - 1.
template <class R>
Polynomial<R> shifted_to_marker_basis(const Polynomial<R>& in_u) {
    return taylor_shift(in_u, R(-1));
}

template <class R>
Polynomial<R> marker_to_shifted_basis(const Polynomial<R>& in_t) {
    return taylor_shift(in_t, R(1));
}

}  // namespace hookdist
