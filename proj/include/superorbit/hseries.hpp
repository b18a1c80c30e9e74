#pragma once

#include "superorbit/rational.hpp"
#include "superorbit/errors.hpp"
#include "superorbit/ring.hpp"

#include <vector>

namespace superorbit {

/**
 * Truncated power series sum a_k h^k, k = 0..H; arithmetic drops every
 * order above H so all identities are finite exact computations.
 */
class HSeries {
public:
    HSeries() : order_(-1) {}  // usable as a map value; adopts an order on first write
    explicit HSeries(int order) : order_(order), c_((size_t)order + 1, Rational(0)) {
        if (order < 0) throw Error("truncation order must be >= 0");
    }

    static HSeries constant(const Rational& a, int order) {
        HSeries s(order);
        s.c_[0] = a;
        return s;
    }
    /// a * h^k (zero if k > order).
    static HSeries h_power(const Rational& a, int k, int order) {
        HSeries s(order);
        if (k <= order) s.c_[(size_t)k] = a;
        return s;
    }

    int order() const { return order_; }
    bool is_zero() const {
        for (auto& a : c_)
            if (!superorbit::is_zero(a)) return false;
        return true;
    }
    bool is_unit() const { return order_ >= 0 && !superorbit::is_zero(c_[0]); }

    const Rational& at(int k) const {
        static const Rational zero(0);
        if (k < 0 || k > order_) return zero;
        return c_[(size_t)k];
    }
    void set(int k, const Rational& a) {
        if (k < 0 || k > order_) throw Error("h-order out of range");
        c_[(size_t)k] = a;
    }

    /// Lowest k with a_k != 0, or order+1 when zero.
    int valuation() const {
        for (int k = 0; k <= order_; ++k)
            if (!superorbit::is_zero(c_[(size_t)k])) return k;
        return order_ + 1;
    }

    HSeries& operator+=(const HSeries& o) {
        adopt(o);
        for (int k = 0; k <= order_; ++k) c_[(size_t)k] += o.at(k);
        return *this;
    }
    HSeries& operator-=(const HSeries& o) {
        adopt(o);
        for (int k = 0; k <= order_; ++k) c_[(size_t)k] -= o.at(k);
        return *this;
    }
    friend HSeries operator+(HSeries a, const HSeries& b) { a += b; return a; }
    friend HSeries operator-(HSeries a, const HSeries& b) { a -= b; return a; }
    HSeries operator-() const {
        HSeries r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }

    friend HSeries operator*(const HSeries& a, const HSeries& b) {
        if (a.order_ < 0) return a;
        if (b.order_ < 0) return b;
        if (a.order_ != b.order_) throw Error("h truncation orders differ");
        HSeries r(a.order_);
        for (int i = 0; i <= a.order_; ++i) {
            if (superorbit::is_zero(a.c_[(size_t)i])) continue;
            for (int j = 0; i + j <= a.order_; ++j)
                r.c_[(size_t)(i + j)] += a.c_[(size_t)i] * b.at(j);
        }
        return r;
    }
    HSeries& operator*=(const HSeries& o) { *this = *this * o; return *this; }

    HSeries& scale(const Rational& s) {
        for (auto& a : c_) a *= s;
        return *this;
    }
    friend HSeries operator*(HSeries a, const Rational& s) { a.scale(s); return a; }
    friend HSeries operator*(const Rational& s, HSeries a) { a.scale(s); return a; }

    /// Multiplication by h^k (orders above H fall off).
    HSeries shifted(int k) const {
        if (order_ < 0) return *this;
        HSeries r(order_);
        for (int i = 0; i + k <= order_; ++i) r.c_[(size_t)(i + k)] = at(i);
        return r;
    }

    /// Division by h^k; requires valuation >= k.
    HSeries down_shifted(int k) const {
        if (order_ < 0) return *this;
        HSeries r(order_);
        for (int i = 0; i < k; ++i)
            if (!superorbit::is_zero(at(i))) throw Error("series is not divisible by h^k");
        for (int i = k; i <= order_; ++i) r.c_[(size_t)(i - k)] = at(i);
        return r;
    }

    /// Multiplicative inverse of a unit (a_0 != 0), exact mod h^{H+1}.
    HSeries inverse() const {
        if (!is_unit()) throw NotInvertible("series has zero constant term");
        HSeries r(order_);
        Rational inv0 = Rational(1) / c_[0];
        r.c_[0] = inv0;
        for (int k = 1; k <= order_; ++k) {
            Rational acc(0);
            for (int j = 1; j <= k; ++j) acc += c_[(size_t)j] * r.c_[(size_t)(k - j)];
            r.c_[(size_t)k] = -inv0 * acc;
        }
        return r;
    }

    friend bool operator==(const HSeries& a, const HSeries& b) {
        if (a.order_ != b.order_) {
            // a default-constructed zero equals any zero
            return a.is_zero() && b.is_zero();
        }
        return a.c_ == b.c_;
    }
    friend bool operator!=(const HSeries& a, const HSeries& b) { return !(a == b); }

private:
    void adopt(const HSeries& o) {
        if (order_ < 0) *this = o.order_ >= 0 ? HSeries(o.order_) : o;
        else if (o.order_ >= 0 && o.order_ != order_)
            throw Error("h truncation orders differ");
    }

    int order_;
    std::vector<Rational> c_;
};

template <>
struct CoeffOps<HSeries> {
    static bool is_zero(const HSeries& s) { return s.is_zero(); }
};

/// Supercommutative polynomial with truncated h-series coefficients;
/// the value space of star products and of the symmetrizer inverse.
using HPolynomial = PolynomialT<HSeries>;

/// Embeds a rational-coefficient polynomial at h-order 0.
HPolynomial to_hpoly(const SuperPolynomial& p, int order);

/// The h^k coefficient slice as a rational-coefficient polynomial.
SuperPolynomial h_slice(const HPolynomial& p, int k);

} // namespace superorbit
