#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace superorbit {

/// Exact rational scalar. Canonical form (gcd-reduced, positive denominator)
/// is maintained by GMP for all arithmetic results.
using Rational = mpq_class;

/// num/den with canonicalization (mpq_class(a,b) alone does not reduce).
inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rational rat_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

/// Canonical text form: "p" or "p/q".
inline std::string rat_to_string(const Rational& q) {
    return q.get_str();
}

inline Rational rat_pow(const Rational& base, unsigned long e) {
    Rational r(1);
    Rational b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace superorbit
