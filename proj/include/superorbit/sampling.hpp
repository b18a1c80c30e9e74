#pragma once

#include "superorbit/ring.hpp"
#include "superorbit/supermatrix.hpp"

#include <cstdint>
#include <random>

namespace superorbit {

/// Seeded RNG with hand-rolled draws; identical seeds give identical streams.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t raw() { return eng_(); }
    int uniform(int lo, int hi);  // inclusive bounds
    bool flip() { return eng_() & 1; }
    Rational rational(int max_num = 4, int max_den = 3);
    Rational nonzero_rational(int max_num = 4, int max_den = 3);

private:
    std::mt19937_64 eng_;
};

/// Random monomial of total degree <= maxdeg respecting caps / odd nilpotency.
Monomial random_monomial(const SigPtr& sig, int maxdeg, Rng& rng);

SuperPolynomial random_poly(const SigPtr& sig, int maxdeg, int terms, Rng& rng);

/// Random parity-homogeneous element (may come out shorter than `terms`).
SuperPolynomial random_homogeneous(const SigPtr& sig, Parity want, int maxdeg, int terms, Rng& rng);

/// Random declared-even matrix with polynomial entries of degree <= maxdeg.
SuperMatrix random_even_matrix(BlockShape shape, const SigPtr& ring, int maxdeg, int terms, Rng& rng);

/// Random invertible declared-even matrix: unit-triangular numeric diagonal
/// blocks times (I + nilpotent even matrix built from odd generators).
SuperMatrix random_invertible_even(BlockShape shape, const SigPtr& ring, Rng& rng);

/// Random invertible numeric matrix (product of unit triangulars), det = 1.
QMatrix random_unimodular(int n, Rng& rng, int spread = 2);

} // namespace superorbit
