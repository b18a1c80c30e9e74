#pragma once

#include "superorbit/liesuper.hpp"
#include "superorbit/supermatrix.hpp"

#include <string>
#include <vector>

namespace superorbit {

enum class AlgebraKind { Gl, Sl, Osp };

AlgebraKind kind_from_string(const std::string& s);
std::string kind_to_string(AlgebraKind k);

/**
 * A regular semisimple orbit target: diagonal X0 with pairwise distinct
 * rational eigenvalues, plus the invariant values c_i = str(X0^i)
 * (even powers only for osp).
 */
class OrbitSpec {
public:
    OrbitSpec(AlgebraKind kind, int m, int n, QVector lambda);

    AlgebraKind kind() const { return kind_; }
    BlockShape shape() const { return {m_, n_}; }
    const QVector& lambda() const { return lambda_; }
    bool even_powers_only() const { return kind_ == AlgebraKind::Osp; }

    /// c_i values, i = 1..m+n (or the even i only for osp).
    const QVector& invariants() const { return invariants_; }

    /// Diagonal target matrix over `ring`.
    SuperMatrix target(const SigPtr& ring) const;

private:
    AlgebraKind kind_;
    int m_, n_;
    QVector lambda_;
    QVector invariants_;
};

struct MembershipResult {
    bool member = false;
    std::vector<SuperPolynomial> witness;  // computed power sums of W
};

/// Exact test: power sums of W equal the orbit invariants.
MembershipResult membership_check(const SuperMatrix& w, const OrbitSpec& spec);

struct DiagonalizationResult {
    SuperMatrix g;
    SuperMatrix diagonal;
    /// residual term counts of gW - Dg restricted to each odd order 0..N
    std::vector<int> per_order_residuals;
    bool membership = false;
    /// D == X0 (forced when membership holds: the Vandermonde rigidity)
    bool matches_target = false;
};

/**
 * Order-by-order superdiagonalization: order 0 solves the classical
 * eigenproblem by exact left nullspaces, order n >= 1 solves
 * X0 Y - Y X0 + D_n = K_n with Y_ij = (K_n)_ij / (lambda_i - lambda_j)
 * and D_n = diag(K_n).  Returns invertible g with g W = D g exactly.
 */
DiagonalizationResult superdiagonalize(const SuperMatrix& w, const OrbitSpec& spec);

struct VandermondeResult {
    Rational det;           // determinant of the signed power matrix
    Rational product;       // prod_{i>j} (lambda_i - lambda_j)
    int stated_sign;        // (-1)^{nm}, recorded for comparison only
};

/// Signed power matrix with rows lambda^k (k = 0..m+n-1), last n columns
/// negated.  det != 0 iff the values are pairwise distinct.
VandermondeResult vandermonde_criterion(const QVector& lambda, int m, int n);

struct AdInvarianceReport {
    bool pass = false;
    std::vector<std::string> failures;  // "k=2: nonzero difference (NN terms)"
};

/**
 * Symbolic conjugation-invariance check of the power-sum functions:
 * builds the generic matrix M = sum x_I X_I over the coordinate ring plus
 * `thetas` extra odd parameters, forms g = g_num (I + Nil(theta)), and
 * verifies str((g M g^{-1})^k) == str(M^k) identically for k = 1..kmax.
 */
AdInvarianceReport ad_invariance_check(AlgebraKind kind, int m, int n, int kmax,
                                       int thetas, uint64_t seed);

struct SyzygyInstance {
    std::vector<SuperPolynomial> q;            // even polynomials
    std::vector<SuperPolynomial> f;
    std::vector<std::vector<SuperPolynomial>> F;  // candidate certificate
};

struct SyzygyReport {
    bool sum_vanishes = false;      // sum_i f_i q_i == 0
    bool antisymmetric = false;     // F_ij == -F_ji
    bool certifies = false;         // f_i == sum_j F_ij q_j
    bool generators_even = false;   // hypothesis of the lifting lemma (informational)
    bool pass() const { return sum_vanishes && antisymmetric && certifies; }
};

SyzygyReport syzygy_verify(const SyzygyInstance& inst);

} // namespace superorbit
