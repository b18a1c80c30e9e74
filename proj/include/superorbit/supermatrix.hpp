#pragma once

#include "superorbit/ring.hpp"
#include "superorbit/linalg.hpp"

#include <vector>

namespace superorbit {

/// (m|n) block shape: m even rows/columns followed by n odd ones.
struct BlockShape {
    int m = 0;
    int n = 0;
    int total() const { return m + n; }
    friend bool operator==(const BlockShape& a, const BlockShape& b) {
        return a.m == b.m && a.n == b.n;
    }
};

enum class MatParity { Even, Odd, None };

/**
 * (m|n)-block matrix over a supercommutative ring.
 *
 * declaredParity is validated at construction: an even matrix has even
 * entries on the diagonal blocks and odd entries off them, an odd matrix
 * the reverse, and None is unconstrained (but rejected by parity-requiring
 * operations).
 */
class SuperMatrix {
public:
    SuperMatrix(BlockShape shape, SigPtr ring, MatParity declared);

    static SuperMatrix identity(BlockShape shape, SigPtr ring);
    static SuperMatrix zero(BlockShape shape, SigPtr ring, MatParity declared = MatParity::Even);

    const BlockShape& shape() const { return shape_; }
    const SigPtr& ring() const { return ring_; }
    MatParity declared_parity() const { return declared_; }

    const SuperPolynomial& at(int i, int j) const { return entries_[i * shape_.total() + j]; }
    /// Entry assignment re-validates against the declared parity.
    void set(int i, int j, SuperPolynomial value);

    /// Block parity of position (i,j): 0 on diagonal blocks, 1 off them.
    int position_parity(int i, int j) const {
        return ((i >= shape_.m) + (j >= shape_.m)) % 2;
    }

    bool is_zero() const;
    friend bool operator==(const SuperMatrix& a, const SuperMatrix& b);

    friend SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
    SuperMatrix operator-() const;
    SuperMatrix scaled(const Rational& s) const;

    /// Entrywise body projection (declared parity preserved).
    SuperMatrix body() const;
    /// Entrywise part of odd degree exactly k (declared parity: k even keeps it,
    /// k odd flips Even<->Odd).
    SuperMatrix odd_component(int k) const;
    /// Largest odd degree appearing in any entry.
    int max_odd_degree() const;

    /// Numeric matrix of constant terms of the body (exact rationals).
    QMatrix constant_body() const;
    /// True if every body entry is a constant.
    bool body_is_constant() const;

private:
    void validate() const;

    BlockShape shape_;
    SigPtr ring_;
    MatParity declared_;
    std::vector<SuperPolynomial> entries_;
};

/// tr(p-block) - tr(s-block).  Requires declared even parity.
SuperPolynomial supertrace(const SuperMatrix& a);

/// Leibniz determinant of a square matrix of even (hence commuting) entries.
/// `a` is given as a plain entry grid; used on diagonal blocks.
SuperPolynomial det_even(const std::vector<std::vector<SuperPolynomial>>& a, const SigPtr& ring);

/// Determinant of the (m|n) matrix viewed as even entries only
/// (requires every entry even).
SuperPolynomial det_even(const SuperMatrix& a);

/// Exact two-sided inverse: body blocks inverted over the even subring,
/// nilpotent remainder handled by a terminating geometric series.
SuperMatrix mat_inverse(const SuperMatrix& a);

/// Ber(A) = det(p - q s^{-1} r) * det(s)^{-1}.
SuperPolynomial berezinian(const SuperMatrix& a);

/// [str(A^1), ..., str(A^kmax)], or [str(A^2), str(A^4), ...] when even_only.
std::vector<SuperPolynomial> power_sums(const SuperMatrix& a, int kmax, bool even_only = false);

/// XY - (-1)^{p_X p_Y} YX for homogeneous declared parities.
SuperMatrix super_commutator(const SuperMatrix& x, const SuperMatrix& y);

} // namespace superorbit
