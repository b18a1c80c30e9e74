#pragma once

#include "superorbit/rational.hpp"

#include <optional>
#include <vector>

namespace superorbit {

/// Dense exact-rational matrix, row major.
using QMatrix = std::vector<std::vector<Rational>>;
using QVector = std::vector<Rational>;

QMatrix q_identity(int n);
QMatrix q_mul(const QMatrix& a, const QMatrix& b);

/// In-place reduced row echelon form; returns pivot column per row (rank = size).
std::vector<int> rref(QMatrix& m);

int rank(QMatrix m);

/// Basis of the right nullspace {v : m v = 0}.
std::vector<QVector> nullspace(const QMatrix& m);

/// Determinant by fraction Gaussian elimination (exact).
Rational q_det(QMatrix m);

/// Inverse, or nullopt when singular.
std::optional<QMatrix> q_inverse(const QMatrix& m);

/// One solution of m x = b, or nullopt when inconsistent (free vars set to 0).
std::optional<QVector> q_solve(const QMatrix& m, const QVector& b);

/**
 * Row-space eliminator with reusable factorization: feed row vectors, then
 * express further vectors over the stored rows (used for linear solves
 * against a fixed generating set, tracking combination coefficients).
 */
class LinearSolver {
public:
    explicit LinearSolver(int width) : width_(width) {}

    int width() const { return width_; }
    int rank() const { return (int)rows_.size(); }

    /// Adds a row; returns true if it enlarged the row space.
    bool add_row(QVector row);

    /// If v lies in the row space, returns coefficients over the ADDED rows
    /// (in insertion order, zeros for redundant ones); else nullopt.
    std::optional<QVector> express(QVector v) const;

    /// Reduces v against the row space: returns the residual (supported on
    /// non-pivot columns) and the combination over added rows with
    /// v = residual + combo . rows.
    std::pair<QVector, QVector> reduce(QVector v) const;

    /// Pivot columns of the reduced rows.
    const std::vector<int>& pivots() const { return pivot_cols_; }

private:
    int width_;
    // reduced rows with their pivot columns, plus the combination of
    // original rows each reduced row stands for
    std::vector<QVector> rows_;
    std::vector<int> pivot_cols_;
    std::vector<QVector> combos_;
    int added_ = 0;
};

} // namespace superorbit
