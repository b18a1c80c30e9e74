#include "superorbit/linalg.hpp"
#include "superorbit/errors.hpp"

namespace superorbit {

QMatrix q_identity(int n) {
    QMatrix m(n, QVector(n, Rational(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMatrix q_mul(const QMatrix& a, const QMatrix& b) {
    if (a.empty() || b.empty()) return {};
    size_t n = a.size(), k = b.size(), p = b[0].size();
    QMatrix r(n, QVector(p, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (is_zero(a[i][j])) continue;
            for (size_t l = 0; l < p; ++l)
                r[i][l] += a[i][j] * b[j][l];
        }
    return r;
}

std::vector<int> rref(QMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    int rows = (int)m.size(), cols = (int)m[0].size();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero(m[i][c])) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[sel], m[r]);
        Rational inv = Rational(1) / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            Rational f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(QMatrix m) { return (int)rref(m).size(); }

std::vector<QVector> nullspace(const QMatrix& m) {
    if (m.empty()) return {};
    QMatrix a = m;
    std::vector<int> pivots = rref(a);
    int cols = (int)m[0].size();
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<QVector> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVector v(cols, Rational(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational q_det(QMatrix m) {
    int n = (int)m.size();
    Rational det(1);
    for (int c = 0; c < n; ++c) {
        int sel = -1;
        for (int i = c; i < n; ++i)
            if (!is_zero(m[i][c])) { sel = i; break; }
        if (sel < 0) return Rational(0);
        if (sel != c) { std::swap(m[sel], m[c]); det = -det; }
        det *= m[c][c];
        Rational inv = Rational(1) / m[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (is_zero(m[i][c])) continue;
            Rational f = m[i][c] * inv;
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

std::optional<QMatrix> q_inverse(const QMatrix& m) {
    int n = (int)m.size();
    QMatrix aug = m;
    for (int i = 0; i < n; ++i) {
        aug[i].resize(2 * n, Rational(0));
        aug[i][n + i] = 1;
    }
    std::vector<int> pivots = rref(aug);
    if ((int)pivots.size() != n || pivots[n - 1] >= n) return std::nullopt;
    QMatrix inv(n, QVector(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::optional<QVector> q_solve(const QMatrix& m, const QVector& b) {
    if (m.empty()) return QVector{};
    int rows = (int)m.size(), cols = (int)m[0].size();
    QMatrix aug = m;
    for (int i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    std::vector<int> pivots = rref(aug);
    QVector x(cols, Rational(0));
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt;  // 0 = nonzero row
        x[pivots[r]] = aug[r][cols];
    }
    return x;
}

bool LinearSolver::add_row(QVector row) {
    if ((int)row.size() != width_) throw Error("row width mismatch");
    QVector combo(added_ + 1, Rational(0));
    combo[added_] = 1;
    ++added_;
    for (auto& c : combos_) c.resize(added_, Rational(0));

    // reduce against stored rows
    for (size_t r = 0; r < rows_.size(); ++r) {
        Rational f = row[pivot_cols_[r]];
        if (is_zero(f)) continue;
        for (int j = 0; j < width_; ++j) row[j] -= f * rows_[r][j];
        for (int j = 0; j < added_; ++j) combo[j] -= f * combos_[r][j];
    }
    int pc = -1;
    for (int j = 0; j < width_; ++j)
        if (!is_zero(row[j])) { pc = j; break; }
    if (pc < 0) return false;

    Rational inv = Rational(1) / row[pc];
    for (int j = 0; j < width_; ++j) row[j] *= inv;
    for (int j = 0; j < added_; ++j) combo[j] *= inv;

    // back-substitute into existing rows to keep them reduced
    for (size_t r = 0; r < rows_.size(); ++r) {
        Rational f = rows_[r][pc];
        if (is_zero(f)) continue;
        for (int j = 0; j < width_; ++j) rows_[r][j] -= f * row[j];
        for (int j = 0; j < added_; ++j) combos_[r][j] -= f * combo[j];
    }
    rows_.push_back(std::move(row));
    pivot_cols_.push_back(pc);
    combos_.push_back(std::move(combo));
    return true;
}

std::optional<QVector> LinearSolver::express(QVector v) const {
    auto [residual, coeffs] = reduce(std::move(v));
    for (int j = 0; j < width_; ++j)
        if (!is_zero(residual[j])) return std::nullopt;
    return coeffs;
}

std::pair<QVector, QVector> LinearSolver::reduce(QVector v) const {
    if ((int)v.size() != width_) throw Error("vector width mismatch");
    QVector coeffs(added_, Rational(0));
    for (size_t r = 0; r < rows_.size(); ++r) {
        Rational f = v[pivot_cols_[r]];
        if (is_zero(f)) continue;
        for (int j = 0; j < width_; ++j) v[j] -= f * rows_[r][j];
        for (int j = 0; j < added_ && j < (int)combos_[r].size(); ++j)
            coeffs[j] += f * combos_[r][j];
    }
    return {std::move(v), std::move(coeffs)};
}

} // namespace superorbit
