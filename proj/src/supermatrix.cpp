#include "superorbit/supermatrix.hpp"

#include <map>

namespace superorbit {

SuperMatrix::SuperMatrix(BlockShape shape, SigPtr ring, MatParity declared)
    : shape_(shape), ring_(std::move(ring)), declared_(declared) {
    if (shape_.m < 0 || shape_.n < 0 || shape_.total() < 1)
        throw Error("block shape must have m,n >= 0 and m+n >= 1");
    entries_.assign((size_t)shape_.total() * shape_.total(), SuperPolynomial::zero(ring_));
}

SuperMatrix SuperMatrix::identity(BlockShape shape, SigPtr ring) {
    SuperMatrix m(shape, ring, MatParity::Even);
    for (int i = 0; i < shape.total(); ++i)
        m.entries_[i * shape.total() + i] = sp_constant(ring, Rational(1));
    return m;
}

SuperMatrix SuperMatrix::zero(BlockShape shape, SigPtr ring, MatParity declared) {
    return SuperMatrix(shape, std::move(ring), declared);
}

void SuperMatrix::set(int i, int j, SuperPolynomial value) {
    require_same_ring(value.sig(), ring_);
    if (declared_ != MatParity::None && !value.is_zero()) {
        int want = position_parity(i, j);
        if (declared_ == MatParity::Odd) want ^= 1;
        Parity p = value.parity();
        if (p == Parity::Mixed || (p == Parity::Odd) != (want == 1))
            throw ParityError("entry parity violates declared matrix parity");
    }
    entries_[i * shape_.total() + j] = std::move(value);
}

bool SuperMatrix::is_zero() const {
    for (auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
    return a.shape_ == b.shape_ && *a.ring_ == *b.ring_ && a.entries_ == b.entries_;
}

static MatParity add_parity(MatParity a, MatParity b, bool a_zero, bool b_zero) {
    if (a_zero) return b;
    if (b_zero) return a;
    if (a == b) return a;
    return MatParity::None;
}

SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b) {
    if (!(a.shape_ == b.shape_)) throw SignatureMismatch("shape mismatch");
    require_same_ring(a.ring_, b.ring_);
    SuperMatrix r(a.shape_, a.ring_, add_parity(a.declared_, b.declared_, a.is_zero(), b.is_zero()));
    for (size_t k = 0; k < a.entries_.size(); ++k)
        r.entries_[k] = a.entries_[k] + b.entries_[k];
    return r;
}

SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b) {
    return a + (-b);
}

SuperMatrix SuperMatrix::operator-() const {
    SuperMatrix r(shape_, ring_, declared_);
    for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = -entries_[k];
    return r;
}

SuperMatrix SuperMatrix::scaled(const Rational& s) const {
    SuperMatrix r(shape_, ring_, declared_);
    for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] * s;
    return r;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
    if (!(a.shape_ == b.shape_)) throw SignatureMismatch("shape mismatch");
    require_same_ring(a.ring_, b.ring_);
    MatParity dp = MatParity::None;
    if (a.declared_ != MatParity::None && b.declared_ != MatParity::None)
        dp = (a.declared_ == b.declared_) ? MatParity::Even : MatParity::Odd;
    int t = a.shape_.total();
    SuperMatrix r(a.shape_, a.ring_, MatParity::None);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            SuperPolynomial acc(a.ring_);
            for (int k = 0; k < t; ++k) {
                if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
                acc += a.at(i, k) * b.at(k, j);
            }
            r.entries_[i * t + j] = std::move(acc);
        }
    r.declared_ = dp;
    if (dp != MatParity::None) r.validate();
    return r;
}

void SuperMatrix::validate() const {
    if (declared_ == MatParity::None) return;
    int t = shape_.total();
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            const SuperPolynomial& e = at(i, j);
            if (e.is_zero()) continue;
            int want = position_parity(i, j);
            if (declared_ == MatParity::Odd) want ^= 1;
            Parity p = e.parity();
            if (p == Parity::Mixed || (p == Parity::Odd) != (want == 1))
                throw ParityError("matrix entries violate declared parity");
        }
}

SuperMatrix SuperMatrix::body() const {
    SuperMatrix r(shape_, ring_, declared_);
    int t = shape_.total();
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) r.entries_[i * t + j] = at(i, j).body();
    return r;
}

SuperMatrix SuperMatrix::odd_component(int k) const {
    // the odd-degree-k slice of an even-pattern matrix still matches the
    // even pattern (zeros fill the complementary blocks), and likewise for odd
    SuperMatrix r(shape_, ring_, declared_);
    int t = shape_.total();
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) r.entries_[i * t + j] = at(i, j).odd_component(k);
    return r;
}

int SuperMatrix::max_odd_degree() const {
    int d = 0;
    for (auto& e : entries_)
        for (auto& [m, c] : e.terms()) d = std::max(d, m.odd_degree());
    return d;
}

QMatrix SuperMatrix::constant_body() const {
    int t = shape_.total();
    QMatrix q(t, QVector(t, Rational(0)));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            q[i][j] = at(i, j).coeff(at(i, j).constant_monomial());
    return q;
}

bool SuperMatrix::body_is_constant() const {
    for (auto& e : entries_)
        for (auto& [m, c] : e.terms())
            if (m.odd_idx.empty() && !m.is_constant()) return false;
    return true;
}

SuperPolynomial supertrace(const SuperMatrix& a) {
    if (a.declared_parity() != MatParity::Even)
        throw ParityError("supertrace requires a declared-even matrix");
    SuperPolynomial tr(a.ring());
    for (int i = 0; i < a.shape().total(); ++i) {
        if (i < a.shape().m) tr += a.at(i, i);
        else tr -= a.at(i, i);
    }
    return tr;
}

namespace {

// Laplace expansion over column subsets, memoized; entries commute.
class DetWorker {
public:
    DetWorker(const std::vector<std::vector<SuperPolynomial>>& a, SigPtr ring)
        : a_(a), ring_(std::move(ring)) {}

    SuperPolynomial run() {
        int n = (int)a_.size();
        if (n == 0) return sp_constant(ring_, Rational(1));
        unsigned full = (n >= 32) ? 0u : ((1u << n) - 1);
        if (n >= 32) throw Error("determinant size out of range");
        return det(0, full);
    }

private:
    SuperPolynomial det(int row, unsigned cols) {
        if (cols == 0) return sp_constant(ring_, Rational(1));
        auto it = memo_.find(cols);
        if (it != memo_.end()) return it->second;
        SuperPolynomial acc(ring_);
        int sign = 1;
        int n = (int)a_.size();
        for (int c = 0; c < n; ++c) {
            if (!(cols & (1u << c))) continue;
            if (!a_[row][c].is_zero())
                acc += (sign > 0 ? a_[row][c] : -a_[row][c]) * det(row + 1, cols & ~(1u << c));
            sign = -sign;
        }
        memo_.emplace(cols, acc);
        return acc;
    }

    const std::vector<std::vector<SuperPolynomial>>& a_;
    SigPtr ring_;
    std::map<unsigned, SuperPolynomial> memo_;
};

std::vector<std::vector<SuperPolynomial>> block_of(const SuperMatrix& a, int r0, int c0, int sz) {
    std::vector<std::vector<SuperPolynomial>> b(sz, std::vector<SuperPolynomial>());
    for (int i = 0; i < sz; ++i) {
        b[i].reserve(sz);
        for (int j = 0; j < sz; ++j) b[i].push_back(a.at(r0 + i, c0 + j));
    }
    return b;
}

// Inverse of a square grid of even entries: adj(M) * det(M)^{-1}.
std::vector<std::vector<SuperPolynomial>> grid_inverse(
    const std::vector<std::vector<SuperPolynomial>>& a, const SigPtr& ring) {
    int n = (int)a.size();
    SuperPolynomial d = det_even(a, ring);
    SuperPolynomial dinv = poly_invert(d);  // throws NotInvertible when singular
    std::vector<std::vector<SuperPolynomial>> inv(n, std::vector<SuperPolynomial>());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // cofactor C_{ji}
            std::vector<std::vector<SuperPolynomial>> minor;
            minor.reserve(n - 1);
            for (int r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<SuperPolynomial> row;
                row.reserve(n - 1);
                for (int c = 0; c < n; ++c) {
                    if (c == i) continue;
                    row.push_back(a[r][c]);
                }
                minor.push_back(std::move(row));
            }
            SuperPolynomial cof = det_even(minor, ring);
            if ((i + j) % 2 == 1) cof = -cof;
            inv[i].push_back(cof * dinv);
        }
    return inv;
}

} // namespace

SuperPolynomial det_even(const std::vector<std::vector<SuperPolynomial>>& a, const SigPtr& ring) {
    for (auto& row : a)
        for (auto& e : row)
            if (e.parity() != Parity::Even)
                throw ParityError("det_even requires even entries");
    DetWorker w(a, ring);
    return w.run();
}

SuperPolynomial det_even(const SuperMatrix& a) {
    return det_even(block_of(a, 0, 0, a.shape().total()), a.ring());
}

SuperMatrix mat_inverse(const SuperMatrix& a) {
    if (a.declared_parity() != MatParity::Even)
        throw ParityError("inverse requires a declared-even matrix");
    const BlockShape& sh = a.shape();
    const SigPtr& ring = a.ring();

    // body is block diagonal for an even matrix
    SuperMatrix b = a.body();
    SuperMatrix binv(sh, ring, MatParity::Even);
    if (sh.m > 0) {
        auto inv = grid_inverse(block_of(b, 0, 0, sh.m), ring);
        for (int i = 0; i < sh.m; ++i)
            for (int j = 0; j < sh.m; ++j) binv.set(i, j, inv[i][j]);
    }
    if (sh.n > 0) {
        auto inv = grid_inverse(block_of(b, sh.m, sh.m, sh.n), ring);
        for (int i = 0; i < sh.n; ++i)
            for (int j = 0; j < sh.n; ++j) binv.set(sh.m + i, sh.m + j, inv[i][j]);
    }

    // a = b (I + b^{-1} nil); geometric series in the nilpotent part
    SuperMatrix nil = a - b;
    SuperMatrix s = binv * nil;  // nilpotent: entries have odd degree >= 1
    SuperMatrix acc = SuperMatrix::identity(sh, ring);
    SuperMatrix p = s;
    int bound = ring->odd_count();
    for (int k = 0; k < bound && !p.is_zero(); ++k) {
        acc = (k % 2 == 0) ? acc - p : acc + p;
        p = p * s;
    }
    return acc * binv;
}

SuperPolynomial berezinian(const SuperMatrix& a) {
    if (a.declared_parity() != MatParity::Even)
        throw ParityError("berezinian requires a declared-even matrix");
    const BlockShape& sh = a.shape();
    const SigPtr& ring = a.ring();
    if (sh.n == 0) return det_even(block_of(a, 0, 0, sh.m), ring);
    auto s = block_of(a, sh.m, sh.m, sh.n);
    auto sinv = grid_inverse(s, ring);

    // p - q s^{-1} r
    std::vector<std::vector<SuperPolynomial>> top(sh.m, std::vector<SuperPolynomial>());
    for (int i = 0; i < sh.m; ++i)
        for (int j = 0; j < sh.m; ++j) {
            SuperPolynomial e = a.at(i, j);
            for (int k = 0; k < sh.n; ++k)
                for (int l = 0; l < sh.n; ++l)
                    e -= a.at(i, sh.m + k) * sinv[k][l] * a.at(sh.m + l, j);
            top[i].push_back(std::move(e));
        }
    SuperPolynomial det_top = sh.m == 0 ? sp_constant(ring, Rational(1)) : det_even(top, ring);
    return det_top * poly_invert(det_even(s, ring));
}

std::vector<SuperPolynomial> power_sums(const SuperMatrix& a, int kmax, bool even_only) {
    if (a.declared_parity() != MatParity::Even)
        throw ParityError("power sums require a declared-even matrix");
    std::vector<SuperPolynomial> out;
    SuperMatrix p = a;
    for (int k = 1; k <= kmax; ++k) {
        if (!even_only || k % 2 == 0) out.push_back(supertrace(p));
        if (k < kmax) p = p * a;
    }
    return out;
}

SuperMatrix super_commutator(const SuperMatrix& x, const SuperMatrix& y) {
    MatParity px = x.declared_parity(), py = y.declared_parity();
    if (px == MatParity::None || py == MatParity::None)
        throw ParityError("super commutator requires homogeneous matrices");
    SuperMatrix xy = x * y;
    SuperMatrix yx = y * x;
    bool both_odd = px == MatParity::Odd && py == MatParity::Odd;
    return both_odd ? xy + yx : xy - yx;
}

} // namespace superorbit
