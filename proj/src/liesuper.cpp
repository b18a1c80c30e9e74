#include "superorbit/liesuper.hpp"

#include <sstream>

namespace superorbit {

namespace {

QVector flatten(const SuperMatrix& a) {
    int t = a.shape().total();
    QVector v;
    v.reserve((size_t)t * t);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            v.push_back(a.at(i, j).coeff(a.at(i, j).constant_monomial()));
    return v;
}

/// Structure constants from a matrix realization: bracket every pair and
/// express the result over the basis span.
std::vector<std::vector<BracketRow>> table_from_basis(const std::vector<SuperMatrix>& basis,
                                                      LinearSolver& span) {
    int d = (int)basis.size();
    std::vector<std::vector<BracketRow>> table(d, std::vector<BracketRow>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            SuperMatrix br = super_commutator(basis[i], basis[j]);
            auto coords = span.express(flatten(br));
            if (!coords)
                throw Error("bracket left the basis span; basis is not closed");
            BracketRow row;
            for (int k = 0; k < d; ++k)
                if (!is_zero((*coords)[k])) row.emplace_back(k, (*coords)[k]);
            table[i][j] = std::move(row);
        }
    return table;
}

AlgebraPtr from_matrix_basis(BlockShape shape, std::vector<int> parity,
                             std::vector<SuperMatrix> basis) {
    LinearSolver span((int)flatten(basis[0]).size());
    for (auto& b : basis)
        if (!span.add_row(flatten(b))) throw Error("matrix basis is linearly dependent");
    auto table = table_from_basis(basis, span);
    auto L = std::make_shared<LieSuperAlgebra>(std::move(parity), std::move(table));
    L->attach_realization(shape, std::move(basis));
    return L;
}

} // namespace

LieSuperAlgebra::LieSuperAlgebra(std::vector<int> parity,
                                 std::vector<std::vector<BracketRow>> table)
    : parity_(std::move(parity)), table_(std::move(table)) {
    int d = (int)parity_.size();
    if ((int)table_.size() != d) throw Error("bracket table size mismatch");
    for (auto& row : table_)
        if ((int)row.size() != d) throw Error("bracket table size mismatch");
    // evens-first convention fixes normal words and coordinate rings
    bool seen_odd = false;
    for (int p : parity_) {
        if (p != 0 && p != 1) throw Error("parity entries must be 0 or 1");
        if (p == 1) seen_odd = true;
        else if (seen_odd) throw Error("basis must list even elements before odd ones");
        if (p == 0) ++even_count_;
    }
}

Rational LieSuperAlgebra::structure_constant(int i, int j, int k) const {
    for (auto& [kk, v] : bracket(i, j))
        if (kk == k) return v;
    return Rational(0);
}

void LieSuperAlgebra::attach_realization(BlockShape shape, std::vector<SuperMatrix> basis) {
    if ((int)basis.size() != dim()) throw Error("realization size mismatch");
    shape_ = shape;
    basis_ = std::move(basis);
    span_ = std::make_shared<LinearSolver>(shape.total() * shape.total());
    for (auto& b : basis_) span_->add_row(flatten(b));
}

std::optional<QVector> LieSuperAlgebra::coordinates_of(const QMatrix& flat) const {
    if (!span_) return std::nullopt;
    QVector v;
    for (auto& row : flat)
        for (auto& q : row) v.push_back(q);
    return span_->express(std::move(v));
}

AlgebraPtr build_gl(int m, int n) {
    BlockShape sh{m, n};
    if (sh.total() < 1) throw Error("gl(m|n) needs m+n >= 1");
    auto ring = make_signature(0, 0);

    std::vector<SuperMatrix> basis;
    std::vector<int> parity;
    auto unit = [&](int i, int j, MatParity p) {
        SuperMatrix e(sh, ring, p);
        e.set(i, j, sp_constant(ring, Rational(1)));
        return e;
    };
    // even: p block then s block, row-major
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) { basis.push_back(unit(i, j, MatParity::Even)); parity.push_back(0); }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) { basis.push_back(unit(m + i, m + j, MatParity::Even)); parity.push_back(0); }
    // odd: q block then r block, row-major
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) { basis.push_back(unit(i, m + j, MatParity::Odd)); parity.push_back(1); }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) { basis.push_back(unit(m + i, j, MatParity::Odd)); parity.push_back(1); }

    return from_matrix_basis(sh, std::move(parity), std::move(basis));
}

AlgebraPtr build_sl(int m, int n) {
    if (m == n) throw Error("sl(m|n) with m == n is rejected (degenerate form)");
    BlockShape sh{m, n};
    if (sh.total() < 1) throw Error("sl(m|n) needs m+n >= 1");
    auto ring = make_signature(0, 0);
    int t = sh.total();

    auto unit = [&](int i, int j, MatParity p) {
        SuperMatrix e(sh, ring, p);
        e.set(i, j, sp_constant(ring, Rational(1)));
        return e;
    };
    auto str_sign = [&](int i) { return i < m ? 1 : -1; };

    std::vector<SuperMatrix> basis;
    std::vector<int> parity;
    // traceless diagonal combinations H_i = E_ii - (str E_ii / str E_ll) E_ll
    for (int i = 0; i + 1 < t; ++i) {
        SuperMatrix h(sh, ring, MatParity::Even);
        h.set(i, i, sp_constant(ring, Rational(1)));
        Rational ratio = rat(str_sign(i), str_sign(t - 1));
        h.set(t - 1, t - 1, sp_constant(ring, -ratio));
        basis.push_back(std::move(h));
        parity.push_back(0);
    }
    // even off-diagonal inside the diagonal blocks
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j) { basis.push_back(unit(i, j, MatParity::Even)); parity.push_back(0); }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) { basis.push_back(unit(m + i, m + j, MatParity::Even)); parity.push_back(0); }
    // odd blocks
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) { basis.push_back(unit(i, m + j, MatParity::Odd)); parity.push_back(1); }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) { basis.push_back(unit(m + i, j, MatParity::Odd)); parity.push_back(1); }

    if (basis.empty()) {
        // sl(1|0) and friends: zero-dimensional algebra
        return std::make_shared<LieSuperAlgebra>(std::vector<int>{},
                                                 std::vector<std::vector<BracketRow>>{});
    }
    return from_matrix_basis(sh, std::move(parity), std::move(basis));
}

AlgebraPtr build_osp(int m, int two_n) {
    if (m < 1 || two_n < 2 || two_n % 2 != 0)
        throw Error("osp(m|2n) needs m >= 1 and a positive even odd size");
    int n = two_n / 2;
    BlockShape sh{m, two_n};
    int t = sh.total();
    auto ring = make_signature(0, 0);

    // graded form J = diag(I_m, standard symplectic)
    QMatrix J(t, QVector(t, Rational(0)));
    for (int i = 0; i < m; ++i) J[i][i] = 1;
    for (int i = 0; i < n; ++i) {
        J[m + i][m + n + i] = 1;
        J[m + n + i][m + i] = -1;
    }

    auto in_block = [&](int i) { return i < m ? 0 : 1; };

    // supertranspose of a parity-homogeneous matrix:
    //   even X: [[a^T, c^T], [-b^T, d^T]],  odd X: [[a^T, -c^T], [b^T, d^T]]
    auto supertranspose = [&](const QMatrix& x, int px) {
        QMatrix r(t, QVector(t, Rational(0)));
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) {
                Rational v = x[j][i];
                int bi = in_block(i), bj = in_block(j);
                if (px == 0 && bi == 1 && bj == 0) v = -v;        // -b^T slot
                if (px == 1 && bi == 0 && bj == 1) v = -v;        // -c^T slot
                r[i][j] = v;
            }
        return r;
    };

    // nullspace of X -> X^{st} J + J X restricted to one parity sector
    auto sector_basis = [&](int px) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                if ((in_block(i) + in_block(j)) % 2 == px) slots.emplace_back(i, j);
        // rows: constraint entries; cols: slots
        QMatrix sys(t * t, QVector(slots.size(), Rational(0)));
        for (size_t s = 0; s < slots.size(); ++s) {
            QMatrix x(t, QVector(t, Rational(0)));
            x[slots[s].first][slots[s].second] = 1;
            QMatrix lhs = q_mul(supertranspose(x, px), J);
            QMatrix rhs = q_mul(J, x);
            for (int i = 0; i < t; ++i)
                for (int j = 0; j < t; ++j)
                    sys[i * t + j][s] = lhs[i][j] + rhs[i][j];
        }
        std::vector<QMatrix> out;
        for (auto& v : nullspace(sys)) {
            QMatrix x(t, QVector(t, Rational(0)));
            for (size_t s = 0; s < slots.size(); ++s)
                x[slots[s].first][slots[s].second] = v[s];
            out.push_back(std::move(x));
        }
        return out;
    };

    std::vector<SuperMatrix> basis;
    std::vector<int> parity;
    auto push = [&](const QMatrix& x, MatParity p) {
        SuperMatrix e(sh, ring, p);
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                if (!is_zero(x[i][j])) e.set(i, j, sp_constant(ring, x[i][j]));
        basis.push_back(std::move(e));
        parity.push_back(p == MatParity::Even ? 0 : 1);
    };
    for (auto& x : sector_basis(0)) push(x, MatParity::Even);
    for (auto& x : sector_basis(1)) push(x, MatParity::Odd);

    return from_matrix_basis(sh, std::move(parity), std::move(basis));
}

AxiomReport check_axioms(const LieSuperAlgebra& L) {
    AxiomReport rep;
    int d = L.dim();
    auto name = [&](int i, int j, int k) {
        std::ostringstream os;
        os << "(" << i + 1 << "," << j + 1 << "," << k + 1 << ")";
        return os.str();
    };

    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            for (auto& [k, v] : L.bracket(i, j)) {
                if ((L.parity(i) + L.parity(j)) % 2 != L.parity(k))
                    rep.grading_violations.push_back("c" + name(i, j, k));
            }
            // graded antisymmetry: c_JI^K = -(-1)^{p_I p_J} c_IJ^K
            int sgn_flip = (L.parity(i) && L.parity(j)) ? 1 : -1;
            for (int k = 0; k < d; ++k) {
                Rational lhs = L.structure_constant(j, i, k);
                Rational rhs = L.structure_constant(i, j, k) * sgn_flip;
                if (lhs != rhs)
                    rep.antisymmetry_violations.push_back("c" + name(i, j, k));
            }
        }

    // graded Jacobi on all triples:
    // [X_I,[X_J,X_K]] + (-1)^{p_I(p_J+p_K)}[X_J,[X_K,X_I]]
    //                 + (-1)^{p_K(p_I+p_J)}[X_K,[X_I,X_J]] = 0
    auto add_nested = [&](QVector& acc, int a, int b, int c, int sign) {
        for (auto& [mid, v1] : L.bracket(b, c))
            for (auto& [k, v2] : L.bracket(a, mid)) acc[k] += v1 * v2 * sign;
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                QVector acc(d, Rational(0));
                int pi = L.parity(i), pj = L.parity(j), pk = L.parity(k);
                add_nested(acc, i, j, k, 1);
                add_nested(acc, j, k, i, (pi * pj + pi * pk) % 2 ? -1 : 1);
                add_nested(acc, k, i, j, (pi * pk + pj * pk) % 2 ? -1 : 1);
                for (int l = 0; l < d; ++l)
                    if (!is_zero(acc[l])) {
                        rep.jacobi_violations.push_back(name(i, j, k) + "->" + std::to_string(l + 1));
                        break;
                    }
            }
    return rep;
}

KillingForm killing_form(const LieSuperAlgebra& L) {
    int d = L.dim();
    // ad_I as a d x d matrix: (ad_I)_{K,J} = c_IJ^K
    std::vector<QMatrix> ad(d, QMatrix(d, QVector(d, Rational(0))));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (auto& [k, v] : L.bracket(i, j)) ad[i][k][j] = v;

    KillingForm kf;
    kf.B.assign(d, QVector(d, Rational(0)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Rational tr(0);
            for (int k = 0; k < d; ++k) {
                Rational diag(0);
                for (int l = 0; l < d; ++l) diag += ad[i][k][l] * ad[j][l][k];
                tr += L.parity(k) ? -diag : diag;
            }
            kf.B[i][j] = tr;
        }

    int e = L.even_count();
    QMatrix ee(e, QVector(e)), oo(d - e, QVector(d - e));
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) ee[i][j] = kf.B[i][j];
    for (int i = e; i < d; ++i)
        for (int j = e; j < d; ++j) oo[i - e][j - e] = kf.B[i][j];
    kf.det_even = e ? q_det(ee) : Rational(1);
    kf.det_odd = (d - e) ? q_det(oo) : Rational(1);
    kf.nondegenerate = !is_zero(kf.det_even) && !is_zero(kf.det_odd);
    return kf;
}

PoissonRing::PoissonRing(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
    int evens = algebra_->even_count();
    int odds = algebra_->odd_count();
    auto sig = std::make_shared<RingSignature>(evens, odds);
    // display names carry the global basis index
    for (int i = 0; i < evens; ++i) sig->set_even_name(i, "x" + std::to_string(i + 1));
    for (int i = 0; i < odds; ++i) sig->set_odd_name(i, "t" + std::to_string(evens + i + 1));
    sig_ = sig;
}

std::pair<bool, int> PoissonRing::locate(int basis_index) const {
    int evens = algebra_->even_count();
    if (basis_index < evens) return {true, basis_index};
    return {false, basis_index - evens};
}

int PoissonRing::basis_index_of(bool is_even, int local_index) const {
    return is_even ? local_index : algebra_->even_count() + local_index;
}

SuperPolynomial PoissonRing::coordinate(int basis_index) const {
    auto [is_even, local] = locate(basis_index);
    return is_even ? sp_even(sig_, local) : sp_odd(sig_, local);
}

namespace {

/// Splits the canonical word of a monomial into its leading generator and rest.
struct MonoSplit {
    int basis_index;   // leading generator as basis index
    Monomial rest;
};

std::optional<MonoSplit> split_leading(const Monomial& m, const PoissonRing& P) {
    MonoSplit s;
    s.rest = m;
    for (size_t i = 0; i < m.even_exp.size(); ++i)
        if (m.even_exp[i] > 0) {
            s.basis_index = P.basis_index_of(true, (int)i);
            s.rest.even_exp[i] -= 1;
            return s;
        }
    if (!m.odd_idx.empty()) {
        s.basis_index = P.basis_index_of(false, m.odd_idx.front());
        s.rest.odd_idx.erase(s.rest.odd_idx.begin());
        return s;
    }
    return std::nullopt;
}

SuperPolynomial mono_poly(const Monomial& m, const SigPtr& sig) {
    SuperPolynomial p(sig);
    p.add_term(m, Rational(1));
    return p;
}

SuperPolynomial bracket_gen_mono(int I, const Monomial& mb, const PoissonRing& P);

/// {mono_a, mono_b} by splitting the first argument:
/// {x_I b, c} = x_I {b,c} + (-1)^{p_b p_c} {x_I,c} b
SuperPolynomial bracket_mono_mono(const Monomial& ma, const Monomial& mb, const PoissonRing& P) {
    const SigPtr& sig = P.sig();
    auto split = split_leading(ma, P);
    if (!split) return SuperPolynomial(sig);  // constant first argument

    int pb = (int)split->rest.odd_idx.size() % 2;
    int pc = (int)mb.odd_idx.size() % 2;

    SuperPolynomial term1 = P.coordinate(split->basis_index) *
                            bracket_mono_mono(split->rest, mb, P);
    SuperPolynomial term2 = bracket_gen_mono(split->basis_index, mb, P) *
                            mono_poly(split->rest, sig);
    if (pb * pc % 2) term2 = -term2;
    return term1 + term2;
}

/// {x_I, x_J c} = {x_I,x_J} c + (-1)^{p_I p_J} x_J {x_I, c}
SuperPolynomial bracket_gen_mono(int I, const Monomial& mb, const PoissonRing& P) {
    const SigPtr& sig = P.sig();
    auto split = split_leading(mb, P);
    if (!split) return SuperPolynomial(sig);

    const LieSuperAlgebra& L = *P.algebra();
    int J = split->basis_index;
    SuperPolynomial pair(sig);
    for (auto& [k, v] : L.bracket(I, J)) pair += P.coordinate(k) * v;

    SuperPolynomial term1 = pair * mono_poly(split->rest, sig);
    SuperPolynomial term2 = P.coordinate(J) * bracket_gen_mono(I, split->rest, P);
    if (L.parity(I) && L.parity(J)) term2 = -term2;
    return term1 + term2;
}

} // namespace

SuperPolynomial poisson_bracket(const SuperPolynomial& f, const SuperPolynomial& g,
                                const PoissonRing& P) {
    require_same_ring(f.sig(), P.sig());
    require_same_ring(g.sig(), P.sig());
    SuperPolynomial out(P.sig());
    for (auto& [ma, ca] : f.terms())
        for (auto& [mb, cb] : g.terms())
            out += bracket_mono_mono(ma, mb, P) * (ca * cb);
    return out;
}

} // namespace superorbit
