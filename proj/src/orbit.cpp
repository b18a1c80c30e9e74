#include "superorbit/orbit.hpp"
#include "superorbit/sampling.hpp"

#include <sstream>

namespace superorbit {

AlgebraKind kind_from_string(const std::string& s) {
    if (s == "gl") return AlgebraKind::Gl;
    if (s == "sl") return AlgebraKind::Sl;
    if (s == "osp") return AlgebraKind::Osp;
    throw Error("unknown algebra kind '" + s + "'");
}

std::string kind_to_string(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::Gl: return "gl";
        case AlgebraKind::Sl: return "sl";
        case AlgebraKind::Osp: return "osp";
    }
    return "?";
}

OrbitSpec::OrbitSpec(AlgebraKind kind, int m, int n, QVector lambda)
    : kind_(kind), m_(m), n_(n), lambda_(std::move(lambda)) {
    int t = m_ + n_;
    if ((int)lambda_.size() != t) throw Error("lambda length must be m+n");
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            if (lambda_[i] == lambda_[j])
                throw NonRegular("eigenvalues must be pairwise distinct");
    if (kind_ == AlgebraKind::Sl) {
        Rational str(0);
        for (int i = 0; i < t; ++i) str += (i < m_) ? lambda_[i] : -lambda_[i];
        if (!is_zero(str)) throw NotInOrbit("sl target must have supertrace zero");
    }
    if (kind_ == AlgebraKind::Osp) {
        // diagonal members of osp(m|2n): zero even part, balanced (mu, -mu) pairs
        if (n_ % 2 != 0) throw Error("osp odd size must be even");
        for (int i = 0; i < m_; ++i)
            if (!is_zero(lambda_[i]))
                throw NotInOrbit("osp diagonal target needs zero entries in the even block");
        for (int i = 0; i < n_ / 2; ++i)
            if (lambda_[m_ + i] != -lambda_[m_ + n_ / 2 + i])
                throw NotInOrbit("osp diagonal target needs balanced (mu, -mu) pairs");
    }

    auto num_ring = make_signature(0, 0);
    auto ps = power_sums(target(num_ring), t, even_powers_only());
    for (auto& p : ps) invariants_.push_back(p.coeff(p.constant_monomial()));
}

SuperMatrix OrbitSpec::target(const SigPtr& ring) const {
    SuperMatrix x0({m_, n_}, ring, MatParity::Even);
    for (int i = 0; i < m_ + n_; ++i)
        x0.set(i, i, sp_constant(ring, lambda_[i]));
    return x0;
}

MembershipResult membership_check(const SuperMatrix& w, const OrbitSpec& spec) {
    if (!(w.shape() == spec.shape())) throw SignatureMismatch("shape mismatch");
    MembershipResult res;
    res.witness = power_sums(w, spec.shape().total(), spec.even_powers_only());
    res.member = true;
    const QVector& c = spec.invariants();
    for (size_t i = 0; i < res.witness.size(); ++i) {
        SuperPolynomial expect = sp_constant(w.ring(), c[i]);
        if (!(res.witness[i] == expect)) res.member = false;
    }
    return res;
}

namespace {

/// Left eigenvector rows: g0 W0 = X0 g0, i.e. row_i g0 is a left eigenvector
/// of W0 for lambda_i.  Exact nullspace of (W0 - lambda I)^T per eigenvalue.
QMatrix order_zero_solve(const QMatrix& w0, const QVector& lambda) {
    int t = (int)w0.size();
    QMatrix g0(t, QVector(t, Rational(0)));
    for (int i = 0; i < t; ++i) {
        QMatrix shifted(t, QVector(t, Rational(0)));
        for (int r = 0; r < t; ++r)
            for (int c = 0; c < t; ++c) {
                shifted[r][c] = w0[c][r];  // transpose
                if (r == c) shifted[r][c] -= lambda[i];
            }
        auto ns = nullspace(shifted);
        if (ns.empty())
            throw NotInOrbit("body spectrum does not contain a target eigenvalue");
        if (ns.size() > 1)
            throw NonRegular("body has a repeated eigenvalue");
        g0[i] = ns[0];
    }
    if (is_zero(q_det(g0)))
        throw NotInOrbit("body eigenvectors are not independent");
    return g0;
}

/// Numeric matrices entering the conjugation must respect the even pattern;
/// a numeric entry in an odd block means the spectrum is split across blocks
/// differently from the target, which no even group element can fix.
SuperMatrix from_numeric_even(const QMatrix& q, BlockShape sh, const SigPtr& ring) {
    SuperMatrix a(sh, ring, MatParity::Even);
    for (int i = 0; i < sh.total(); ++i)
        for (int j = 0; j < sh.total(); ++j)
            if (!is_zero(q[i][j])) {
                try {
                    a.set(i, j, sp_constant(ring, q[i][j]));
                } catch (const ParityError&) {
                    throw NotInOrbit("body spectrum is split across blocks differently from the target");
                }
            }
    return a;
}

int term_count(const SuperMatrix& a) {
    int c = 0;
    for (int i = 0; i < a.shape().total(); ++i)
        for (int j = 0; j < a.shape().total(); ++j) c += (int)a.at(i, j).term_count();
    return c;
}

} // namespace

DiagonalizationResult superdiagonalize(const SuperMatrix& w, const OrbitSpec& spec) {
    if (!(w.shape() == spec.shape())) throw SignatureMismatch("shape mismatch");
    if (w.declared_parity() != MatParity::Even)
        throw ParityError("diagonalization requires a declared-even matrix");
    const SigPtr& ring = w.ring();
    const BlockShape sh = w.shape();
    int t = sh.total();
    const QVector& lambda = spec.lambda();

    if (!w.body_is_constant())
        throw UnsupportedField("matrix body must be numeric for the classical solve");

    int max_order = ring->odd_count();
    std::vector<SuperMatrix> w_parts;
    for (int k = 0; k <= max_order; ++k) w_parts.push_back(w.odd_component(k));

    // order 0: classical eigen solve over the rationals
    QMatrix g0_num = order_zero_solve(w.constant_body(), lambda);
    SuperMatrix g0 = from_numeric_even(g0_num, sh, ring);
    auto g0inv_num = q_inverse(g0_num);
    SuperMatrix g0inv = from_numeric_even(*g0inv_num, sh, ring);
    SuperMatrix x0 = spec.target(ring);

    std::vector<SuperMatrix> g_parts{g0};
    std::vector<SuperMatrix> d_parts{x0};

    for (int nord = 1; nord <= max_order; ++nord) {
        // K_n = g0 W_n g0^{-1} + sum_{j=1}^{n-1} (g_j W_{n-j} - D_j g_{n-j}) g0^{-1}
        SuperMatrix k_n = g0 * w_parts[nord] * g0inv;
        for (int j = 1; j < nord; ++j)
            k_n = k_n + (g_parts[j] * w_parts[nord - j] - d_parts[j] * g_parts[nord - j]) * g0inv;

        SuperMatrix d_n(sh, ring, MatParity::Even);
        SuperMatrix y_n(sh, ring, MatParity::Even);  // g_n g0^{-1}
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) {
                if (i == j) d_n.set(i, i, k_n.at(i, i));
                else y_n.set(i, j, k_n.at(i, j) * (Rational(1) / (lambda[i] - lambda[j])));
            }
        g_parts.push_back(y_n * g0);
        d_parts.push_back(d_n);
    }

    DiagonalizationResult res{SuperMatrix::zero(sh, ring, MatParity::Even),
                              SuperMatrix::zero(sh, ring, MatParity::Even),
                              {}, false, false};
    SuperMatrix g = g_parts[0], d = d_parts[0];
    for (int k = 1; k <= max_order; ++k) {
        g = g + g_parts[k];
        d = d + d_parts[k];
    }

    // residual gW - Dg must vanish at every odd order
    SuperMatrix residual = g * w - d * g;
    for (int k = 0; k <= max_order; ++k)
        res.per_order_residuals.push_back(term_count(residual.odd_component(k)));
    if (term_count(residual) != 0)
        throw Error("diagonalization residual is nonzero");  // guards the K_n rearrangement

    res.g = std::move(g);
    res.diagonal = std::move(d);
    res.membership = membership_check(w, spec).member;
    res.matches_target = (res.diagonal == x0);
    return res;
}

VandermondeResult vandermonde_criterion(const QVector& lambda, int m, int n) {
    int t = m + n;
    if ((int)lambda.size() != t) throw Error("lambda length must be m+n");
    QMatrix mat(t, QVector(t, Rational(0)));
    for (int k = 0; k < t; ++k)
        for (int j = 0; j < t; ++j) {
            Rational v = rat_pow(lambda[j], k);
            mat[k][j] = (j >= m) ? -v : v;
        }
    VandermondeResult res;
    res.det = q_det(mat);
    res.product = 1;
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < i; ++j) res.product *= lambda[i] - lambda[j];
    res.stated_sign = ((n * m) % 2 == 0) ? 1 : -1;
    return res;
}

AdInvarianceReport ad_invariance_check(AlgebraKind kind, int m, int n, int kmax,
                                       int thetas, uint64_t seed) {
    AlgebraPtr L;
    switch (kind) {
        case AlgebraKind::Gl: L = build_gl(m, n); break;
        case AlgebraKind::Sl: L = build_sl(m, n); break;
        case AlgebraKind::Osp: L = build_osp(m, n); break;
    }
    BlockShape sh = L->shape();
    int t = sh.total();
    int d = L->dim();

    // ring: one coordinate per basis element (parity-matched) + theta parameters
    std::vector<int> caps(L->even_count(), 0);
    auto sig = make_signature(L->even_count(), L->odd_count() + thetas, caps);

    SuperMatrix M(sh, sig, MatParity::Even);
    {
        int ev = 0, od = 0;
        std::vector<SuperPolynomial> coords;
        for (int I = 0; I < d; ++I)
            coords.push_back(L->parity(I) == 0 ? sp_even(sig, ev++) : sp_odd(sig, od++));
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) {
                SuperPolynomial e(sig);
                for (int I = 0; I < d; ++I) {
                    const SuperMatrix& X = L->realization()[I];
                    Rational c = X.at(i, j).coeff(X.at(i, j).constant_monomial());
                    if (!is_zero(c)) e += coords[I] * c;
                }
                M.set(i, j, std::move(e));
            }
    }

    // g = g_num (I + Nil(theta)): thetas placed at random odd block positions
    Rng rng(seed);
    if (sh.m == 0 || sh.n == 0) thetas = 0;  // no odd block positions exist
    SuperMatrix nil(sh, sig, MatParity::Even);
    for (int k = 0; k < thetas; ++k) {
        int i, j;
        do {
            i = rng.uniform(0, t - 1);
            j = rng.uniform(0, t - 1);
        } while (nil.position_parity(i, j) == 0);
        SuperPolynomial theta = sp_odd(sig, L->odd_count() + k);
        nil.set(i, j, nil.at(i, j) + theta * rng.nonzero_rational(2, 1));
    }
    SuperMatrix g_num(sh, sig, MatParity::Even);
    {
        QMatrix p = random_unimodular(sh.m, rng), s = random_unimodular(sh.n, rng);
        for (int i = 0; i < sh.m; ++i)
            for (int j = 0; j < sh.m; ++j)
                if (!is_zero(p[i][j])) g_num.set(i, j, sp_constant(sig, p[i][j]));
        for (int i = 0; i < sh.n; ++i)
            for (int j = 0; j < sh.n; ++j)
                if (!is_zero(s[i][j])) g_num.set(sh.m + i, sh.m + j, sp_constant(sig, s[i][j]));
    }
    SuperMatrix g = g_num * (SuperMatrix::identity(sh, sig) + nil);
    SuperMatrix conj = g * M * mat_inverse(g);

    AdInvarianceReport rep;
    rep.pass = true;
    SuperMatrix pow_conj = conj, pow_m = M;
    for (int k = 1; k <= kmax; ++k) {
        SuperPolynomial diff = supertrace(pow_conj) - supertrace(pow_m);
        if (!diff.is_zero()) {
            rep.pass = false;
            std::ostringstream os;
            os << "k=" << k << ": nonzero difference (" << diff.term_count() << " terms)";
            rep.failures.push_back(os.str());
        }
        if (k < kmax) {
            pow_conj = pow_conj * conj;
            pow_m = pow_m * M;
        }
    }
    return rep;
}

SyzygyReport syzygy_verify(const SyzygyInstance& inst) {
    size_t n = inst.q.size();
    if (inst.f.size() != n || inst.F.size() != n)
        throw Error("syzygy instance sizes disagree");
    for (auto& row : inst.F)
        if (row.size() != n) throw Error("certificate matrix is not square");

    const SigPtr& sig = inst.q.empty() ? nullptr : inst.q[0].sig();
    SyzygyReport rep;
    rep.generators_even = true;
    for (auto& q : inst.q)
        if (q.parity() != Parity::Even) rep.generators_even = false;

    SuperPolynomial sum(sig);
    for (size_t i = 0; i < n; ++i) sum += inst.f[i] * inst.q[i];
    rep.sum_vanishes = sum.is_zero();

    rep.antisymmetric = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!(inst.F[i][j] == -inst.F[j][i])) rep.antisymmetric = false;

    rep.certifies = true;
    for (size_t i = 0; i < n; ++i) {
        SuperPolynomial rhs(sig);
        for (size_t j = 0; j < n; ++j) rhs += inst.F[i][j] * inst.q[j];
        if (!(inst.f[i] == rhs)) rep.certifies = false;
    }
    return rep;
}

} // namespace superorbit
