#include "superorbit/sampling.hpp"

#include <algorithm>

namespace superorbit {

int Rng::uniform(int lo, int hi) {
    return lo + (int)(eng_() % (uint64_t)(hi - lo + 1));
}

Rational Rng::rational(int max_num, int max_den) {
    return rat(uniform(-max_num, max_num), uniform(1, max_den));
}

Rational Rng::nonzero_rational(int max_num, int max_den) {
    for (;;) {
        Rational q = rational(max_num, max_den);
        if (!is_zero(q)) return q;
    }
}

Monomial random_monomial(const SigPtr& sig, int maxdeg, Rng& rng) {
    Monomial m;
    m.even_exp.assign(sig->even_count(), 0);
    int deg = rng.uniform(0, maxdeg);
    int total = sig->even_count() + sig->odd_count();
    for (int d = 0; d < deg && total > 0; ++d) {
        int pick = rng.uniform(0, total - 1);
        if (pick < sig->even_count()) {
            int cap = sig->cap(pick);
            if (cap == 0 || m.even_exp[pick] < cap) m.even_exp[pick]++;
        } else {
            int idx = pick - sig->even_count();
            if (std::find(m.odd_idx.begin(), m.odd_idx.end(), idx) == m.odd_idx.end())
                m.odd_idx.push_back(idx);
        }
    }
    std::sort(m.odd_idx.begin(), m.odd_idx.end());
    return m;
}

SuperPolynomial random_poly(const SigPtr& sig, int maxdeg, int terms, Rng& rng) {
    SuperPolynomial p(sig);
    for (int t = 0; t < terms; ++t)
        p.add_term(random_monomial(sig, maxdeg, rng), rng.rational());
    return p;
}

SuperPolynomial random_homogeneous(const SigPtr& sig, Parity want, int maxdeg, int terms, Rng& rng) {
    SuperPolynomial p(sig);
    int tries = 0;
    while (p.term_count() < (size_t)terms && tries++ < 60 * terms) {
        Monomial m = random_monomial(sig, maxdeg, rng);
        if (m.parity() == want) p.add_term(m, rng.rational());
    }
    return p;
}

SuperMatrix random_even_matrix(BlockShape shape, const SigPtr& ring, int maxdeg, int terms, Rng& rng) {
    SuperMatrix a(shape, ring, MatParity::Even);
    for (int i = 0; i < shape.total(); ++i)
        for (int j = 0; j < shape.total(); ++j) {
            Parity want = a.position_parity(i, j) == 0 ? Parity::Even : Parity::Odd;
            a.set(i, j, random_homogeneous(ring, want, maxdeg, terms, rng));
        }
    return a;
}

QMatrix random_unimodular(int n, Rng& rng, int spread) {
    QMatrix lower = q_identity(n), upper = q_identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i > j) lower[i][j] = rng.uniform(-spread, spread);
            if (i < j) upper[i][j] = rng.uniform(-spread, spread);
        }
    return q_mul(lower, upper);
}

SuperMatrix random_invertible_even(BlockShape shape, const SigPtr& ring, Rng& rng) {
    SuperMatrix num(shape, ring, MatParity::Even);
    QMatrix p = random_unimodular(shape.m, rng);
    QMatrix s = random_unimodular(shape.n, rng);
    for (int i = 0; i < shape.m; ++i)
        for (int j = 0; j < shape.m; ++j)
            if (!is_zero(p[i][j])) num.set(i, j, sp_constant(ring, p[i][j]));
    for (int i = 0; i < shape.n; ++i)
        for (int j = 0; j < shape.n; ++j)
            if (!is_zero(s[i][j])) num.set(shape.m + i, shape.m + j, sp_constant(ring, s[i][j]));

    SuperMatrix nil(shape, ring, MatParity::Even);
    for (int i = 0; i < shape.total(); ++i)
        for (int j = 0; j < shape.total(); ++j) {
            Parity want = nil.position_parity(i, j) == 0 ? Parity::Even : Parity::Odd;
            // nilpotent content only: keep terms of odd degree >= 1 (even slots
            // get degree-2 products of odd generators)
            SuperPolynomial e(ring);
            int pieces = rng.uniform(0, 2);
            for (int t = 0; t < pieces; ++t) {
                Monomial m = random_monomial(ring, 3, rng);
                if (m.odd_degree() == 0) continue;
                if (m.parity() != want) continue;
                e.add_term(m, rng.rational());
            }
            nil.set(i, j, std::move(e));
        }
    return num * (SuperMatrix::identity(shape, ring) + nil);
}

} // namespace superorbit
