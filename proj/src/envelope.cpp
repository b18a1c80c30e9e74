#include "superorbit/envelope.hpp"

#include <algorithm>
#include <numeric>
#include <cassert>

namespace superorbit {

HPolynomial to_hpoly(const SuperPolynomial& p, int order) {
    HPolynomial r(p.sig());
    for (auto& [m, c] : p.terms()) r.add_term(m, HSeries::constant(c, order));
    return r;
}

SuperPolynomial h_slice(const HPolynomial& p, int k) {
    SuperPolynomial r(p.sig());
    for (auto& [m, c] : p.terms()) r.add_term(m, c.at(k));
    return r;
}

bool is_normal_word(const NormalWord& w, const LieSuperAlgebra& L) {
    for (size_t i = 0; i < w.idx.size(); ++i) {
        if (w.idx[i] < 0 || w.idx[i] >= L.dim()) return false;
        if (i > 0) {
            if (w.idx[i] < w.idx[i - 1]) return false;
            if (w.idx[i] == w.idx[i - 1] && L.parity(w.idx[i]) == 1) return false;
        }
    }
    return true;
}

EnvElement EnvElement::unit(AlgebraPtr algebra, int h_order) {
    EnvElement e(std::move(algebra), h_order);
    e.add(NormalWord{}, HSeries::constant(Rational(1), h_order));
    return e;
}

EnvElement EnvElement::generator(AlgebraPtr algebra, int h_order, int basis_index) {
    EnvElement e(algebra, h_order);
    if (basis_index < 0 || basis_index >= algebra->dim())
        throw Error("basis index out of range");
    e.add(NormalWord{{basis_index}}, HSeries::constant(Rational(1), h_order));
    return e;
}

HSeries EnvElement::coeff(const NormalWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? HSeries(h_order_) : it->second;
}

void EnvElement::add(const NormalWord& w, const HSeries& c) {
    if (c.is_zero()) return;
    if (!is_normal_word(w, *algebra_)) throw Error("word is not in normal form");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

EnvElement& EnvElement::operator+=(const EnvElement& o) {
    if (!(*algebra_ == *o.algebra_) || h_order_ != o.h_order_)
        throw SignatureMismatch("enveloping-algebra elements live in different algebras");
    for (auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

EnvElement& EnvElement::operator-=(const EnvElement& o) {
    if (!(*algebra_ == *o.algebra_) || h_order_ != o.h_order_)
        throw SignatureMismatch("enveloping-algebra elements live in different algebras");
    for (auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

EnvElement EnvElement::operator-() const {
    EnvElement r(algebra_, h_order_);
    for (auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

EnvElement& EnvElement::scale(const HSeries& s) {
    std::map<NormalWord, HSeries> out;
    for (auto& [w, c] : terms_) {
        HSeries v = c * s;
        if (!v.is_zero()) out.emplace(w, std::move(v));
    }
    terms_ = std::move(out);
    return *this;
}

EnvElement& EnvElement::scale(const Rational& s) {
    return scale(HSeries::constant(s, h_order_));
}

namespace {

#ifndef NDEBUG
// termination metric for the rewriting worklist: (length, #inversions)
std::pair<size_t, size_t> rewrite_measure(const std::vector<int>& w) {
    size_t inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return {w.size(), inv};
}
#endif

} // namespace

EnvElement normal_form(const AlgebraPtr& algebra, int h_order, const std::vector<int>& word,
                       const HSeries& coeff, RewriteStrategy strategy) {
    EnvElement out(algebra, h_order);
    const LieSuperAlgebra& L = *algebra;
    for (int i : word)
        if (i < 0 || i >= L.dim()) throw Error("basis index out of range");

    std::vector<std::pair<std::vector<int>, HSeries>> work;
    work.emplace_back(word, coeff);

    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        if (c.is_zero()) continue;

        // locate the violating adjacent pair dictated by the strategy
        int pos = -1;
        int len = (int)w.size();
        auto violates = [&](int t) {
            return w[t] > w[t + 1] || (w[t] == w[t + 1] && L.parity(w[t]) == 1);
        };
        if (strategy == RewriteStrategy::Leftmost) {
            for (int t = 0; t + 1 < len; ++t)
                if (violates(t)) { pos = t; break; }
        } else {
            for (int t = len - 2; t >= 0; --t)
                if (violates(t)) { pos = t; break; }
        }

        if (pos < 0) {
            out.add(NormalWord{std::move(w)}, c);
            continue;
        }

        int J = w[pos], I = w[pos + 1];
#ifndef NDEBUG
        auto measure = rewrite_measure(w);
#endif
        if (J > I) {
            // X_J X_I = (-1)^{p_I p_J} X_I X_J + h [X_J, X_I]
            std::vector<int> swapped = w;
            std::swap(swapped[pos], swapped[pos + 1]);
            assert(rewrite_measure(swapped) < measure);
            HSeries cs = c;
            if (L.parity(I) && L.parity(J)) cs = -cs;
            work.emplace_back(std::move(swapped), std::move(cs));

            HSeries ch = c.shifted(1);
            if (!ch.is_zero()) {
                for (auto& [k, v] : L.bracket(J, I)) {
                    std::vector<int> contracted;
                    contracted.reserve(w.size() - 1);
                    contracted.insert(contracted.end(), w.begin(), w.begin() + pos);
                    contracted.push_back(k);
                    contracted.insert(contracted.end(), w.begin() + pos + 2, w.end());
                    work.emplace_back(std::move(contracted), ch * v);
                }
            }
        } else {
            // odd square: X_a X_a = (h/2) [X_a, X_a]
            HSeries ch = c.shifted(1) * rat(1, 2);
            if (!ch.is_zero()) {
                for (auto& [k, v] : L.bracket(J, J)) {
                    std::vector<int> contracted;
                    contracted.reserve(w.size() - 1);
                    contracted.insert(contracted.end(), w.begin(), w.begin() + pos);
                    contracted.push_back(k);
                    contracted.insert(contracted.end(), w.begin() + pos + 2, w.end());
                    work.emplace_back(std::move(contracted), ch * v);
                }
            }
        }
    }
    return out;
}

EnvElement env_mul(const EnvElement& a, const EnvElement& b, RewriteStrategy strategy) {
    if (!(*a.algebra() == *b.algebra()) || a.h_order() != b.h_order())
        throw SignatureMismatch("enveloping-algebra elements live in different algebras");
    EnvElement out(a.algebra(), a.h_order());
    for (auto& [wa, ca] : a.terms())
        for (auto& [wb, cb] : b.terms()) {
            std::vector<int> cat = wa.idx;
            cat.insert(cat.end(), wb.idx.begin(), wb.idx.end());
            out += normal_form(a.algebra(), a.h_order(), cat, ca * cb, strategy);
        }
    return out;
}

NormalWord word_of_monomial(const Monomial& m, const PoissonRing& P) {
    NormalWord w;
    for (size_t i = 0; i < m.even_exp.size(); ++i)
        for (int e = 0; e < m.even_exp[i]; ++e)
            w.idx.push_back(P.basis_index_of(true, (int)i));
    for (int o : m.odd_idx) w.idx.push_back(P.basis_index_of(false, o));
    std::sort(w.idx.begin(), w.idx.end());
    return w;
}

Monomial monomial_of_word(const NormalWord& w, const PoissonRing& P) {
    Monomial m;
    m.even_exp.assign(P.sig()->even_count(), 0);
    for (int i : w.idx) {
        auto [is_even, local] = P.locate(i);
        if (is_even) m.even_exp[local]++;
        else m.odd_idx.push_back(local);
    }
    std::sort(m.odd_idx.begin(), m.odd_idx.end());
    return m;
}

namespace {

Rational factorial(int n) {
    Rational f(1);
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

/// Signed sum over all permutations of one monomial's word.
EnvElement symmetrize_word(const std::vector<int>& base, const HSeries& coeff,
                           const AlgebraPtr& L, int h_order) {
    int p = (int)base.size();
    if (p > 6) throw DegreeOverflow("symmetrizer degree cap (6) exceeded");
    EnvElement out(L, h_order);
    if (p == 0) {
        out.add(NormalWord{}, coeff);
        return out;
    }
    HSeries av = coeff * (Rational(1) / factorial(p));

    std::vector<int> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // Koszul sign: inversions among odd factors only
        int sign = 1;
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j)
                if (perm[i] > perm[j] && L->parity(base[perm[i]]) && L->parity(base[perm[j]]))
                    sign = -sign;
        std::vector<int> word(p);
        for (int i = 0; i < p; ++i) word[i] = base[perm[i]];
        out += normal_form(L, h_order, word, sign > 0 ? av : -av);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace

EnvElement symmetrize(const SuperPolynomial& f, const PoissonRing& P, int h_order) {
    return symmetrize(to_hpoly(f, h_order), P, h_order);
}

EnvElement symmetrize(const HPolynomial& f, const PoissonRing& P, int h_order) {
    require_same_ring(f.sig(), P.sig());
    EnvElement out(P.algebra(), h_order);
    for (auto& [m, c] : f.terms()) {
        NormalWord w = word_of_monomial(m, P);
        out += symmetrize_word(w.idx, c, P.algebra(), h_order);
    }
    return out;
}

HPolynomial unsymmetrize(const EnvElement& a, const PoissonRing& P) {
    HPolynomial out(P.sig());
    EnvElement rest = a;
    // eliminate words from the longest down; tau(monomial) reproduces the
    // word with unit coefficient plus strictly shorter h-corrections
    while (!rest.is_zero()) {
        auto it = std::prev(rest.terms().end());
        NormalWord w = it->first;
        HSeries c = it->second;
        Monomial m = monomial_of_word(w, P);
        out.add_term(m, c);

        HPolynomial single(P.sig());
        single.add_term(m, c);
        rest -= symmetrize(single, P, a.h_order());
    }
    return out;
}

CasimirPair casimir_element(const AlgebraPtr& L, const PoissonRing& P, int power, int h_order) {
    if (!L->has_realization()) throw Error("casimir elements need a matrix realization");
    const BlockShape sh = L->shape();
    int t = sh.total();
    int d = L->dim();
    const SigPtr& sig = P.sig();

    // supertrace-form Gram matrix B_rs = str(X_r X_s) and its inverse
    auto num_str = [&](const SuperMatrix& x) {
        Rational s(0);
        QMatrix body = x.constant_body();
        for (int i = 0; i < t; ++i) s += (i < sh.m) ? body[i][i] : -body[i][i];
        return s;
    };
    QMatrix gram(d, QVector(d, Rational(0)));
    for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s) {
            SuperMatrix prod = L->realization()[r] * L->realization()[s];
            gram[r][s] = num_str(prod);
        }
    auto gram_inv = q_inverse(gram);
    if (!gram_inv)
        throw Error("supertrace form is degenerate on this algebra");

    // generic matrix with entries projected onto the algebra along the
    // form-orthogonal complement: entry(a,b) = sum_r gamma_r^{ab} x_r with
    // sum_r B(X_s, X_r) gamma_r = B(X_s, E_ab)
    std::vector<SuperPolynomial> coords;
    for (int I = 0; I < d; ++I) coords.push_back(P.coordinate(I));

    SuperMatrix generic(sh, sig, MatParity::None);
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b) {
            // rhs_s = str(X_s E_ab) = sign(a) * (X_s)_{b a}
            QVector rhs(d);
            for (int s = 0; s < d; ++s) {
                const SuperMatrix& X = L->realization()[s];
                Rational v = X.at(b, a).coeff(X.at(b, a).constant_monomial());
                rhs[s] = (a < sh.m) ? v : -v;
            }
            SuperPolynomial entry(sig);
            for (int r = 0; r < d; ++r) {
                Rational gamma(0);
                for (int s = 0; s < d; ++s) gamma += (*gram_inv)[r][s] * rhs[s];
                if (!is_zero(gamma)) entry += coords[r] * gamma;
            }
            generic.set(a, b, std::move(entry));
        }

    // column-parity sign twist, then supertrace of the power
    SuperMatrix twisted(sh, sig, MatParity::None);
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b) {
            SuperPolynomial e = generic.at(a, b);
            if (b >= sh.m) e = -e;
            twisted.set(a, b, std::move(e));
        }

    SuperMatrix pw = twisted;
    for (int k = 1; k < power; ++k) pw = pw * twisted;
    SuperPolynomial classical(sig);
    for (int i = 0; i < t; ++i)
        classical += (i < sh.m) ? pw.at(i, i) : -pw.at(i, i);

    CasimirPair out{classical, symmetrize(classical, P, h_order)};
    return out;
}

bool centrality_check(const EnvElement& p) {
    const AlgebraPtr& L = p.algebra();
    for (int i = 0; i < L->dim(); ++i) {
        EnvElement x = EnvElement::generator(L, p.h_order(), i);
        if (!(env_mul(p, x) - env_mul(x, p)).is_zero()) return false;
    }
    return true;
}

} // namespace superorbit
