#include "superorbit/quotient.hpp"
#include "superorbit/sampling.hpp"

#include <algorithm>
#include <sstream>

namespace superorbit {

SuperPolynomial IdealSpec::shadow(size_t i) const {
    const IdealGenerator& g = gens_.at(i);
    return g.classical - sp_constant(g.classical.sig(), g.value.at(0));
}

std::vector<Monomial> monomials_up_to(const SigPtr& sig, int d) {
    std::vector<Monomial> out;
    Monomial cur;
    cur.even_exp.assign(sig->even_count(), 0);

    auto odd_fill = [&](auto&& self, int start, int remaining) -> void {
        out.push_back(cur);
        if (remaining == 0) return;
        for (int i = start; i < sig->odd_count(); ++i) {
            cur.odd_idx.push_back(i);
            self(self, i + 1, remaining - 1);
            cur.odd_idx.pop_back();
        }
    };
    auto even_fill = [&](auto&& self, int gen, int remaining) -> void {
        if (gen == sig->even_count()) {
            odd_fill(odd_fill, 0, remaining);
            return;
        }
        int cap = sig->cap(gen);
        int hi = cap > 0 ? std::min(cap, remaining) : remaining;
        for (int e = 0; e <= hi; ++e) {
            cur.even_exp[gen] = e;
            self(self, gen + 1, remaining - e);
        }
        cur.even_exp[gen] = 0;
    };
    even_fill(even_fill, 0, d);

    std::sort(out.begin(), out.end(), MonomialOrder{});
    return out;
}

IdealSpec make_orbit_ideal(const AlgebraPtr& L, const PoissonRing& P, const OrbitSpec& spec,
                           int degree_cutoff, int h_order) {
    BlockShape sh = spec.shape();
    if (!(L->shape() == sh)) throw SignatureMismatch("algebra and orbit shapes differ");
    int t = sh.total();

    // coordinates of the orbit point: x_r = str(X0 X_r)
    auto num_ring = make_signature(0, 0);
    SuperMatrix x0 = spec.target(num_ring);
    QVector point(L->dim(), Rational(0));
    for (int r = 0; r < L->dim(); ++r) {
        SuperMatrix prod = x0 * L->realization()[r];
        QMatrix body = prod.constant_body();
        for (int i = 0; i < t; ++i) point[r] += (i < sh.m) ? body[i][i] : -body[i][i];
    }
    auto eval_at_point = [&](const SuperPolynomial& f) {
        Rational acc(0);
        for (auto& [m, c] : f.terms()) {
            if (!m.odd_idx.empty()) continue;  // odd coordinates vanish at the point
            Rational term = c;
            for (size_t i = 0; i < m.even_exp.size(); ++i)
                term *= rat_pow(point[P.basis_index_of(true, (int)i)], m.even_exp[i]);
            acc += term;
        }
        return acc;
    };

    std::vector<IdealGenerator> gens;
    const QVector& values = spec.invariants();
    size_t vi = 0;
    for (int i = 1; i <= t; ++i) {
        if (spec.even_powers_only() && i % 2 != 0) continue;
        Rational ci = values.at(vi++);
        CasimirPair cp = casimir_element(L, P, i, h_order);
        if (cp.classical.is_zero()) {
            if (!is_zero(ci))
                throw InconsistentSlices("vanishing invariant with nonzero target value");
            continue;  // e.g. the first power sum on sl
        }
        if (eval_at_point(cp.classical) != ci)
            throw Error("invariant value disagrees with evaluation at the orbit point");
        gens.push_back({cp.classical, cp.quantum, HSeries::constant(ci, h_order)});
    }
    return IdealSpec(P, std::move(gens), degree_cutoff, h_order);
}

namespace {

/// Rank of the <=d slice of span{m * s_i : deg(m s_i) <= d + slack}, using a
/// degree-descending column order so slice rows are recognizable by pivot.
int slice_rank_at_slack(const IdealSpec& ideal, int slack) {
    const SigPtr& sig = ideal.ring().sig();
    int d = ideal.degree_cutoff();
    auto cols = monomials_up_to(sig, d + slack);
    std::reverse(cols.begin(), cols.end());
    std::map<Monomial, int, MonomialOrder> index;
    for (size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], (int)i);

    LinearSolver solver((int)cols.size());
    for (size_t gi = 0; gi < ideal.generators().size(); ++gi) {
        SuperPolynomial s = ideal.shadow(gi);
        int deg = s.total_degree();
        for (auto& m : monomials_up_to(sig, d + slack - deg)) {
            SuperPolynomial mono(sig);
            mono.add_term(m, Rational(1));
            SuperPolynomial prod = mono * s;
            QVector v(cols.size(), Rational(0));
            for (auto& [mm, c] : prod.terms()) v[index.at(mm)] = c;
            solver.add_row(std::move(v));
        }
    }
    int slice_start = (int)(cols.size() - monomials_up_to(sig, d).size());
    int in_slice = 0;
    for (int pc : solver.pivots())
        if (pc >= slice_start) ++in_slice;
    return in_slice;
}

} // namespace

QuotientBasis::QuotientBasis(IdealSpec ideal) : ideal_(std::move(ideal)) {
    const SigPtr& sig = ideal_.ring().sig();
    int d = ideal_.degree_cutoff();

    // raise the multiplier degree until the <=d slice rank stabilizes twice
    int max_gen_degree = 0;
    for (size_t gi = 0; gi < ideal_.generators().size(); ++gi)
        max_gen_degree = std::max(max_gen_degree, ideal_.shadow(gi).total_degree());
    const int slack_cap = 8;
    int slack = std::max(1, max_gen_degree - 1);
    int prev = slice_rank_at_slack(ideal_, slack - 1);
    for (;; ++slack) {
        if (slack > slack_cap)
            throw InconsistentSlices("ideal slice rank failed to stabilize");
        int cur = slice_rank_at_slack(ideal_, slack);
        if (cur == prev) break;
        prev = cur;
    }
    classical_slice_rank_ = prev;
    product_degree_ = d + slack - 1;  // products of this total degree achieve the rank

    // Workspace columns for the eliminations.  Degrees above the cutoff come
    // first in strict degree-descending blocks (rows pivoting inside the
    // <=d tail then have support entirely inside it); within the <=d region
    // even-variable-heavy monomials are eliminated first, so the surviving
    // standard monomials favor the odd coordinates.
    columns_ = monomials_up_to(sig, product_degree_);
    auto even_degree = [](const Monomial& m) {
        int e = 0;
        for (int x : m.even_exp) e += x;
        return e;
    };
    std::sort(columns_.begin(), columns_.end(), [&](const Monomial& a, const Monomial& b) {
        bool a_high = a.total_degree() > d, b_high = b.total_degree() > d;
        if (a_high != b_high) return a_high;  // degrees above the cutoff first
        if (a_high) {
            if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
            return MonomialOrder{}(b, a);
        }
        if (even_degree(a) != even_degree(b)) return even_degree(a) > even_degree(b);
        if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
        return MonomialOrder{}(b, a);
    });
    for (size_t i = 0; i < columns_.size(); ++i) column_of_.emplace(columns_[i], (int)i);

    classical_ = std::make_shared<LinearSolver>((int)columns_.size());
    for (size_t gi = 0; gi < ideal_.generators().size(); ++gi) {
        SuperPolynomial s = ideal_.shadow(gi);
        int deg = s.total_degree();
        for (auto& m : monomials_up_to(sig, product_degree_ - deg)) {
            SuperPolynomial mono(sig);
            mono.add_term(m, Rational(1));
            SuperPolynomial prod = mono * s;
            QVector v(columns_.size(), Rational(0));
            for (auto& [mm, c] : prod.terms()) v[column_of_.at(mm)] = c;
            classical_->add_row(std::move(v));
        }
    }

    // standard monomials: non-pivot columns of degree <= d
    int slice_start = (int)(columns_.size() - monomials_up_to(sig, d).size());
    std::vector<bool> is_pivot(columns_.size(), false);
    int rank_in_slice = 0;
    for (int pc : classical_->pivots()) {
        is_pivot[pc] = true;
        if (pc >= slice_start) ++rank_in_slice;
    }
    if (rank_in_slice != classical_slice_rank_)
        throw InconsistentSlices("classical slice rank regression");
    for (size_t i = (size_t)slice_start; i < columns_.size(); ++i)
        if (!is_pivot[i]) standard_.push_back(columns_[i]);
    std::sort(standard_.begin(), standard_.end(), MonomialOrder{});
}

SuperPolynomial QuotientBasis::classical_reduce(const SuperPolynomial& v) const {
    const SigPtr& sig = ideal_.ring().sig();
    if (v.total_degree() > ideal_.degree_cutoff())
        throw DegreeOverflow("degree exceeds the quotient cutoff");
    QVector vec(columns_.size(), Rational(0));
    for (auto& [m, c] : v.terms()) vec[column_of_.at(m)] = c;
    auto [residual, combo] = classical_->reduce(std::move(vec));
    SuperPolynomial out(sig);
    for (size_t i = 0; i < residual.size(); ++i)
        if (!is_zero(residual[i])) out.add_term(columns_[i], residual[i]);
    return out;
}

QuotientBasis::SparseRow QuotientBasis::eliminate(SparseRow row) const {
    // rows_ is in reduced form: each row has 1 at its pivot and no entries at
    // other pivots, so one pass over pivot columns clears them all
    for (auto it = row.begin(); it != row.end();) {
        int col = it->first;
        int ri = row_of_pivot_[col];
        if (ri < 0) {
            ++it;
            continue;
        }
        HSeries factor = it->second;
        it = row.erase(it);
        for (auto& [c, val] : rows_[ri]) {
            if (c == col) continue;
            auto jt = row.lower_bound(c);
            if (jt != row.end() && jt->first == c) {
                jt->second -= factor * val;
                if (jt->second.is_zero()) row.erase(jt);
            } else {
                HSeries v = factor * val;
                v = -v;
                if (!v.is_zero()) row.emplace_hint(jt, c, std::move(v));
            }
        }
        // inserted columns are all right of `col` (RREF invariant), and the
        // iterator resumes from the erase point, so the pass stays linear
        it = row.upper_bound(col);
    }
    return row;
}

void QuotientBasis::build_quantum_rows() const {
    if (quantum_ready_) return;
    const PoissonRing& P = ideal_.ring();
    int H = ideal_.h_order();
    const SigPtr& sig = P.sig();
    int d = ideal_.degree_cutoff();

    row_of_pivot_.assign(columns_.size(), -1);

    std::vector<SparseRow> pending;
    for (size_t gi = 0; gi < ideal_.generators().size(); ++gi) {
        const IdealGenerator& gen = ideal_.generators()[gi];
        int deg = ideal_.shadow(gi).total_degree();
        EnvElement rel = gen.quantum;
        rel -= EnvElement::unit(P.algebra(), H).scale(gen.value);
        for (auto& m : monomials_up_to(sig, product_degree_ - deg)) {
            SuperPolynomial mono(sig);
            mono.add_term(m, Rational(1));
            EnvElement lifted = env_mul(symmetrize(mono, P, H), rel);
            SparseRow row;
            for (auto& [w, c] : lifted.terms())
                row.emplace(column_of_.at(monomial_of_word(w, P)), c);
            pending.push_back(std::move(row));
        }
    }

    for (size_t next = 0; next < pending.size(); ++next) {
        SparseRow row = eliminate(std::move(pending[next]));
        if (row.empty()) continue;

        // find the leftmost unit coefficient
        auto pivot_it = row.end();
        for (auto it = row.begin(); it != row.end(); ++it)
            if (it->second.is_unit()) { pivot_it = it; break; }

        if (pivot_it == row.end()) {
            // every coefficient divisible by h: divide down (the ideal is
            // h-saturated for central generators) and retry
            int val = ideal_.h_order() + 1;
            for (auto& [c, v] : row) val = std::min(val, v.valuation());
            SparseRow divided;
            for (auto& [c, v] : row) divided.emplace(c, v.down_shifted(val));
            pending.push_back(std::move(divided));
            continue;
        }

        int pcol = pivot_it->first;
        HSeries inv = pivot_it->second.inverse();
        row.erase(pivot_it);
        SparseRow stored;
        for (auto& [c, v] : row) {
            HSeries nv = inv * v;
            if (!nv.is_zero()) stored.emplace(c, std::move(nv));
        }
        stored.emplace(pcol, HSeries::constant(Rational(1), H));

        // back-substitute into existing rows to keep the set reduced
        for (auto& existing : rows_) {
            auto hit = existing.find(pcol);
            if (hit == existing.end()) continue;
            HSeries f = hit->second;
            existing.erase(hit);
            for (auto& [c, v] : stored) {
                if (c == pcol) continue;
                auto jt = existing.find(c);
                if (jt == existing.end()) {
                    HSeries nv = f * v;
                    nv = -nv;
                    if (!nv.is_zero()) existing.emplace(c, std::move(nv));
                } else {
                    jt->second -= f * v;
                    if (jt->second.is_zero()) existing.erase(jt);
                }
            }
        }
        row_of_pivot_[pcol] = (int)rows_.size();
        rows_.push_back(std::move(stored));
    }

    // the quantum slice must match the classical one
    int slice_start = (int)(columns_.size() - monomials_up_to(sig, d).size());
    int quantum_in_slice = 0;
    for (size_t c = (size_t)slice_start; c < columns_.size(); ++c)
        if (row_of_pivot_[c] >= 0) ++quantum_in_slice;
    if (quantum_in_slice != classical_slice_rank_)
        throw InconsistentSlices("quantum and classical slice ranks disagree");
    for (auto& m : standard_)
        if (row_of_pivot_[column_of_.at(m)] >= 0)
            throw InconsistentSlices("a standard monomial acquired a quantum relation");

    quantum_ready_ = true;
}

EnvElement QuotientBasis::reduce(const EnvElement& e) const {
    const PoissonRing& P = ideal_.ring();
    int H = ideal_.h_order();
    if (e.h_order() != H) throw Error("h truncation order mismatch");
    if (e.max_word_length() > ideal_.degree_cutoff())
        throw DegreeOverflow("word length exceeds the quotient cutoff");
    build_quantum_rows();

    SparseRow row;
    for (auto& [w, c] : e.terms()) row.emplace(column_of_.at(monomial_of_word(w, P)), c);
    row = eliminate(std::move(row));

    EnvElement out(P.algebra(), H);
    for (auto& [c, v] : row) out.add(word_of_monomial(columns_[c], P), v);
    return out;
}

std::vector<NormalWord> QuotientBasis::basis_words() const {
    std::vector<NormalWord> words;
    for (auto& m : standard_) words.push_back(word_of_monomial(m, ideal_.ring()));
    std::sort(words.begin(), words.end());
    return words;
}

std::vector<int> QuotientBasis::graded_dimensions() const {
    std::vector<int> dims(ideal_.degree_cutoff() + 1, 0);
    for (auto& m : standard_) dims[m.total_degree()]++;
    return dims;
}

HPolynomial star_product(const SuperPolynomial& f, const SuperPolynomial& g,
                         const PoissonRing& P, int h_order) {
    EnvElement prod = env_mul(symmetrize(f, P, h_order), symmetrize(g, P, h_order));
    return unsymmetrize(prod, P);
}

namespace {

int parity_bit(const SuperPolynomial& f) {
    return f.parity() == Parity::Odd ? 1 : 0;
}

} // namespace

StarAxiomReport star_axiom_check(const PoissonRing& P, const QuotientBasis* quotient,
                                 int samples, int h_order, uint64_t seed) {
    const SigPtr& sig = P.sig();
    const AlgebraPtr& L = P.algebra();
    StarAxiomReport rep;
    Rng rng(seed);

    auto run_pair = [&](const SuperPolynomial& f, const SuperPolynomial& g,
                        const std::string& label) {
        if (f.is_zero() || g.is_zero()) return;
        if (f.parity() == Parity::Mixed || g.parity() == Parity::Mixed) return;
        ++rep.pairs_checked;
        int sign = (parity_bit(f) & parity_bit(g)) ? -1 : 1;

        HPolynomial fg = star_product(f, g, P, h_order);
        HPolynomial gf = star_product(g, f, P, h_order);
        HPolynomial graded_comm = sign > 0 ? fg - gf : fg + gf;

        if (!quotient) {
            if (!(h_slice(fg, 0) == f * g))
                rep.failures.push_back(label + ": f*g != fg mod h");
            if (!h_slice(graded_comm, 0).is_zero() ||
                !(h_slice(graded_comm, 1) == poisson_bracket(f, g, P)))
                rep.failures.push_back(label + ": graded commutator != h{f,g} mod h^2");
            return;
        }

        // after quotient reduction: compare canonical forms order by order
        EnvElement lhs1 = quotient->reduce(symmetrize(fg, P, h_order));
        EnvElement rhs1 = quotient->reduce(symmetrize(f * g, P, h_order));
        EnvElement diff1 = lhs1 - rhs1;
        bool ok1 = true;
        for (auto& [w, c] : diff1.terms())
            if (!is_zero(c.at(0))) ok1 = false;
        if (!ok1) rep.failures.push_back(label + ": reduced f*g != reduced fg mod h");

        EnvElement lhs2 = quotient->reduce(symmetrize(graded_comm, P, h_order));
        SuperPolynomial pb = poisson_bracket(f, g, P);
        EnvElement rhs2 = quotient->reduce(symmetrize(to_hpoly(pb, h_order), P, h_order));
        rhs2.scale(HSeries::h_power(Rational(1), 1, h_order));
        EnvElement diff = lhs2 - rhs2;
        bool ok2 = true;
        for (auto& [w, c] : diff.terms())
            if (!is_zero(c.at(0)) || !is_zero(c.at(1))) ok2 = false;
        if (!ok2) rep.failures.push_back(label + ": reduced commutator != h{f,g} mod h^2");
    };

    // all generator pairs
    for (int i = 0; i < L->dim(); ++i)
        for (int j = 0; j < L->dim(); ++j) {
            std::ostringstream os;
            os << "generators (" << i + 1 << "," << j + 1 << ")";
            run_pair(P.coordinate(i), P.coordinate(j), os.str());
        }

    // random homogeneous pairs of degree <= 2
    for (int s = 0; s < samples; ++s) {
        Parity pf = rng.flip() ? Parity::Even : Parity::Odd;
        Parity pg = rng.flip() ? Parity::Even : Parity::Odd;
        auto f = random_homogeneous(sig, pf, 2, 3, rng);
        auto g = random_homogeneous(sig, pg, 2, 3, rng);
        run_pair(f, g, "sample " + std::to_string(s));
    }
    return rep;
}

} // namespace superorbit
