#pragma once

#include "superorbit/ring.hpp"
#include "superorbit/supermatrix.hpp"
#include "superorbit/linalg.hpp"

#include <memory>
#include <string>
#include <vector>

namespace superorbit {

/// Sparse bracket expansion: [X_I, X_J] = sum of (K, coefficient).
using BracketRow = std::vector<std::pair<int, Rational>>;

/**
 * Finite-dimensional Lie superalgebra given by a homogeneous basis (even
 * vectors first) and exact structure constants, optionally carrying a
 * matrix realization.
 */
class LieSuperAlgebra {
public:
    LieSuperAlgebra(std::vector<int> parity, std::vector<std::vector<BracketRow>> table);

    int dim() const { return (int)parity_.size(); }
    int parity(int i) const { return parity_.at(i); }
    const std::vector<int>& parities() const { return parity_; }
    int even_count() const { return even_count_; }
    int odd_count() const { return dim() - even_count_; }

    const BracketRow& bracket(int i, int j) const { return table_.at(i).at(j); }
    Rational structure_constant(int i, int j, int k) const;

    bool has_realization() const { return !basis_.empty(); }
    const std::vector<SuperMatrix>& realization() const { return basis_; }
    const BlockShape& shape() const { return shape_; }
    void attach_realization(BlockShape shape, std::vector<SuperMatrix> basis);

    /// Expresses a numeric matrix in the realized basis; nullopt if outside the span.
    std::optional<QVector> coordinates_of(const QMatrix& flat) const;

    friend bool operator==(const LieSuperAlgebra& a, const LieSuperAlgebra& b) {
        return a.parity_ == b.parity_ && a.table_ == b.table_;
    }

private:
    std::vector<int> parity_;
    std::vector<std::vector<BracketRow>> table_;
    int even_count_ = 0;

    BlockShape shape_{0, 0};
    std::vector<SuperMatrix> basis_;
    std::shared_ptr<LinearSolver> span_;  // realization span, for membership
};

using AlgebraPtr = std::shared_ptr<const LieSuperAlgebra>;

/// Full matrix superalgebra gl(m|n): basis E_IJ, diagonal blocks first
/// (p row-major, then s row-major), then q and r blocks row-major.
AlgebraPtr build_gl(int m, int n);

/// Supertraceless subalgebra sl(m|n), m != n.  Diagonal part uses
/// H_i = E_ii - (str E_ii / str E_ll) E_ll with l = m+n.
AlgebraPtr build_sl(int m, int n);

/// Orthosymplectic algebra osp(m|2n): X^{st} J + J X = 0 with
/// J = diag(I_m, [[0,I_n],[-I_n,0]]), computed as exact nullspaces of the
/// defining linear system, separately per parity sector.
AlgebraPtr build_osp(int m, int two_n);

struct AxiomReport {
    std::vector<std::string> grading_violations;
    std::vector<std::string> antisymmetry_violations;
    std::vector<std::string> jacobi_violations;
    bool pass() const {
        return grading_violations.empty() && antisymmetry_violations.empty() &&
               jacobi_violations.empty();
    }
};

/// Verifies grading compatibility, graded antisymmetry and the graded Jacobi
/// identity on all basis triples, exactly.
AxiomReport check_axioms(const LieSuperAlgebra& L);

struct KillingForm {
    QMatrix B;              // B_IJ = str(ad_I ad_J) on the graded module
    Rational det_even;      // determinant of the even-even block
    Rational det_odd;       // determinant of the odd-odd block
    bool nondegenerate = false;
};

KillingForm killing_form(const LieSuperAlgebra& L);

/**
 * Coordinate ring of the dual space: one generator per basis element with
 * matching parity (even coordinates first).  Display names carry the global
 * basis index: x<I> for even coordinates, t<I> for odd ones.
 */
class PoissonRing {
public:
    explicit PoissonRing(AlgebraPtr algebra);

    const SigPtr& sig() const { return sig_; }
    const AlgebraPtr& algebra() const { return algebra_; }

    /// Coordinate polynomial x_I (0-based basis index).
    SuperPolynomial coordinate(int basis_index) const;
    /// (is_even, local ring index) of the coordinate.
    std::pair<bool, int> locate(int basis_index) const;
    /// Basis index of a ring generator.
    int basis_index_of(bool is_even, int local_index) const;

private:
    AlgebraPtr algebra_;
    SigPtr sig_;
};

/// Kirillov bracket {x_I, x_J} = sum_K c_IJ^K x_K extended to polynomials by
/// graded antisymmetry and the graded Leibniz rule.
SuperPolynomial poisson_bracket(const SuperPolynomial& f, const SuperPolynomial& g,
                                const PoissonRing& P);

} // namespace superorbit
