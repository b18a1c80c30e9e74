#pragma once

#include "superorbit/envelope.hpp"
#include "superorbit/orbit.hpp"

#include <optional>

namespace superorbit {

/// One relation P_i - c_i(h): classical invariant polynomial, its
/// symmetrized image, and the (possibly h-dependent) value.
struct IdealGenerator {
    SuperPolynomial classical;  // p-hat_i in the coordinates
    EnvElement quantum;         // P_i = tau(p-hat_i)
    HSeries value;              // c_i(h), c_i(0) = classical invariant value
};

/// The two-sided ideal (P_1 - c_1(h), ..., P_l - c_l(h)) with its classical
/// shadows, plus the degree cutoff for graded-slice work.
class IdealSpec {
public:
    IdealSpec(PoissonRing ring, std::vector<IdealGenerator> gens, int degree_cutoff, int h_order)
        : ring_(std::move(ring)), gens_(std::move(gens)),
          degree_cutoff_(degree_cutoff), h_order_(h_order) {}

    const PoissonRing& ring() const { return ring_; }
    const std::vector<IdealGenerator>& generators() const { return gens_; }
    int degree_cutoff() const { return degree_cutoff_; }
    int h_order() const { return h_order_; }

    /// Classical shadow p-hat_i - c_i(0).
    SuperPolynomial shadow(size_t i) const;

private:
    PoissonRing ring_;
    std::vector<IdealGenerator> gens_;
    int degree_cutoff_;
    int h_order_;
};

/// Builds the orbit ideal for an algebra preset: generators are the central
/// power-sum elements with values c_i = str(X0^i); zero generators (the sl
/// first power sum) are dropped.  Checks c_i against the evaluation of the
/// classical invariant at the orbit point.
IdealSpec make_orbit_ideal(const AlgebraPtr& L, const PoissonRing& P, const OrbitSpec& spec,
                           int degree_cutoff, int h_order);

/// All monomials of total degree <= d (respecting caps and odd nilpotency).
std::vector<Monomial> monomials_up_to(const SigPtr& sig, int d);

/**
 * Standard-monomial basis of the quotient at degree <= d, with a total
 * reduction map.
 *
 * Classical side: exact elimination on the span of products m * shadow_i,
 * with the multiplier degree raised until the rank of the <=d slice
 * stabilizes (products of higher degree can cancel down into the slice);
 * a degree-descending column order keeps low-degree monomials standard.
 *
 * Quantum side: the same elimination carried out over Q[h]/(h^{H+1}) on the
 * lifted relations tau(m)(P_i - c_i(h)).  When a reduced relation is
 * divisible by h it is divided down (the ideal is h-saturated for central
 * generators; this is the executable form of the h-peeling argument), so
 * every stored relation has a unit pivot and reduction is exact.
 *
 * The classical and quantum slice ranks must agree; disagreement raises
 * InconsistentSlices.
 */
class QuotientBasis {
public:
    explicit QuotientBasis(IdealSpec ideal);

    const IdealSpec& ideal() const { return ideal_; }

    /// Standard monomials (ascending canonical order).
    const std::vector<Monomial>& standard_monomials() const { return standard_; }
    /// The same basis as normal words.
    std::vector<NormalWord> basis_words() const;
    /// Number of standard monomials of each total degree 0..d.
    std::vector<int> graded_dimensions() const;

    /// Canonical form of v modulo the classical ideal slice (degree <= d).
    SuperPolynomial classical_reduce(const SuperPolynomial& v) const;

    /// Canonical form of E modulo the ideal in the deformed algebra,
    /// expressed over the standard words.  Throws DegreeOverflow for words
    /// longer than the cutoff.
    EnvElement reduce(const EnvElement& e) const;

private:
    using SparseRow = std::map<int, HSeries>;  // column -> coefficient

    void build_quantum_rows() const;
    SparseRow eliminate(SparseRow row) const;

    IdealSpec ideal_;
    int product_degree_ = 0;                 // D: multiplier-degree workspace bound
    std::vector<Monomial> columns_;          // monomials <= D, degree-descending
    std::map<Monomial, int, MonomialOrder> column_of_;
    int classical_slice_rank_ = 0;           // saturated rank of the <=d slice
    std::shared_ptr<LinearSolver> classical_;
    std::vector<Monomial> standard_;

    // quantum RREF over Q[h]/(h^{H+1}), built on first reduce()
    mutable std::vector<SparseRow> rows_;    // unit pivots normalized to 1
    mutable std::vector<int> row_of_pivot_;  // column -> row index or -1
    mutable bool quantum_ready_ = false;
};

/// tau^{-1}(tau(f) tau(g)), the deformed product on the coordinate ring.
HPolynomial star_product(const SuperPolynomial& f, const SuperPolynomial& g,
                         const PoissonRing& P, int h_order);

struct StarAxiomReport {
    int pairs_checked = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

/**
 * For all generator pairs and `samples` random homogeneous pairs of degree
 * <= 2: f*g == fg mod h, and f*g - (-1)^{p_f p_g} g*f == h{f,g} mod h^2.
 * With a quotient, the same identities are checked after reduction.
 */
StarAxiomReport star_axiom_check(const PoissonRing& P, const QuotientBasis* quotient,
                                 int samples, int h_order, uint64_t seed);

} // namespace superorbit
