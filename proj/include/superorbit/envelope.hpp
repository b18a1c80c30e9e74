#pragma once

#include "superorbit/hseries.hpp"
#include "superorbit/liesuper.hpp"

#include <map>
#include <vector>

namespace superorbit {

/**
 * PBW normal word: nondecreasing basis indices, odd indices unrepeated
 * (the square of an odd generator rewrites into the bracket).
 */
struct NormalWord {
    std::vector<int> idx;

    int length() const { return (int)idx.size(); }
    bool empty() const { return idx.empty(); }

    friend bool operator==(const NormalWord& a, const NormalWord& b) { return a.idx == b.idx; }
    friend bool operator<(const NormalWord& a, const NormalWord& b) {
        if (a.idx.size() != b.idx.size()) return a.idx.size() < b.idx.size();
        return a.idx < b.idx;
    }
};

bool is_normal_word(const NormalWord& w, const LieSuperAlgebra& L);

enum class RewriteStrategy { Leftmost, Rightmost };

/**
 * Element of the h-deformed enveloping algebra in PBW normal form:
 * a finite map from normal words to truncated h-series.
 */
class EnvElement {
public:
    EnvElement(AlgebraPtr algebra, int h_order)
        : algebra_(std::move(algebra)), h_order_(h_order) {}

    static EnvElement unit(AlgebraPtr algebra, int h_order);
    static EnvElement generator(AlgebraPtr algebra, int h_order, int basis_index);

    const AlgebraPtr& algebra() const { return algebra_; }
    int h_order() const { return h_order_; }
    const std::map<NormalWord, HSeries>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_word_length() const { return terms_.empty() ? 0 : terms_.rbegin()->first.length(); }

    HSeries coeff(const NormalWord& w) const;
    void add(const NormalWord& w, const HSeries& c);

    EnvElement& operator+=(const EnvElement& o);
    EnvElement& operator-=(const EnvElement& o);
    friend EnvElement operator+(EnvElement a, const EnvElement& b) { a += b; return a; }
    friend EnvElement operator-(EnvElement a, const EnvElement& b) { a -= b; return a; }
    EnvElement operator-() const;
    EnvElement& scale(const HSeries& s);
    EnvElement& scale(const Rational& s);

    friend bool operator==(const EnvElement& a, const EnvElement& b) {
        return *a.algebra_ == *b.algebra_ && a.terms_ == b.terms_;
    }

private:
    AlgebraPtr algebra_;
    int h_order_;
    std::map<NormalWord, HSeries> terms_;
};

/**
 * Rewrites an arbitrary index word into PBW normal form:
 *   X_J X_I -> (-1)^{p_I p_J} X_I X_J + h [X_J, X_I]   (J > I)
 *   X_a X_a -> (h/2) [X_a, X_a]                        (a odd)
 * Terminating (length, inversions) and confluent; the strategy picks which
 * violating adjacent pair is rewritten first.
 */
EnvElement normal_form(const AlgebraPtr& algebra, int h_order, const std::vector<int>& word,
                       const HSeries& coeff,
                       RewriteStrategy strategy = RewriteStrategy::Leftmost);

/// Associative product: concatenate word pairs, multiply coefficients, reduce.
EnvElement env_mul(const EnvElement& a, const EnvElement& b,
                   RewriteStrategy strategy = RewriteStrategy::Leftmost);

/**
 * Supersymmetrizer: monomial-wise signed average over all permutations,
 * where only transpositions of two odd factors contribute a sign.
 * Monomial degree is capped at 6 (factorial cost).
 */
EnvElement symmetrize(const SuperPolynomial& f, const PoissonRing& P, int h_order);
EnvElement symmetrize(const HPolynomial& f, const PoissonRing& P, int h_order);

/// Inverse of the symmetrizer, by back-substitution on the word-length
/// filtration: tau(monomial) = its word + strictly shorter h-corrections.
HPolynomial unsymmetrize(const EnvElement& a, const PoissonRing& P);

/// Monomial <-> word translation in a coordinate ring.
NormalWord word_of_monomial(const Monomial& m, const PoissonRing& P);
Monomial monomial_of_word(const NormalWord& w, const PoissonRing& P);

struct CasimirPair {
    SuperPolynomial classical;  // p-hat_i, an even polynomial in the coordinates
    EnvElement quantum;         // P_i = tau(p-hat_i)
};

/**
 * Invariant power sums as central elements: str((M P)^i) with P the
 * column-parity sign twist, M the generic coordinate matrix with entries
 * projected onto the algebra along the supertrace-form orthogonal
 * complement (identity projection for the full matrix algebra).
 */
CasimirPair casimir_element(const AlgebraPtr& L, const PoissonRing& P, int i, int h_order);

/// True when env_mul(P, X_I) == env_mul(X_I, P) for every basis index, mod h^{H+1}.
bool centrality_check(const EnvElement& p);

} // namespace superorbit
