#pragma once

#include "superorbit/rational.hpp"
#include "superorbit/errors.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superorbit {

enum class Parity { Even, Odd, Mixed };

inline Parity combine_parity(Parity a, Parity b) {
    if (a == Parity::Mixed || b == Parity::Mixed || a != b) return Parity::Mixed;
    return a;
}

/**
 * Shape of a free supercommutative ring k[x_1..x_M, t_1..t_N].
 *
 * Even generators may carry an exponent cap c >= 1: any term whose exponent
 * exceeds the cap is annihilated, i.e. the ring is quotiented by (x^{c+1}).
 * Cap 1 models a dual-number generator.  Odd generators always square to zero.
 */
class RingSignature {
public:
    RingSignature(int even_count, int odd_count)
        : caps_(even_count, 0) {
        if (even_count < 0 || odd_count < 0)
            throw Error("generator counts must be non-negative");
        odd_count_ = odd_count;
        default_names();
    }

    RingSignature(int even_count, int odd_count, std::vector<int> caps)
        : caps_(std::move(caps)) {
        if (even_count < 0 || odd_count < 0)
            throw Error("generator counts must be non-negative");
        if ((int)caps_.size() != even_count)
            throw Error("cap list length must equal even generator count");
        for (int c : caps_)
            if (c < 0) throw Error("caps must be >= 1 (0 = uncapped)");
        odd_count_ = odd_count;
        default_names();
    }

    int even_count() const { return (int)caps_.size(); }
    int odd_count() const { return odd_count_; }

    /// 0 means uncapped.
    int cap(int even_index) const { return caps_.at(even_index); }
    const std::vector<int>& caps() const { return caps_; }

    const std::string& even_name(int i) const { return even_names_.at(i); }
    const std::string& odd_name(int i) const { return odd_names_.at(i); }
    void set_even_name(int i, std::string name) { even_names_.at(i) = std::move(name); }
    void set_odd_name(int i, std::string name) { odd_names_.at(i) = std::move(name); }

    /// Looks a display name up; returns (is_even, index) if found.
    std::optional<std::pair<bool, int>> find_name(const std::string& name) const {
        for (int i = 0; i < even_count(); ++i)
            if (even_names_[i] == name) return {{true, i}};
        for (int i = 0; i < odd_count_; ++i)
            if (odd_names_[i] == name) return {{false, i}};
        return std::nullopt;
    }

    /// Structural equality: counts and caps.  Display names are cosmetic.
    friend bool operator==(const RingSignature& a, const RingSignature& b) {
        return a.caps_ == b.caps_ && a.odd_count_ == b.odd_count_;
    }
    friend bool operator!=(const RingSignature& a, const RingSignature& b) { return !(a == b); }

private:
    void default_names() {
        even_names_.resize(caps_.size());
        odd_names_.resize(odd_count_);
        for (size_t i = 0; i < even_names_.size(); ++i)
            even_names_[i] = "x" + std::to_string(i + 1);
        for (int i = 0; i < odd_count_; ++i)
            odd_names_[i] = "t" + std::to_string(i + 1);
    }

    std::vector<int> caps_;
    int odd_count_ = 0;
    std::vector<std::string> even_names_;
    std::vector<std::string> odd_names_;
};

using SigPtr = std::shared_ptr<const RingSignature>;

inline SigPtr make_signature(int even_count, int odd_count) {
    return std::make_shared<RingSignature>(even_count, odd_count);
}
inline SigPtr make_signature(int even_count, int odd_count, std::vector<int> caps) {
    return std::make_shared<RingSignature>(even_count, odd_count, std::move(caps));
}

inline void require_same_ring(const SigPtr& a, const SigPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !(*a == *b)) throw SignatureMismatch("ring signatures differ");
}

/**
 * A monomial x_1^{e_1}..x_M^{e_M} * t_{i_1}..t_{i_k} with i_1 < ... < i_k.
 * Odd factors are kept in ascending index order; the sorting sign is the
 * owner's responsibility (absorbed into the coefficient at construction).
 */
struct Monomial {
    std::vector<int> even_exp;  // size M
    std::vector<int> odd_idx;   // strictly increasing, 0-based

    int total_degree() const {
        int d = (int)odd_idx.size();
        for (int e : even_exp) d += e;
        return d;
    }
    int odd_degree() const { return (int)odd_idx.size(); }
    Parity parity() const { return odd_idx.size() % 2 == 0 ? Parity::Even : Parity::Odd; }
    bool is_constant() const {
        if (!odd_idx.empty()) return false;
        for (int e : even_exp) if (e) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.even_exp == b.even_exp && a.odd_idx == b.odd_idx;
    }
};

/// Graded lexicographic order: total degree, then even exponents, then odd indices.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        if (a.even_exp != b.even_exp) return a.even_exp < b.even_exp;
        return a.odd_idx < b.odd_idx;
    }
};

/// Sign of sorting a list of odd indices into ascending order.
/// Returns 0 if any index repeats (the product vanishes), else +/-1,
/// and writes the sorted list to `sorted`.
inline int odd_normalize(const std::vector<int>& indices, std::vector<int>& sorted) {
    sorted = indices;
    int sign = 1;
    // insertion sort, counting transpositions of anticommuting factors
    for (size_t i = 1; i < sorted.size(); ++i) {
        int v = sorted[i];
        size_t j = i;
        while (j > 0 && sorted[j - 1] > v) {
            sorted[j] = sorted[j - 1];
            sign = -sign;
            --j;
        }
        sorted[j] = v;
    }
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1]) return 0;
    return sign;
}

/// Merge two ascending odd-index lists; Koszul sign is (-1)^{#(a,b): a>b}.
/// Returns 0 on a shared index, else the sign, and writes the merged list.
inline int merge_odd(const std::vector<int>& lhs, const std::vector<int>& rhs,
                     std::vector<int>& merged) {
    merged.clear();
    merged.reserve(lhs.size() + rhs.size());
    size_t i = 0, j = 0;
    int inversions = 0;
    while (i < lhs.size() && j < rhs.size()) {
        if (lhs[i] == rhs[j]) return 0;
        if (lhs[i] < rhs[j]) {
            merged.push_back(lhs[i++]);
        } else {
            // rhs[j] jumps over the remaining lhs tail
            inversions += (int)(lhs.size() - i);
            merged.push_back(rhs[j++]);
        }
    }
    while (i < lhs.size()) merged.push_back(lhs[i++]);
    while (j < rhs.size()) merged.push_back(rhs[j++]);
    return (inversions % 2 == 0) ? 1 : -1;
}

/// Coefficient-ring hooks; specialized per scalar type.
template <class Coeff>
struct CoeffOps;

template <>
struct CoeffOps<Rational> {
    static bool is_zero(const Rational& q) { return sgn(q) == 0; }
};

/**
 * Sparse element of a free supercommutative ring over an arbitrary
 * coefficient ring.  Instantiated with Rational for ordinary elements and
 * with HSeries (truncated h-power series) for deformation-layer values.
 */
template <class Coeff>
class PolynomialT {
public:
    using TermMap = std::map<Monomial, Coeff, MonomialOrder>;

    explicit PolynomialT(SigPtr sig) : sig_(std::move(sig)) {
        if (!sig_) throw Error("null ring signature");
    }

    PolynomialT(SigPtr sig, const Coeff& constant) : PolynomialT(std::move(sig)) {
        if (!CoeffOps<Coeff>::is_zero(constant))
            terms_.emplace(constant_monomial(), constant);
    }

    static PolynomialT zero(SigPtr sig) { return PolynomialT(std::move(sig)); }

    static PolynomialT constant(SigPtr sig, const Coeff& c) { return PolynomialT(std::move(sig), c); }

    static PolynomialT even_gen(SigPtr sig, int i, const Coeff& c) {
        PolynomialT p(sig);
        if (i < 0 || i >= sig->even_count()) throw SignatureMismatch("even generator index out of range");
        if (CoeffOps<Coeff>::is_zero(c)) return p;
        Monomial m = p.constant_monomial();
        m.even_exp[i] = 1;
        p.terms_.emplace(std::move(m), c);
        return p;
    }

    static PolynomialT odd_gen(SigPtr sig, int i, const Coeff& c) {
        PolynomialT p(sig);
        if (i < 0 || i >= sig->odd_count()) throw SignatureMismatch("odd generator index out of range");
        if (CoeffOps<Coeff>::is_zero(c)) return p;
        Monomial m = p.constant_monomial();
        m.odd_idx.push_back(i);
        p.terms_.emplace(std::move(m), c);
        return p;
    }

    const SigPtr& sig() const { return sig_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    Monomial constant_monomial() const {
        Monomial m;
        m.even_exp.assign(sig_->even_count(), 0);
        return m;
    }

    /// Coefficient of a monomial (zero coefficient if absent).
    Coeff coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Coeff{} : it->second;
    }

    int total_degree() const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return terms_.empty() ? 0 : d;
    }

    Parity parity() const {
        if (terms_.empty()) return Parity::Even;
        bool even = true, odd = true;
        for (auto& [m, c] : terms_) {
            if (m.parity() == Parity::Even) odd = false; else even = false;
        }
        if (even) return Parity::Even;
        if (odd) return Parity::Odd;
        return Parity::Mixed;
    }

    /// Adds c * m, respecting caps / repeated odd indices, dropping zeros.
    void add_term(const Monomial& m, const Coeff& c) {
        if (CoeffOps<Coeff>::is_zero(c)) return;
        if ((int)m.even_exp.size() != sig_->even_count())
            throw SignatureMismatch("monomial shape does not match ring");
        for (int i = 0; i < sig_->even_count(); ++i) {
            if (m.even_exp[i] < 0) throw Error("negative exponent");
            if (sig_->cap(i) > 0 && m.even_exp[i] > sig_->cap(i)) return;
        }
        for (size_t i = 0; i < m.odd_idx.size(); ++i) {
            if (m.odd_idx[i] < 0 || m.odd_idx[i] >= sig_->odd_count())
                throw SignatureMismatch("odd index out of range");
            if (i > 0 && m.odd_idx[i] <= m.odd_idx[i - 1])
                throw Error("odd indices must be strictly increasing");
        }
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (CoeffOps<Coeff>::is_zero(it->second)) terms_.erase(it);
        }
    }

    PolynomialT& operator+=(const PolynomialT& o) {
        require_same_ring(sig_, o.sig_);
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    PolynomialT& operator-=(const PolynomialT& o) {
        require_same_ring(sig_, o.sig_);
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend PolynomialT operator+(PolynomialT a, const PolynomialT& b) { a += b; return a; }
    friend PolynomialT operator-(PolynomialT a, const PolynomialT& b) { a -= b; return a; }
    PolynomialT operator-() const {
        PolynomialT r(sig_);
        for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    PolynomialT& scale(const Coeff& s) {
        if (CoeffOps<Coeff>::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second *= s;
            if (CoeffOps<Coeff>::is_zero(it->second)) it = terms_.erase(it);
            else ++it;
        }
        return *this;
    }
    friend PolynomialT operator*(PolynomialT p, const Coeff& s) { p.scale(s); return p; }
    friend PolynomialT operator*(const Coeff& s, PolynomialT p) { p.scale(s); return p; }

    /// Supercommutative product with Koszul signs from interleaving odd factors.
    friend PolynomialT operator*(const PolynomialT& a, const PolynomialT& b) {
        require_same_ring(a.sig_, b.sig_);
        PolynomialT r(a.sig_);
        const RingSignature& sig = *a.sig_;
        Monomial prod;
        std::vector<int> merged;
        for (auto& [ma, ca] : a.terms_) {
            for (auto& [mb, cb] : b.terms_) {
                int sign = merge_odd(ma.odd_idx, mb.odd_idx, merged);
                if (sign == 0) continue;
                bool capped = false;
                prod.even_exp.resize(sig.even_count());
                for (int i = 0; i < sig.even_count(); ++i) {
                    int e = ma.even_exp[i] + mb.even_exp[i];
                    if (sig.cap(i) > 0 && e > sig.cap(i)) { capped = true; break; }
                    prod.even_exp[i] = e;
                }
                if (capped) continue;
                prod.odd_idx = merged;
                Coeff c = ca * cb;
                if (sign < 0) c = -c;
                r.add_term(prod, c);
            }
        }
        return r;
    }
    PolynomialT& operator*=(const PolynomialT& o) { *this = *this * o; return *this; }

    friend bool operator==(const PolynomialT& a, const PolynomialT& b) {
        return *a.sig_ == *b.sig_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const PolynomialT& a, const PolynomialT& b) { return !(a == b); }

    /// Image in the purely even subring: drops every monomial with odd factors.
    PolynomialT body() const {
        PolynomialT r(sig_);
        for (auto& [m, c] : terms_)
            if (m.odd_idx.empty()) r.terms_.emplace(m, c);
        return r;
    }

    /// Part with odd degree exactly k; summing over k = 0..N reproduces the element.
    PolynomialT odd_component(int k) const {
        PolynomialT r(sig_);
        for (auto& [m, c] : terms_)
            if ((int)m.odd_idx.size() == k) r.terms_.emplace(m, c);
        return r;
    }

    PolynomialT pow(int e) const {
        if (e < 0) throw Error("negative power");
        PolynomialT r = constant(sig_, unit_coeff());
        PolynomialT base = *this;
        while (e) {
            if (e & 1) r *= base;
            if (e >>= 1) base *= base;
        }
        return r;
    }

private:
    static Coeff unit_coeff();

    SigPtr sig_;
    TermMap terms_;
};

template <>
inline Rational PolynomialT<Rational>::unit_coeff() { return Rational(1); }

using SuperPolynomial = PolynomialT<Rational>;

inline SuperPolynomial sp_constant(const SigPtr& sig, const Rational& c) {
    return SuperPolynomial::constant(sig, c);
}
inline SuperPolynomial sp_even(const SigPtr& sig, int i) {
    return SuperPolynomial::even_gen(sig, i, Rational(1));
}
inline SuperPolynomial sp_odd(const SigPtr& sig, int i) {
    return SuperPolynomial::odd_gen(sig, i, Rational(1));
}

/// True when every non-constant monomial is nilpotent (contains an odd factor
/// or a capped even generator), so that constant + rest is invertible.
bool nilpotent_away_from_constant(const SuperPolynomial& a);

/// Exact inverse of c + eta with c a nonzero constant and eta nilpotent;
/// computed as a terminating geometric series.  Throws NotInvertible.
SuperPolynomial poly_invert(const SuperPolynomial& a);

/// Parity-preserving ring morphism given by images of every generator.
/// Unassigned generators map to themselves (only valid if target == source ring).
class Substitution {
public:
    Substitution(SigPtr source, SigPtr target)
        : source_(std::move(source)), target_(std::move(target)),
          even_(source_->even_count()), odd_(source_->odd_count()) {}

    void set_even(int i, SuperPolynomial image);
    void set_odd(int i, SuperPolynomial image);

    SuperPolynomial apply(const SuperPolynomial& a) const;

    const SigPtr& source() const { return source_; }
    const SigPtr& target() const { return target_; }

private:
    SigPtr source_;
    SigPtr target_;
    std::vector<std::optional<SuperPolynomial>> even_;
    std::vector<std::optional<SuperPolynomial>> odd_;
};

} // namespace superorbit
