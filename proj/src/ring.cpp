#include "superorbit/ring.hpp"

namespace superorbit {

bool nilpotent_away_from_constant(const SuperPolynomial& a) {
    const RingSignature& sig = *a.sig();
    for (auto& [m, c] : a.terms()) {
        if (m.is_constant()) continue;
        if (!m.odd_idx.empty()) continue;
        bool capped = false;
        for (int i = 0; i < sig.even_count(); ++i)
            if (m.even_exp[i] > 0 && sig.cap(i) > 0) { capped = true; break; }
        if (!capped) return false;
    }
    return true;
}

SuperPolynomial poly_invert(const SuperPolynomial& a) {
    const SigPtr& sig = a.sig();
    Rational c = a.coeff(a.constant_monomial());
    if (is_zero(c))
        throw NotInvertible("constant term is zero");
    if (!nilpotent_away_from_constant(a))
        throw NotInvertible("element is not constant + nilpotent");

    // a = c(1 - s) with s nilpotent; a^{-1} = c^{-1} (1 + s + s^2 + ...)
    SuperPolynomial eta = a - sp_constant(sig, c);
    Rational inv_c = Rational(1) / c;
    SuperPolynomial s = eta * (-inv_c);

    int bound = sig->odd_count();
    for (int i = 0; i < sig->even_count(); ++i) bound += sig->cap(i);

    SuperPolynomial acc = sp_constant(sig, Rational(1));
    SuperPolynomial p = s;
    int steps = 0;
    while (!p.is_zero()) {
        acc += p;
        p *= s;
        if (++steps > bound)
            throw Error("geometric series failed to terminate");  // unreachable if pre holds
    }
    acc.scale(inv_c);
    return acc;
}

void Substitution::set_even(int i, SuperPolynomial image) {
    if (i < 0 || i >= source_->even_count())
        throw SignatureMismatch("even generator index out of range");
    require_same_ring(image.sig(), target_);
    if (image.parity() != Parity::Even)
        throw ParityError("even generator must map to an even element");
    even_[i] = std::move(image);
}

void Substitution::set_odd(int i, SuperPolynomial image) {
    if (i < 0 || i >= source_->odd_count())
        throw SignatureMismatch("odd generator index out of range");
    require_same_ring(image.sig(), target_);
    Parity p = image.parity();
    if (p != Parity::Odd && !image.is_zero())
        throw ParityError("odd generator must map to an odd element");
    odd_[i] = std::move(image);
}

SuperPolynomial Substitution::apply(const SuperPolynomial& a) const {
    require_same_ring(a.sig(), source_);
    bool same = *source_ == *target_;
    auto even_image = [&](int i) -> SuperPolynomial {
        if (even_[i]) return *even_[i];
        if (!same) throw SignatureMismatch("unassigned generator with distinct target ring");
        return sp_even(target_, i);
    };
    auto odd_image = [&](int i) -> SuperPolynomial {
        if (odd_[i]) return *odd_[i];
        if (!same) throw SignatureMismatch("unassigned generator with distinct target ring");
        return sp_odd(target_, i);
    };

    SuperPolynomial out(target_);
    for (auto& [m, c] : a.terms()) {
        SuperPolynomial term = sp_constant(target_, c);
        for (int i = 0; i < source_->even_count() && !term.is_zero(); ++i)
            if (m.even_exp[i] > 0)
                term *= even_image(i).pow(m.even_exp[i]);
        for (int idx : m.odd_idx) {
            if (term.is_zero()) break;
            term *= odd_image(idx);
        }
        out += term;
    }
    return out;
}

} // namespace superorbit
