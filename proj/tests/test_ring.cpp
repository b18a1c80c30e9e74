#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superorbit/ring.hpp"
#include "superorbit/parser.hpp"
#include "test_util.hpp"

using namespace superorbit;
using sot::Rng;

namespace {

SigPtr lambda_ring(int n) { return make_signature(0, n); }

SuperPolynomial P(const char* text, const SigPtr& sig) { return parse_poly(text, sig); }

} // namespace

TEST_CASE("odd_normalize signs and nilpotency") {
    std::vector<int> sorted;
    CHECK(odd_normalize({1, 0}, sorted) == -1);
    CHECK(sorted == std::vector<int>{0, 1});

    CHECK(odd_normalize({0, 0}, sorted) == 0);

    // (3,1,2) has two inversions, so the sorting permutation is even
    CHECK(odd_normalize({2, 0, 1}, sorted) == 1);
    CHECK(sorted == std::vector<int>{0, 1, 2});

    CHECK(odd_normalize({}, sorted) == 1);
}

TEST_CASE("basic arithmetic") {
    auto sig = make_signature(2, 2);
    CHECK(P("x1", sig) + P("x1", sig) == P("2*x1", sig));
    CHECK((P("t1*t2", sig) - P("t1*t2", sig)).is_zero());
    auto half = P("x1+t1", sig) * Rational(rat(1, 2));
    CHECK(half == P("1/2*x1 + 1/2*t1", sig));
}

TEST_CASE("products carry Koszul signs and nilpotency") {
    auto sig = make_signature(1, 4);
    CHECK(P("t2", sig) * P("t1", sig) == P("-t1*t2", sig));
    CHECK((P("t1*t2", sig) * P("t2*t3", sig)).is_zero());
    CHECK(P("x1 + t1*t2", sig) * P("x1 - t1*t2", sig) == P("x1^2", sig));
}

TEST_CASE("even caps model dual numbers") {
    auto sig = make_signature(1, 0, std::vector<int>{1});  // x1 = epsilon, epsilon^2 = 0
    CHECK((P("x1", sig) * P("x1", sig)).is_zero());
    CHECK(P("1+x1", sig) * P("1-x1", sig) == P("1", sig));
}

TEST_CASE("parity classification") {
    auto sig = make_signature(2, 2);
    CHECK(P("x1*t1*t2", sig).parity() == Parity::Even);
    CHECK(P("t1 + x1*t2", sig).parity() == Parity::Odd);
    CHECK(P("x1 + t1", sig).parity() == Parity::Mixed);
    CHECK(SuperPolynomial::zero(sig).parity() == Parity::Even);
}

TEST_CASE("body projection") {
    auto sig = make_signature(2, 2);
    CHECK(P("x1 + 2*t1*t2", sig).body() == P("x1", sig));
    CHECK(P("t1", sig).body().is_zero());
    CHECK(P("3 + x2*t1*t2 + x2^2", sig).body() == P("3 + x2^2", sig));
}

TEST_CASE("odd-degree components") {
    auto sig = make_signature(1, 3);
    auto a = P("x1 + t1 + t1*t2", sig);
    CHECK(a.odd_component(1) == P("t1", sig));
    CHECK(a.odd_component(0) == P("x1", sig));
    CHECK(P("t1*t2*t3", sig).odd_component(2).is_zero());
}

TEST_CASE("inversion of constant plus nilpotent") {
    auto sig = make_signature(0, 4);
    CHECK(poly_invert(P("1 + t1*t2", sig)) == P("1 - t1*t2", sig));
    CHECK(poly_invert(P("2", sig)) == P("1/2", sig));
    CHECK(poly_invert(P("1 + t1*t2 + t3*t4", sig)) ==
          P("1 - t1*t2 - t3*t4 + 2*t1*t2*t3*t4", sig));

    auto mixed = make_signature(1, 2);
    CHECK_THROWS_AS(poly_invert(P("1 + x1", mixed)), NotInvertible);
    CHECK_THROWS_AS(poly_invert(P("t1", mixed)), NotInvertible);
}

TEST_CASE("substitution is a parity-preserving morphism") {
    auto sig = make_signature(1, 2);

    Substitution s1(sig, sig);
    s1.set_even(0, P("x1^2", sig));
    CHECK(s1.apply(P("x1 + 1", sig)) == P("x1^2 + 1", sig));

    Substitution s2(sig, sig);
    s2.set_odd(0, P("t2", sig));
    CHECK(s2.apply(P("t1*t2", sig)).is_zero());

    Substitution s3(sig, sig);
    s3.set_odd(0, P("x1*t1", sig));
    CHECK(s3.apply(P("t1*t2", sig)) == P("x1*t1*t2", sig));

    Substitution bad(sig, sig);
    CHECK_THROWS_AS(bad.set_odd(0, P("x1", sig)), ParityError);
    CHECK_THROWS_AS(bad.set_even(0, P("t1", sig)), ParityError);
}

TEST_CASE("composition of substitutions equals substitution of composition") {
    auto sig = make_signature(1, 2);
    Rng rng(77);
    Substitution f(sig, sig), g(sig, sig);
    f.set_even(0, P("x1 + x1^2", sig));
    f.set_odd(0, P("x1*t1", sig));
    f.set_odd(1, P("t1 + t2", sig));
    g.set_even(0, P("2*x1", sig));
    g.set_odd(0, P("t2", sig));
    g.set_odd(1, P("t1", sig));

    // images of the composite = g-image of f-image on generators
    Substitution gf(sig, sig);
    gf.set_even(0, g.apply(P("x1 + x1^2", sig)));
    gf.set_odd(0, g.apply(P("x1*t1", sig)));
    gf.set_odd(1, g.apply(P("t1 + t2", sig)));

    for (int t = 0; t < 20; ++t) {
        auto a = sot::random_poly(sig, 3, 4, rng);
        CHECK(g.apply(f.apply(a)) == gf.apply(a));
    }
}

TEST_CASE("supercommutativity on random homogeneous pairs") {
    Rng rng(1234);
    auto sig = make_signature(3, 4);
    int checked = 0;
    while (checked < 200) {
        Parity pa = rng.flip() ? Parity::Even : Parity::Odd;
        Parity pb = rng.flip() ? Parity::Even : Parity::Odd;
        auto a = sot::random_homogeneous(sig, pa, 3, 3, rng);
        auto b = sot::random_homogeneous(sig, pb, 3, 3, rng);
        if (a.is_zero() || b.is_zero()) continue;
        auto ab = a * b;
        auto ba = b * a;
        if (pa == Parity::Odd && pb == Parity::Odd)
            CHECK(ab == -ba);
        else
            CHECK(ab == ba);
        ++checked;
    }
}

TEST_CASE("associativity and distributivity on random triples") {
    Rng rng(99);
    auto sig = make_signature(2, 3, std::vector<int>{0, 2});
    for (int t = 0; t < 100; ++t) {
        auto a = sot::random_poly(sig, 3, 3, rng);
        auto b = sot::random_poly(sig, 3, 3, rng);
        auto c = sot::random_poly(sig, 3, 3, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("body is a ring morphism") {
    Rng rng(5150);
    auto sig = make_signature(3, 4);
    for (int t = 0; t < 100; ++t) {
        auto a = sot::random_poly(sig, 3, 4, rng);
        auto b = sot::random_poly(sig, 3, 4, rng);
        CHECK((a * b).body() == a.body() * b.body());
        CHECK((a + b).body() == a.body() + b.body());
    }
}

TEST_CASE("odd component decomposition sums back") {
    Rng rng(31);
    auto sig = make_signature(2, 4);
    for (int t = 0; t < 50; ++t) {
        auto a = sot::random_poly(sig, 4, 6, rng);
        SuperPolynomial sum(sig);
        for (int k = 0; k <= sig->odd_count(); ++k) sum += a.odd_component(k);
        CHECK(sum == a);
    }
}

TEST_CASE("inversion round-trip on random units") {
    Rng rng(404);
    auto sig = make_signature(1, 4, std::vector<int>{1});
    auto one = P("1", sig);
    for (int t = 0; t < 100; ++t) {
        // unit = nonzero constant + nilpotent junk
        SuperPolynomial u = sp_constant(sig, rng.nonzero_rational());
        for (int k = 0; k < 4; ++k) {
            Monomial m = sot::random_monomial(sig, 3, rng);
            if (m.is_constant()) continue;
            u.add_term(m, rng.rational());
        }
        if (!nilpotent_away_from_constant(u) || is_zero(u.coeff(u.constant_monomial())))
            continue;
        CHECK(u * poly_invert(u) == one);
    }
}

TEST_CASE("signature mismatch is rejected") {
    auto a = make_signature(1, 2);
    auto b = make_signature(2, 2);
    CHECK_THROWS_AS(P("x1", a) + P("x1", b), SignatureMismatch);
}
