#include <doctest.h>

#include "a4witt/galois.hpp"
#include "a4witt/numeric.hpp"
#include "a4witt/rng.hpp"

using namespace a4witt;

namespace {

RatPoly poly(std::initializer_list<long> descending) {
    std::vector<Rational> c;
    for (long x : descending) c.push_back(Rational(x));
    return RatPoly::from_descending(std::move(c));
}

}  // namespace

TEST_CASE("rational roots") {
    CHECK(rational_roots(poly({1, 0, -4, -1})).empty());
    CHECK(rational_roots(poly({1, 0, -1, 0})) ==
          std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
    CHECK(rational_roots(poly({2, -1})) == std::vector<Rational>{Rational(1, 2)});

    // both strategies agree on random integer polynomials with planted roots
    Rng rng(41);
    for (int i = 0; i < 40; i++) {
        Rng r = rng.child(static_cast<std::uint64_t>(i));
        Rational root1 = r.rational(6);
        RatPoly f = RatPoly::from_descending({Rational(r.int_in(1, 5)), Rational(r.int_in(-9, 9)),
                                              Rational(r.int_in(-9, 9))});
        f = f * RatPoly::from_descending({Rational(root1.denominator()),
                                          -Rational(root1.numerator())});
        CHECK(rational_roots_divisors(f) == rational_roots_isolation(f));
        std::vector<Rational> roots = rational_roots(f);
        CHECK(std::find(roots.begin(), roots.end(), root1) != roots.end());
    }
}

TEST_CASE("quartic irreducibility") {
    CHECK(is_irreducible_quartic(poly({1, 0, 0, 8, 12})).irreducible);
    auto r1 = is_irreducible_quartic(poly({1, 0, 0, 0, -1}));
    CHECK(!r1.irreducible);
    CHECK(r1.shape == std::vector<int>{1, 1, 2});
    auto r2 = is_irreducible_quartic(poly({1, 0, 3, 0, 2}));
    CHECK(!r2.irreducible);
    CHECK(r2.shape == std::vector<int>{2, 2});
    auto r3 = is_irreducible_quartic(poly({1, 0, 0, 0, 4}));  // (x^2+2x+2)(x^2-2x+2)
    CHECK(!r3.irreducible);
    CHECK(r3.shape == std::vector<int>{2, 2});
    auto r4 = is_irreducible_quartic(poly({1, 0, 0, 0, -2}));  // x^4 - 2 irreducible
    CHECK(r4.irreducible);
    CHECK_THROWS_AS(is_irreducible_quartic(poly({1, 0, 2, 0, 1})), SingularInput);  // (x^2+1)^2
}

TEST_CASE("cubic galois") {
    CHECK(cubic_galois(poly({1, 0, -3, -1})).kind == GaloisLabel::Kind::C3);  // disc 81
    CHECK(cubic_galois(poly({1, 0, 0, -2})).kind == GaloisLabel::Kind::S3);   // disc -108
    CHECK_THROWS_AS(cubic_galois(poly({1, 0, -1, 0})), ReducibleInput);
}

TEST_CASE("quartic galois corpus") {
    auto [a4, cert_a4] = quartic_galois(poly({1, 0, 0, 8, 12}));
    CHECK(a4.kind == GaloisLabel::Kind::A4);
    CHECK(cert_a4.disc == Rational(331776));
    CHECK(cert_a4.disc_is_square);
    CHECK(cert_a4.resolvent == poly({1, 0, -48, -64}));
    CHECK(cert_a4.resolvent_rational_roots.empty());

    CHECK(quartic_galois(poly({1, 1, 1, 1, 1})).first.kind == GaloisLabel::Kind::C4);
    CHECK(quartic_galois(poly({1, 0, 0, 0, 1})).first.kind == GaloisLabel::Kind::V4);
    CHECK(quartic_galois(poly({1, 0, 0, 0, -2})).first.kind == GaloisLabel::Kind::D4);
    CHECK(quartic_galois(poly({1, 0, 4, 0, 2})).first.kind == GaloisLabel::Kind::C4);
    auto [s4, cert_s4] = quartic_galois(poly({1, 0, 0, 1, 1}));
    CHECK(s4.kind == GaloisLabel::Kind::S4);
    CHECK(cert_s4.disc == Rational(229));
    CHECK(cert_s4.resolvent == poly({1, 0, -4, -1}));

    CHECK_THROWS_AS(quartic_galois(poly({1, 0, 0, 0, -1})), ReducibleInput);
}

TEST_CASE("label iff square discriminant") {
    Rng rng(43);
    int seen = 0;
    for (int i = 0; seen < 60 && i < 4000; i++) {
        Rng r = rng.child(static_cast<std::uint64_t>(i));
        RatPoly f = poly({1, r.int_in(-10, 10), r.int_in(-10, 10), r.int_in(-10, 10),
                          r.int_in(-10, 10)});
        if (discriminant(f).is_zero()) continue;
        if (!is_irreducible_quartic(f).irreducible) continue;
        auto [label, cert] = quartic_galois(f);
        seen++;
        bool in_a4 = label.kind == GaloisLabel::Kind::A4 || label.kind == GaloisLabel::Kind::V4;
        CHECK(in_a4 == cert.disc_is_square);
    }
    CHECK(seen == 60);
}

TEST_CASE("classification invariance under shift and scale") {
    Rng rng(47);
    int seen = 0;
    for (int i = 0; seen < 25 && i < 4000; i++) {
        Rng r = rng.child(static_cast<std::uint64_t>(i));
        RatPoly f = poly({1, r.int_in(-8, 8), r.int_in(-8, 8), r.int_in(-8, 8), r.int_in(-8, 8)});
        if (discriminant(f).is_zero()) continue;
        if (!is_irreducible_quartic(f).irreducible) continue;
        auto base = quartic_galois(f).first;
        seen++;
        long n = r.int_in(-5, 5);
        RatPoly shifted = f.compose(RatPoly::from_descending({Rational(1), Rational(n)}));
        CHECK(quartic_galois(shifted).first == base);
        long m = r.int_in(1, 5);
        // monic renormalization of f(X/m): multiply by m^4
        std::vector<Rational> c;
        for (int k = 4; k >= 0; k--) c.push_back(f.coeff(k) * pow(Rational(m), static_cast<unsigned>(4 - k)));
        RatPoly scaled = RatPoly::from_descending(std::move(c));
        CHECK(quartic_galois(scaled).first == base);
    }
    CHECK(seen == 25);
}

TEST_CASE("real root counts") {
    CHECK(real_root_count(poly({1, 0, -2})) == 2);
    CHECK(real_root_count(poly({1, 0, 1})) == 0);
    CHECK(real_root_count(poly({1, 0, 0, 8, 12})) == 0);
    CHECK_THROWS_AS(real_root_count(poly({1, 2, 1})), NotSquarefree);

    Rng rng(53);
    int seen = 0;
    for (int i = 0; seen < 100 && i < 4000; i++) {
        Rng r = rng.child(static_cast<std::uint64_t>(i));
        RatPoly f = poly({1, r.int_in(-20, 20), r.int_in(-20, 20), r.int_in(-20, 20),
                          r.int_in(-20, 20)});
        if (discriminant(f).is_zero()) continue;
        seen++;
        CHECK(real_root_count(f) == numeric_real_root_count(f));
    }
    CHECK(seen == 100);
}

TEST_CASE("integer root isolation handles large coefficients") {
    // (x - 10^30)(x + 7) has an integer root far beyond divisor enumeration
    Int big = 1;
    for (int i = 0; i < 30; i++) big *= 10;
    RatPoly f = RatPoly::from_descending({Rational(1), Rational(-big)}) *
                RatPoly::from_descending({Rational(1), Rational(7)});
    std::vector<Rational> roots = rational_roots_isolation(f);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rational(-7));
    CHECK(roots[1] == Rational(big));
}
