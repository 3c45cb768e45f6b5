#include <doctest.h>

#include "a4witt/generic.hpp"
#include "a4witt/rng.hpp"

using namespace a4witt;

TEST_CASE("prop1 quartic evaluation") {
    Quartic<Rational> P = prop1_quartic(Rational(1), Rational(1));
    CHECK(P.poly() == RatPoly::from_descending({Rational(1), Rational(-4), Rational(38),
                                                Rational(-4), Rational(33)}));
    // U = 0 kills every U-term
    Quartic<Rational> Z = prop1_quartic(Rational(0), Rational(7));
    CHECK(Z.a2 == Rational(252));
    CHECK(Z.a3.is_zero());
    CHECK(Z.a4.is_zero());
}

TEST_CASE("obstruction formula class") {
    CHECK(obstruction_formula_class(Rational(1), Rational(1)).str() == "{2,real}");
    CHECK_THROWS_AS(obstruction_formula_class(Rational(3), Rational(5)), UndefinedSymbol);
    CHECK_THROWS_AS(obstruction_formula_class(Rational(-3), Rational(5)), UndefinedSymbol);
    // second entry vanishes when V = (U^2-1)/(2(U^2-9))... pick U=1: -2(V-9V+1-1) = 16V/...
    // U = 1: w = -2(V - 9V + 1 - 1) = 16 V, so V = 0 degenerates
    CHECK_THROWS_AS(obstruction_formula_class(Rational(1), Rational(0)), UndefinedSymbol);
    // calibrated-sign sample: class is trivial
    CHECK(obstruction_formula_class(Rational(-12, 5), Rational(-463, 162)).is_trivial());
}

TEST_CASE("c parametrization") {
    auto [c2a, c3a] = c_parametrization(Rational(0), Rational(0), Rational(0));
    CHECK(c2a.is_zero());
    CHECK(c3a.is_zero());
    auto [c2b, c3b] = c_parametrization(Rational(3), Rational(0), Rational(0));
    CHECK(c2b == Rational(3));
    CHECK(c3b == Rational(1));
}

TEST_CASE("quartic from params") {
    Quartic<Rational> zero = quartic_from_params(Rational(0), Rational(0), Rational(0), Rational(0));
    CHECK((zero.a1.is_zero() && zero.a2.is_zero() && zero.a3.is_zero() && zero.a4.is_zero()));

    Quartic<Rational> q = quartic_from_params(Rational(0), Rational(3), Rational(0), Rational(0));
    CHECK(q.a2 == Rational(-6));
    CHECK(q.a3 == Rational(-8));
    CHECK(q.a4 == Rational(-3));

    // disc of the parametrized quartic is always a rational square
    Rng rng(73);
    for (int i = 0; i < 30; i++) {
        Rng r = rng.child(static_cast<std::uint64_t>(i));
        Quartic<Rational> P = quartic_from_params(r.rational(9), r.rational(9), r.rational(9),
                                                  r.rational(9));
        CHECK(is_square(discriminant(P.poly())));
    }
}

TEST_CASE("uv from symbols") {
    SymbolParams p{Rational(1), Rational(1), Rational(1), Rational(1), Rational(1), 1};
    UVSample plus = uv_from_symbols(p);
    CHECK(plus.ab.a == Rational(9));
    CHECK(plus.ab.b == Rational(9));
    CHECK(plus.U == Rational(-15, 4));
    CHECK(plus.V == Rational(137, 81));

    p.sign = -1;
    UVSample minus = uv_from_symbols(p);
    CHECK(minus.ab.a == Rational(-9));
    CHECK(minus.ab.b == Rational(-9));
    CHECK(minus.U == Rational(-12, 5));
    CHECK(minus.V == Rational(-463, 162));

    SymbolParams bad{Rational(1), Rational(1), Rational(1), Rational(0), Rational(1), 1};
    CHECK_THROWS_AS(uv_from_symbols(bad), DegenerateParams);
}

TEST_CASE("symbolic suite checks") {
    CHECK(check_prop1_disc_square().status == "pass");
    CHECK(check_cubic_disc_square().status == "pass");
    CHECK(check_change_of_variables().status == "pass");
}

TEST_CASE("embeddable") {
    EmbedReport rep = embeddable(Rational(1), Rational(1));
    CHECK(!rep.embeddable);
    CHECK(rep.obstruction.str() == "{2,real}");
    REQUIRE(rep.label.has_value());

    CHECK_THROWS_AS(embeddable(Rational(3), Rational(2)), UndefinedSymbol);

    // the two evaluation paths agree on parametrized samples
    Rng rng(79);
    for (int i = 0; i < 15; i++) {
        Rng r = rng.child(static_cast<std::uint64_t>(i));
        SymbolParams p;
        p.A = r.rational(5);
        p.B = r.rational(5);
        p.C = r.rational(5);
        p.D = r.rational(5, true);
        p.E = r.rational(5, true);
        p.sign = -1;
        UVSample s = uv_from_symbols(p);
        EmbedReport via_parts = embeddable_from_parts(s, /*classify=*/false);
        EmbedReport direct = embeddable(s.U, s.V, /*classify=*/false);
        CHECK(via_parts.obstruction == direct.obstruction);
        CHECK(via_parts.embeddable);
        CHECK(direct.embeddable);
    }
}

TEST_CASE("sign calibration") {
    Rng rng(83);
    std::vector<SymbolParams> samples;
    for (int i = 0; i < 20; i++) {
        Rng r = rng.child(static_cast<std::uint64_t>(i));
        SymbolParams p;
        p.A = r.rational(10);
        p.B = r.rational(10);
        p.C = r.rational(10);
        p.D = r.rational(10, true);
        p.E = r.rational(10, true);
        samples.push_back(p);
    }
    SignCalibration cal = calibrate_criterion_sign(samples);
    REQUIRE(cal.selected_sign.has_value());
    CHECK(*cal.selected_sign == -1);
    CHECK(cal.trivial_minus == 20);
    CHECK(cal.trivial_plus < 20);
    CHECK(cal.negativity_invariant_ok);

    CHECK_THROWS_AS(calibrate_criterion_sign({}), NoSignMatches);
}

TEST_CASE("parameter search round trip") {
    // embeddable sample from the parametrization; search must find some params
    SymbolParams p{Rational(1), Rational(2), Rational(1), Rational(1), Rational(1), -1};
    UVSample s = uv_from_symbols(p);
    auto found = search_symbol_params(s.U, s.V, 8);
    REQUIRE(found.has_value());
    UVSample s2 = uv_from_symbols(*found);
    CHECK(s2.U == s.U);
    CHECK(s2.V == s.V);
    // non-embeddable targets are rejected quickly
    CHECK(!search_symbol_params(Rational(1), Rational(1), 3).has_value());
}
