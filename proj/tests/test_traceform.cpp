#include <doctest.h>

#include "a4witt/generic.hpp"
#include "a4witt/rng.hpp"
#include "a4witt/traceform.hpp"

using namespace a4witt;

namespace {

Quartic<Rational> quartic(long a1, long a2, long a3, long a4) {
    return {Rational(a1), Rational(a2), Rational(a3), Rational(a4)};
}

}  // namespace

TEST_CASE("power sums") {
    std::vector<Rational> p = power_sums(quartic(0, 0, 0, -2), 6);  // X^4 - 2
    CHECK(p == std::vector<Rational>{Rational(4), Rational(0), Rational(0), Rational(0),
                                     Rational(8), Rational(0), Rational(0)});

    p = power_sums(quartic(0, 0, 8, 12), 6);  // X^4 + 8X + 12
    CHECK(p[3] == Rational(-24));
    CHECK(p[4] == Rational(-48));
    CHECK(p[6] == Rational(192));

    p = power_sums(quartic(0, 0, 0, 0), 6);  // X^4
    for (int k = 1; k <= 6; k++) CHECK(p[static_cast<std::size_t>(k)].is_zero());
}

TEST_CASE("gram matrix") {
    GramMatrix G = gram_matrix(quartic(0, 0, 0, -2));
    Rational expect[4][4] = {{4, 0, 0, 0}, {0, 0, 0, 8}, {0, 0, 8, 0}, {0, 8, 0, 0}};
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++) CHECK(G[i][j] == expect[i][j]);

    GramMatrix H = gram_matrix(quartic(0, 0, 8, 12));
    Rational expect2[4][4] = {{4, 0, 0, -24},
                              {0, 0, -24, -48},
                              {0, -24, -48, 0},
                              {-24, -48, 0, 192}};
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++) CHECK(H[i][j] == expect2[i][j]);
}

TEST_CASE("diagonalize") {
    GramMatrix D{};
    Rational diag[4] = {Rational(4), Rational(9), Rational(1), Rational(25)};
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++) D[i][j] = i == j ? diag[i] : Rational(0);
    DiagonalForm f = diagonalize(D);
    for (int i = 0; i < 4; i++) CHECK(f.d[static_cast<std::size_t>(i)] == 1);

    DiagonalForm g = diagonalize(gram_matrix(quartic(0, 0, 0, -2)));
    CHECK(g.signature() == 2);  // two real embeddings of the quartic field

    // rank-deficient input: X^4 has disc 0
    CHECK_THROWS_AS(diagonalize(gram_matrix(quartic(0, 0, 0, 0))), DegenerateForm);
}

TEST_CASE("witt class basics") {
    DiagonalForm ones{{Int(1), Int(1), Int(1), Int(1)}};
    CHECK(witt_class(ones, WittConvention::HASSE).is_trivial());
    CHECK(witt_class(ones, WittConvention::HASSE_PLUS_MINUSONE).str() == "{2,real}");

    DiagonalForm negs{{Int(-1), Int(-1), Int(-1), Int(-1)}};
    CHECK(witt_class(negs, WittConvention::HASSE).is_trivial());  // six copies of (-1,-1)

    // scaling entries by squares leaves the class alone
    DiagonalPieces scaled;
    scaled[0] = {Rational(-1), Rational(9)};
    scaled[1] = {Rational(-1), Rational(49)};
    scaled[2] = {Rational(-1), Rational(1, 4)};
    scaled[3] = {Rational(-1)};
    for (WittConvention conv : kAllConventions)
        CHECK(witt_class_pieces(scaled, conv) == witt_class(negs, conv));
}

TEST_CASE("gram determinant matches disc modulo squares, signature matches real roots") {
    Rng rng(61);
    int seen = 0;
    for (int i = 0; seen < 60 && i < 3000; i++) {
        Rng r = rng.child(static_cast<std::uint64_t>(i));
        Quartic<Rational> P = quartic(r.int_in(-10, 10), r.int_in(-10, 10), r.int_in(-10, 10),
                                      r.int_in(-10, 10));
        RatPoly f = P.poly();
        Rational disc = discriminant(f);
        if (disc.is_zero()) continue;
        seen++;
        DiagonalForm d = diagonalize(gram_matrix(P));
        Rational det_class(1);
        for (const Int& x : d.d) det_class *= Rational(x);
        CHECK(squarefree_part(det_class) == squarefree_part(disc));
        CHECK(d.signature() == real_root_count(f));
    }
    CHECK(seen == 60);
}

TEST_CASE("family diagonal agrees with the direct route") {
    const FamilyDiagonal& fam = prop1_family_diagonal();
    Rng rng(67);
    int seen = 0;
    for (int i = 0; seen < 25 && i < 2000; i++) {
        Rng r = rng.child(static_cast<std::uint64_t>(i));
        Rational U = r.rational(4), V = r.rational(4);
        Quartic<Rational> P = prop1_quartic(U, V);
        if (discriminant(P.poly()).is_zero()) continue;
        auto pieces = specialize_family_diagonal(fam, U, V);
        if (!pieces) continue;
        seen++;
        DiagonalForm direct = diagonalize(gram_matrix(P));
        for (WittConvention conv : kAllConventions)
            CHECK(witt_class_pieces(*pieces, conv) == witt_class(direct, conv));
        CHECK(signature_of_pieces(*pieces) == direct.signature());
    }
    CHECK(seen == 25);
}

TEST_CASE("square class core correctness") {
    MultiPoly U = MultiPoly::var("U"), V = MultiPoly::var("V");
    // h = 12 (U+V)^2 (U - 3V) V^4: core must be (U - 3V) with scalar ~ 3 (12 = 3*2^2)
    MultiPoly h = (U + V).pow(2) * (U - V * Rational(3)) * V.pow(4) * Rational(12);
    SquareClassCore core = square_class_core(h);
    RatFunc rest{h};
    rest = rest / RatFunc(MultiPoly(core.scalar));
    for (const MultiPoly& p : core.pieces) rest = rest / RatFunc(p);
    CHECK(ratfunc_is_square(rest));
    int total_degree = 0;
    for (const MultiPoly& p : core.pieces) total_degree += p.total_degree();
    CHECK(total_degree == 1);

    Rng rng(71);
    for (int i = 0; i < 15; i++) {
        Rng r = rng.child(static_cast<std::uint64_t>(i));
        MultiPoly sq = U * Rational(r.int_in(-3, 3)) + V * Rational(r.int_in(-3, 3)) +
                       MultiPoly(Rational(r.int_in(1, 3)));
        MultiPoly odd = U * V * Rational(r.int_in(1, 3)) + MultiPoly(Rational(r.int_in(-3, 3)));
        MultiPoly g = sq.pow(2) * odd * Rational(r.int_in(1, 12));
        if (g.is_zero()) continue;
        SquareClassCore c = square_class_core(g);
        RatFunc q{g};
        q = q / RatFunc(MultiPoly(c.scalar));
        for (const MultiPoly& p : c.pieces) q = q / RatFunc(p);
        CHECK(ratfunc_is_square(q));
    }
}

TEST_CASE("convention calibration on a single pinned sample") {
    // (U,V) = (1,1): formula class is {2, real}
    BrauerClass formula = obstruction_formula_class(Rational(1), Rational(1));
    CHECK(formula.str() == "{2,real}");

    auto diag = [](const Rational& U, const Rational& V) {
        return specialize_family_diagonal(prop1_family_diagonal(), U, V);
    };
    std::vector<std::pair<Rational, Rational>> samples{{Rational(1), Rational(1)}};
    ConventionReport rep = calibrate_convention(
        samples, [](const Rational& U, const Rational& V) { return obstruction_formula_class(U, V); },
        diag);
    REQUIRE(rep.selected.has_value());
    CHECK(*rep.selected == WittConvention::HASSE);

    CHECK_THROWS_AS(calibrate_convention({}, nullptr, nullptr), NoConventionMatches);
}
