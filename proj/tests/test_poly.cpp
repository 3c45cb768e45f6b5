#include <doctest.h>

#include "a4witt/multipoly.hpp"
#include "a4witt/rng.hpp"
#include "a4witt/unipoly.hpp"

using namespace a4witt;

namespace {

// independent resultant oracle: Sylvester matrix determinant by Gaussian
// elimination over the coefficient field
template <typename C>
C sylvester_resultant(const UniPoly<C>& f, const UniPoly<C>& g) {
    int m = f.degree(), n = g.degree();
    int size = m + n;
    std::vector<std::vector<C>> M(static_cast<std::size_t>(size),
                                  std::vector<C>(static_cast<std::size_t>(size), C(0)));
    for (int row = 0; row < n; row++)
        for (int k = 0; k <= m; k++)
            M[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + k)] = f.coeff(m - k);
    for (int row = 0; row < m; row++)
        for (int k = 0; k <= n; k++)
            M[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + k)] = g.coeff(n - k);
    C det(1);
    for (int col = 0; col < size; col++) {
        int pivot = -1;
        for (int row = col; row < size; row++)
            if (!M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) return C(0);
        if (pivot != col) {
            std::swap(M[static_cast<std::size_t>(pivot)], M[static_cast<std::size_t>(col)]);
            det = -det;
        }
        const C p = M[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        det = det * p;
        for (int row = col + 1; row < size; row++) {
            C factor = M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] / p;
            if (factor.is_zero()) continue;
            for (int k = col; k < size; k++)
                M[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] =
                    M[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] -
                    factor * M[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)];
        }
    }
    return det;
}

RatPoly random_poly(Rng& r, int maxdeg, long height) {
    int deg = static_cast<int>(r.int_in(0, maxdeg));
    std::vector<Rational> c;
    for (int k = 0; k <= deg; k++) c.push_back(r.rational(height));
    return RatPoly::from_ascending(std::move(c));
}

}  // namespace

TEST_CASE("multipoly arithmetic and printing") {
    MultiPoly x = MultiPoly::var("x");
    MultiPoly p = x.pow(4) - x.pow(3) * Rational(4) + x.pow(2) * Rational(38) - x * Rational(4) +
                  MultiPoly(33);
    CHECK(p.str() == "x^4 - 4*x^3 + 38*x^2 - 4*x + 33");
    CHECK(parse_multipoly("x^4 - 4*x^3 + 38*x^2 - 4*x + 33") == p);
    CHECK(parse_multipoly("1/2*x - 1/3") == x * Rational(1, 2) - MultiPoly(Rational(1, 3)));
    CHECK_THROWS_AS(parse_multipoly("x^"), ParseError);
    CHECK_THROWS_AS(parse_multipoly("x + * y"), ParseError);

    Rng rng(3);
    MultiPoly U = MultiPoly::var("U"), V = MultiPoly::var("V");
    for (int i = 0; i < 20; i++) {
        Rng r = rng.child(static_cast<std::uint64_t>(i));
        MultiPoly a = U * Rational(r.int_in(-5, 5)) + V * Rational(r.int_in(-5, 5)) +
                      MultiPoly(Rational(r.int_in(-5, 5)));
        MultiPoly b = U.pow(2) * Rational(r.int_in(-5, 5)) + V * Rational(r.int_in(-5, 5));
        MultiPoly c = V.pow(3) * Rational(r.int_in(-5, 5)) + MultiPoly(Rational(r.int_in(-5, 5)));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("multipoly exact division and square root") {
    MultiPoly U = MultiPoly::var("U"), V = MultiPoly::var("V");
    MultiPoly f = (U + V) * (U - V);
    CHECK(*f.exact_divide(U + V) == U - V);
    CHECK(!(U.pow(2) + V).exact_divide(U + V).has_value());

    auto r = poly_square_root(U.pow(2) + U * V * Rational(2) + V.pow(2));
    REQUIRE(r.has_value());
    CHECK(*r == U + V);
    CHECK(!poly_square_root(U.pow(2) + V.pow(2)).has_value());

    // sign canonicalization: sqrt((-U-V)^2) has positive leading coefficient
    auto r2 = poly_square_root((-(U + V)).pow(2));
    REQUIRE(r2.has_value());
    CHECK(*r2 == U + V);

    Rng rng(17);
    for (int i = 0; i < 25; i++) {
        Rng rr = rng.child(static_cast<std::uint64_t>(i));
        MultiPoly g = U.pow(static_cast<unsigned>(rr.int_in(0, 3))) * Rational(rr.int_in(1, 9)) +
                      V.pow(static_cast<unsigned>(rr.int_in(0, 3))) * Rational(rr.int_in(-9, 9)) +
                      U * V * Rational(rr.int_in(-9, 9)) + MultiPoly(Rational(rr.int_in(-9, 9)));
        if (g.is_zero()) continue;
        auto root = poly_square_root(g * g);
        REQUIRE(root.has_value());
        CHECK((*root == g || *root == -g));
    }
}

TEST_CASE("divrem examples and round trip") {
    RatPoly X = RatPoly::x();
    auto [q1, r1] = divrem(X * X, X);
    CHECK(q1 == X);
    CHECK(r1.is_zero());

    auto [q2, r2] = divrem(X, X * X);
    CHECK(q2.is_zero());
    CHECK(r2 == X);

    // P'^2 mod P for P = X^4+X^3+X^2+X+1 has remainder -5X^3 -15X^2 -5X
    RatPoly P = RatPoly::from_descending(
        {Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)});
    RatPoly d = P.derivative();
    RatPoly rem = (d * d) % P;
    CHECK(rem == RatPoly::from_descending({Rational(-5), Rational(-15), Rational(-5), Rational(0)}));

    CHECK_THROWS_AS(divrem(X, RatPoly()), DivisionByZeroPoly);

    Rng rng(23);
    for (int i = 0; i < 100; i++) {
        Rng r = rng.child(static_cast<std::uint64_t>(i));
        RatPoly f = random_poly(r, 7, 20), g = random_poly(r, 4, 20);
        if (g.is_zero()) continue;
        auto [q, rem2] = divrem(f, g);
        CHECK(q * g + rem2 == f);
        if (!rem2.is_zero()) CHECK(rem2.degree() < g.degree());
    }
}

TEST_CASE("resultant convention and oracle") {
    // Res(X - alpha, X - beta) = alpha - beta
    FuncPoly f = FuncPoly::from_descending({RatFunc(1), -RatFunc(MultiPoly::var("A"))});
    FuncPoly g = FuncPoly::from_descending({RatFunc(1), -RatFunc(MultiPoly::var("B"))});
    CHECK(resultant(f, g) == RatFunc(MultiPoly::var("A")) - RatFunc(MultiPoly::var("B")));

    RatPoly f2 = RatPoly::from_descending({Rational(1), Rational(0), Rational(-1)});
    RatPoly g2 = RatPoly::from_descending({Rational(1), Rational(-2)});
    CHECK(resultant(f2, g2) == Rational(3));

    RatPoly h = RatPoly::from_descending({Rational(1), Rational(0), Rational(1)});
    CHECK(resultant(h, h) == Rational(0));
    CHECK_THROWS_AS(resultant(RatPoly(), h), Error);

    Rng rng(29);
    for (int i = 0; i < 60; i++) {
        Rng r = rng.child(static_cast<std::uint64_t>(i));
        RatPoly a = random_poly(r, 4, 9), b = random_poly(r, 3, 9), c = random_poly(r, 3, 9);
        if (a.degree() < 1 || b.degree() < 1 || c.degree() < 1) continue;
        CHECK(resultant(a, b) == sylvester_resultant(a, b));
        // multiplicativity in the first argument
        CHECK(resultant(a * b, c) == resultant(a, c) * resultant(b, c));
    }
}

TEST_CASE("discriminant examples") {
    // X^2 + bX + c -> b^2 - 4c, symbolically
    FuncPoly quad = FuncPoly::from_descending(
        {RatFunc(1), RatFunc(MultiPoly::var("A")), RatFunc(MultiPoly::var("B"))});
    RatFunc expect = RatFunc(MultiPoly::var("A")) * RatFunc(MultiPoly::var("A")) -
                     RatFunc(4) * RatFunc(MultiPoly::var("B"));
    CHECK(discriminant(quad) == expect);

    RatPoly f = RatPoly::from_descending(
        {Rational(1), Rational(0), Rational(0), Rational(8), Rational(12)});
    CHECK(discriminant(f) == Rational(331776));  // = -27*8^4 + 256*12^3

    RatPoly cyc = RatPoly::from_descending(
        {Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)});
    CHECK(discriminant(cyc) == Rational(125));

    // disc = 0 iff gcd(f, f') is nonconstant, on quartics with a planted double root
    Rng rng(31);
    for (int i = 0; i < 40; i++) {
        Rng r = rng.child(static_cast<std::uint64_t>(i));
        Rational root = r.rational(9);
        RatPoly lin = RatPoly::from_descending({Rational(1), -root});
        RatPoly rest = random_poly(r, 2, 9);
        if (rest.is_zero()) continue;
        RatPoly planted = lin * lin * rest;
        if (planted.degree() < 2) continue;
        CHECK(discriminant(planted).is_zero());
        CHECK(gcd_poly(planted, planted.derivative()).degree() > 0);
    }
}

TEST_CASE("substitution") {
    MultiPoly X = MultiPoly::var("X"), U = MultiPoly::var("U");
    RatFunc half{Rational(1, 2)};
    CHECK(X.pow(2).substitute({{Vars::id("X"), half}}) == RatFunc(Rational(1, 4)));
    CHECK((U.pow(2) - MultiPoly(9)).substitute({{Vars::id("U"), RatFunc(Rational(-15, 4))}}) ==
          RatFunc(Rational(81, 16)));

    // degree-1 case passes the binding through unchanged
    RatFunc binding{MultiPoly::var("u") * Rational(2), MultiPoly::var("V") * Rational(4)};
    CHECK(X.substitute({{Vars::id("X"), binding}}) == binding);

    // ring homomorphism on random inputs
    Rng rng(37);
    for (int i = 0; i < 20; i++) {
        Rng r = rng.child(static_cast<std::uint64_t>(i));
        MultiPoly f = X.pow(2) * Rational(r.int_in(-5, 5)) + U * Rational(r.int_in(-5, 5));
        MultiPoly g = X * U * Rational(r.int_in(-5, 5)) + MultiPoly(Rational(r.int_in(-5, 5)));
        std::map<int, RatFunc> bind{{Vars::id("X"), RatFunc(r.rational(9))},
                                    {Vars::id("U"), binding}};
        CHECK((f + g).substitute(bind) == f.substitute(bind) + g.substitute(bind));
        CHECK((f * g).substitute(bind) == f.substitute(bind) * g.substitute(bind));
    }
}

TEST_CASE("ratfunc normalization and equality") {
    MultiPoly U = MultiPoly::var("U"), V = MultiPoly::var("V");
    RatFunc a(U * Rational(2), V * Rational(4));
    RatFunc b(U, V * Rational(2));
    CHECK(a == b);  // cross multiplication, no gcd needed
    RatFunc c(U * V, V * V);  // unreduced representation of U/V
    CHECK(c == RatFunc(U, V));
    CHECK_THROWS_AS(RatFunc(U, MultiPoly()), Error);
    CHECK((a - b).is_zero());
    CHECK(ratfunc_is_square(RatFunc(U.pow(2) * Rational(9), V.pow(4))));
    CHECK(!ratfunc_is_square(RatFunc(U.pow(2) * Rational(8), V.pow(4))));
}

TEST_CASE("squarefree decomposition") {
    RatPoly X = RatPoly::x();
    RatPoly one(Rational(1));
    RatPoly f = (X - one) * (X - one) * (X * X + one) * RatPoly(Rational(3));
    auto [unit, factors] = squarefree_decomposition(f);
    CHECK(unit == Rational(3));
    RatPoly rebuilt(unit);
    for (const auto& [p, mult] : factors) rebuilt = rebuilt * p.pow(static_cast<unsigned>(mult));
    CHECK(rebuilt == f);
    CHECK(odd_multiplicity_part(f) == (X * X + one));
}
