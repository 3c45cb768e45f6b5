#include "a4witt/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <mutex>

#include "a4witt/numeric.hpp"
#include "a4witt/rng.hpp"

namespace a4witt {

namespace {

RatFunc sym(const char* name) { return RatFunc(MultiPoly::var(name)); }

// coefficients of the symbolic pencil and friends are polynomials; unwrap
MultiPoly as_polynomial(const RatFunc& f) {
    if (!f.den().is_constant()) throw Error("expected a polynomial, got a proper fraction");
    MultiPoly n = f.num();
    n *= Rational(1) / f.den().constant_value();
    return n;
}

MultiPoly symbolic_quartic_mp() {
    // X^4 + a1 X^3 + a2 X^2 + a3 X + a4 as a multivariate polynomial
    MultiPoly X = MultiPoly::var("X");
    return X.pow(4) + MultiPoly::var("a1") * X.pow(3) + MultiPoly::var("a2") * X.pow(2) +
           MultiPoly::var("a3") * X + MultiPoly::var("a4");
}

}  // namespace

Quartic<RatFunc> symbolic_quartic() { return {sym("a1"), sym("a2"), sym("a3"), sym("a4")}; }

const MultiPoly& universal_quartic_disc() {
    static std::once_flag once;
    static MultiPoly disc;
    std::call_once(once, [] {
        FuncPoly p = symbolic_quartic().poly();
        disc = as_polynomial(discriminant(p));
    });
    return disc;
}

Check check_resolvent_formulas() {
    Quartic<RatFunc> P = symbolic_quartic();
    ResolventCubic<RatFunc> div = resolvent_from_division(P);
    ResolventCubic<RatFunc> fml = resolvent_from_formulas(P);
    bool ok = div.b0 == fml.b0 && div.b1 == fml.b1 && div.b2 == fml.b2 && div.b3 == fml.b3;
    Json w;
    w["division"] = div.poly().str("X");
    w["formulas"] = fml.poly().str("X");
    return ok ? Check::pass("resolvent.formulas_match_division", "prop2", w)
              : Check::fail("resolvent.formulas_match_division", "prop2", w);
}

Check check_disc_product_identity() {
    Quartic<RatFunc> P = symbolic_quartic();
    ResolventCubic<RatFunc> Q = resolvent_from_division(P);
    RatFunc disc_q = discriminant(Q.poly());
    RatFunc disc_p{universal_quartic_disc()};
    RatFunc rhs = disc_p * Q.b0 * Q.b0;
    bool ok = disc_q == rhs;
    Json w;
    w["disc_Q"] = disc_q.str();
    w["disc_P*b0^2"] = rhs.str();
    return ok ? Check::pass("resolvent.disc_product_identity", "prop2.7", w)
              : Check::fail("resolvent.disc_product_identity", "prop2.7", w);
}

Check check_hessian_identity() {
    // homogenize P, form the Hessian determinant, compare at Y = 1
    MultiPoly P = symbolic_quartic_mp();
    int X = Vars::id("X"), Y = Vars::id("Y");
    MultiPoly Pt;  // Y^4 P(X/Y)
    {
        std::vector<MultiPoly> cx = P.coefficients_in(X);
        for (std::size_t k = 0; k < cx.size(); k++) {
            Pt += cx[k] * MultiPoly::var(X, static_cast<int>(k)) *
                  MultiPoly::var(Y, static_cast<int>(4 - k));
        }
    }
    MultiPoly H = Pt.derivative(X).derivative(X) * Pt.derivative(Y).derivative(Y) -
                  Pt.derivative(X).derivative(Y).pow(2);
    MultiPoly H1 = H.substitute_poly({{Y, MultiPoly(1)}});

    Quartic<RatFunc> Ps = symbolic_quartic();
    ResolventCubic<RatFunc> Q = resolvent_from_division(Ps);
    MultiPoly Qmp;
    {
        MultiPoly x = MultiPoly::var(X);
        Qmp = as_polynomial(Q.b0) * x.pow(3) + as_polynomial(Q.b1) * x.pow(2) +
              as_polynomial(Q.b2) * x + as_polynomial(Q.b3);
    }
    MultiPoly a1 = MultiPoly::var("a1"), a2 = MultiPoly::var("a2");
    MultiPoly rhs = (a1 * a1 * Rational(-9) + a2 * Rational(24)) * P - Qmp * Rational(9);
    bool ok = H1 == rhs;
    Json w;
    w["hessian_at_Y1"] = H1.str();
    w["rhs"] = rhs.str();
    return ok ? Check::pass("resolvent.hessian_identity", "prop2.6", w)
              : Check::fail("resolvent.hessian_identity", "prop2.6", w);
}

Check check_birational_roundtrip() {
    Json w;
    bool ok = true;
    {
        // a -> c -> a over Q(a1..a4)
        Quartic<RatFunc> P = symbolic_quartic();
        CCoords<RatFunc> c = to_c_coords(P);
        Quartic<RatFunc> back = from_c_coords(c);
        bool fwd = back.a1 == P.a1 && back.a2 == P.a2 && back.a3 == P.a3 && back.a4 == P.a4;
        w["a_to_c_to_a"] = fwd ? "identity" : "mismatch";
        ok = ok && fwd;
    }
    {
        // c -> a -> c over Q(a1,c1,c2,c3)
        CCoords<RatFunc> c{sym("a1"), sym("c1"), sym("c2"), sym("c3")};
        Quartic<RatFunc> P = from_c_coords(c);
        CCoords<RatFunc> back = to_c_coords(P);
        bool bwd = back.a1 == c.a1 && back.c1 == c.c1 && back.c2 == c.c2 && back.c3 == c.c3;
        w["c_to_a_to_c"] = bwd ? "identity" : "mismatch";
        ok = ok && bwd;
    }
    return ok ? Check::pass("resolvent.birational_roundtrip", "prop2.7", w)
              : Check::fail("resolvent.birational_roundtrip", "prop2.7", w);
}

PencilReport pencil_analysis() {
    Quartic<RatFunc> P = symbolic_quartic();
    ResolventCubic<RatFunc> Q = resolvent_from_division(P);
    FuncPoly p = P.poly();
    FuncPoly q = Q.poly();
    RatFunc T = sym("T");
    FuncPoly pt = p - q * T;
    FuncPoly dpt = pt.derivative();
    FuncPoly dpt2 = dpt * dpt;

    auto proportional_factor = [&](const FuncPoly& modulus) -> std::optional<MultiPoly> {
        FuncPoly r = dpt2 % modulus;
        // r must equal U * q with U free of X; all four q coefficients are
        // nonzero polynomials, so cross-ratios decide proportionality
        for (int i = 0; i <= 3; i++)
            for (int j = i + 1; j <= 3; j++)
                if (!(r.coeff(i) * q.coeff(j) == r.coeff(j) * q.coeff(i))) return std::nullopt;
        MultiPoly rn = as_polynomial(r.coeff(3));
        MultiPoly qn = as_polynomial(q.coeff(3));
        auto u = rn.exact_divide(qn);
        if (!u) throw Error("proportionality factor is not a polynomial");
        return u;
    };

    PencilReport report;
    std::optional<MultiPoly> u = proportional_factor(pt);
    if (u) {
        report.modulus_used = PencilModulus::P_T;
    } else {
        u = proportional_factor(p);
        if (!u) throw NoProportionality("remainder is not proportional to Q modulo P or P_T");
        report.modulus_used = PencilModulus::P;
    }
    report.u_of_t = *u;

    int Tid = Vars::id("T");
    MultiPoly u0 = u->substitute_poly({{Tid, MultiPoly(0)}});
    report.u_at_zero_is_one = (u0 == MultiPoly(1));

    // disc(P_T) = disc(P) U(T)^2 via the universal discriminant
    const MultiPoly& D = universal_quartic_disc();
    std::map<int, MultiPoly> bind;
    bind[Vars::id("a1")] = MultiPoly::var("a1") - as_polynomial(Q.b0) * MultiPoly::var("T");
    bind[Vars::id("a2")] = MultiPoly::var("a2") - as_polynomial(Q.b1) * MultiPoly::var("T");
    bind[Vars::id("a3")] = MultiPoly::var("a3") - as_polynomial(Q.b2) * MultiPoly::var("T");
    bind[Vars::id("a4")] = MultiPoly::var("a4") - as_polynomial(Q.b3) * MultiPoly::var("T");
    MultiPoly disc_pt = D.substitute_poly(bind);
    report.disc_identity_holds = (disc_pt == D * u->pow(2));
    return report;
}

RootFormulaReport verify_root_formula(const Quartic<Rational>& P, double tol) {
    RatPoly p = P.poly();
    if (discriminant(p).is_zero()) throw SingularInput("disc(P) = 0");
    ResolventCubic<Rational> Q = resolvent_from_division(P);

    double scale = 0.0;
    for (const Rational& b : {Q.b0, Q.b1, Q.b2, Q.b3})
        scale = std::max(scale, std::fabs(b.to_double()));
    if (scale == 0.0) scale = 1.0;

    std::vector<std::complex<double>> x = complex_roots(p);
    auto qeval = [&](std::complex<double> v) {
        std::complex<double> acc = Q.b0.to_double();
        acc = acc * v + Q.b1.to_double();
        acc = acc * v + Q.b2.to_double();
        acc = acc * v + Q.b3.to_double();
        return acc;
    };

    RootFormulaReport rep;
    rep.min_denominator = std::numeric_limits<double>::infinity();
    const int pair_a[3] = {1, 2, 3};
    for (int k = 0; k < 3; k++) {
        int i = pair_a[k];
        // pairing {0,i} vs the remaining two
        int j1 = -1, j2 = -1;
        for (int t = 1; t <= 3; t++)
            if (t != i) (j1 < 0 ? j1 : j2) = t;
        std::complex<double> den = x[0] + x[static_cast<std::size_t>(i)] -
                                   x[static_cast<std::size_t>(j1)] - x[static_cast<std::size_t>(j2)];
        rep.min_denominator = std::min(rep.min_denominator, std::abs(den));
        if (std::abs(den) < tol) {
            rep.skipped++;
            continue;
        }
        std::complex<double> num = x[0] * x[static_cast<std::size_t>(i)] -
                                   x[static_cast<std::size_t>(j1)] * x[static_cast<std::size_t>(j2)];
        double residual = std::abs(qeval(num / den));
        rep.max_residual = std::max(rep.max_residual, residual);
        rep.checked++;
    }
    if (rep.checked == 0)
        throw NumericDegenerate("all three pairings have near-zero denominators");
    rep.pass = rep.max_residual < tol * scale;
    return rep;
}

Check check_root_formula_random(std::uint64_t seed, int samples, double tol) {
    Rng rng(seed);
    int done = 0, attempts = 0;
    double worst = 0.0;
    Json failures = Json::array();
    while (done < samples && attempts < samples * 50) {
        attempts++;
        Rng r = rng.child(static_cast<std::uint64_t>(attempts));
        Quartic<Rational> P{Rational(r.int_in(-20, 20)), Rational(r.int_in(-20, 20)),
                            Rational(r.int_in(-20, 20)), Rational(r.int_in(-20, 20))};
        if (discriminant(P.poly()).is_zero()) continue;
        RootFormulaReport rep;
        try {
            rep = verify_root_formula(P, tol);
        } catch (const NumericDegenerate&) {
            continue;
        }
        if (rep.min_denominator < 1e-6) continue;  // excluded by the sampling contract
        done++;
        worst = std::max(worst, rep.max_residual);
        if (!rep.pass || rep.checked != 3) {
            Json f;
            f["quartic"] = P.poly().str("x");
            f["max_residual"] = rep.max_residual;
            failures.push_back(f);
        }
    }
    Json w;
    w["samples"] = done;
    w["tol"] = tol;
    w["max_residual"] = worst;
    if (!failures.empty()) w["failures"] = failures;
    bool ok = failures.empty() && done == samples;
    return ok ? Check::pass("resolvent.root_formula_numeric", "prop2.1", w)
              : Check::fail("resolvent.root_formula_numeric", "prop2.1", w);
}

}  // namespace a4witt
