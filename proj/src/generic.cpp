#include "a4witt/generic.hpp"

#include <mutex>

namespace a4witt {

namespace {

Rational sq(const Rational& x) { return x * x; }

MultiPoly prop1_a2_poly() {
    MultiPoly U = MultiPoly::var("U"), V = MultiPoly::var("V");
    return V * Rational(36) + U.pow(2) * Rational(2);
}
MultiPoly prop1_a3_poly() {
    MultiPoly U = MultiPoly::var("U"), V = MultiPoly::var("V");
    return U.pow(2) * Rational(4) - U.pow(2) * V * Rational(8);
}
MultiPoly prop1_a4_poly() {
    MultiPoly U = MultiPoly::var("U"), V = MultiPoly::var("V");
    return U.pow(2) * V.pow(2) * Rational(36) + U.pow(4) - U.pow(2) * V * Rational(4);
}

}  // namespace

Quartic<Rational> prop1_quartic(const Rational& U, const Rational& V) {
    Rational U2 = sq(U);
    return {Rational(-4), Rational(36) * V + Rational(2) * U2,
            Rational(4) * U2 - Rational(8) * U2 * V,
            Rational(36) * U2 * sq(V) + sq(U2) - Rational(4) * U2 * V};
}

Quartic<RatFunc> prop1_symbolic() {
    return {RatFunc(-4), RatFunc(prop1_a2_poly()), RatFunc(prop1_a3_poly()),
            RatFunc(prop1_a4_poly())};
}

BrauerClass obstruction_formula_class(const Rational& U, const Rational& V) {
    Rational u2 = sq(U);
    if (u2 == Rational(9)) throw UndefinedSymbol("U^2 = 9: first symbol entry vanishes");
    Rational w = Rational(-2) * (u2 * V - Rational(9) * V + Rational(1) - u2);
    if (w.is_zero()) throw UndefinedSymbol("second symbol entry vanishes");
    const Rational m1(-1);
    // (U^2-9, w) evaluated as (U-3, w) + (U+3, w) keeps the factored inputs small
    BrauerClass cls = symbol_class(m1, m1);
    return class_add(cls, symbol_class_parts({U - Rational(3), U + Rational(3)}, {w}));
}

UVSample uv_from_symbols(const SymbolParams& p) {
    if (p.D.is_zero()) throw DegenerateParams("D = 0");
    if (p.E.is_zero()) throw DegenerateParams("E = 0");
    if (p.sign != 1 && p.sign != -1) throw DegenerateParams("sign must be +1 or -1");
    Rational alpha = Rational(1) + sq(p.A) + sq(p.A) * sq(p.B);
    Rational beta = Rational(1) + sq(p.B) + sq(p.B) * sq(p.C);
    Rational gamma = Rational(1) + sq(p.C) + sq(p.C) * sq(p.A);
    Rational s(p.sign);
    ABPair ab;
    ab.a = s * sq(p.D) * alpha * beta;
    ab.b = s * sq(p.E) * beta * gamma;
    ab.a_parts = {s, alpha, beta};
    ab.b_parts = {s, beta, gamma};
    if (ab.a == Rational(1)) throw DegenerateParams("a = 1: U is undefined");
    Rational U = Rational(3) * (Rational(1) + ab.a) / (Rational(1) - ab.a);
    Rational u2 = sq(U);
    if (u2 == Rational(9)) throw DegenerateParams("U^2 = 9");
    Rational V = (u2 - Rational(1) - ab.b / Rational(2)) / (u2 - Rational(9));
    // postconditions are exact identities; a failure means a transcription bug
    if ((U - Rational(3)) / (U + Rational(3)) != ab.a)
        throw Error("uv_from_symbols postcondition failed: (U-3)/(U+3) != a");
    if (Rational(-2) * (u2 * V - Rational(9) * V + Rational(1) - u2) != ab.b)
        throw Error("uv_from_symbols postcondition failed: b identity");
    return {U, V, ab};
}

std::pair<Rational, Rational> c_parametrization(const Rational& c1, const Rational& u,
                                                const Rational& v) {
    Rational c2 = sq(c1) / Rational(3) - Rational(27) * sq(u) / Rational(4) - sq(v) / Rational(4);
    Rational c3 = c1 * sq(c1) / Rational(27) - c1 * sq(v) / Rational(12) -
                  Rational(27) * u * sq(u) / Rational(4) - u * sq(v) / Rational(4) -
                  Rational(9) * c1 * sq(u) / Rational(4);
    return {c2, c3};
}

Quartic<Rational> quartic_from_params(const Rational& a1, const Rational& c1, const Rational& u,
                                      const Rational& v) {
    auto [c2, c3] = c_parametrization(c1, u, v);
    CCoords<Rational> c{a1, c1, c2, c3};
    return from_c_coords(c);
}

Check check_prop1_disc_square() {
    std::map<int, MultiPoly> bind;
    bind[Vars::id("a1")] = MultiPoly(-4);
    bind[Vars::id("a2")] = prop1_a2_poly();
    bind[Vars::id("a3")] = prop1_a3_poly();
    bind[Vars::id("a4")] = prop1_a4_poly();
    MultiPoly disc = universal_quartic_disc().substitute_poly(bind);
    auto root = poly_square_root(disc);
    Json w;
    w["disc_total_degree"] = disc.total_degree();
    if (root) w["sqrt"] = root->str();
    return root ? Check::pass("prop1.disc_square", "prop1", w)
                : Check::fail("prop1.disc_square", "prop1", w);
}

Check check_cubic_disc_square() {
    // disc of X^3 + c1 X^2 + c2 X + c3 with the parametrized c2, c3
    MultiPoly c1 = MultiPoly::var("c1"), u = MultiPoly::var("u"), v = MultiPoly::var("v");
    MultiPoly c2 = c1.pow(2) * Rational(1, 3) - u.pow(2) * Rational(27, 4) - v.pow(2) * Rational(1, 4);
    MultiPoly c3 = c1.pow(3) * Rational(1, 27) - c1 * v.pow(2) * Rational(1, 12) -
                   u.pow(3) * Rational(27, 4) - u * v.pow(2) * Rational(1, 4) -
                   c1 * u.pow(2) * Rational(9, 4);
    MultiPoly disc = c1 * c2 * c3 * Rational(18) - c1.pow(3) * c3 * Rational(4) +
                     c1.pow(2) * c2.pow(2) - c2.pow(3) * Rational(4) - c3.pow(2) * Rational(27);
    auto root = poly_square_root(disc);
    Json w;
    w["disc_total_degree"] = disc.total_degree();
    if (root) w["sqrt"] = root->str();
    return root ? Check::pass("prop1.cubic_disc_square", "sec2.parametrization", w)
                : Check::fail("prop1.cubic_disc_square", "sec2.parametrization", w);
}

Check check_change_of_variables() {
    Json w;
    // forward: substitute the maps into the (a1,c1,u,v)-quartic and monicize
    RatFunc a1 = RatFunc(MultiPoly::var("a1"));
    RatFunc c1 = RatFunc(MultiPoly::var("c1"));
    RatFunc u = RatFunc(MultiPoly::var("u"));
    RatFunc v = RatFunc(MultiPoly::var("v"));
    RatFunc c2 = c1 * c1 / RatFunc(3) - RatFunc(MultiPoly(Rational(27, 4))) * u * u -
                 v * v / RatFunc(4);
    RatFunc c3 = c1 * c1 * c1 / RatFunc(27) - c1 * v * v / RatFunc(12) -
                 RatFunc(MultiPoly(Rational(27, 4))) * u * u * u - u * v * v / RatFunc(4) -
                 RatFunc(MultiPoly(Rational(9, 4))) * c1 * u * u;
    RatFunc A2 = c1 * a1 - RatFunc(2) * c2;
    RatFunc A3 = c2 * a1 - RatFunc(8) * c3;
    RatFunc A4 = c3 * a1 + c2 * c2 - RatFunc(4) * c1 * c3;

    RatFunc Uv = RatFunc(MultiPoly::var("U"));
    RatFunc Vv = RatFunc(MultiPoly::var("V"));
    std::map<int, RatFunc> maps;
    maps[Vars::id("c1")] =
        (RatFunc(3) * a1 * Vv - RatFunc(18) * u * Vv + RatFunc(6) * u) / (RatFunc(4) * Vv);
    maps[Vars::id("v")] = u * Uv / Vv;

    FuncPoly f = FuncPoly::from_descending(
        {RatFunc(1), a1.substitute(maps), A2.substitute(maps), A3.substitute(maps),
         A4.substitute(maps)});
    FuncPoly xmap = FuncPoly::from_descending(
        {RatFunc(2) * u / (RatFunc(4) * Vv),
         (RatFunc(-2) * u - Vv * a1) / (RatFunc(4) * Vv)});
    FuncPoly g = f.compose(xmap);

    RatFunc expected_lc = (u / (RatFunc(2) * Vv)).pow(4);
    bool lc_ok = g.lc() == expected_lc;
    w["leading_coefficient_is_u4_over_16V4"] = lc_ok;

    FuncPoly monic = g * (RatFunc(1) / g.lc());
    FuncPoly target = prop1_symbolic().poly();
    bool match = true;
    for (int k = 0; k <= 4; k++)
        if (!(monic.coeff(k) == target.coeff(k))) match = false;
    w["monicized_equals_family_quartic"] = match;

    // the inverse map round-trips against the forward map
    RatFunc x = RatFunc(MultiPoly::var("x"));
    RatFunc Xv = RatFunc(MultiPoly::var("X"));
    RatFunc delta = RatFunc(-18) * u - RatFunc(4) * c1 + RatFunc(3) * a1;
    RatFunc U_inv = RatFunc(-6) * v / delta;
    RatFunc V_inv = RatFunc(-6) * u / delta;
    RatFunc X_inv = RatFunc(-2) * (RatFunc(6) * x + RatFunc(9) * u + RatFunc(2) * c1) / delta;

    std::map<int, RatFunc> fwd = maps;
    fwd[Vars::id("x")] =
        (RatFunc(-2) * u - Vv * a1 + RatFunc(2) * Xv * u) / (RatFunc(4) * Vv);
    bool round1 = U_inv.substitute(fwd) == Uv && V_inv.substitute(fwd) == Vv &&
                  X_inv.substitute(fwd) == Xv;
    w["inverse_after_forward_is_identity"] = round1;

    std::map<int, RatFunc> inv;
    inv[Vars::id("U")] = U_inv;
    inv[Vars::id("V")] = V_inv;
    inv[Vars::id("X")] = X_inv;
    bool round2 = fwd[Vars::id("c1")].substitute(inv) == c1 &&
                  fwd[Vars::id("v")].substitute(inv) == v &&
                  fwd[Vars::id("x")].substitute(inv) == x;
    w["forward_after_inverse_is_identity"] = round2;

    bool ok = lc_ok && match && round1 && round2;
    return ok ? Check::pass("prop1.change_of_variables", "sec2.change_of_variables", w)
              : Check::fail("prop1.change_of_variables", "sec2.change_of_variables", w);
}

namespace {

void classify_into(EmbedReport& rep, const Rational& U, const Rational& V) {
    Quartic<Rational> P = prop1_quartic(U, V);
    RatPoly f = P.poly();
    if (discriminant(f).is_zero()) return;
    IrreducibilityResult irr = is_irreducible_quartic(f);
    if (!irr.irreducible) {
        rep.shape = irr.shape;
        return;
    }
    auto [label, cert] = quartic_galois(f);
    rep.label = label;
    rep.real_roots = real_root_count(f);
}

}  // namespace

EmbedReport embeddable(const Rational& U, const Rational& V, bool classify) {
    EmbedReport rep;
    rep.obstruction = obstruction_formula_class(U, V);
    rep.embeddable = rep.obstruction.is_trivial();
    if (classify) classify_into(rep, U, V);
    return rep;
}

EmbedReport embeddable_from_parts(const UVSample& s, bool classify) {
    EmbedReport rep;
    const Rational m1(-1);
    // (U^2-9, -2(...)) has the same class as (a, b): U^2-9 = 36 a / (1-a)^2
    // and the b-identity holds exactly by construction
    rep.obstruction =
        class_add(symbol_class(m1, m1), symbol_class_parts(s.ab.a_parts, s.ab.b_parts));
    rep.embeddable = rep.obstruction.is_trivial();
    if (classify) classify_into(rep, s.U, s.V);
    return rep;
}

SignCalibration calibrate_criterion_sign(const std::vector<SymbolParams>& samples) {
    if (samples.empty()) throw NoSignMatches("empty calibration sample list");
    SignCalibration out;
    const Rational m1(-1);
    BrauerClass minus_one_class = symbol_class(m1, m1);
    for (const SymbolParams& base : samples) {
        for (int sign : {1, -1}) {
            SymbolParams p = base;
            p.sign = sign;
            if (p.D.is_zero() || p.E.is_zero()) throw DegenerateParams("degenerate sample");
            Rational alpha = Rational(1) + sq(p.A) + sq(p.A) * sq(p.B);
            Rational beta = Rational(1) + sq(p.B) + sq(p.B) * sq(p.C);
            Rational gamma = Rational(1) + sq(p.C) + sq(p.C) * sq(p.A);
            Rational s(sign);
            Rational a = s * sq(p.D) * alpha * beta;
            Rational b = s * sq(p.E) * beta * gamma;
            BrauerClass cls =
                class_add(minus_one_class, symbol_class_parts({s, alpha, beta}, {s, beta, gamma}));
            bool trivial = cls.is_trivial();
            if (trivial) {
                (sign > 0 ? out.trivial_plus : out.trivial_minus)++;
                if (!(a.sign() < 0 && b.sign() < 0)) out.negativity_invariant_ok = false;
            } else if (sign > 0 && !out.details.contains("plus_witness")) {
                Json wit;
                wit["a"] = a.str();
                wit["b"] = b.str();
                wit["class"] = cls.str();
                out.details["plus_witness"] = wit;
            }
        }
        out.samples++;
    }
    out.details["trivial_rate_plus"] = Json{{"count", out.trivial_plus}, {"samples", out.samples}};
    out.details["trivial_rate_minus"] =
        Json{{"count", out.trivial_minus}, {"samples", out.samples}};
    if (out.trivial_minus == out.samples && out.trivial_plus < out.samples)
        out.selected_sign = -1;
    else if (out.trivial_plus == out.samples && out.trivial_minus < out.samples)
        out.selected_sign = 1;
    else if (out.trivial_plus != out.samples && out.trivial_minus != out.samples)
        throw NoSignMatches("neither sign makes the symbol sum vanish on all samples");
    return out;
}

std::optional<SymbolParams> search_symbol_params(const Rational& U, const Rational& V,
                                                 long max_height) {
    Rational u2 = sq(U);
    if (u2 == Rational(9)) return std::nullopt;
    Rational a = (U - Rational(3)) / (U + Rational(3));
    Rational b = Rational(-2) * (u2 * V - Rational(9) * V + Rational(1) - u2);
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    int sign = a.sign();
    if (b.sign() != sign) return std::nullopt;
    Rational sa = a * Rational(sign), sb = b * Rational(sign);  // positive targets

    long h = std::min(max_height, 8l);
    std::vector<Rational> candidates;
    for (long p = -h; p <= h; p++)
        for (long q = 1; q <= h; q++) {
            Rational r(p, q);
            bool seen = false;
            for (const Rational& c : candidates)
                if (c == r) seen = true;
            if (!seen) candidates.push_back(r);
        }
    auto square_root = [](const Rational& x) -> std::optional<Rational> {
        if (!is_square(x)) return std::nullopt;
        Int n, d;
        mpz_sqrt(n.get_mpz_t(), x.numerator().get_mpz_t());
        mpz_sqrt(d.get_mpz_t(), x.denominator().get_mpz_t());
        return Rational(n, d);
    };
    for (const Rational& A : candidates)
        for (const Rational& B : candidates)
            for (const Rational& C : candidates) {
                Rational alpha = Rational(1) + sq(A) + sq(A) * sq(B);
                Rational beta = Rational(1) + sq(B) + sq(B) * sq(C);
                Rational gamma = Rational(1) + sq(C) + sq(C) * sq(A);
                auto D = square_root(sa / (alpha * beta));
                if (!D) continue;
                auto E = square_root(sb / (beta * gamma));
                if (!E) continue;
                return SymbolParams{A, B, C, *D, *E, sign};
            }
    return std::nullopt;
}

const FamilyDiagonal& prop1_family_diagonal() {
    static const FamilyDiagonal fam = build_family_diagonal(prop1_symbolic(), "U", "V");
    return fam;
}

}  // namespace a4witt
