#ifndef A4WITT_RESOLVENT_HPP
#define A4WITT_RESOLVENT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "a4witt/galois.hpp"
#include "a4witt/report.hpp"
#include "a4witt/unipoly.hpp"

namespace a4witt {

// monic X^4 + a1 X^3 + a2 X^2 + a3 X + a4 over an exact field C
template <typename C>
struct Quartic {
    C a1, a2, a3, a4;

    UniPoly<C> poly() const {
        return UniPoly<C>::from_descending({C(1), a1, a2, a3, a4});
    }
    static Quartic from_poly(const UniPoly<C>& f) {
        return {f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0)};
    }
};

// b0 X^3 + b1 X^2 + b2 X + b3; the remainder of P'^2 mod P
template <typename C>
struct ResolventCubic {
    C b0, b1, b2, b3;

    UniPoly<C> poly() const { return UniPoly<C>::from_descending({b0, b1, b2, b3}); }
};

template <typename C>
struct CCoords {
    C a1, c1, c2, c3;
};

template <typename C>
ResolventCubic<C> resolvent_from_division(const Quartic<C>& P) {
    UniPoly<C> p = P.poly();
    UniPoly<C> d = p.derivative();
    UniPoly<C> r = (d * d) % p;
    return {r.coeff(3), r.coeff(2), r.coeff(1), r.coeff(0)};
}

template <typename C>
ResolventCubic<C> resolvent_from_formulas(const Quartic<C>& P) {
    const C &a1 = P.a1, &a2 = P.a2, &a3 = P.a3, &a4 = P.a4;
    C b0 = C(-8) * a3 - a1 * a1 * a1 + C(4) * a1 * a2;
    C b1 = -(a1 * a1) * a2 - C(2) * a1 * a3 - C(16) * a4 + C(4) * a2 * a2;
    C b2 = C(4) * a2 * a3 - a1 * a1 * a3 - C(8) * a1 * a4;
    C b3 = a3 * a3 - a1 * a1 * a4;
    return {b0, b1, b2, b3};
}

// c_i = b_i / b0; throws DegenerateResolvent when b0 = 0
template <typename C>
CCoords<C> to_c_coords(const Quartic<C>& P) {
    ResolventCubic<C> b = resolvent_from_formulas(P);
    if (b.b0.is_zero()) throw DegenerateResolvent("b0 = 0: the birational map is undefined");
    return {P.a1, b.b1 / b.b0, b.b2 / b.b0, b.b3 / b.b0};
}

template <typename C>
Quartic<C> from_c_coords(const CCoords<C>& c) {
    C a2 = c.c1 * c.a1 - C(2) * c.c2;
    C a3 = c.c2 * c.a1 - C(8) * c.c3;
    C a4 = c.c3 * c.a1 + c.c2 * c.c2 - C(4) * c.c1 * c.c3;
    return {c.a1, a2, a3, a4};
}

// ---- symbolic verification of the identities, over Q(a1..a4) ----

// the generic quartic with indeterminate coefficients
Quartic<RatFunc> symbolic_quartic();

// universal discriminant of the monic quartic, as a polynomial in a1..a4
const MultiPoly& universal_quartic_disc();

Check check_resolvent_formulas();    // division remainder == closed formulas
Check check_disc_product_identity(); // disc(Q) = disc(P) b0^2
Check check_hessian_identity();      // H(X,1) = (-9a1^2+24a2) P - 9 Q
Check check_birational_roundtrip();  // both directions

enum class PencilModulus { P, P_T };

struct PencilReport {
    PencilModulus modulus_used;
    MultiPoly u_of_t;          // U(T), polynomial in a1..a4 and T
    bool u_at_zero_is_one;
    bool disc_identity_holds;  // disc(P_T) = disc(P) U(T)^2
    std::string str_modulus() const { return modulus_used == PencilModulus::P ? "P" : "P_T"; }
};

// tries both readings of the modulus; throws NoProportionality if neither works
PencilReport pencil_analysis();

// ---- numeric verification of the root formula (Prop 2, point 1) ----

struct RootFormulaReport {
    int checked = 0;   // pairings evaluated
    int skipped = 0;   // pairings with denominator below tolerance
    double max_residual = 0.0;
    double min_denominator = 0.0;  // over all three pairings
    bool pass = false;
};

// |Q(value)| < tol * max|b_i| for the three paired-root values; throws
// SingularInput when disc(P) = 0, NumericDegenerate when all pairings skip
RootFormulaReport verify_root_formula(const Quartic<Rational>& P, double tol);

// randomized suite over seeded monic integer quartics
Check check_root_formula_random(std::uint64_t seed, int samples, double tol);

}  // namespace a4witt

#endif
