#ifndef A4WITT_GENERIC_HPP
#define A4WITT_GENERIC_HPP

#include <optional>
#include <utility>

#include "a4witt/galois.hpp"
#include "a4witt/hilbert.hpp"
#include "a4witt/report.hpp"
#include "a4witt/resolvent.hpp"
#include "a4witt/traceform.hpp"

namespace a4witt {

// X^4 - 4X^3 + (36V + 2U^2)X^2 + (4U^2 - 8U^2 V)X + (36U^2V^2 + U^4 - 4U^2V)
Quartic<Rational> prop1_quartic(const Rational& U, const Rational& V);
Quartic<RatFunc> prop1_symbolic();

// (-1,-1) + (U^2-9, -2(U^2 V - 9V + 1 - U^2)); UndefinedSymbol on the
// degenerate locus U^2 = 9 or vanishing second entry
BrauerClass obstruction_formula_class(const Rational& U, const Rational& V);

struct SymbolParams {
    Rational A, B, C, D, E;
    int sign = -1;  // applied to both a and b
};

struct ABPair {
    Rational a, b;
    // same square classes as a and b, split into small factors
    std::vector<Rational> a_parts, b_parts;
};

struct UVSample {
    Rational U, V;
    ABPair ab;
};

// a = sign D^2 (1+A^2+A^2B^2)(1+B^2+B^2C^2), b = sign E^2 (1+B^2+B^2C^2)(1+C^2+C^2A^2),
// U = 3(1+a)/(1-a), V = (U^2-1-b/2)/(U^2-9); exact postcondition checks.
UVSample uv_from_symbols(const SymbolParams& p);

// c2 = c1^2/3 - 27u^2/4 - v^2/4,
// c3 = c1^3/27 - c1 v^2/12 - 27u^3/4 - u v^2/4 - 9 c1 u^2/4
std::pair<Rational, Rational> c_parametrization(const Rational& c1, const Rational& u,
                                                const Rational& v);

// composes the c-parametrization with the inverse resolvent formulas
Quartic<Rational> quartic_from_params(const Rational& a1, const Rational& c1, const Rational& u,
                                      const Rational& v);

// symbolic suite pieces
Check check_prop1_disc_square();
Check check_cubic_disc_square();
Check check_change_of_variables();

struct EmbedReport {
    bool embeddable = false;
    BrauerClass obstruction;
    std::optional<GaloisLabel> label;  // when irreducible with disc != 0
    std::optional<int> real_roots;
    std::optional<std::vector<int>> shape;  // factor shape when reducible
};

EmbedReport embeddable(const Rational& U, const Rational& V, bool classify = true);
// same decision via the factored parametrized values (avoids large factorizations)
EmbedReport embeddable_from_parts(const UVSample& s, bool classify = true);

struct SignCalibration {
    int samples = 0;
    int trivial_plus = 0;   // count of trivial classes under sign +
    int trivial_minus = 0;  // under sign -
    std::optional<int> selected_sign;
    bool negativity_invariant_ok = true;  // trivial => a<0 and b<0, over all pairs
    Json details = Json::object();
};

// evaluates both signs on each sample; NoSignMatches when neither reaches 1.0
SignCalibration calibrate_criterion_sign(const std::vector<SymbolParams>& samples);

// bounded best-effort search for parameters realizing given (U,V)
std::optional<SymbolParams> search_symbol_params(const Rational& U, const Rational& V,
                                                 long max_height);

// lazily built family trace diagonal for the Prop-1 quartic (thread-safe)
const FamilyDiagonal& prop1_family_diagonal();

}  // namespace a4witt

#endif
