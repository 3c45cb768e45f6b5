#ifndef A4WITT_TRACEFORM_HPP
#define A4WITT_TRACEFORM_HPP

#include <array>
#include <functional>
#include <optional>

#include "a4witt/hilbert.hpp"
#include "a4witt/report.hpp"
#include "a4witt/resolvent.hpp"

namespace a4witt {

// Newton power sums p_0..p_upto of the roots (p_0 = 4).
template <typename C>
std::vector<C> power_sums(const Quartic<C>& P, int upto) {
    std::vector<C> p;
    p.reserve(static_cast<std::size_t>(upto) + 1);
    const C a[5] = {C(0), P.a1, P.a2, P.a3, P.a4};
    p.push_back(C(4));
    for (int k = 1; k <= upto; k++) {
        C s(0);
        for (int i = 1; i < k && i <= 4; i++) s = s + a[i] * p[static_cast<std::size_t>(k - i)];
        if (k <= 4) s = s + a[k] * C(k);
        p.push_back(-s);
    }
    return p;
}

template <typename C>
using Gram = std::array<std::array<C, 4>, 4>;

using GramMatrix = Gram<Rational>;

// Gram matrix of Tr(x^2) on the basis 1, x, x^2, x^3: G[i][j] = p_(i+j).
template <typename C>
Gram<C> gram_matrix(const Quartic<C>& P) {
    std::vector<C> p = power_sums(P, 6);
    Gram<C> G;
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++)
            G[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                p[static_cast<std::size_t>(i + j)];
    return G;
}

// Exact symmetric congruence diagonalization. Pivots recorded when requested.
// Throws DegenerateForm when the matrix is singular.
template <typename C>
std::array<C, 4> congruent_diagonal(Gram<C> M, std::vector<C>* pivots_out = nullptr);

struct DiagonalForm {
    std::array<Int, 4> d;  // nonzero squarefree integers
    int signature() const;
};

DiagonalForm diagonalize(const GramMatrix& G);

enum class WittConvention { HASSE, HASSE_PLUS_MINUSONE, HASSE_PLUS_DISC };
std::string convention_name(WittConvention c);
constexpr std::array<WittConvention, 3> kAllConventions = {
    WittConvention::HASSE, WittConvention::HASSE_PLUS_MINUSONE, WittConvention::HASSE_PLUS_DISC};

// Diagonal entries as products of small factored pieces; symbols are then
// evaluated by bimultiplicativity so no large integer is ever factored.
using DiagonalPieces = std::array<std::vector<Rational>, 4>;

BrauerClass witt_class(const DiagonalForm& d, WittConvention conv);
BrauerClass witt_class_pieces(const DiagonalPieces& d, WittConvention conv);
int signature_of_pieces(const DiagonalPieces& d);

// ---- square-class cores of polynomials in at most two variables ----

// h = scalar * prod(pieces) * (square in the fraction field); pieces are
// primitive integer polynomials, scalar a nonzero rational
struct SquareClassCore {
    Rational scalar;
    std::vector<MultiPoly> pieces;
};
SquareClassCore square_class_core(const MultiPoly& h);

// ---- family-adapted trace form over Q(U,V) ----

// One symbolic diagonalization of the trace form of a quartic family with
// polynomial coefficients in two parameters; specializations then read the
// square classes off low-degree polynomial values.
struct FamilyDiagonal {
    std::array<RatFunc, 4> d_sym;
    std::array<Rational, 4> core_scalars;
    std::array<std::vector<MultiPoly>, 4> core_polys;
    std::vector<MultiPoly> guards;  // specialization valid where these are nonzero
    int param_u = -1, param_v = -1;  // variable ids of the two parameters
};

FamilyDiagonal build_family_diagonal(const Quartic<RatFunc>& family, const std::string& pu,
                                     const std::string& pv);

// nullopt on the guarded locus (caller falls back or excludes the sample)
std::optional<DiagonalPieces> specialize_family_diagonal(const FamilyDiagonal& fam,
                                                         const Rational& U, const Rational& V);

// ---- convention calibration ----

struct ConventionReport {
    int samples = 0;
    std::array<int, 3> agree_counts{0, 0, 0};
    std::vector<WittConvention> winners;          // conventions with rate 1.0
    std::optional<WittConvention> selected;       // set when exactly one winner
    Json details = Json::object();
};

// Compares witt_class(trace diagonal at sample) against formula_class(sample)
// under every convention. Throws NoConventionMatches when nothing reaches
// rate 1.0 (an empty sample list is also an error).
ConventionReport calibrate_convention(
    const std::vector<std::pair<Rational, Rational>>& samples,
    const std::function<BrauerClass(const Rational&, const Rational&)>& formula_class,
    const std::function<std::optional<DiagonalPieces>(const Rational&, const Rational&)>&
        trace_diagonal);

}  // namespace a4witt

#endif
