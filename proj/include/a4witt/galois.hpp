#ifndef A4WITT_GALOIS_HPP
#define A4WITT_GALOIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "a4witt/sturm.hpp"
#include "a4witt/unipoly.hpp"

namespace a4witt {

// Classification result for irreducible cubics/quartics, or the factorization
// shape (list of irreducible factor degrees) for reducible input.
struct GaloisLabel {
    enum class Kind { C3, S3, C4, V4, D4, A4, S4, Reducible };
    Kind kind;
    std::vector<int> shape;  // only for Reducible, ascending degrees

    std::string str() const;
    bool operator==(const GaloisLabel& o) const { return kind == o.kind && shape == o.shape; }
};

// Audit trail: every recorded quantity recomputes from the input polynomial.
struct GroupCertificate {
    Rational disc;
    bool disc_is_square = false;
    RatPoly resolvent;  // the standard classification resolvent
    std::vector<Rational> resolvent_rational_roots;
    std::vector<std::pair<std::string, bool>> squareness_tests;
};

// All rational roots (distinct), exact. Dispatches between the divisor-pair
// search and a factorization-free Sturm-isolation method on large inputs.
std::vector<Rational> rational_roots(const RatPoly& f);
std::vector<Rational> rational_roots_divisors(const RatPoly& f);
std::vector<Rational> rational_roots_isolation(const RatPoly& f);

struct IrreducibilityResult {
    bool irreducible;
    std::vector<int> shape;  // factor degrees, ascending; {4} when irreducible
};

// monic rational quartic with disc != 0 (SingularInput otherwise)
IrreducibilityResult is_irreducible_quartic(const RatPoly& f);

// monic irreducible cubic: C3 iff disc is a square
GaloisLabel cubic_galois(const RatPoly& f);

// monic irreducible quartic with disc != 0: full classification
std::pair<GaloisLabel, GroupCertificate> quartic_galois(const RatPoly& f);

}  // namespace a4witt

#endif
