#ifndef A4WITT_STURM_HPP
#define A4WITT_STURM_HPP

#include <optional>
#include <vector>

#include "a4witt/unipoly.hpp"

namespace a4witt {

// Sturm chain of a squarefree rational polynomial; exact arithmetic throughout.
class SturmChain {
  public:
    explicit SturmChain(const RatPoly& f);  // throws NotSquarefree

    // number of real roots in (a, b]
    int count_in(const Rational& a, const Rational& b) const;
    int count_all() const;

    // isolating intervals (a, b] of width <= max_width, one real root each
    std::vector<std::pair<Rational, Rational>> isolate(const Rational& max_width) const;

  private:
    int variations_at(const Rational& x) const;
    int variations_at_minus_inf() const;
    int variations_at_plus_inf() const;
    Rational root_bound() const;

    std::vector<RatPoly> chain_;
};

// exact count of real roots of a squarefree rational polynomial
int real_root_count(const RatPoly& f);

// all integer roots of an integer-coefficient monic polynomial, via Sturm
// isolation and exact evaluation; no integer factorization involved
std::vector<Int> integer_roots_monic(const RatPoly& f);

}  // namespace a4witt

#endif
