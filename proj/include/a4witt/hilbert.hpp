#ifndef A4WITT_HILBERT_HPP
#define A4WITT_HILBERT_HPP

#include <set>
#include <string>
#include <vector>

#include "a4witt/factor.hpp"
#include "a4witt/rational.hpp"

namespace a4witt {

// A place of the rationals: a finite prime or the real place.
class Place {
  public:
    static Place real();
    static Place finite(const Int& p);  // checks primality

    bool is_real() const { return real_; }
    const Int& prime() const { return p_; }  // only for finite places

    std::string str() const;  // "real" or the prime in decimal

    // finite primes ascending, the real place last
    friend bool operator<(const Place& a, const Place& b);
    friend bool operator==(const Place& a, const Place& b);

  private:
    Place(bool real, Int p) : real_(real), p_(std::move(p)) {}
    bool real_;
    Int p_;
};

// A 2-torsion Brauer class over Q, represented by its (even, finite) set of
// ramified places. Trivial iff the set is empty.
class BrauerClass {
  public:
    BrauerClass() = default;
    explicit BrauerClass(std::set<Place> ramified);

    bool is_trivial() const { return ramified_.empty(); }
    const std::set<Place>& ramified() const { return ramified_; }
    std::vector<std::string> place_names() const;
    std::string str() const;

    friend bool operator==(const BrauerClass& a, const BrauerClass& b) {
        return a.ramified_ == b.ramified_;
    }
    friend bool operator!=(const BrauerClass& a, const BrauerClass& b) { return !(a == b); }

  private:
    std::set<Place> ramified_;
};

// Group law: symmetric difference of ramified sets.
BrauerClass class_add(const BrauerClass& x, const BrauerClass& y);

// Legendre symbol (a|p) for odd prime p and a with v_p(a) = 0.
int legendre(const Int& a, const Int& p);

// Local Hilbert symbol (a,b)_v, a,b nonzero. Real place: -1 iff a<0 and b<0;
// odd p and p=2 by the standard valuation/unit formulas.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

// The class of the quaternion symbol (a,b): all places where it is -1.
BrauerClass symbol_class(const Rational& a, const Rational& b);

// Class of (prod as, prod bs) computed by bimultiplicativity, so only the
// individual parts are ever factored. Keeps factorization inputs small when
// the arguments arrive as structured products.
BrauerClass symbol_class_parts(const std::vector<Rational>& as, const std::vector<Rational>& bs);

}  // namespace a4witt

#endif
