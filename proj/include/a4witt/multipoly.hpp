#ifndef A4WITT_MULTIPOLY_HPP
#define A4WITT_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "a4witt/rational.hpp"

namespace a4witt {

// Interned indeterminate names. The canonical names are pre-registered in a
// fixed priority order (a1,a2,a3,a4,T,U,V,u,v,c1,c2,c3,X,Y,A,B,C,D,E); any
// other name is appended on first use and sorts after all canonical ones.
class Vars {
  public:
    static int id(const std::string& name);
    static std::string name(int id);
};

// Sparse exponent vector: (var, exp) pairs sorted by var id, all exp > 0.
class Monomial {
  public:
    Monomial() = default;
    static Monomial var(int v, int e = 1);

    bool is_one() const { return factors_.empty(); }
    int total_degree() const;
    int degree_in(int var) const;
    const std::vector<std::pair<int, int>>& factors() const { return factors_; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;   // this | o
    Monomial divide_into(const Monomial& o) const;  // o / this, assumes divides
    // drop var entirely (used when slicing by one variable's exponent)
    Monomial without(int var) const;

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

  private:
    std::vector<std::pair<int, int>> factors_;
};

// Graded lexicographic, arranged so "less" means closer to the leading term;
// std::map<Monomial, ..., MonoOrder>::begin() is then the leading term.
struct MonoOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class RatFunc;

// Exact sparse multivariate polynomial over the rationals.
class MultiPoly {
  public:
    using TermMap = std::map<Monomial, Rational, MonoOrder>;

    MultiPoly() = default;
    MultiPoly(int n) { set_term(Monomial(), Rational(n)); }
    MultiPoly(const Rational& c) { set_term(Monomial(), c); }
    static MultiPoly var(const std::string& name, int exp = 1);
    static MultiPoly var(int id, int exp = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()
    int total_degree() const;         // -1 for zero
    int degree_in(int var) const;
    const TermMap& terms() const { return terms_; }
    std::vector<int> variables() const;  // sorted var ids with nonzero degree

    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    MultiPoly pow(unsigned e) const;
    MultiPoly derivative(int var) const;

    // positive rational c such that (*this)/c has coprime integer coefficients
    Rational content() const;  // requires nonzero

    // exact division: returns o such that (*this) = o * g, or nullopt
    std::optional<MultiPoly> exact_divide(const MultiPoly& g) const;

    // coefficients of powers of `var`, index = exponent (each free of `var`)
    std::vector<MultiPoly> coefficients_in(int var) const;
    static MultiPoly from_coefficients_in(const std::vector<MultiPoly>& coeffs, int var);

    // full evaluation; every variable of the polynomial must be bound
    Rational eval(const std::map<int, Rational>& values) const;
    // substitution by polynomials (unbound variables pass through)
    MultiPoly substitute_poly(const std::map<int, MultiPoly>& bindings) const;
    // substitution by rational functions (unbound variables pass through)
    RatFunc substitute(const std::map<int, RatFunc>& bindings) const;

    std::string str() const;

  private:
    void set_term(const Monomial& m, const Rational& c);
    TermMap terms_;
};

// g with g^2 = f (sign canonicalized by positive leading coefficient),
// or nullopt when f is not a square in Q[vars].
std::optional<MultiPoly> poly_square_root(const MultiPoly& f);

// Fraction field element over MultiPoly. Not reduced to lowest terms (no
// multivariate gcd); only rational content is normalized and the denominator
// sign is fixed. Equality is by cross-multiplication.
class RatFunc {
  public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(int n) : num_(n), den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(MultiPoly p) : num_(std::move(p)), den_(1) { normalize(); }
    RatFunc(MultiPoly num, MultiPoly den);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    bool operator==(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc pow(unsigned e) const;
    RatFunc substitute(const std::map<int, RatFunc>& bindings) const;
    Rational eval(const std::map<int, Rational>& values) const;  // throws if den -> 0

    std::string str() const;

  private:
    void normalize();
    MultiPoly num_, den_;
};

// true iff f = (rational function)^2; checked without multivariate gcd
bool ratfunc_is_square(const RatFunc& f);

// Text format with explicit '*' and '^', e.g. "x^4 - 4*x^3 + 38*x^2 - 4*x + 33".
MultiPoly parse_multipoly(const std::string& text);

}  // namespace a4witt

#endif
