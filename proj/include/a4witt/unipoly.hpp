#ifndef A4WITT_UNIPOLY_HPP
#define A4WITT_UNIPOLY_HPP

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "a4witt/errors.hpp"
#include "a4witt/multipoly.hpp"
#include "a4witt/rational.hpp"

namespace a4witt {

// Dense univariate polynomial over an exact field C (Rational or RatFunc).
// Coefficients are stored ascending; the external list format is descending.
template <typename C>
class UniPoly {
  public:
    UniPoly() = default;
    UniPoly(const C& constant) {
        if (!constant.is_zero()) c_.push_back(constant);
    }
    UniPoly(int n) : UniPoly(C(n)) {}

    static UniPoly from_ascending(std::vector<C> coeffs) {
        UniPoly p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }
    static UniPoly from_descending(std::vector<C> coeffs) {
        std::vector<C> asc(coeffs.rbegin(), coeffs.rend());
        return from_ascending(std::move(asc));
    }
    static UniPoly monomial(const C& coef, int deg) {
        UniPoly p;
        if (!coef.is_zero()) {
            p.c_.assign(static_cast<std::size_t>(deg) + 1, C(0));
            p.c_.back() = coef;
        }
        return p;
    }
    static UniPoly x() { return monomial(C(1), 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const C& coeff(int k) const {
        static const C zero{0};
        if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(k)];
    }
    const C& lc() const {
        if (c_.empty()) throw Error("leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<C>& ascending() const { return c_; }
    std::vector<C> descending() const { return std::vector<C>(c_.rbegin(), c_.rend()); }

    UniPoly operator-() const {
        UniPoly out = *this;
        for (C& c : out.c_) c = -c;
        return out;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<C> out(std::max(a.c_.size(), b.c_.size()), C(0));
        for (std::size_t i = 0; i < out.size(); i++) {
            if (i < a.c_.size()) out[i] = out[i] + a.c_[i];
            if (i < b.c_.size()) out[i] = out[i] + b.c_[i];
        }
        return from_ascending(std::move(out));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<C> out(a.c_.size() + b.c_.size() - 1, C(0));
        for (std::size_t i = 0; i < a.c_.size(); i++)
            for (std::size_t j = 0; j < b.c_.size(); j++)
                out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        return from_ascending(std::move(out));
    }
    friend UniPoly operator*(const UniPoly& a, const C& s) {
        UniPoly out;
        if (s.is_zero()) return out;
        out.c_ = a.c_;
        for (C& c : out.c_) c = c * s;
        return out;
    }

    bool operator==(const UniPoly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); i++)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }

    // exact Euclidean division; g must be nonzero
    friend std::pair<UniPoly, UniPoly> divrem(const UniPoly& f, const UniPoly& g) {
        if (g.is_zero()) throw DivisionByZeroPoly("polynomial division by zero");
        UniPoly q, r = f;
        int dg = g.degree();
        while (!r.is_zero() && r.degree() >= dg) {
            int shift = r.degree() - dg;
            C factor = r.lc() / g.lc();
            UniPoly t = monomial(factor, shift);
            q = q + t;
            r = r - t * g;
            // guard against a non-decreasing degree (exact arithmetic: cannot happen)
            if (!r.is_zero() && r.degree() >= dg + shift + 1)
                throw Error("division failed to reduce degree");
        }
        return {q, r};
    }
    friend UniPoly operator%(const UniPoly& f, const UniPoly& g) { return divrem(f, g).second; }
    friend UniPoly operator/(const UniPoly& f, const UniPoly& g) {
        auto [q, r] = divrem(f, g);
        if (!r.is_zero()) throw Error("inexact polynomial division");
        return q;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<C> out(c_.size() - 1, C(0));
        for (std::size_t i = 1; i < c_.size(); i++) out[i - 1] = c_[i] * C(static_cast<int>(i));
        return from_ascending(std::move(out));
    }

    C eval(const C& x) const {
        C acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly compose(const UniPoly& g) const {
        UniPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + UniPoly(*it);
        return acc;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this * (C(1) / lc());
    }

    UniPoly pow(unsigned e) const {
        UniPoly r(C(1));
        UniPoly base = *this;
        while (e) {
            if (e & 1) r = r * base;
            if (e >>= 1) base = base * base;
        }
        return r;
    }

    std::string str(const std::string& var = "x") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<C> c_;
};

template <typename C>
UniPoly<C> gcd_poly(UniPoly<C> f, UniPoly<C> g) {
    while (!g.is_zero()) {
        UniPoly<C> r = f % g;
        f = g;
        g = r;
    }
    return f.is_zero() ? f : f.monic();
}

// Res(f, g) with the convention Res(f,g) = lc(f)^deg(g) * prod g(roots of f).
template <typename C>
C resultant(UniPoly<C> f, UniPoly<C> g) {
    if (f.is_zero() || g.is_zero()) throw Error("resultant of zero polynomial");
    C acc(1);
    long sign_exp = 0;
    while (true) {
        int mf = f.degree(), mg = g.degree();
        if (mg > mf) {
            std::swap(f, g);
            sign_exp += static_cast<long>(mf) * mg;
            continue;
        }
        if (mg == 0) {
            C lc = g.lc();
            for (int i = 0; i < mf; i++) acc = acc * lc;
            break;
        }
        UniPoly<C> r = f % g;
        if (r.is_zero()) return C(0);
        sign_exp += static_cast<long>(mf) * mg;
        C lc = g.lc();
        for (int i = 0; i < mf - r.degree(); i++) acc = acc * lc;
        f = g;
        g = r;
    }
    return (sign_exp % 2 == 0) ? acc : -acc;
}

// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)
template <typename C>
C discriminant(const UniPoly<C>& f) {
    int n = f.degree();
    if (n < 1) throw Error("discriminant of constant polynomial");
    C res = resultant(f, f.derivative());
    C d = res / f.lc();
    return ((n * (n - 1) / 2) % 2 == 0) ? d : -d;
}

// Yun's squarefree decomposition: f = unit * prod factors[i].first^factors[i].second
// with monic squarefree pairwise-coprime factors.
template <typename C>
std::pair<C, std::vector<std::pair<UniPoly<C>, int>>> squarefree_decomposition(const UniPoly<C>& f) {
    if (f.is_zero()) throw Error("squarefree decomposition of zero");
    C unit = f.lc();
    std::vector<std::pair<UniPoly<C>, int>> out;
    UniPoly<C> fm = f.monic();
    if (fm.degree() == 0) return {unit, out};
    UniPoly<C> df = fm.derivative();
    UniPoly<C> g = gcd_poly(fm, df);
    if (g.degree() == 0) {
        out.emplace_back(fm, 1);
        return {unit, out};
    }
    UniPoly<C> c = fm / g;
    UniPoly<C> d = df / g - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
        UniPoly<C> a = gcd_poly(c, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        c = c / a;
        d = d / a - c.derivative();
        i++;
    }
    return {unit, out};
}

// product of odd-multiplicity factors: f modulo squares (up to the unit)
template <typename C>
UniPoly<C> odd_multiplicity_part(const UniPoly<C>& f) {
    auto [unit, factors] = squarefree_decomposition(f);
    UniPoly<C> out(C(1));
    for (const auto& [p, mult] : factors)
        if (mult % 2 == 1) out = out * p;
    return out;
}

template <typename C>
std::string UniPoly<C>::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; k--) {
        const C& c = coeff(k);
        if (c.is_zero()) continue;
        std::string cs;
        bool neg = false;
        if constexpr (std::is_same_v<C, Rational>) {
            neg = c.sign() < 0;
            cs = c.abs().str();
        } else {
            cs = "(" + c.str() + ")";
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool one = (cs == "1");
        if (!one || k == 0) os << cs;
        if (k > 0) {
            if (!one) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

using RatPoly = UniPoly<Rational>;
using FuncPoly = UniPoly<RatFunc>;

// View a multivariate polynomial as univariate in `var`; remaining variables
// land in the RatFunc coefficients.
inline FuncPoly unipoly_in(const MultiPoly& f, int var) {
    std::vector<MultiPoly> cs = f.coefficients_in(var);
    std::vector<RatFunc> out;
    out.reserve(cs.size());
    for (MultiPoly& c : cs) out.emplace_back(std::move(c));
    return FuncPoly::from_ascending(std::move(out));
}

// Reassemble sum coeff_k * var^k as a rational function.
inline RatFunc ratfunc_from(const FuncPoly& f, int var) {
    RatFunc acc;
    RatFunc xv{MultiPoly::var(var)};
    for (int k = f.degree(); k >= 0; k--) acc = acc * xv + f.coeff(k);
    return acc;
}

// Strict conversion for polynomials whose RatFunc coefficients are constants.
inline RatPoly to_rational_poly(const FuncPoly& f) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(f.degree() + 1));
    for (int k = 0; k <= f.degree(); k++) {
        if (!f.coeff(k).is_constant()) throw Error("coefficient is not constant");
        out.push_back(f.coeff(k).constant_value());
    }
    return RatPoly::from_ascending(std::move(out));
}

inline FuncPoly lift_to_func(const RatPoly& f) {
    std::vector<RatFunc> out;
    out.reserve(static_cast<std::size_t>(f.degree() + 1));
    for (int k = 0; k <= f.degree(); k++) out.emplace_back(f.coeff(k));
    return FuncPoly::from_ascending(std::move(out));
}

}  // namespace a4witt

#endif
