#include "a4witt/hilbert.hpp"

#include <sstream>

namespace a4witt {

Place Place::real() { return Place(true, Int(0)); }

Place Place::finite(const Int& p) {
    if (!is_prime(p)) throw Error("Place::finite: " + p.get_str() + " is not prime");
    return Place(false, p);
}

std::string Place::str() const { return real_ ? "real" : p_.get_str(); }

bool operator<(const Place& a, const Place& b) {
    if (a.real_ != b.real_) return !a.real_;  // finite sorts before real
    if (a.real_) return false;
    return a.p_ < b.p_;
}

bool operator==(const Place& a, const Place& b) {
    return a.real_ == b.real_ && (a.real_ || a.p_ == b.p_);
}

BrauerClass::BrauerClass(std::set<Place> ramified) : ramified_(std::move(ramified)) {
    if (ramified_.size() % 2 != 0)
        throw Error("BrauerClass with odd ramification set violates reciprocity");
}

std::vector<std::string> BrauerClass::place_names() const {
    std::vector<std::string> names;
    names.reserve(ramified_.size());
    for (const Place& v : ramified_) names.push_back(v.str());
    return names;
}

std::string BrauerClass::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const Place& v : ramified_) {
        if (!first) os << ",";
        os << v.str();
        first = false;
    }
    os << "}";
    return os.str();
}

BrauerClass class_add(const BrauerClass& x, const BrauerClass& y) {
    std::set<Place> out = x.ramified();
    for (const Place& v : y.ramified()) {
        auto it = out.find(v);
        if (it == out.end())
            out.insert(v);
        else
            out.erase(it);
    }
    return BrauerClass(std::move(out));
}

int legendre(const Int& a, const Int& p) {
    Int r = a % p;
    if (sgn(r) < 0) r += p;
    if (sgn(r) == 0) throw Error("legendre symbol of 0");
    return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

namespace {

// valuation of nonzero rational at p, and the unit part u with q = p^v * u
long valuation(const Rational& q, const Int& p, Rational* unit) {
    Int num = q.numerator(), den = q.denominator();
    Int reduced;
    long vn = static_cast<long>(mpz_remove(reduced.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
    num = reduced;
    long vd = static_cast<long>(mpz_remove(reduced.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
    den = reduced;
    if (unit) *unit = Rational(num, den);
    return vn - vd;
}

// Legendre symbol of a p-adic unit given as a rational num/den (both prime to p)
int legendre_unit(const Rational& u, const Int& p) {
    return legendre(u.numerator(), p) * legendre(u.denominator(), p);
}

// residue of an odd rational mod 8 (denominator inverted mod 8)
unsigned long mod8(const Rational& u) {
    static const unsigned long inv8[8] = {0, 1, 0, 3, 0, 5, 0, 7};  // odd residues are self-inverse
    Int n = u.numerator() % 8, d = u.denominator() % 8;
    unsigned long nn = mpz_class(((n % 8) + 8) % 8).get_ui();
    unsigned long dd = mpz_class(((d % 8) + 8) % 8).get_ui();
    return (nn * inv8[dd]) % 8;
}

int eps2(unsigned long m8) { return (m8 == 1 || m8 == 5) ? 0 : 1; }   // (u-1)/2 mod 2
int omega2(unsigned long m8) { return (m8 == 1 || m8 == 7) ? 0 : 1; }  // (u^2-1)/8 mod 2

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a.is_zero() || b.is_zero()) throw UndefinedSymbol("hilbert symbol at 0");
    if (v.is_real()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
    const Int& p = v.prime();
    Rational u, w;
    long alpha = valuation(a, p, &u);
    long beta = valuation(b, p, &w);
    alpha &= 1;
    beta &= 1;
    if (p == 2) {
        unsigned long u8 = mod8(u), w8 = mod8(w);
        int e = eps2(u8) * eps2(w8) + alpha * omega2(w8) + beta * omega2(u8);
        return (e & 1) ? -1 : 1;
    }
    int eps_p = mpz_tstbit(Int((p - 1) / 2).get_mpz_t(), 0);  // (p-1)/2 mod 2
    int r = 1;
    if (alpha && beta && eps_p) r = -r;
    if (beta) r *= legendre_unit(u, p);
    if (alpha) r *= legendre_unit(w, p);
    return r;
}

namespace {

void add_support(const Rational& x, std::set<Place>& places) {
    Int sf = squarefree_part(x);
    Factorization f = factorize(sf);
    for (const auto& [p, e] : f.primes)
        if (p != 2) places.insert(Place::finite(p));
}

}  // namespace

BrauerClass symbol_class(const Rational& a, const Rational& b) {
    return symbol_class_parts({a}, {b});
}

BrauerClass symbol_class_parts(const std::vector<Rational>& as, const std::vector<Rational>& bs) {
    std::set<Place> candidates{Place::real(), Place::finite(Int(2))};
    for (const Rational& x : as) {
        if (x.is_zero()) throw UndefinedSymbol("hilbert symbol at 0");
        add_support(x, candidates);
    }
    for (const Rational& x : bs) {
        if (x.is_zero()) throw UndefinedSymbol("hilbert symbol at 0");
        add_support(x, candidates);
    }
    std::set<Place> ramified;
    for (const Place& v : candidates) {
        int s = 1;
        for (const Rational& x : as)
            for (const Rational& y : bs) s *= hilbert_symbol(x, y, v);
        if (s == -1) ramified.insert(v);
    }
    return BrauerClass(std::move(ramified));
}

}  // namespace a4witt
