#include "a4witt/galois.hpp"

#include <algorithm>
#include <set>

#include "a4witt/factor.hpp"

namespace a4witt {

std::string GaloisLabel::str() const {
    switch (kind) {
        case Kind::C3: return "C3";
        case Kind::S3: return "S3";
        case Kind::C4: return "C4";
        case Kind::V4: return "V4";
        case Kind::D4: return "D4";
        case Kind::A4: return "A4";
        case Kind::S4: return "S4";
        case Kind::Reducible: {
            std::string s = "reducible[";
            for (std::size_t i = 0; i < shape.size(); i++) {
                if (i) s += ",";
                s += std::to_string(shape[i]);
            }
            return s + "]";
        }
    }
    return "?";
}

namespace {

// strip a power of x, reporting whether 0 was a root
RatPoly strip_zero_root(const RatPoly& f, bool* had_zero) {
    int low = 0;
    while (low <= f.degree() && f.coeff(low).is_zero()) low++;
    *had_zero = low > 0;
    if (low == 0) return f;
    std::vector<Rational> c;
    for (int k = low; k <= f.degree(); k++) c.push_back(f.coeff(k));
    return RatPoly::from_ascending(std::move(c));
}

// integer-coefficient primitive copy (positive scaling)
RatPoly integerize(const RatPoly& f) {
    Int g = 0, l = 1;
    for (int k = 0; k <= f.degree(); k++) {
        const Rational& c = f.coeff(k);
        if (c.is_zero()) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.numerator().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    }
    return f * Rational(l, g);
}

std::vector<Int> divisors_from(const Factorization& f, std::size_t cap) {
    std::vector<Int> out{Int(1)};
    for (const auto& [p, e] : f.primes) {
        std::size_t base = out.size();
        Int pk = 1;
        for (unsigned i = 1; i <= e; i++) {
            pk *= p;
            for (std::size_t j = 0; j < base; j++) {
                out.push_back(out[j] * pk);
                if (out.size() > cap) throw Error("divisor list exceeds cap");
            }
        }
    }
    return out;
}

constexpr long kDivisorHeightDigits = 12;  // switch to isolation above ~10^12

bool small_enough_for_divisors(const Int& n) {
    return mpz_sizeinbase(n.get_mpz_t(), 10) <= static_cast<std::size_t>(kDivisorHeightDigits);
}

}  // namespace

std::vector<Rational> rational_roots_divisors(const RatPoly& f) {
    if (f.is_zero()) throw Error("rational roots of zero polynomial");
    bool had_zero = false;
    RatPoly g = integerize(strip_zero_root(f, &had_zero));
    std::vector<Rational> roots;
    if (had_zero) roots.push_back(Rational(0));
    if (g.degree() >= 1) {
        Int c0 = g.coeff(0).numerator();
        Int cn = g.lc().numerator();
        std::vector<Int> ps = divisors_from(factorize(c0), 1 << 14);
        std::vector<Int> qs = divisors_from(factorize(cn), 1 << 14);
        std::set<Rational> seen;
        for (const Int& p : ps) {
            for (const Int& q : qs) {
                Rational cand(p, q);
                if (!seen.insert(cand).second) continue;
                if (g.eval(cand).is_zero()) roots.push_back(cand);
                Rational neg = -cand;
                if (seen.insert(neg).second && g.eval(neg).is_zero()) roots.push_back(neg);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Rational> rational_roots_isolation(const RatPoly& f) {
    if (f.is_zero()) throw Error("rational roots of zero polynomial");
    bool had_zero = false;
    RatPoly g = integerize(strip_zero_root(f, &had_zero));
    std::vector<Rational> roots;
    if (had_zero) roots.push_back(Rational(0));
    if (g.degree() >= 1) {
        // roots of g are integer roots of lead^(n-1) g(Y/lead), divided by lead
        int n = g.degree();
        Rational lead = g.lc();
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; k++)
            c[static_cast<std::size_t>(k)] = g.coeff(k) * pow(lead, static_cast<unsigned>(n - 1 - k));
        RatPoly monic_int = RatPoly::from_ascending(std::move(c));
        for (const Int& y : integer_roots_monic(monic_int)) roots.push_back(Rational(y, lead.numerator()));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Rational> rational_roots(const RatPoly& f) {
    if (f.is_zero()) throw Error("rational roots of zero polynomial");
    bool had_zero = false;
    RatPoly g = integerize(strip_zero_root(f, &had_zero));
    if (g.degree() < 1) {
        return had_zero ? std::vector<Rational>{Rational(0)} : std::vector<Rational>{};
    }
    Int c0 = abs(g.coeff(0).numerator());
    Int cn = abs(g.lc().numerator());
    if (small_enough_for_divisors(c0) && small_enough_for_divisors(cn)) {
        try {
            return rational_roots_divisors(f);
        } catch (const Error&) {
            // divisor list too large or factorization exceeded: fall through
        }
    }
    return rational_roots_isolation(f);
}

namespace {

void require_monic_quartic(const RatPoly& f) {
    if (f.degree() != 4) throw Error("expected a quartic polynomial");
    if (!(f.lc() == Rational(1))) throw Error("expected a monic polynomial");
}

}  // namespace

IrreducibilityResult is_irreducible_quartic(const RatPoly& f) {
    require_monic_quartic(f);
    if (discriminant(f).is_zero()) throw SingularInput("quartic has zero discriminant");
    std::vector<Rational> roots = rational_roots(f);
    if (!roots.empty()) {
        RatPoly g = f;
        for (const Rational& r : roots)
            g = g / RatPoly::from_descending({Rational(1), -r});
        std::vector<int> shape(roots.size(), 1);
        if (g.degree() > 0) shape.push_back(g.degree());
        std::sort(shape.begin(), shape.end());
        return {false, shape};
    }
    // no linear factor; test for a split into two rational quadratics on the
    // depressed form Z^4 + p Z^2 + q Z + r
    Rational a1 = f.coeff(3), a2 = f.coeff(2), a3 = f.coeff(1), a4 = f.coeff(0);
    RatPoly shifted = f.compose(RatPoly::from_descending({Rational(1), -a1 / Rational(4)}));
    Rational p = shifted.coeff(2), q = shifted.coeff(1), r = shifted.coeff(0);
    bool splits = false;
    if (q.is_zero() && is_square(p * p - Rational(4) * r)) splits = true;
    if (!splits) {
        RatPoly res = RatPoly::from_descending(
            {Rational(1), Rational(2) * p, p * p - Rational(4) * r, -(q * q)});
        for (const Rational& z : rational_roots(res)) {
            if (!z.is_zero() && is_square(z)) {
                splits = true;
                break;
            }
        }
    }
    if (splits) return {false, {2, 2}};
    return {true, {4}};
}

GaloisLabel cubic_galois(const RatPoly& f) {
    if (f.degree() != 3) throw Error("expected a cubic polynomial");
    if (!(f.lc() == Rational(1))) throw Error("expected a monic polynomial");
    if (!rational_roots(f).empty()) throw ReducibleInput("cubic has a rational root");
    Rational d = discriminant(f);
    return {is_square(d) ? GaloisLabel::Kind::C3 : GaloisLabel::Kind::S3, {}};
}

std::pair<GaloisLabel, GroupCertificate> quartic_galois(const RatPoly& f) {
    require_monic_quartic(f);
    Rational disc = discriminant(f);
    if (disc.is_zero()) throw SingularInput("quartic has zero discriminant");
    IrreducibilityResult irr = is_irreducible_quartic(f);
    if (!irr.irreducible) throw ReducibleInput("quartic is reducible over Q");

    Rational a1 = f.coeff(3), a2 = f.coeff(2), a3 = f.coeff(1), a4 = f.coeff(0);
    GroupCertificate cert;
    cert.disc = disc;
    cert.disc_is_square = is_square(disc);
    // resolvent with roots x1x2+x3x4, x1x3+x2x4, x1x4+x2x3
    cert.resolvent = RatPoly::from_descending({Rational(1), -a2, a1 * a3 - Rational(4) * a4,
                                               -(a1 * a1 * a4 - Rational(4) * a2 * a4 + a3 * a3)});
    cert.resolvent_rational_roots = rational_roots(cert.resolvent);

    GaloisLabel label{GaloisLabel::Kind::S4, {}};
    switch (cert.resolvent_rational_roots.size()) {
        case 0:
            label.kind = cert.disc_is_square ? GaloisLabel::Kind::A4 : GaloisLabel::Kind::S4;
            break;
        case 3:
            label.kind = GaloisLabel::Kind::V4;
            break;
        case 1: {
            // Kappe-Warren style separation: C4 iff both quadratics
            // x^2 - t x + a4 and x^2 + a1 x + (a2 - t) split over Q(sqrt(disc))
            const Rational& t = cert.resolvent_rational_roots.front();
            auto splits_over = [&](const Rational& quad_disc) {
                return quad_disc.is_zero() || is_square(quad_disc) || is_square(quad_disc * disc);
            };
            Rational t1 = t * t - Rational(4) * a4;
            Rational t2 = a1 * a1 - Rational(4) * a2 + Rational(4) * t;
            bool s1 = splits_over(t1), s2 = splits_over(t2);
            cert.squareness_tests.emplace_back("theta^2-4*a4 splits over Q(sqrt(disc))", s1);
            cert.squareness_tests.emplace_back("a1^2-4*a2+4*theta splits over Q(sqrt(disc))", s2);
            label.kind = (s1 && s2) ? GaloisLabel::Kind::C4 : GaloisLabel::Kind::D4;
            break;
        }
        default:
            throw Error("resolvent cubic with exactly two rational roots is impossible");
    }
    return {label, cert};
}

}  // namespace a4witt
