#include "a4witt/sturm.hpp"

#include <algorithm>

namespace a4witt {

namespace {

// scale to primitive integer coefficients (positive factor, signs preserved)
RatPoly make_primitive(const RatPoly& f) {
    if (f.is_zero()) return f;
    Int g = 0, l = 1;
    for (int k = 0; k <= f.degree(); k++) {
        const Rational& c = f.coeff(k);
        if (c.is_zero()) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.numerator().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    }
    return f * Rational(l, g);
}

int sign_of(const Rational& q) { return q.sign(); }

}  // namespace

SturmChain::SturmChain(const RatPoly& f) {
    if (f.is_zero()) throw NotSquarefree("zero polynomial");
    if (f.degree() >= 1) {
        RatPoly g = gcd_poly(f, f.derivative());
        if (g.degree() > 0) throw NotSquarefree("polynomial has a repeated factor");
    }
    chain_.push_back(make_primitive(f));
    if (f.degree() >= 1) {
        chain_.push_back(make_primitive(f.derivative()));
        while (chain_.back().degree() > 0) {
            RatPoly r = -(chain_[chain_.size() - 2] % chain_.back());
            if (r.is_zero()) throw NotSquarefree("unexpected zero remainder in Sturm chain");
            chain_.push_back(make_primitive(r));
        }
    }
}

int SturmChain::variations_at(const Rational& x) const {
    int count = 0, prev = 0;
    for (const RatPoly& p : chain_) {
        int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) count++;
        prev = s;
    }
    return count;
}

int SturmChain::variations_at_minus_inf() const {
    int count = 0, prev = 0;
    for (const RatPoly& p : chain_) {
        int s = p.lc().sign();
        if (p.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) count++;
        prev = s;
    }
    return count;
}

int SturmChain::variations_at_plus_inf() const {
    int count = 0, prev = 0;
    for (const RatPoly& p : chain_) {
        int s = p.lc().sign();
        if (prev != 0 && s != prev) count++;
        prev = s;
    }
    return count;
}

int SturmChain::count_in(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
}

int SturmChain::count_all() const { return variations_at_minus_inf() - variations_at_plus_inf(); }

Rational SturmChain::root_bound() const {
    const RatPoly& f = chain_.front();
    Rational bound(1);
    for (int k = 0; k < f.degree(); k++) {
        Rational r = (f.coeff(k) / f.lc()).abs();
        if (r > bound) bound = r;
    }
    return bound + Rational(1);
}

std::vector<std::pair<Rational, Rational>> SturmChain::isolate(const Rational& max_width) const {
    std::vector<std::pair<Rational, Rational>> out;
    if (chain_.front().degree() < 1) return out;
    Rational bound = root_bound();
    const RatPoly& f = chain_.front();

    // choose an interior split point that is not a root of f
    auto split_point = [&](const Rational& a, const Rational& b) {
        Rational mid = (a + b) / Rational(2);
        Rational step = (b - a) / Rational(4 * (f.degree() + 2));
        for (int tries = 0; tries <= f.degree() + 1; tries++) {
            if (!f.eval(mid).is_zero()) return mid;
            mid += step;
        }
        throw Error("could not find a non-root split point");
    };

    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        int n = count_in(a, b);
        if (n == 0) continue;
        if (n == 1 && b - a <= max_width) {
            out.emplace_back(a, b);
            continue;
        }
        Rational mid = split_point(a, b);
        stack.emplace_back(a, mid);
        stack.emplace_back(mid, b);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

int real_root_count(const RatPoly& f) { return SturmChain(f).count_all(); }

std::vector<Int> integer_roots_monic(const RatPoly& f) {
    if (f.is_zero() || !(f.lc() == Rational(1))) throw Error("integer_roots_monic needs a monic polynomial");
    for (int k = 0; k <= f.degree(); k++)
        if (!f.coeff(k).is_integer()) throw Error("integer_roots_monic needs integer coefficients");
    // strip repeated factors so the Sturm machinery applies
    RatPoly fs = f;
    if (f.degree() >= 1) {
        RatPoly g = gcd_poly(f, f.derivative());
        if (g.degree() > 0) fs = f / g;
    }
    std::vector<Int> roots;
    SturmChain chain(fs);
    for (const auto& [a, b] : chain.isolate(Rational(1, 2))) {
        // a half-open interval of width <= 1/2 contains at most one integer
        Int candidate;
        mpz_fdiv_q(candidate.get_mpz_t(), b.numerator().get_mpz_t(), b.denominator().get_mpz_t());
        if (Rational(candidate) > a && Rational(candidate) <= b &&
            f.eval(Rational(candidate)).is_zero())
            roots.push_back(candidate);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace a4witt
