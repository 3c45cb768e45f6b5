#include "a4witt/factor.hpp"

#include <array>
#include <mutex>
#include <vector>

namespace a4witt {

namespace {

std::mutex limits_mutex;

Int& ceiling_storage() {
    static Int c = [] {
        Int x;
        mpz_ui_pow_ui(x.get_mpz_t(), 2, 96);
        return x;
    }();
    return c;
}

std::uint64_t& rho_budget_storage() {
    static std::uint64_t b = 1u << 22;
    return b;
}

std::mutex cache_mutex;
std::map<Int, Factorization>& cache() {
    static std::map<Int, Factorization> c;
    return c;
}
constexpr std::size_t kCacheCap = 1 << 16;

// Strong probable-prime test to base a (n odd, > 2).
bool strong_probable_prime(const Int& n, const Int& a) {
    Int n1 = n - 1;
    unsigned long s = mpz_scan1(n1.get_mpz_t(), 0);
    Int d = n1 >> s;
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n1) return true;
    for (unsigned long i = 1; i < s; i++) {
        x = (x * x) % n;
        if (x == n1) return true;
        if (x <= 1) return false;
    }
    return false;
}

Int pollard_rho_brent(const Int& n, unsigned long c0, std::uint64_t budget) {
    // Brent's cycle-finding variant with batched gcds.
    Int y = 2, c = c0, m = 128;
    Int g = 1, r = 1, q = 1, x, ys;
    std::uint64_t spent = 0;
    while (g == 1) {
        x = y;
        for (Int i = 0; i < r; i++) y = (y * y + c) % n;
        Int k = 0;
        while (k < r && g == 1) {
            ys = y;
            Int lim = r - k;
            Int steps = lim < m ? lim : m;
            for (Int i = 0; i < steps; i++) {
                y = (y * y + c) % n;
                q = (q * abs(x - y)) % n;
            }
            spent += steps.get_ui();
            if (spent > budget) return 0;
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        // backtrack one step at a time
        do {
            ys = (ys * ys + c) % n;
            mpz_gcd(g.get_mpz_t(), Int(abs(x - ys)).get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g == n ? Int(0) : g;
}

void factor_into(const Int& n, std::map<Int, unsigned>& out);

void split_composite(const Int& n, std::map<Int, unsigned>& out) {
    for (unsigned long c = 1; c <= 8; c++) {
        Int d = pollard_rho_brent(n, c, FactorLimits::rho_budget());
        if (d != 0 && d != 1 && d != n) {
            factor_into(d, out);
            factor_into(n / d, out);
            return;
        }
    }
    throw FactorizationExceeded("Pollard rho budget exhausted on " + n.get_str());
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n]++;
        return;
    }
    split_composite(n, out);
}

}  // namespace

Int FactorLimits::ceiling() {
    std::lock_guard<std::mutex> lk(limits_mutex);
    return ceiling_storage();
}

void FactorLimits::set_ceiling(const Int& c) {
    std::lock_guard<std::mutex> lk(limits_mutex);
    ceiling_storage() = c;
    clear_cache();
}

std::uint64_t FactorLimits::rho_budget() {
    std::lock_guard<std::mutex> lk(limits_mutex);
    return rho_budget_storage();
}

void FactorLimits::set_rho_budget(std::uint64_t b) {
    std::lock_guard<std::mutex> lk(limits_mutex);
    rho_budget_storage() = b;
}

void FactorLimits::clear_cache() {
    std::lock_guard<std::mutex> lk(cache_mutex);
    cache().clear();
}

Int Factorization::value() const {
    Int v = sign;
    for (const auto& [p, e] : primes) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return v;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const std::array<unsigned long, 12> small = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned long p : small) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    static const Int two64 = [] {
        Int x;
        mpz_ui_pow_ui(x.get_mpz_t(), 2, 64);
        return x;
    }();
    if (n < two64) {
        // these 12 bases are a deterministic test below 2^64
        for (unsigned long a : small)
            if (!strong_probable_prime(n, Int(a))) return false;
        return true;
    }
    // 40 strong rounds with fixed prime bases
    Int base = 2;
    for (int i = 0; i < 40; i++) {
        if (!strong_probable_prime(n, base)) return false;
        mpz_nextprime(base.get_mpz_t(), base.get_mpz_t());
    }
    return true;
}

Factorization factorize(const Int& n) {
    if (sgn(n) == 0) throw Error("factorize(0) is undefined");
    Factorization f;
    f.sign = sgn(n) < 0 ? -1 : 1;
    Int m = abs(n);
    if (m > FactorLimits::ceiling())
        throw FactorizationExceeded("|" + n.get_str() + "| exceeds the factorization ceiling");
    if (m == 1) return f;

    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        auto it = cache().find(m);
        if (it != cache().end()) {
            Factorization hit = it->second;
            hit.sign = f.sign;
            return hit;
        }
    }
    Int key = m;

    // tiered trial division; most desk-scale inputs never reach rho
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            f.primes[Int(p)]++;
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    for (unsigned long stop : {10000ul, 1000000ul}) {
        if (m == 1) break;
        if (is_prime(m)) {
            f.primes[m]++;
            m = 1;
            break;
        }
        static const std::array<unsigned long, 8> wheel = {4, 2, 4, 2, 4, 6, 2, 6};
        unsigned long d = 7;
        std::size_t wi = 0;
        while (d <= stop) {
            if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
                while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
                    f.primes[Int(d)]++;
                    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
                }
                if (m == 1) break;
            }
            d += wheel[wi];
            wi = (wi + 1) % wheel.size();
        }
        if (m == 1) break;
        if (m <= Int(stop) * Int(stop)) {
            // cofactor below (trial bound)^2 with no small factor is prime
            f.primes[m]++;
            m = 1;
            break;
        }
    }
    if (m != 1) factor_into(m, f.primes);

    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        if (cache().size() < kCacheCap) {
            Factorization stored = f;
            stored.sign = 1;
            cache().emplace(key, std::move(stored));
        }
    }
    return f;
}

Int squarefree_part(const Int& n) {
    if (sgn(n) == 0) throw Error("squarefree_part(0) is undefined");
    Factorization f = factorize(n);
    Int d = f.sign;
    for (const auto& [p, e] : f.primes)
        if (e & 1u) d *= p;
    return d;
}

Int squarefree_part(const Rational& q) {
    if (q.is_zero()) throw Error("squarefree_part(0) is undefined");
    // v_p(q) = v_p(num) - v_p(den), which is odd iff v_p(num * den) is odd
    Factorization fn = factorize(q.numerator());
    Factorization fd = factorize(q.denominator());
    for (const auto& [p, e] : fd.primes) fn.primes[p] += e;
    Int d = fn.sign;
    for (const auto& [p, e] : fn.primes)
        if (e & 1u) d *= p;
    return d;
}

bool is_square(const Rational& q) {
    if (q.is_zero()) return true;
    if (q.sign() < 0) return false;
    Int num = q.numerator(), den = q.denominator();
    return mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t());
}

}  // namespace a4witt
