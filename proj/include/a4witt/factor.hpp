#ifndef A4WITT_FACTOR_HPP
#define A4WITT_FACTOR_HPP

#include <cstdint>
#include <map>

#include "a4witt/rational.hpp"

namespace a4witt {

// Runtime limits for integer factorization. The ceiling guards against
// accidentally feeding cryptographic-scale integers into the pipeline;
// the rho budget turns a would-be hang into a clean error.
struct FactorLimits {
    static Int ceiling();              // default 2^96
    static void set_ceiling(const Int& c);
    static std::uint64_t rho_budget();  // iterations per rho attempt
    static void set_rho_budget(std::uint64_t b);
    static void clear_cache();
};

struct Factorization {
    int sign = 1;                    // +1 or -1
    std::map<Int, unsigned> primes;  // prime -> positive exponent

    Int value() const;
};

bool is_prime(const Int& n);

// Full factorization of a nonzero integer. Trial division to 10^6, then
// Pollard rho (Brent) within the configured budget. Throws
// FactorizationExceeded past the ceiling or budget.
Factorization factorize(const Int& n);

// The unique squarefree integer d with q = d * (rational square). q != 0.
Int squarefree_part(const Rational& q);
Int squarefree_part(const Int& n);

// True iff q is the square of a rational (0 counts).
bool is_square(const Rational& q);

}  // namespace a4witt

#endif
