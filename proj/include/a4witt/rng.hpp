#ifndef A4WITT_RNG_HPP
#define A4WITT_RNG_HPP

#include <cstdint>

#include "a4witt/rational.hpp"

namespace a4witt {

// Deterministic splittable generator (splitmix64 core); identical sequences
// across platforms, unlike the standard distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // independent stream for sample #index (safe to use out of order)
    Rng child(std::uint64_t index) const {
        Rng r(state_ ^ (0xA0761D6478BD642Full * (index + 1)));
        r.next();
        return r;
    }

    long int_in(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(long max_height, bool nonzero = false) {
        while (true) {
            long num = int_in(-max_height, max_height);
            long den = int_in(1, max_height);
            Rational q(num, den);
            if (!nonzero || !q.is_zero()) return q;
        }
    }

  private:
    std::uint64_t state_;
};

}  // namespace a4witt

#endif
