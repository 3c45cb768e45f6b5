#include "a4witt/numeric.hpp"

#include <cmath>

namespace a4witt {

std::vector<std::complex<double>> complex_roots(const RatPoly& f, int max_iter, double tol) {
    int n = f.degree();
    if (n < 1) return {};
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    double lead = f.lc().to_double();
    for (int k = 0; k <= n; k++) c[static_cast<std::size_t>(k)] = f.coeff(k).to_double() / lead;

    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0.0;
        for (int k = n; k >= 0; k--) acc = acc * x + c[static_cast<std::size_t>(k)];
        return acc;
    };
    auto eval_deriv = [&](std::complex<double> x) {
        std::complex<double> acc = 0.0;
        for (int k = n; k >= 1; k--) acc = acc * x + c[static_cast<std::size_t>(k)] * double(k);
        return acc;
    };

    // deterministic starting points on a spiral
    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> p = 1.0;
    for (int i = 0; i < n; i++) {
        p *= seed;
        z[static_cast<std::size_t>(i)] = p;
    }

    for (int iter = 0; iter < max_iter; iter++) {
        double shift = 0.0;
        for (int i = 0; i < n; i++) {
            std::complex<double> denom = 1.0;
            for (int j = 0; j < n; j++)
                if (j != i) denom *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
            std::complex<double> delta = eval(z[static_cast<std::size_t>(i)]) / denom;
            z[static_cast<std::size_t>(i)] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < tol) break;
    }
    // a couple of Newton polish steps tighten the residuals
    for (int round = 0; round < 2; round++) {
        for (int i = 0; i < n; i++) {
            std::complex<double> d = eval_deriv(z[static_cast<std::size_t>(i)]);
            if (std::abs(d) > 1e-30)
                z[static_cast<std::size_t>(i)] -= eval(z[static_cast<std::size_t>(i)]) / d;
        }
    }
    return z;
}

int numeric_real_root_count(const RatPoly& f, double im_tol) {
    int count = 0;
    for (const auto& r : complex_roots(f))
        if (std::abs(r.imag()) < im_tol) count++;
    return count;
}

}  // namespace a4witt
