#ifndef A4WITT_NUMERIC_HPP
#define A4WITT_NUMERIC_HPP

#include <complex>
#include <vector>

#include "a4witt/unipoly.hpp"

namespace a4witt {

// All complex roots of a squarefree-ish polynomial, by Durand-Kerner with
// deterministic starting points. Adequate at the degrees used here (<= 4).
std::vector<std::complex<double>> complex_roots(const RatPoly& f, int max_iter = 500,
                                                double tol = 1e-13);

// count of roots with |imaginary part| < im_tol
int numeric_real_root_count(const RatPoly& f, double im_tol = 1e-9);

}  // namespace a4witt

#endif
