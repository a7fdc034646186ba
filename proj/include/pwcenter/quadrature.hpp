#pragma once

#include <functional>

// Adaptive Gauss-Kronrod (G7, K15) integration to an absolute tolerance.
namespace pwcenter {

// Integral of f over [a, b]; b < a integrates with the usual sign flip.
// Subdivides until the Kronrod error estimate meets the local tolerance or
// the depth cap is hit (the best estimate is then used; the cap is far below
// attainable double precision for the smooth kernels integrated here).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol);

}  // namespace pwcenter
