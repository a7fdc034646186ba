#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "pwcenter/trigpoly.hpp"

// Independent numerical references for cross-checking the library kernels:
// a fixed-step RK4 integrator, adaptive Simpson quadrature, and a dense
// sign-change counter. All are deliberately implemented with different
// algorithms than the library under test.
namespace pwcenter::testutil {

// Fixed-step classical Runge-Kutta on x' = a(t)|x| + b(t). The field has a
// kink at x = 0, so accuracy degrades to O(h^2) near crossings; step counts
// here are chosen to keep that below 1e-7.
inline double rk4_flow(const TrigPoly& a, const TrigPoly& b, double t0, double x0, double t1,
                       int steps = 200000) {
    const double h = (t1 - t0) / steps;
    auto f = [&](double t, double x) { return a.eval(t) * std::abs(x) + b.eval(t); };
    double t = t0, x = x0;
    for (int i = 0; i < steps; ++i) {
        const double k1 = f(t, x);
        const double k2 = f(t + 0.5 * h, x + 0.5 * h * k1);
        const double k3 = f(t + 0.5 * h, x + 0.5 * h * k2);
        const double k4 = f(t + h, x + h * k3);
        x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t = t0 + (i + 1) * (t1 - t0) / steps;
    }
    return x;
}

namespace detail {
inline double simpson_panel(const std::function<double(double)>& f, double a, double b,
                            double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double fa, double fm, double fb, double whole, double tol,
                               int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson_panel(f, a, m, fa, flm, fm);
    const double right = simpson_panel(f, m, b, fm, frm, fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double tol = 1e-12) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = detail::simpson_panel(f, a, b, fa, fm, fb);
    return detail::adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 40);
}

// Strict sign changes of p over one period, sampled densely and circularly.
// Equals the count of odd-multiplicity zeros when none sits on a sample.
inline int sign_change_count(const TrigPoly& p, int samples = 4096) {
    int changes = 0;
    double prev = p.eval(0.0);
    for (int i = 1; i <= samples; ++i) {
        const double cur = p.eval(two_pi * i / samples);
        if (prev != 0.0 && cur != 0.0 && (prev < 0.0) != (cur < 0.0)) ++changes;
        if (cur != 0.0) prev = cur;
    }
    return changes;
}

inline TrigPoly random_trig(std::mt19937& rng, int max_degree, double amplitude = 1.0) {
    std::uniform_real_distribution<double> u(-amplitude, amplitude);
    TrigPoly p(u(rng));
    for (int k = 1; k <= max_degree; ++k) p.set_coeff(k, u(rng), u(rng));
    return p;
}

inline RealPoly random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> c(static_cast<size_t>(max_degree) + 1);
    for (double& v : c) v = u(rng);
    return RealPoly(std::move(c));
}

}  // namespace pwcenter::testutil
