#pragma once

#include <vector>

#include "pwcenter/trigpoly.hpp"

// Event-driven flow of x' = a(t)|x| + b(t): piecewise-linear integration by
// variation of constants per sign region, with zero crossings located
// explicitly and the sign re-decided at each event.
namespace pwcenter {

struct PwlOde {
    TrigPoly a;
    TrigPoly b;
    // Canonical time shift already applied so that b(tau0 + 0) = 0; zero for
    // raw inputs.
    double tau0 = 0.0;
};

// Validated constructor: rejects identically zero b.
PwlOde make_pwl_ode(TrigPoly a, TrigPoly b);

// Shifts time so b(0) = 0 (first zero of b), recording the shift.
PwlOde canonicalize(const TrigPoly& a, const TrigPoly& b);

struct Crossing {
    double t = 0.0;
    double slope = 0.0;       // b(t) at the event
    bool upward = false;      // leaving the negative region (b > 0)
    bool transversal = true;  // false for tangential touches (b ~ 0)
};

struct Segment {
    int sign = 1;  // sign of the solution on this stretch
    double t_begin = 0.0, x_begin = 0.0;
    double t_end = 0.0, x_end = 0.0;
};

struct TracePoint {
    double t = 0.0;
    double x = 0.0;
    int sign = 1;
};

struct Trace {
    double t0 = 0.0, x0 = 0.0;
    double t1 = 0.0, x1 = 0.0;
    std::vector<Crossing> crossings;
    std::vector<Segment> segments;
    std::vector<TracePoint> samples;  // grid samples plus crossing points

    // Transversal crossings strictly inside (lo, hi).
    int count_transversal(double lo, double hi) const;
};

struct FlowOptions {
    double quad_tol = 1e-11;     // absolute tolerance of the segment kernel
    double crossing_t = 1e-10;   // bisection width for event times
    int grid_per_period = 512;   // bracketing grid density
    bool keep_samples = false;   // record grid samples in the trace
};

// Flow from (t0, x0) to t1 (either direction). Throws
// TangencyAmbiguousError when a crossing lands where both b and b' vanish.
Trace integrate(const PwlOde& ode, double t0, double x0, double t1,
                const FlowOptions& opt = FlowOptions{});

// Value at t1 only.
double flow_value(const PwlOde& ode, double t0, double x0, double t1,
                  const FlowOptions& opt = FlowOptions{});

// Time-2*pi return map from t = 0 and its displacement.
double poincare(const PwlOde& ode, double x, const FlowOptions& opt = FlowOptions{});
double displacement(const PwlOde& ode, double x, const FlowOptions& opt = FlowOptions{});

// On a sign-definite band the return map is affine: slope exp(sign*A(2*pi)),
// offset = integral of b(s) exp(sign*(A(2*pi) - A(s))).
struct AffineReturn {
    double slope = 1.0;
    double offset = 0.0;
};
AffineReturn outer_band_displacement(const PwlOde& ode, int sign,
                                     const FlowOptions& opt = FlowOptions{});

}  // namespace pwcenter
