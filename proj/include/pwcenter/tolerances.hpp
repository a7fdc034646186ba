#pragma once

// Numeric thresholds shared across modules. Values assume desk-scale
// coefficients (O(1)) in double precision, with headroom between each
// producer's accuracy and the consumer's acceptance test.
namespace pwcenter::tol {

inline constexpr double coeff_trim   = 1e-12;  // drop trailing harmonics below this
inline constexpr double root         = 1e-10;  // |p(t)| accepted at a reported root
inline constexpr double simple_deriv = 1e-8;   // |p'(t)| above which a root counts as simple
inline constexpr double unit_circle  = 1e-8;   // | |z|-1 | for unit-circle root filtering
inline constexpr double cluster      = 1e-7;   // clustering radius for root multiplicity
inline constexpr double quadrature   = 1e-11;  // absolute adaptive-quadrature tolerance
inline constexpr double crossing_t   = 1e-10;  // zero-crossing location accuracy in t
inline constexpr double witness      = 1e-9;   // accept solve/verify residuals below this
inline constexpr double drift        = 1e-10;  // |mean| above which an antiderivative is secular
inline constexpr double center       = 1e-6;   // max|displacement| for numeric center evidence
inline constexpr double outer        = 1e-8;   // outer-band slope/offset violation threshold
inline constexpr double hyp_gap      = 1e-3;   // extrapolated crossing-gap limit at a merging edge
inline constexpr double lc_bracket   = 1e-3;   // bracket width certifying an isolated zero
inline constexpr double lc_amplitude = 1e-5;   // min |displacement| in a band carrying limit cycles
inline constexpr double dedupe       = 1e-8;   // deduplication radius for candidates/edges

}  // namespace pwcenter::tol
