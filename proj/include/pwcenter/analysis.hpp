#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pwcenter/decompose.hpp"
#include "pwcenter/flow.hpp"

// Band structure of the time-0 section, the two-zero-band hypothesis check,
// per-cycle invariants, and the global-center classifier that cross-validates
// the numeric displacement scan against the algebraic witness search.
namespace pwcenter {

inline constexpr double pos_inf = std::numeric_limits<double>::infinity();

enum class SignProfile { positive, negative, mixed };

struct Band {
    double lo = -pos_inf;  // -inf for the bottom band
    double hi = pos_inf;   // +inf for the top band
    int zero_count = 0;    // transversal zeros of solutions in (0, 2*pi)
    SignProfile profile = SignProfile::mixed;
};

struct BandStructure {
    std::vector<double> edges;  // ascending initial values of tangent solutions
    std::vector<Band> bands;    // edges.size() + 1 entries
};

struct AnalysisOptions {
    FlowOptions flow;
    double center_tol = 1e-6;
    int band_interior_samples = 3;
    int displacement_points_per_band = 41;
    int outer_points_per_side = 5;
    int cycle_grid = 9;
};

// Initial values of solutions through (tau, 0) for each zero tau of b,
// integrated back to t = 0 and deduplicated. Throws NonSimpleBError when b
// has a non-simple zero; requires the canonical shift (b(0) = 0).
std::vector<double> band_candidates(const PwlOde& ode, const AnalysisOptions& opt = {});

// Bands between candidate edges with zero counts and sign profiles sampled
// at interior points; disagreeing samples trigger a finer rescan, then
// InconsistentBandError.
BandStructure band_structure(const PwlOde& ode, const AnalysisOptions& opt = {});

struct HypothesisSample {
    double x = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;
};

struct HypothesisReport {
    bool holds = false;
    double band_lo = 0.0, band_hi = 0.0;  // the examined two-zero band
    // +1: gaps shrink at the upper edge; -1: at the lower edge; 0: neither.
    int merge_edge = 0;
    double t_merge = 0.0;        // extrapolated common crossing time
    double b_at_merge = 0.0;     // |b(t_merge)|, recorded as a consistency check
    std::vector<HypothesisSample> evidence;
};

// Checks the geometric approach of the two crossing times at each edge of
// every two-zero band; holds when some edge has a decreasing gap tail with
// extrapolated limit below tol::hyp_gap. Throws NoTwoZeroBandError when no
// band has exactly two simple zeros.
HypothesisReport hypothesis_check(const PwlOde& ode, const BandStructure& bs,
                                  const AnalysisOptions& opt = {});
HypothesisReport hypothesis_check(const PwlOde& ode, const AnalysisOptions& opt = {});

struct CycleResidualSample {
    double x = 0.0;
    double t1 = 0.0, t2 = 0.0;
    double r_interior = 0.0;  // kernel integral over (t1, t2); 0 at located crossings
    double r_periodic = 0.0;  // return-kernel integral over (t2, t1 + 2*pi); 0 iff periodic
    double r_balance = 0.0;   // A(t2) - A(t1); vanishes on centers
    double r_level = 0.0;     // B(t2) - B(t1); vanishes on centers
};

struct CycleInvariantReport {
    int band_sign = -1;  // sign of the solution outside (t1, t2)
    std::vector<CycleResidualSample> samples;
    bool t1_monotone = false;  // t1 strictly counter-moves the edge per band sign
    bool t2_monotone = false;
    double max_r_interior = 0.0, max_r_periodic = 0.0;
    double max_r_balance = 0.0, max_r_level = 0.0;
};

// Residuals on a grid of initial values across a two-zero band.
CycleInvariantReport cycle_invariants(const PwlOde& ode, double band_lo, double band_hi,
                                      const AnalysisOptions& opt = {});

// max |B(t2) - B(t1)| over crossing pairs: the zero-dimensional cycle
// integral of the b-antiderivative.
double abelian_cycle_integral(const DriftTrigPoly& B,
                              const std::vector<std::pair<double, double>>& pairs);

enum class Verdict { global_center, not_global_center, inconclusive };

struct DisplacementSample {
    double x = 0.0;
    double delta = 0.0;
};

struct NumericEvidence {
    std::vector<DisplacementSample> scan;
    double max_abs_displacement = 0.0;
    std::vector<double> limit_cycles;  // certified isolated sign-changing zeros
    AffineReturn outer_positive;
    AffineReturn outer_negative;
    bool outer_ok = false;  // both slopes 1 and offsets 0 within tolerance
};

struct ClassificationReport {
    Verdict verdict = Verdict::inconclusive;
    double tau0 = 0.0;  // canonical shift applied before analysis
    BandStructure bands;
    std::optional<HypothesisReport> hypothesis;
    DecompositionOutcome outcome;  // witness search on the original pair
    NumericEvidence numeric;
    // Under the hypothesis: numeric center evidence <=> witness found.
    bool consistency = true;
};

// Full pipeline: canonical shift, outer-band gate, band structure and
// hypothesis, displacement scan with limit-cycle bisection, witness search,
// verdict. Throws NonSimpleBError (bad b) and BothZeroError (zero inputs).
ClassificationReport center_classify(const TrigPoly& a, const TrigPoly& b,
                                     const AnalysisOptions& opt = {});

}  // namespace pwcenter
