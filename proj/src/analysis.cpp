#include "pwcenter/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pwcenter/errors.hpp"
#include "pwcenter/quadrature.hpp"
#include "pwcenter/tolerances.hpp"

namespace pwcenter {

namespace {

// Transversal crossing times strictly inside (0, 2*pi).
std::vector<double> crossing_times(const Trace& tr) {
    std::vector<double> ts;
    for (const Crossing& c : tr.crossings)
        if (c.transversal && c.t > 0.0 && c.t < two_pi) ts.push_back(c.t);
    return ts;
}

// Aitken delta-squared step on three consecutive entries.
double aitken_step(double x0, double x1, double x2) {
    const double denom = x2 - 2.0 * x1 + x0;
    if (std::abs(denom) < 1e-300) return x2;
    return x2 - (x2 - x1) * (x2 - x1) / denom;
}

// Extrapolated limit of the tail. One delta-squared pass removes the leading
// geometric term of an edge approach; the square-root-type gap laws here
// carry a slower second term, so a second pass over the accelerated values
// is applied whenever five entries are available.
double aitken_limit(const std::vector<double>& g) {
    const size_t n = g.size();
    const double once = aitken_step(g[n - 3], g[n - 2], g[n - 1]);
    if (n < 5) return once;
    const double a0 = aitken_step(g[n - 5], g[n - 4], g[n - 3]);
    const double a1 = aitken_step(g[n - 4], g[n - 3], g[n - 2]);
    return aitken_step(a0, a1, once);
}

struct BandSampler {
    const PwlOde& ode;
    const AnalysisOptions& opt;

    Trace trace_at(double x) const { return integrate(ode, 0.0, x, two_pi, opt.flow); }

    // Interior probe positions for a band, lowest first.
    std::vector<double> probes(const Band& band, int count) const {
        std::vector<double> xs;
        if (band.lo == -pos_inf && band.hi == pos_inf) {
            for (int i = 0; i < count; ++i) xs.push_back(-1.0 + 2.0 * i / std::max(1, count - 1));
        } else if (band.lo == -pos_inf) {
            for (int i = count; i >= 1; --i) xs.push_back(band.hi - i);
        } else if (band.hi == pos_inf) {
            for (int i = 1; i <= count; ++i) xs.push_back(band.lo + i);
        } else {
            for (int i = 1; i <= count; ++i)
                xs.push_back(band.lo + (band.hi - band.lo) * i / (count + 1));
        }
        return xs;
    }
};

SignProfile profile_of(const Trace& tr, int zero_count) {
    if (zero_count > 0) return SignProfile::mixed;
    return tr.x0 > 0.0 ? SignProfile::positive : SignProfile::negative;
}

}  // namespace

std::vector<double> band_candidates(const PwlOde& ode, const AnalysisOptions& opt) {
    const double bscale = std::max(1.0, ode.b.max_abs_coeff());
    if (std::abs(ode.b.eval(0.0)) > tol::root * bscale)
        throw std::invalid_argument("band candidates require the canonical shift (b(0) = 0)");
    const TrigPoly db = derivative(ode.b);
    std::vector<double> xs;
    for (const ZeroOnPeriod& z : zeros_on_period(ode.b)) {
        if (!z.simple) throw NonSimpleBError("b has a non-simple zero");
        // The tangent solution through (tau, 0) keeps the sign of b' on both
        // sides; integrate it back to the section at t = 0.
        if (z.t <= tol::crossing_t) {
            xs.push_back(0.0);
            continue;
        }
        xs.push_back(integrate(ode, z.t, 0.0, 0.0, opt.flow).x1);
    }
    std::sort(xs.begin(), xs.end());
    std::vector<double> dedup;
    for (double x : xs)
        if (dedup.empty() || x - dedup.back() > tol::dedupe) dedup.push_back(x);
    return dedup;
}

BandStructure band_structure(const PwlOde& ode, const AnalysisOptions& opt) {
    BandStructure bs;
    bs.edges = band_candidates(ode, opt);
    const size_t nbands = bs.edges.size() + 1;
    for (size_t i = 0; i < nbands; ++i) {
        Band band;
        band.lo = (i == 0) ? -pos_inf : bs.edges[i - 1];
        band.hi = (i == bs.edges.size()) ? pos_inf : bs.edges[i];
        AnalysisOptions local = opt;
        bool settled = false;
        for (int attempt = 0; attempt < 3 && !settled; ++attempt) {
            BandSampler s{ode, local};
            std::vector<int> counts;
            Trace first;
            for (double x : s.probes(band, opt.band_interior_samples)) {
                Trace tr = s.trace_at(x);
                if (counts.empty()) first = tr;
                counts.push_back(tr.count_transversal(0.0, two_pi));
            }
            settled = std::all_of(counts.begin(), counts.end(),
                                  [&](int c) { return c == counts.front(); });
            if (settled) {
                band.zero_count = counts.front();
                band.profile = profile_of(first, band.zero_count);
            } else {
                local.flow.grid_per_period *= 4;  // rescan with finer bracketing
            }
        }
        if (!settled) throw InconsistentBandError("zero count varies inside one band");
        bs.bands.push_back(band);
    }
    return bs;
}

HypothesisReport hypothesis_check(const PwlOde& ode, const BandStructure& bs,
                                  const AnalysisOptions& opt) {
    std::optional<HypothesisReport> fallback;
    for (const Band& band : bs.bands) {
        if (band.zero_count != 2 || band.lo == -pos_inf || band.hi == pos_inf) continue;
        HypothesisReport rep;
        rep.band_lo = band.lo;
        rep.band_hi = band.hi;
        const double width = band.hi - band.lo;
        for (int edge = -1; edge <= 1 && !rep.holds; edge += 2) {
            std::vector<double> gaps, t1s, t2s;
            for (int j = 1; j <= 10; ++j) {
                const double off = width * std::ldexp(1.0, -j);
                const double x = edge < 0 ? band.lo + off : band.hi - off;
                const Trace tr = integrate(ode, 0.0, x, two_pi, opt.flow);
                const std::vector<double> ts = crossing_times(tr);
                if (ts.size() != 2) continue;  // unresolved fringe sample
                rep.evidence.push_back({x, ts[0], ts[1]});
                gaps.push_back(ts[1] - ts[0]);
                t1s.push_back(ts[0]);
                t2s.push_back(ts[1]);
            }
            if (gaps.size() < 4) continue;
            const size_t n = gaps.size();
            const bool decreasing = gaps[n - 1] < gaps[n - 2] && gaps[n - 2] < gaps[n - 3];
            const double limit = aitken_limit(gaps);
            if (decreasing && std::abs(limit) < tol::hyp_gap) {
                rep.holds = true;
                rep.merge_edge = edge;
                rep.t_merge = 0.5 * (aitken_limit(t1s) + aitken_limit(t2s));
                rep.b_at_merge = std::abs(ode.b.eval(rep.t_merge));
            }
        }
        if (rep.holds) return rep;
        if (!fallback) fallback = rep;
    }
    if (fallback) return *fallback;
    throw NoTwoZeroBandError("no band with exactly two simple zeros");
}

HypothesisReport hypothesis_check(const PwlOde& ode, const AnalysisOptions& opt) {
    return hypothesis_check(ode, band_structure(ode, opt), opt);
}

CycleInvariantReport cycle_invariants(const PwlOde& ode, double band_lo, double band_hi,
                                      const AnalysisOptions& opt) {
    CycleInvariantReport rep;
    const DriftTrigPoly A = antiderivative(ode.a);
    const DriftTrigPoly B = antiderivative(ode.b);
    const int g = opt.cycle_grid;
    rep.band_sign = (band_lo + band_hi > 0.0) ? 1 : -1;
    const double sigma_mid = -rep.band_sign;  // solution sign between the crossings
    for (int i = 1; i <= g; ++i) {
        const double x = band_lo + (band_hi - band_lo) * i / (g + 1);
        const Trace tr = integrate(ode, 0.0, x, two_pi, opt.flow);
        const std::vector<double> ts = crossing_times(tr);
        if (ts.size() != 2) continue;
        CycleResidualSample s;
        s.x = x;
        s.t1 = ts[0];
        s.t2 = ts[1];
        const double At2 = A.eval(s.t2);
        s.r_interior = integrate_adaptive(
            [&](double t) { return ode.b.eval(t) * std::exp(sigma_mid * (At2 - A.eval(t))); },
            s.t1, s.t2, opt.flow.quad_tol);
        const double t1w = s.t1 + two_pi;
        const double At1w = A.eval(t1w);
        s.r_periodic = integrate_adaptive(
            [&](double t) {
                return ode.b.eval(t) * std::exp(rep.band_sign * (At1w - A.eval(t)));
            },
            s.t2, t1w, opt.flow.quad_tol);
        s.r_balance = A.eval(s.t2) - A.eval(s.t1);
        s.r_level = B.eval(s.t2) - B.eval(s.t1);
        rep.samples.push_back(s);
        rep.max_r_interior = std::max(rep.max_r_interior, std::abs(s.r_interior));
        rep.max_r_periodic = std::max(rep.max_r_periodic, std::abs(s.r_periodic));
        rep.max_r_balance = std::max(rep.max_r_balance, std::abs(s.r_balance));
        rep.max_r_level = std::max(rep.max_r_level, std::abs(s.r_level));
    }
    // x moving toward the axis widens the crossing pair; the direction flips
    // with the band sign.
    rep.t1_monotone = rep.samples.size() >= 2;
    rep.t2_monotone = rep.samples.size() >= 2;
    for (size_t i = 1; i < rep.samples.size(); ++i) {
        const double d1 = rep.samples[i].t1 - rep.samples[i - 1].t1;
        const double d2 = rep.samples[i].t2 - rep.samples[i - 1].t2;
        if (rep.band_sign < 0) {
            rep.t1_monotone = rep.t1_monotone && d1 < 0.0;
            rep.t2_monotone = rep.t2_monotone && d2 > 0.0;
        } else {
            rep.t1_monotone = rep.t1_monotone && d1 > 0.0;
            rep.t2_monotone = rep.t2_monotone && d2 < 0.0;
        }
    }
    return rep;
}

double abelian_cycle_integral(const DriftTrigPoly& B,
                              const std::vector<std::pair<double, double>>& pairs) {
    double m = 0.0;
    for (const auto& [t1, t2] : pairs) m = std::max(m, std::abs(B.eval(t2) - B.eval(t1)));
    return m;
}

namespace {

double bisect_displacement_zero(const PwlOde& ode, double lo, double hi, double d_lo,
                                const FlowOptions& fopt) {
    for (int i = 0; i < 60 && hi - lo > 1e-9; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double dm = displacement(ode, mid, fopt);
        if ((dm < 0.0) == (d_lo < 0.0))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

ClassificationReport center_classify(const TrigPoly& a, const TrigPoly& b,
                                     const AnalysisOptions& opt) {
    if (a.is_zero(tol::coeff_trim) && b.is_zero(tol::coeff_trim))
        throw BothZeroError("both coefficients are zero");
    ClassificationReport rep;
    const PwlOde ode = canonicalize(a, b);
    rep.tau0 = ode.tau0;

    rep.numeric.outer_positive = outer_band_displacement(ode, +1, opt.flow);
    rep.numeric.outer_negative = outer_band_displacement(ode, -1, opt.flow);
    auto outer_fine = [&](const AffineReturn& r) {
        return std::abs(r.slope - 1.0) <= tol::outer && std::abs(r.offset) <= tol::outer;
    };
    rep.numeric.outer_ok =
        outer_fine(rep.numeric.outer_positive) && outer_fine(rep.numeric.outer_negative);

    rep.bands = band_structure(ode, opt);
    try {
        rep.hypothesis = hypothesis_check(ode, rep.bands, opt);
    } catch (const NoTwoZeroBandError&) {
        rep.hypothesis.reset();
    }

    BandSampler sampler{ode, opt};
    for (const Band& band : rep.bands.bands) {
        const bool outer_band = band.lo == -pos_inf || band.hi == pos_inf;
        const int count =
            outer_band ? opt.outer_points_per_side : opt.displacement_points_per_band;
        std::vector<DisplacementSample> band_scan;
        for (double x : sampler.probes(band, count)) {
            const double d = displacement(ode, x, opt.flow);
            band_scan.push_back({x, d});
        }
        double band_max = 0.0;
        for (const DisplacementSample& s : band_scan)
            band_max = std::max(band_max, std::abs(s.delta));
        // Isolated sign-changing zeros, certified only in bands whose
        // displacement clears the amplitude floor.
        if (band_max > tol::lc_amplitude) {
            for (size_t i = 1; i < band_scan.size(); ++i) {
                if (band_scan[i - 1].delta * band_scan[i].delta < 0.0) {
                    rep.numeric.limit_cycles.push_back(bisect_displacement_zero(
                        ode, band_scan[i - 1].x, band_scan[i].x, band_scan[i - 1].delta,
                        opt.flow));
                }
            }
        }
        rep.numeric.max_abs_displacement = std::max(rep.numeric.max_abs_displacement, band_max);
        rep.numeric.scan.insert(rep.numeric.scan.end(), band_scan.begin(), band_scan.end());
    }

    rep.outcome = find_common_witness(a, b);

    const bool witness_found = rep.outcome.kind == OutcomeKind::witness;
    const bool center_evidence =
        rep.numeric.outer_ok && rep.numeric.max_abs_displacement < opt.center_tol;
    const bool hard_noncenter = !rep.numeric.outer_ok || !rep.numeric.limit_cycles.empty() ||
                                rep.numeric.max_abs_displacement > tol::lc_amplitude;
    const bool hyp_holds = rep.hypothesis.has_value() && rep.hypothesis->holds;
    if (hard_noncenter)
        rep.verdict = Verdict::not_global_center;
    else if (hyp_holds && center_evidence && witness_found)
        rep.verdict = Verdict::global_center;
    else
        rep.verdict = Verdict::inconclusive;
    rep.consistency = (center_evidence == witness_found);
    return rep;
}

}  // namespace pwcenter
