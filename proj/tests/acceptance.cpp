// Acceptance harness: one pass/fail line per criterion, exit code = number of
// failed criteria. Criteria are property-based; every numeric bound below is
// asserted, never logged-and-ignored.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pwcenter/analysis.hpp"
#include "pwcenter/decompose.hpp"
#include "pwcenter/errors.hpp"
#include "pwcenter/laurent.hpp"
#include "pwcenter/tolerances.hpp"

namespace {

using namespace pwcenter;
namespace tu = pwcenter::testutil;

int g_criterion_fails = 0;

#define REQUIRE_ACC(cond, msg)                        \
    do {                                              \
        if (!(cond)) {                                \
            std::cerr << "  [FAIL] " << msg << "\n";  \
            ++g_criterion_fails;                      \
        }                                             \
    } while (0)

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

bool finish(int number, const char* label, const Stopwatch& sw) {
    const bool ok = g_criterion_fails == 0;
    std::printf("[%s] criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", number, label,
                sw.seconds());
    std::fflush(stdout);
    g_criterion_fails = 0;
    return ok;
}

// One analyzed instance, shared across the equivalence and invariant checks.
struct Instance {
    std::string tag;
    TrigPoly a, b;
    PwlOde ode;  // canonical
    std::optional<HypothesisReport> hyp;
    double max_abs_disp = 0.0;
    DecompositionOutcome outcome;
    std::vector<DisplacementSample> scan;  // ascending in x
    std::optional<std::pair<double, double>> two_zero_band;
    std::vector<double> outer_lo_delta, outer_hi_delta;
};

std::vector<Instance> g_instances;  // filled by criteria 2 and 3

constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------- criterion 1

bool criterion1() {
    Stopwatch sw;
    const TrigPoly b = TrigPoly::sine(1);
    const PwlOde ode = make_pwl_ode(TrigPoly{}, b);

    const BandStructure bs = band_structure(ode);
    REQUIRE_ACC(bs.edges.size() == 2, "expected two band edges, got " << bs.edges.size());
    if (bs.edges.size() == 2) {
        REQUIRE_ACC(std::abs(bs.edges[0] + 2.0) < 1e-8, "lower edge " << bs.edges[0]);
        REQUIRE_ACC(std::abs(bs.edges[1]) < 1e-8, "upper edge " << bs.edges[1]);
    }

    const Trace tr = integrate(ode, 0.0, -1.0, two_pi);
    std::vector<double> ts;
    for (const Crossing& c : tr.crossings)
        if (c.transversal) ts.push_back(c.t);
    REQUIRE_ACC(ts.size() == 2, "expected two crossings at x = -1, got " << ts.size());
    if (ts.size() == 2) {
        REQUIRE_ACC(std::abs(ts[0] - kPi / 2.0) < 1e-9, "t1(-1) = " << ts[0]);
        REQUIRE_ACC(std::abs(ts[1] - 3.0 * kPi / 2.0) < 1e-9, "t2(-1) = " << ts[1]);
    }

    const CycleInvariantReport ci = cycle_invariants(ode, -2.0, 0.0);
    REQUIRE_ACC(ci.samples.size() >= 5, "only " << ci.samples.size() << " cycle samples");
    REQUIRE_ACC(ci.max_r_interior < 1e-10, "interior residual " << ci.max_r_interior);
    REQUIRE_ACC(ci.max_r_periodic < 1e-10, "periodic residual " << ci.max_r_periodic);
    REQUIRE_ACC(ci.max_r_balance < 1e-10, "balance residual " << ci.max_r_balance);
    REQUIRE_ACC(ci.max_r_level < 1e-10, "level residual " << ci.max_r_level);

    const ClassificationReport rep = center_classify(TrigPoly{}, b);
    REQUIRE_ACC(rep.verdict == Verdict::global_center, "verdict not global_center");
    REQUIRE_ACC(rep.outcome.kind == OutcomeKind::witness, "no witness found");
    if (rep.outcome.witness) {
        const CompositionWitness& w = *rep.outcome.witness;
        REQUIRE_ACC(w.p.is_zero(), "witness p nonzero");
        REQUIRE_ACC(w.q.degree() == 0 && std::abs(w.q.coeff(0) - 1.0) < 1e-9,
                    "witness q differs from 1");
        REQUIRE_ACC(std::abs(w.h.cos_coeff(1) + 1.0) < 1e-9 && std::abs(w.h.a0()) < 1e-9 &&
                        std::abs(w.h.sin_coeff(1)) < 1e-9 && w.h.degree() == 1,
                    "witness h differs from -cos t");
    }
    REQUIRE_ACC(sw.seconds() < 1.0, "runtime " << sw.seconds() << " s exceeds 1 s");
    return finish(1, "closed-form pipeline (a = 0, b = sin t)", sw);
}

// ---------------------------------------------------------------- criterion 2

CompositionWitness draw_witness(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CompositionWitness w;
    w.p = RealPoly({u(rng), u(rng), u(rng), u(rng)});
    w.q = RealPoly({u(rng), u(rng), u(rng), u(rng)});
    TrigPoly h(u(rng));
    h.set_coeff(1, u(rng), u(rng));
    h.set_coeff(2, u(rng), u(rng));
    w.h = h;
    return w;
}

bool simple_forcing(const TrigPoly& b) {
    if (b.is_zero(tol::coeff_trim)) return false;
    try {
        const ZeroList zs = zeros_on_period(b);
        if (zs.empty()) return false;
        for (const ZeroOnPeriod& z : zs)
            if (!z.simple) return false;
        return true;
    } catch (const IdenticallyZeroError&) {
        return false;
    }
}

bool criterion2() {
    Stopwatch sw;
    std::mt19937 rng(2026u);
    const AnalysisOptions opt;
    int built = 0;
    for (int idx = 0; idx < 50; ++idx) {
        CompositionWitness w;
        ConstructedPair pr;
        bool usable = false;
        for (int attempt = 0; attempt < 1000 && !usable; ++attempt) {
            w = draw_witness(rng);
            pr = construct_from_witness(w);
            usable = simple_forcing(pr.b);
        }
        REQUIRE_ACC(usable, "instance " << idx << ": no witness draw gave simple zeros");
        if (!usable) continue;

        Instance inst;
        inst.tag = "constructed-" + std::to_string(idx);
        inst.a = pr.a;
        inst.b = pr.b;
        inst.ode = canonicalize(pr.a, pr.b);

        BandStructure bs;
        try {
            bs = band_structure(inst.ode, opt);
        } catch (const std::exception& e) {
            REQUIRE_ACC(false, inst.tag << ": band structure failed: " << e.what());
            continue;
        }

        // Displacement scan: five outer points per side, 41 across the
        // interior hull between the extreme edges.
        std::vector<double> xs;
        const double lo = bs.edges.front(), hi = bs.edges.back();
        for (int i = 5; i >= 1; --i) xs.push_back(lo - i);
        if (bs.edges.size() >= 2)
            for (int i = 1; i <= 41; ++i) xs.push_back(lo + (hi - lo) * i / 42.0);
        for (int i = 1; i <= 5; ++i) xs.push_back(hi + i);
        for (double x : xs) {
            const double d = displacement(inst.ode, x, opt.flow);
            inst.scan.push_back({x, d});
            inst.max_abs_disp = std::max(inst.max_abs_disp, std::abs(d));
        }
        for (size_t i = 0; i < 5; ++i) inst.outer_lo_delta.push_back(inst.scan[i].delta);
        for (size_t i = inst.scan.size() - 5; i < inst.scan.size(); ++i)
            inst.outer_hi_delta.push_back(inst.scan[i].delta);

        REQUIRE_ACC(inst.max_abs_disp < 1e-6,
                    inst.tag << ": max |displacement| = " << inst.max_abs_disp);

        inst.outcome = find_common_witness(pr.a, pr.b);
        REQUIRE_ACC(inst.outcome.kind == OutcomeKind::witness,
                    inst.tag << ": witness search failed");
        REQUIRE_ACC(inst.outcome.residual < 1e-8,
                    inst.tag << ": recomposition residual = " << inst.outcome.residual);

        try {
            inst.hyp = hypothesis_check(inst.ode, bs, opt);
        } catch (const NoTwoZeroBandError&) {
            inst.hyp.reset();
        }
        if (inst.hyp) {
            inst.two_zero_band = {inst.hyp->band_lo, inst.hyp->band_hi};
        } else {
            for (const Band& band : bs.bands)
                if (band.zero_count == 2 && band.lo != -pos_inf && band.hi != pos_inf) {
                    inst.two_zero_band = {band.lo, band.hi};
                    break;
                }
        }
        g_instances.push_back(std::move(inst));
        ++built;
    }
    REQUIRE_ACC(built == 50, "built " << built << " of 50 instances");
    REQUIRE_ACC(sw.seconds() < 60.0, "runtime " << sw.seconds() << " s exceeds 60 s");
    return finish(2, "constructed-center family (50 random witnesses)", sw);
}

// ---------------------------------------------------------------- criterion 3

bool criterion3() {
    Stopwatch sw;
    bool some_eps_certified = false;
    for (double eps : {0.2, 0.1, 0.05, 0.025}) {
        const TrigPoly a = TrigPoly::cosine(4, eps);
        const TrigPoly b = TrigPoly::sine(1);
        ClassificationReport rep;
        try {
            rep = center_classify(a, b);
        } catch (const std::exception& e) {
            REQUIRE_ACC(false, "eps = " << eps << ": classification failed: " << e.what());
            continue;
        }
        Instance inst;
        inst.tag = "coll-eps-" + std::to_string(eps);
        inst.a = a;
        inst.b = b;
        inst.ode = make_pwl_ode(a, b);
        inst.hyp = rep.hypothesis;
        inst.max_abs_disp = rep.numeric.max_abs_displacement;
        inst.outcome = rep.outcome;
        inst.scan = rep.numeric.scan;
        g_instances.push_back(std::move(inst));

        if (rep.numeric.limit_cycles.size() >= 2 &&
            rep.verdict == Verdict::not_global_center &&
            rep.outcome.kind == OutcomeKind::none)
            some_eps_certified = true;
    }
    REQUIRE_ACC(some_eps_certified,
                "no eps in {0.2, 0.1, 0.05, 0.025} certified >= 2 limit cycles with "
                "verdict not_global_center and witness none");
    REQUIRE_ACC(sw.seconds() < 30.0, "runtime " << sw.seconds() << " s exceeds 30 s");
    return finish(3, "perturbed family carries isolated limit cycles", sw);
}

// ---------------------------------------------------------------- criterion 4

bool criterion4() {
    Stopwatch sw;
    int checked = 0, exceptions = 0;
    for (const Instance& inst : g_instances) {
        if (!inst.hyp || !inst.hyp->holds) continue;
        ++checked;
        const bool small_disp = inst.max_abs_disp < 1e-6;
        const bool witness = inst.outcome.kind == OutcomeKind::witness;
        if (small_disp != witness) {
            ++exceptions;
            REQUIRE_ACC(false, inst.tag << ": max |displacement| = " << inst.max_abs_disp
                                        << " but witness " << (witness ? "found" : "missing"));
        }
    }
    REQUIRE_ACC(exceptions == 0, exceptions << " equivalence exceptions");
    REQUIRE_ACC(checked >= 10, "only " << checked
                                       << " instances satisfied the crossing-merge premise");
    std::printf("  equivalence checked on %d instances, %d exceptions\n", checked, exceptions);
    return finish(4, "displacement  <->  witness equivalence under the merge premise", sw);
}

// ---------------------------------------------------------------- criterion 5

bool criterion5() {
    Stopwatch sw;
    int checked = 0, skipped = 0;
    for (const Instance& inst : g_instances) {
        if (inst.tag.rfind("constructed-", 0) != 0) continue;
        if (!inst.two_zero_band) {
            ++skipped;
            continue;
        }
        const auto [lo, hi] = *inst.two_zero_band;
        const CycleInvariantReport ci = cycle_invariants(inst.ode, lo, hi);
        REQUIRE_ACC(ci.max_r_balance < 1e-6,
                    inst.tag << ": |integral of a over (t1, t2)| = " << ci.max_r_balance);
        REQUIRE_ACC(ci.max_r_level < 1e-6,
                    inst.tag << ": |B(t2) - B(t1)| = " << ci.max_r_level);
        ++checked;
    }
    REQUIRE_ACC(checked >= 25, "only " << checked << " instances had a two-zero band ("
                                       << skipped << " skipped)");
    std::printf("  cycle invariants checked on %d instances, %d without a two-zero band\n",
                checked, skipped);
    return finish(5, "per-cycle invariants vanish on constructed centers", sw);
}

// ---------------------------------------------------------------- criterion 6

bool criterion6() {
    Stopwatch sw;
    std::mt19937 rng(7177u);

    for (int rep = 0; rep < 200; ++rep) {
        const TrigPoly p = tu::random_trig(rng, 1 + rep % 6);
        const TrigPoly back = laurent_to_trig(trig_to_laurent(p));
        const double dev = (back - p).max_abs_coeff();
        REQUIRE_ACC(dev < 1e-12, "round trip " << rep << " deviates by " << dev);
    }

    int candidates = 0;
    for (int rep = 0; rep < 30; ++rep) {
        const int n = 2 + rep % 5;
        const TrigPoly A = tu::random_trig(rng, n);
        if (A.degree() != n) continue;
        for (int d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            for (const TrigPoly& H : peel_candidates(A, d)) {
                const OuterSolve os = solve_outer_poly(A, H);
                REQUIRE_ACC(os.ok && os.residual < 1e-9,
                            "peel candidate (deg " << d << ") residual " << os.residual);
                ++candidates;
            }
        }
    }
    REQUIRE_ACC(candidates >= 30, "only " << candidates << " peel candidates exercised");

    for (int rep = 0; rep < 100; ++rep) {
        const TrigPoly p = tu::random_trig(rng, 1 + rep % 5);
        const int ours = static_cast<int>(zeros_on_period(p).size());
        const int oracle = tu::sign_change_count(p);
        REQUIRE_ACC(ours == oracle,
                    "root count " << ours << " vs sign-change oracle " << oracle);
    }
    return finish(6, "algebra kernel (round trip, peel soundness, root counts)", sw);
}

// ---------------------------------------------------------------- criterion 7

bool criterion7() {
    Stopwatch sw;

    FlowOptions fine;
    fine.quad_tol = 5e-12;
    const std::vector<PwlOde> odes = {
        make_pwl_ode(TrigPoly{}, TrigPoly::sine(1)),
        make_pwl_ode(TrigPoly::cosine(4, 0.1), TrigPoly::sine(1)),
        make_pwl_ode(TrigPoly::sine(2), TrigPoly::cosine(1)),
    };
    for (const PwlOde& ode : odes)
        for (double x : {-2.1, -1.0, -0.3, 0.5, 1.7}) {
            const double coarse = poincare(ode, x);
            const double refined = poincare(ode, x, fine);
            REQUIRE_ACC(std::abs(coarse - refined) < 1e-9,
                        "tolerance halving moved the return map by "
                            << std::abs(coarse - refined) << " at x = " << x);
        }

    for (const Instance& inst : g_instances) {
        for (size_t i = 1; i < inst.scan.size(); ++i) {
            const double p0 = inst.scan[i - 1].x + inst.scan[i - 1].delta;
            const double p1 = inst.scan[i].x + inst.scan[i].delta;
            REQUIRE_ACC(inst.scan[i].x > inst.scan[i - 1].x,
                        inst.tag << ": scan grid not ascending at index " << i);
            REQUIRE_ACC(p1 > p0, inst.tag << ": return map not increasing at x = "
                                          << inst.scan[i].x);
        }
    }

    // Zero-mean coefficient a: the return map off the bands is a pure
    // translation, so the displacement is constant on each outer side.
    for (const PwlOde& ode : {odes[0], odes[1]}) {
        const BandStructure bs = band_structure(ode);
        for (int side : {-1, +1}) {
            const double edge = side < 0 ? bs.edges.front() : bs.edges.back();
            double dmin = 0.0, dmax = 0.0;
            for (int i = 1; i <= 5; ++i) {
                const double d = displacement(ode, edge + side * i);
                if (i == 1) dmin = dmax = d;
                dmin = std::min(dmin, d);
                dmax = std::max(dmax, d);
            }
            REQUIRE_ACC(dmax - dmin < 1e-9, "outer displacement spread " << dmax - dmin
                                                                         << " on side " << side);
        }
    }
    return finish(7, "flow kernel (tolerance stability, monotonicity, outer constancy)", sw);
}

}  // namespace

int main() {
    int failed = 0;
    failed += criterion1() ? 0 : 1;
    failed += criterion2() ? 0 : 1;
    failed += criterion3() ? 0 : 1;
    failed += criterion4() ? 0 : 1;
    failed += criterion5() ? 0 : 1;
    failed += criterion6() ? 0 : 1;
    failed += criterion7() ? 0 : 1;
    std::printf("%d of 7 criteria passed\n", 7 - failed);
    return failed;
}
