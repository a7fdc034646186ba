#include "pwcenter/flow.hpp"

#include <algorithm>
#include <cmath>

#include "pwcenter/errors.hpp"
#include "pwcenter/quadrature.hpp"
#include "pwcenter/tolerances.hpp"

namespace pwcenter {

namespace {

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// Variation-of-constants kernel for one sign region. Valid in both time
// directions: x(t_to) = e^{s(A(t_to)-A(t_from))} x_from
//                       + int_{t_from}^{t_to} b(r) e^{s(A(t_to)-A(r))} dr.
struct SegmentKernel {
    const TrigPoly& b;
    DriftTrigPoly A;
    TrigPoly db;
    double quad_tol;
    double b_thresh;
    double db_thresh;

    SegmentKernel(const PwlOde& ode, double quad_tol)
        : b(ode.b), A(antiderivative(ode.a)), db(derivative(ode.b)), quad_tol(quad_tol) {
        b_thresh = tol::simple_deriv * std::max(1.0, b.max_abs_coeff());
        db_thresh = tol::simple_deriv * std::max(1.0, db.max_abs_coeff());
    }

    double advance(int sign, double t_from, double x_from, double t_to) const {
        const double At = A.eval(t_to);
        const double sgn = static_cast<double>(sign);
        const double hom = std::exp(sgn * (At - A.eval(t_from))) * x_from;
        const double part = integrate_adaptive(
            [&](double r) { return b.eval(r) * std::exp(sgn * (At - A.eval(r))); }, t_from, t_to,
            quad_tol);
        return hom + part;
    }

    // Continuation sign at a point on the axis. two_sided: tangency (same
    // sign on both sides); otherwise the side selected by `ahead` (+1 for
    // larger t, -1 for smaller t).
    int axis_sign(double t, int ahead) const {
        const double bt = b.eval(t);
        if (std::abs(bt) > b_thresh) return ahead * sign_of(bt);
        const double dbt = db.eval(t);
        if (std::abs(dbt) <= db_thresh) throw TangencyAmbiguousError(t);
        return sign_of(dbt);
    }
};

}  // namespace

PwlOde make_pwl_ode(TrigPoly a, TrigPoly b) {
    if (b.is_zero(tol::coeff_trim)) throw IdenticallyZeroError("b is identically zero");
    return PwlOde{std::move(a), std::move(b), 0.0};
}

PwlOde canonicalize(const TrigPoly& a, const TrigPoly& b) {
    if (b.is_zero(tol::coeff_trim)) throw IdenticallyZeroError("b is identically zero");
    const ZeroList zs = zeros_on_period(b);
    if (zs.empty()) throw NonSimpleBError("b has no zero to anchor the canonical shift");
    const double tau0 = zs.front().t;
    return PwlOde{time_shift(a, tau0), time_shift(b, tau0), tau0};
}

int Trace::count_transversal(double lo, double hi) const {
    int n = 0;
    for (const Crossing& c : crossings)
        if (c.transversal && c.t > lo && c.t < hi) ++n;
    return n;
}

Trace integrate(const PwlOde& ode, double t0, double x0, double t1, const FlowOptions& opt) {
    SegmentKernel k(ode, opt.quad_tol);
    Trace tr;
    tr.t0 = t0;
    tr.x0 = x0;
    const int dir = t1 > t0 ? 1 : (t1 < t0 ? -1 : 0);
    if (dir == 0) {
        tr.t1 = t1;
        tr.x1 = x0;
        tr.segments.push_back({sign_of(x0) == 0 ? 1 : sign_of(x0), t0, x0, t1, x0});
        return tr;
    }

    int sign = sign_of(x0);
    if (sign == 0) sign = k.axis_sign(t0, dir);

    double t = t0, x = x0;
    double seg_t = t0, seg_x = x0;
    const double h = dir * two_pi / opt.grid_per_period;
    if (opt.keep_samples) tr.samples.push_back({t, x, sign});

    auto close_segment = [&](double te, double xe) {
        tr.segments.push_back({sign, seg_t, seg_x, te, xe});
        seg_t = te;
        seg_x = xe;
    };

    while (dir * (t1 - t) > 0.0) {
        double t_next = t + h;
        if (dir * (t_next - t1) > 0.0) t_next = t1;

        // March across the step, peeling off crossings until none remain.
        while (true) {
            const double span = t_next - t;
            if (std::abs(span) <= opt.crossing_t) {
                x = k.advance(sign, t, x, t_next);
                t = t_next;
                break;
            }
            const double t_mid = t + 0.5 * span;
            const double x_mid = k.advance(sign, t, x, t_mid);
            double lo_t = t, lo_x = x, hi_t = 0.0;
            bool flipped = false;
            if (x_mid * sign < 0.0) {
                hi_t = t_mid;
                flipped = true;
            } else {
                const double x_end = k.advance(sign, t, x, t_next);
                if (x_end * sign < 0.0) {
                    lo_t = t_mid;
                    lo_x = x_mid;
                    hi_t = t_next;
                    flipped = true;
                } else {
                    t = t_next;
                    x = x_end;
                    break;
                }
            }
            if (!flipped) break;

            // Bisect the ghost extension; its first zero is the crossing.
            double a_t = lo_t, b_t = hi_t;
            while (std::abs(b_t - a_t) > opt.crossing_t) {
                const double m = 0.5 * (a_t + b_t);
                const double xm = k.advance(sign, lo_t, lo_x, m);
                if (xm * sign < 0.0)
                    b_t = m;
                else
                    a_t = m;
            }
            const double t_c = 0.5 * (a_t + b_t);
            const double slope = k.b.eval(t_c);
            Crossing ev;
            ev.t = t_c;
            ev.slope = slope;
            if (std::abs(slope) > k.b_thresh) {
                ev.transversal = true;
                ev.upward = slope > 0.0;
                close_segment(t_c, 0.0);
                sign = dir > 0 ? sign_of(slope) : -sign_of(slope);
            } else {
                const double dbt = k.db.eval(t_c);
                if (std::abs(dbt) <= k.db_thresh) throw TangencyAmbiguousError(t_c);
                ev.transversal = false;
                ev.upward = dbt > 0.0;
                close_segment(t_c, 0.0);
                sign = sign_of(dbt);
            }
            tr.crossings.push_back(ev);
            if (opt.keep_samples) tr.samples.push_back({t_c, 0.0, sign});
            t = t_c;
            x = 0.0;
        }
        if (opt.keep_samples) tr.samples.push_back({t, x, sign});
    }

    tr.t1 = t;
    tr.x1 = x;
    close_segment(t, x);
    std::sort(tr.crossings.begin(), tr.crossings.end(),
              [](const Crossing& l, const Crossing& r) { return l.t < r.t; });
    return tr;
}

double flow_value(const PwlOde& ode, double t0, double x0, double t1, const FlowOptions& opt) {
    return integrate(ode, t0, x0, t1, opt).x1;
}

double poincare(const PwlOde& ode, double x, const FlowOptions& opt) {
    return integrate(ode, 0.0, x, two_pi, opt).x1;
}

double displacement(const PwlOde& ode, double x, const FlowOptions& opt) {
    return poincare(ode, x, opt) - x;
}

AffineReturn outer_band_displacement(const PwlOde& ode, int sign, const FlowOptions& opt) {
    const DriftTrigPoly A = antiderivative(ode.a);
    const double sgn = static_cast<double>(sign);
    const double A_end = A.drift * two_pi;  // the trig part cancels over a period
    AffineReturn r;
    r.slope = std::exp(sgn * A_end);
    r.offset = integrate_adaptive(
        [&](double s) { return ode.b.eval(s) * std::exp(sgn * (A_end - A.eval(s))); }, 0.0, two_pi,
        opt.quad_tol);
    return r;
}

}  // namespace pwcenter
