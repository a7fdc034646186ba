#include "pwcenter/decompose.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <utility>

#include "pwcenter/errors.hpp"
#include "pwcenter/laurent.hpp"
#include "pwcenter/tolerances.hpp"

namespace pwcenter {

namespace {

// All m-th roots, ascending by principal argument: fixes the enumeration
// order of candidate inner factors.
std::vector<cplx> mth_roots(cplx w, int m) {
    std::vector<cplx> out;
    const double r = std::pow(std::abs(w), 1.0 / m);
    const double th = std::arg(w);
    out.reserve(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) out.push_back(std::polar(r, (th + two_pi * k) / m));
    std::sort(out.begin(), out.end(),
              [](const cplx& x, const cplx& y) { return std::arg(x) < std::arg(y); });
    return out;
}

// (sum_i base[i] z^i)^m by repeated convolution; sizes here are tiny.
std::vector<cplx> poly_pow(const std::vector<cplx>& base, int m) {
    std::vector<cplx> acc{cplx{1.0, 0.0}};
    for (int rep = 0; rep < m; ++rep) {
        std::vector<cplx> nxt(acc.size() + base.size() - 1, cplx{0.0, 0.0});
        for (size_t u = 0; u < acc.size(); ++u)
            for (size_t v = 0; v < base.size(); ++v) nxt[u + v] += acc[u] * base[v];
        acc = std::move(nxt);
    }
    return acc;
}

TrigPoly strip_mean(TrigPoly t) {
    t.set_coeff(0, 0.0, 0.0);
    t.trim();
    return t;
}

}  // namespace

ConstructedPair construct_from_witness(const CompositionWitness& w) {
    if (w.h.is_constant(tol::coeff_trim)) throw ConstantInnerError("inner factor is constant");
    ConstructedPair out;
    out.a = derivative(compose_poly(w.p.antiderivative(), w.h));
    out.b = derivative(compose_poly(w.q.antiderivative(), w.h));
    out.a.trim();
    out.b.trim();
    return out;
}

double verify_witness(const TrigPoly& a, const TrigPoly& b, const CompositionWitness& w) {
    const ConstructedPair c = construct_from_witness(w);
    TrigPoly da = a;
    da -= c.a;
    TrigPoly db = b;
    db -= c.b;
    return std::max(da.max_abs_coeff(), db.max_abs_coeff());
}

OuterSolve solve_outer_poly(const TrigPoly& F, const TrigPoly& H) {
    OuterSolve res;
    const int deg_f = F.degree();
    const int deg_h = H.degree();
    if (deg_h == 0) return res;
    if (deg_f % deg_h != 0) return res;
    const int m = deg_f / deg_h;
    const int n_harm = deg_f;

    std::vector<TrigPoly> powers;
    powers.reserve(static_cast<size_t>(m) + 1);
    powers.emplace_back(1.0);
    for (int j = 1; j <= m; ++j) powers.push_back(powers.back() * H);

    // One row per Fourier coefficient up to the degree of F.
    const int rows = 1 + 2 * n_harm;
    Eigen::MatrixXd M(rows, m + 1);
    Eigen::VectorXd f(rows);
    for (int j = 0; j <= m; ++j) {
        M(0, j) = powers[static_cast<size_t>(j)].a0();
        for (int k = 1; k <= n_harm; ++k) {
            M(2 * k - 1, j) = powers[static_cast<size_t>(j)].cos_coeff(k);
            M(2 * k, j) = powers[static_cast<size_t>(j)].sin_coeff(k);
        }
    }
    f(0) = F.a0();
    for (int k = 1; k <= n_harm; ++k) {
        f(2 * k - 1) = F.cos_coeff(k);
        f(2 * k) = F.sin_coeff(k);
    }

    const Eigen::VectorXd c = M.colPivHouseholderQr().solve(f);
    res.residual = (M * c - f).cwiseAbs().maxCoeff();
    res.poly = RealPoly(std::vector<double>(c.data(), c.data() + c.size()));
    res.ok = res.residual < tol::witness;
    return res;
}

std::vector<TrigPoly> peel_candidates(const TrigPoly& A, int d) {
    const int n = A.degree();
    if (d < 1 || n == 0 || n % d != 0) return {};
    const int m = n / d;
    const LaurentPoly L = trig_to_laurent(A);
    const cplx alpha_n = L.coeff(n);

    std::vector<TrigPoly> out;
    for (int lead : {+1, -1}) {
        for (const cplx& eta_top : mth_roots(static_cast<double>(lead) * alpha_n, m)) {
            // Peel the top Laurent coefficients: the z^(n-j) coefficient of
            // lead * H^m splits into the known partial power plus the linear
            // term m * eta_top^(m-1) * eta[d-j].
            std::vector<cplx> eta(static_cast<size_t>(d) + 1, cplx{0.0, 0.0});
            eta[static_cast<size_t>(d)] = eta_top;
            const cplx denom = static_cast<double>(m) * std::pow(eta_top, m - 1);
            for (int j = 1; j < d; ++j) {
                std::vector<cplx> partial(static_cast<size_t>(d) + 1, cplx{0.0, 0.0});
                for (int i = d - j + 1; i <= d; ++i)
                    partial[static_cast<size_t>(i)] = eta[static_cast<size_t>(i)];
                const std::vector<cplx> pw = poly_pow(partial, m);
                const cplx s_known =
                    n - j < static_cast<int>(pw.size()) ? pw[static_cast<size_t>(n - j)] : cplx{};
                eta[static_cast<size_t>(d - j)] =
                    (static_cast<double>(lead) * L.coeff(n - j) - s_known) / denom;
            }
            // Realness forces the negative half by conjugation; the constant
            // term is normalized away.
            LaurentPoly lh;
            for (int i = 1; i <= d; ++i) {
                lh.set_coeff(i, eta[static_cast<size_t>(i)]);
                lh.set_coeff(-i, std::conj(eta[static_cast<size_t>(i)]));
            }
            TrigPoly H = laurent_to_trig(lh);
            H.trim();
            if (H.degree() != d) continue;
            if (!solve_outer_poly(A, H).ok) continue;
            const bool dup = std::any_of(out.begin(), out.end(), [&](const TrigPoly& prev) {
                return (H - prev).max_abs_coeff() < tol::dedupe;
            });
            if (!dup) out.push_back(std::move(H));
        }
    }
    return out;
}

DecompositionOutcome find_common_witness(const TrigPoly& a, const TrigPoly& b) {
    if (a.is_zero(tol::coeff_trim) && b.is_zero(tol::coeff_trim))
        throw BothZeroError("both coefficients are zero");
    DecompositionOutcome out;
    const DriftTrigPoly A = antiderivative(a);
    const DriftTrigPoly B = antiderivative(b);

    // A secular drift in either antiderivative rules out any composition.
    const double drift = std::max(std::abs(A.drift), std::abs(B.drift));
    const double scale = std::max({1.0, a.max_abs_coeff(), b.max_abs_coeff()});
    if (drift > tol::coeff_trim * scale) {
        out.residual = drift;
        return out;
    }

    // One side identically zero: the other antiderivative is its own inner.
    if (a.is_zero(tol::coeff_trim)) {
        CompositionWitness w;
        w.q = RealPoly({1.0});
        w.h = strip_mean(B.trig);
        w.integrated = std::make_pair(RealPoly{}, RealPoly({0.0, 1.0}));
        out.kind = OutcomeKind::witness;
        out.residual = verify_witness(a, b, w);
        out.witness = std::move(w);
        return out;
    }
    if (b.is_zero(tol::coeff_trim)) {
        CompositionWitness w;
        w.p = RealPoly({1.0});
        w.h = strip_mean(A.trig);
        w.integrated = std::make_pair(RealPoly({0.0, 1.0}), RealPoly{});
        out.kind = OutcomeKind::witness;
        out.residual = verify_witness(a, b, w);
        out.witness = std::move(w);
        return out;
    }

    // Common index factor: compress t -> t/k, search there, map back through
    // the chain rule (the inner picks up frequency k, the outers divide by k).
    const int k = fourier_support_gcd({a, b});
    if (k > 1) {
        const DecompositionOutcome sub =
            find_common_witness(index_compress(a, k), index_compress(b, k));
        out.frequency_factor = k;
        if (sub.kind == OutcomeKind::witness) {
            CompositionWitness w = *sub.witness;
            w.p *= 1.0 / k;
            w.q *= 1.0 / k;
            w.h = index_expand(w.h, k);
            if (w.integrated) {
                w.integrated->first *= 1.0 / k;
                w.integrated->second *= 1.0 / k;
            }
            out.kind = OutcomeKind::witness;
            out.residual = verify_witness(a, b, w);
            out.witness = std::move(w);
        } else {
            out.kind = OutcomeKind::frequency_factor;
            out.residual = sub.residual;
        }
        return out;
    }

    // Inner degree must divide both antiderivative degrees; richest first.
    const int g0 = std::gcd(A.trig.degree(), B.trig.degree());
    double best = std::numeric_limits<double>::infinity();
    for (int d = g0; d >= 1; --d) {
        if (g0 % d != 0) continue;
        for (const TrigPoly& H : peel_candidates(A.trig, d)) {
            const OuterSolve pa = solve_outer_poly(A.trig, H);
            const OuterSolve qb = solve_outer_poly(B.trig, H);
            if (!qb.ok) {
                best = std::min(best, qb.residual);
                continue;
            }
            CompositionWitness w;
            w.p = pa.poly.derivative();
            w.q = qb.poly.derivative();
            w.h = H;
            w.integrated = std::make_pair(pa.poly, qb.poly);
            out.kind = OutcomeKind::witness;
            out.residual = verify_witness(a, b, w);
            out.witness = std::move(w);
            return out;
        }
    }
    out.residual = best;
    return out;
}

}  // namespace pwcenter
