#include "pwcenter/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "pwcenter/errors.hpp"
#include "pwcenter/tolerances.hpp"

namespace pwcenter {

namespace {

double cabs(const cplx& z) { return std::abs(z); }

}  // namespace

LaurentPoly::LaurentPoly(int min_exp, std::vector<cplx> coeffs)
    : min_(min_exp), coeffs_(std::move(coeffs)) {
    trim();
}

cplx LaurentPoly::coeff(int k) const {
    const int i = k - min_;
    if (coeffs_.empty() || i < 0 || i >= static_cast<int>(coeffs_.size())) return {0.0, 0.0};
    return coeffs_[static_cast<size_t>(i)];
}

void LaurentPoly::set_coeff(int k, cplx value) {
    if (coeffs_.empty()) {
        min_ = k;
        coeffs_.assign(1, value);
        trim();
        return;
    }
    if (k < min_) {
        coeffs_.insert(coeffs_.begin(), static_cast<size_t>(min_ - k), cplx{0.0, 0.0});
        min_ = k;
    } else if (k > max_exp()) {
        coeffs_.resize(static_cast<size_t>(k - min_ + 1), cplx{0.0, 0.0});
    }
    coeffs_[static_cast<size_t>(k - min_)] = value;
    trim();
}

int LaurentPoly::degree() const {
    int d = 0;
    for (int k = min_exp(); k <= max_exp(); ++k)
        if (cabs(coeff(k)) > tol::coeff_trim) d = std::max(d, k >= 0 ? k : -k);
    return d;
}

bool LaurentPoly::is_zero(double eps) const {
    for (const cplx& c : coeffs_)
        if (cabs(c) > eps) return false;
    return true;
}

cplx LaurentPoly::eval(cplx z) const {
    // Horner on the ordinary polynomial part, then the z^min factor.
    cplx acc{0.0, 0.0};
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
    return acc * std::pow(z, min_);
}

void LaurentPoly::trim() {
    while (!coeffs_.empty() && cabs(coeffs_.back()) <= tol::coeff_trim) coeffs_.pop_back();
    while (!coeffs_.empty() && cabs(coeffs_.front()) <= tol::coeff_trim) {
        coeffs_.erase(coeffs_.begin());
        ++min_;
    }
    if (coeffs_.empty()) min_ = 0;
}

LaurentPoly trig_to_laurent(const TrigPoly& p) {
    const int n = p.degree();
    std::vector<cplx> c(static_cast<size_t>(2 * n + 1), cplx{0.0, 0.0});
    c[static_cast<size_t>(n)] = cplx{p.a0(), 0.0};
    for (int k = 1; k <= n; ++k) {
        const cplx w{p.cos_coeff(k) / 2.0, -p.sin_coeff(k) / 2.0};
        c[static_cast<size_t>(n + k)] = w;
        c[static_cast<size_t>(n - k)] = std::conj(w);
    }
    return LaurentPoly(-n, std::move(c));
}

TrigPoly laurent_to_trig(const LaurentPoly& p) {
    const AMembership m = check_A_membership(p);
    if (!m.in_a) throw NotInAError(m.max_asymmetry);
    const int n = std::max(std::abs(p.min_exp()), std::abs(p.max_exp()));
    TrigPoly r(p.coeff(0).real());
    for (int k = 1; k <= n; ++k) {
        // Symmetrize the halves before folding back.
        const cplx w = 0.5 * (p.coeff(k) + std::conj(p.coeff(-k)));
        r.set_coeff(k, 2.0 * w.real(), -2.0 * w.imag());
    }
    return r;
}

AMembership check_A_membership(const LaurentPoly& p) {
    const int n = std::max(std::abs(p.min_exp()), std::abs(p.max_exp()));
    double asym = 0.0;
    for (int k = 1; k <= n; ++k) asym = std::max(asym, cabs(p.coeff(-k) - std::conj(p.coeff(k))));
    return {asym < tol::simple_deriv, asym};
}

std::vector<cplx> all_poly_roots(std::vector<cplx> coeffs) {
    // Normalize scale, strip exact-zero roots, monicize.
    double scale = 0.0;
    for (const cplx& c : coeffs) scale = std::max(scale, cabs(c));
    if (scale == 0.0) return {};
    for (cplx& c : coeffs) c /= scale;
    while (!coeffs.empty() && cabs(coeffs.back()) <= 1e-14) coeffs.pop_back();
    std::vector<cplx> roots;
    while (!coeffs.empty() && cabs(coeffs.front()) <= 1e-14) {
        roots.push_back({0.0, 0.0});
        coeffs.erase(coeffs.begin());
    }
    if (coeffs.size() <= 1) return roots;
    const int d = static_cast<int>(coeffs.size()) - 1;
    const cplx lead = coeffs.back();
    for (cplx& c : coeffs) c /= lead;
    if (d == 1) {
        roots.push_back(-coeffs[0]);
        return roots;
    }

    auto eval = [&](cplx z) {
        cplx acc{0.0, 0.0};
        for (size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
        return acc;
    };

    // Weierstrass simultaneous iteration: start on a circle at the Cauchy
    // bound with an asymmetric phase, cap the iteration count, and restart
    // with a random perturbation on stagnation. Deterministic seed.
    double cauchy = 0.0;
    for (int i = 0; i < d; ++i) cauchy = std::max(cauchy, cabs(coeffs[static_cast<size_t>(i)]));
    const double r0 = 1.0 + cauchy;
    std::vector<cplx> z(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) {
        const double th = 6.283185307179586 * j / d + 0.41;
        z[static_cast<size_t>(j)] = r0 * cplx{std::cos(th), std::sin(th)};
    }
    std::mt19937 rng(0x5eedu);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    double best_err = 1e300;
    int stall = 0;
    for (int iter = 0; iter < 200; ++iter) {
        double step = 0.0;
        for (int j = 0; j < d; ++j) {
            cplx denom{1.0, 0.0};
            for (int k = 0; k < d; ++k)
                if (k != j) denom *= z[static_cast<size_t>(j)] - z[static_cast<size_t>(k)];
            if (cabs(denom) < 1e-300) {
                // Coincident iterates: nudge apart and retry next sweep.
                z[static_cast<size_t>(j)] += 1e-8 * cplx{unit(rng), unit(rng)};
                step = 1.0;
                continue;
            }
            const cplx dz = eval(z[static_cast<size_t>(j)]) / denom;
            z[static_cast<size_t>(j)] -= dz;
            step = std::max(step, cabs(dz) / (1.0 + cabs(z[static_cast<size_t>(j)])));
        }
        if (step < 1e-14) break;
        if (step < 0.9 * best_err) {
            best_err = step;
            stall = 0;
        } else if (++stall > 25) {
            // Stagnation: random relative perturbation, keep iterating.
            for (cplx& zz : z) zz *= 1.0 + 1e-6 * cplx{unit(rng), unit(rng)};
            stall = 0;
            best_err = 1e300;
        }
    }
    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

std::vector<UnitCircleRoot> unit_circle_roots(const LaurentPoly& p) {
    if (p.is_zero(tol::coeff_trim)) throw IdenticallyZeroError("roots of the zero polynomial");
    std::vector<cplx> coeffs;
    for (int k = p.min_exp(); k <= p.max_exp(); ++k) coeffs.push_back(p.coeff(k));
    std::vector<cplx> roots = all_poly_roots(std::move(coeffs));

    // Cluster nearby roots (multiple roots split symmetrically; the centroid
    // restores accuracy), then keep clusters on the unit circle.
    std::vector<bool> used(roots.size(), false);
    std::vector<UnitCircleRoot> out;
    for (size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        std::vector<size_t> cluster{i};
        used[i] = true;
        for (size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j]) continue;
            for (size_t c : cluster) {
                if (cabs(roots[j] - roots[c]) <= tol::cluster) {
                    cluster.push_back(j);
                    used[j] = true;
                    break;
                }
            }
        }
        cplx centroid{0.0, 0.0};
        for (size_t c : cluster) centroid += roots[c];
        centroid /= static_cast<double>(cluster.size());
        if (std::abs(cabs(centroid) - 1.0) >= tol::unit_circle) continue;
        double t = std::atan2(centroid.imag(), centroid.real());
        if (t < 0.0) t += two_pi;
        if (t >= two_pi) t -= two_pi;
        out.push_back({t, static_cast<int>(cluster.size())});
    }
    std::sort(out.begin(), out.end(),
              [](const UnitCircleRoot& l, const UnitCircleRoot& r) { return l.t < r.t; });
    return out;
}

}  // namespace pwcenter
