#include "pwcenter/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "pwcenter/errors.hpp"
#include "pwcenter/laurent.hpp"
#include "pwcenter/tolerances.hpp"

namespace pwcenter {

TrigPoly::TrigPoly(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs)
    : a0_(a0), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
    const size_t n = std::max(cos_.size(), sin_.size());
    cos_.resize(n, 0.0);
    sin_.resize(n, 0.0);
    trim();
}

TrigPoly TrigPoly::cosine(int k, double amplitude) {
    TrigPoly p;
    p.set_coeff(k, amplitude, 0.0);
    return p;
}

TrigPoly TrigPoly::sine(int k, double amplitude) {
    TrigPoly p;
    p.set_coeff(k, 0.0, amplitude);
    return p;
}

double TrigPoly::cos_coeff(int k) const {
    if (k == 0) return a0_;
    if (k < 1 || k > degree()) return 0.0;
    return cos_[static_cast<size_t>(k - 1)];
}

double TrigPoly::sin_coeff(int k) const {
    if (k < 1 || k > degree()) return 0.0;
    return sin_[static_cast<size_t>(k - 1)];
}

void TrigPoly::set_coeff(int k, double cos_part, double sin_part) {
    if (k == 0) {
        a0_ = cos_part;
        return;
    }
    if (k < 0) return;
    if (k > degree()) {
        cos_.resize(static_cast<size_t>(k), 0.0);
        sin_.resize(static_cast<size_t>(k), 0.0);
    }
    cos_[static_cast<size_t>(k - 1)] = cos_part;
    sin_[static_cast<size_t>(k - 1)] = sin_part;
    trim();
}

bool TrigPoly::is_zero(double eps) const {
    if (std::abs(a0_) > eps) return false;
    for (size_t i = 0; i < cos_.size(); ++i)
        if (std::abs(cos_[i]) > eps || std::abs(sin_[i]) > eps) return false;
    return true;
}

bool TrigPoly::is_constant(double eps) const {
    for (size_t i = 0; i < cos_.size(); ++i)
        if (std::abs(cos_[i]) > eps || std::abs(sin_[i]) > eps) return false;
    return true;
}

double TrigPoly::eval(double t) const {
    // Angle-addition recurrence over harmonics; error grows only linearly in
    // the degree.
    double acc = a0_;
    if (cos_.empty()) return acc;
    const double c1 = std::cos(t), s1 = std::sin(t);
    double ck = 1.0, sk = 0.0;
    for (size_t i = 0; i < cos_.size(); ++i) {
        const double cn = ck * c1 - sk * s1;
        const double sn = sk * c1 + ck * s1;
        ck = cn;
        sk = sn;
        acc += cos_[i] * ck + sin_[i] * sk;
    }
    return acc;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
    a0_ += o.a0_;
    if (o.cos_.size() > cos_.size()) {
        cos_.resize(o.cos_.size(), 0.0);
        sin_.resize(o.sin_.size(), 0.0);
    }
    for (size_t i = 0; i < o.cos_.size(); ++i) {
        cos_[i] += o.cos_[i];
        sin_[i] += o.sin_[i];
    }
    trim();
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
    a0_ -= o.a0_;
    if (o.cos_.size() > cos_.size()) {
        cos_.resize(o.cos_.size(), 0.0);
        sin_.resize(o.sin_.size(), 0.0);
    }
    for (size_t i = 0; i < o.cos_.size(); ++i) {
        cos_[i] -= o.cos_[i];
        sin_[i] -= o.sin_[i];
    }
    trim();
    return *this;
}

TrigPoly& TrigPoly::operator*=(double s) {
    a0_ *= s;
    for (size_t i = 0; i < cos_.size(); ++i) {
        cos_[i] *= s;
        sin_[i] *= s;
    }
    trim();
    return *this;
}

TrigPoly TrigPoly::operator-() const {
    TrigPoly r = *this;
    r *= -1.0;
    return r;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    // Product-to-sum expansion through the exponential basis: convolve the
    // complex harmonic coefficients, then fold back. Exact up to rounding.
    const int na = a.degree(), nb = b.degree();
    const int n = na + nb;
    auto cof = [](const TrigPoly& p, int k) -> std::complex<double> {
        if (k == 0) return {p.a0(), 0.0};
        const int m = k > 0 ? k : -k;
        std::complex<double> w(p.cos_coeff(m) / 2.0, -p.sin_coeff(m) / 2.0);
        return k > 0 ? w : std::conj(w);
    };
    std::vector<std::complex<double>> conv(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        std::complex<double> s{0.0, 0.0};
        for (int i = -na; i <= na; ++i) {
            const int j = k - i;
            if (j < -nb || j > nb) continue;
            s += cof(a, i) * cof(b, j);
        }
        conv[static_cast<size_t>(k)] = s;
    }
    std::vector<double> rc(static_cast<size_t>(n), 0.0), rs(static_cast<size_t>(n), 0.0);
    for (int k = 1; k <= n; ++k) {
        rc[static_cast<size_t>(k - 1)] = 2.0 * conv[static_cast<size_t>(k)].real();
        rs[static_cast<size_t>(k - 1)] = -2.0 * conv[static_cast<size_t>(k)].imag();
    }
    return TrigPoly(conv[0].real(), std::move(rc), std::move(rs));
}

double TrigPoly::max_abs_coeff() const {
    double m = std::abs(a0_);
    for (size_t i = 0; i < cos_.size(); ++i)
        m = std::max(m, std::max(std::abs(cos_[i]), std::abs(sin_[i])));
    return m;
}

void TrigPoly::trim() {
    while (!cos_.empty() && std::abs(cos_.back()) <= tol::coeff_trim &&
           std::abs(sin_.back()) <= tol::coeff_trim) {
        cos_.pop_back();
        sin_.pop_back();
    }
}

double RealPoly::eval(double x) const {
    double acc = 0.0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

RealPoly RealPoly::derivative() const {
    if (c_.size() <= 1) return RealPoly{};
    std::vector<double> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
    return RealPoly(std::move(d));
}

RealPoly RealPoly::antiderivative() const {
    if (c_.empty()) return RealPoly{};
    std::vector<double> d(c_.size() + 1, 0.0);
    for (size_t k = 0; k < c_.size(); ++k) d[k + 1] = c_[k] / static_cast<double>(k + 1);
    return RealPoly(std::move(d));
}

RealPoly& RealPoly::operator*=(double s) {
    for (double& c : c_) c *= s;
    trim();
    return *this;
}

void RealPoly::trim() {
    while (!c_.empty() && std::abs(c_.back()) <= tol::coeff_trim) c_.pop_back();
}

TrigPoly derivative(const TrigPoly& p) {
    const int n = p.degree();
    std::vector<double> dc(static_cast<size_t>(n), 0.0), ds(static_cast<size_t>(n), 0.0);
    for (int k = 1; k <= n; ++k) {
        dc[static_cast<size_t>(k - 1)] = static_cast<double>(k) * p.sin_coeff(k);
        ds[static_cast<size_t>(k - 1)] = -static_cast<double>(k) * p.cos_coeff(k);
    }
    return TrigPoly(0.0, std::move(dc), std::move(ds));
}

DriftTrigPoly antiderivative(const TrigPoly& p) {
    const int n = p.degree();
    std::vector<double> ic(static_cast<size_t>(n), 0.0), is(static_cast<size_t>(n), 0.0);
    double c0 = 0.0;  // constant making eval(0) = 0
    for (int k = 1; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        ic[static_cast<size_t>(k - 1)] = -p.sin_coeff(k) / kk;
        is[static_cast<size_t>(k - 1)] = p.cos_coeff(k) / kk;
        c0 += p.sin_coeff(k) / kk;
    }
    DriftTrigPoly r;
    r.drift = p.a0();
    r.trig = TrigPoly(c0, std::move(ic), std::move(is));
    return r;
}

TrigPoly compose_poly(const RealPoly& P, const TrigPoly& h) {
    if (P.is_zero()) return TrigPoly{};
    TrigPoly acc(P.coeff(P.degree()));
    for (int k = P.degree() - 1; k >= 0; --k) {
        acc = acc * h;
        acc += TrigPoly(P.coeff(k));
    }
    return acc;
}

ZeroList zeros_on_period(const TrigPoly& p) {
    if (p.is_zero(tol::coeff_trim)) throw IdenticallyZeroError("zeros of the zero polynomial");
    if (p.degree() == 0) return {};
    const double scale = p.max_abs_coeff();
    const TrigPoly dp = derivative(p);
    ZeroList out;
    for (const UnitCircleRoot& r : unit_circle_roots(trig_to_laurent(p))) {
        double t = r.t;
        // Newton polish in t for simple roots; centroid angles are already
        // accurate for clusters.
        if (r.multiplicity == 1) {
            for (int it = 0; it < 3; ++it) {
                const double f = p.eval(t), df = dp.eval(t);
                if (std::abs(df) < tol::simple_deriv) break;
                t -= f / df;
            }
            if (t < 0.0) t += two_pi;
            if (t >= two_pi) t -= two_pi;
        }
        if (std::abs(p.eval(t)) > tol::root * std::max(1.0, scale)) continue;
        out.push_back({t, std::abs(dp.eval(t)) > tol::simple_deriv});
    }
    std::sort(out.begin(), out.end(),
              [](const ZeroOnPeriod& l, const ZeroOnPeriod& r) { return l.t < r.t; });
    return out;
}

int fourier_support_gcd(const std::vector<TrigPoly>& ps) {
    int g = 0;
    for (const TrigPoly& p : ps)
        for (int k = 1; k <= p.degree(); ++k)
            if (std::abs(p.cos_coeff(k)) > tol::coeff_trim ||
                std::abs(p.sin_coeff(k)) > tol::coeff_trim)
                g = std::gcd(g, k);
    if (g == 0) throw AllConstantError("frequency gcd of constant inputs");
    return g;
}

TrigPoly time_shift(const TrigPoly& p, double tau) {
    const int n = p.degree();
    std::vector<double> rc(static_cast<size_t>(n), 0.0), rs(static_cast<size_t>(n), 0.0);
    for (int k = 1; k <= n; ++k) {
        const double c = std::cos(k * tau), s = std::sin(k * tau);
        const double ak = p.cos_coeff(k), bk = p.sin_coeff(k);
        rc[static_cast<size_t>(k - 1)] = ak * c + bk * s;
        rs[static_cast<size_t>(k - 1)] = -ak * s + bk * c;
    }
    return TrigPoly(p.a0(), std::move(rc), std::move(rs));
}

TrigPoly index_compress(const TrigPoly& p, int k) {
    TrigPoly r(p.a0());
    for (int j = 1; j * k <= p.degree(); ++j) r.set_coeff(j, p.cos_coeff(j * k), p.sin_coeff(j * k));
    return r;
}

TrigPoly index_expand(const TrigPoly& p, int k) {
    TrigPoly r(p.a0());
    for (int j = 1; j <= p.degree(); ++j) r.set_coeff(j * k, p.cos_coeff(j), p.sin_coeff(j));
    return r;
}

}  // namespace pwcenter
