#pragma once

#include <cstddef>
#include <vector>

// Real trigonometric polynomials on a fixed 2*pi period, their drifted
// antiderivatives, and real polynomials in one variable. All coefficient
// vectors are dense and trailing harmonics below tol::coeff_trim are trimmed,
// so degree() reflects numerically present content.
namespace pwcenter {

inline constexpr double two_pi = 6.283185307179586476925286766559;

// One zero of a trig polynomial in [0, 2*pi). simple <=> |p'(t)| clears the
// simplicity threshold.
struct ZeroOnPeriod {
    double t = 0.0;
    bool simple = true;
};
using ZeroList = std::vector<ZeroOnPeriod>;

class TrigPoly {
  public:
    TrigPoly() = default;
    explicit TrigPoly(double constant) : a0_(constant) {}
    TrigPoly(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);

    static TrigPoly cosine(int k, double amplitude = 1.0);
    static TrigPoly sine(int k, double amplitude = 1.0);

    double a0() const { return a0_; }
    // Harmonic accessors; k = 0 maps to the constant, out-of-range is 0.
    double cos_coeff(int k) const;
    double sin_coeff(int k) const;
    void set_coeff(int k, double cos_part, double sin_part);

    int degree() const { return static_cast<int>(cos_.size()); }
    bool is_zero(double eps) const;
    bool is_constant(double eps) const;

    double eval(double t) const;

    TrigPoly& operator+=(const TrigPoly& o);
    TrigPoly& operator-=(const TrigPoly& o);
    TrigPoly& operator*=(double s);

    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend TrigPoly operator*(TrigPoly a, double s) { return a *= s; }
    friend TrigPoly operator*(double s, TrigPoly a) { return a *= s; }
    TrigPoly operator-() const;
    // Product via product-to-sum expansion; degrees add.
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);

    // Max absolute coefficient (constant included).
    double max_abs_coeff() const;

    void trim();

  private:
    double a0_ = 0.0;
    std::vector<double> cos_;  // cos_[k-1] multiplies cos(k t)
    std::vector<double> sin_;  // sin_[k-1] multiplies sin(k t)
};

// Trig polynomial plus a secular term drift * t; the antiderivative of a
// TrigPoly with nonzero mean lives here. Antiderivatives satisfy eval(0) = 0.
struct DriftTrigPoly {
    double drift = 0.0;
    TrigPoly trig;

    double eval(double t) const { return drift * t + trig.eval(t); }
    bool is_trig(double eps) const { return drift > -eps && drift < eps; }
};

// Dense real polynomial, coefficients ascending by power.
class RealPoly {
  public:
    RealPoly() = default;
    explicit RealPoly(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }

    int degree() const { return c_.empty() ? 0 : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    double coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)] : 0.0;
    }
    const std::vector<double>& coeffs() const { return c_; }

    double eval(double x) const;
    RealPoly derivative() const;
    // Antiderivative with zero constant term.
    RealPoly antiderivative() const;

    RealPoly& operator*=(double s);

  private:
    void trim();
    std::vector<double> c_;
};

TrigPoly derivative(const TrigPoly& p);
// Exact term-by-term antiderivative; drift carries the mean, eval(0) = 0.
DriftTrigPoly antiderivative(const TrigPoly& p);

// P(h) evaluated by Horner in the trig-polynomial ring.
TrigPoly compose_poly(const RealPoly& P, const TrigPoly& h);

// All zeros in [0, 2*pi), ascending, via unit-circle roots of the Laurent
// form. Throws IdenticallyZeroError when every coefficient is below trim.
ZeroList zeros_on_period(const TrigPoly& p);

// Largest k such that every nonconstant input has Fourier support inside
// k * Z. Throws AllConstantError when no input carries a harmonic.
int fourier_support_gcd(const std::vector<TrigPoly>& ps);

// p(t + tau) as a TrigPoly.
TrigPoly time_shift(const TrigPoly& p, double tau);

// Support compression/expansion for frequency-factored polynomials:
// compress maps harmonic k*j -> j (requires support inside k * Z),
// expand maps j -> k*j.
TrigPoly index_compress(const TrigPoly& p, int k);
TrigPoly index_expand(const TrigPoly& p, int k);

}  // namespace pwcenter
