#pragma once

#include <complex>
#include <vector>

#include "pwcenter/trigpoly.hpp"

// Laurent polynomials on the unit circle z = exp(i t) and the bijection with
// real trig polynomials: the real subring consists of Laurent polynomials
// with coeff(-k) = conj(coeff(k)); the constant coefficient's imaginary part
// is canonicalized to zero.
namespace pwcenter {

using cplx = std::complex<double>;

class LaurentPoly {
  public:
    LaurentPoly() = default;
    // coeffs[i] multiplies z^(min_exp + i).
    LaurentPoly(int min_exp, std::vector<cplx> coeffs);

    cplx coeff(int k) const;
    void set_coeff(int k, cplx value);

    int min_exp() const { return coeffs_.empty() ? 0 : min_; }
    int max_exp() const { return coeffs_.empty() ? 0 : min_ + static_cast<int>(coeffs_.size()) - 1; }
    // max |k| over nonzero coefficients.
    int degree() const;
    bool is_zero(double eps) const;

    cplx eval(cplx z) const;

    void trim();

  private:
    int min_ = 0;
    std::vector<cplx> coeffs_;
};

// Conjugate-symmetry report: in_a <=> max_asymmetry below tolerance, where
// max_asymmetry = max over k >= 1 of |coeff(-k) - conj(coeff(k))|.
struct AMembership {
    bool in_a = false;
    double max_asymmetry = 0.0;
};

LaurentPoly trig_to_laurent(const TrigPoly& p);

// Inverse conversion; throws NotInAError when symmetry fails. Off-symmetric
// halves are averaged, Im of the constant coefficient is dropped.
TrigPoly laurent_to_trig(const LaurentPoly& p);

AMembership check_A_membership(const LaurentPoly& p);

// One root cluster on the unit circle: angle in [0, 2*pi) and multiplicity.
struct UnitCircleRoot {
    double t = 0.0;
    int multiplicity = 1;
};

// All roots with | |z|-1 | below tolerance, by simultaneous iteration on
// z^s * p (no eigenvalue backend); clustered roots merge into one entry with
// centroid angle. Ascending in t.
std::vector<UnitCircleRoot> unit_circle_roots(const LaurentPoly& p);

// All complex roots of an ordinary polynomial (ascending coefficients) by
// Weierstrass simultaneous iteration with stagnation restarts. Exposed for
// tests; unit_circle_roots is the production entry point.
std::vector<cplx> all_poly_roots(std::vector<cplx> coeffs);

}  // namespace pwcenter
