#pragma once

#include <stdexcept>
#include <string>

// Domain errors thrown by the analysis pipeline. Expected search failures
// (no decomposition, no solution) are result values, not exceptions.
namespace pwcenter {

// A polynomial required to be nonzero has all coefficients below tolerance.
struct IdenticallyZeroError : std::domain_error {
    using std::domain_error::domain_error;
};

// Frequency-gcd requested but every input is constant.
struct AllConstantError : std::domain_error {
    using std::domain_error::domain_error;
};

// Laurent polynomial lacks the conjugate symmetry of real trig polynomials.
struct NotInAError : std::domain_error {
    explicit NotInAError(double asymmetry)
        : std::domain_error("laurent polynomial is not conjugate-symmetric, asymmetry = " +
                            std::to_string(asymmetry)),
          asymmetry(asymmetry) {}
    double asymmetry;
};

// Witness construction with a constant inner function.
struct ConstantInnerError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Decomposition search invoked with both inputs identically zero.
struct BothZeroError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Crossing hit a point where both b and b' vanish to tolerance, so the
// continuation sign of |x| cannot be decided.
struct TangencyAmbiguousError : std::runtime_error {
    explicit TangencyAmbiguousError(double t)
        : std::runtime_error("ambiguous tangency at t = " + std::to_string(t)), t(t) {}
    double t;
};

// b has a non-simple zero; the band machinery assumes simple zeros.
struct NonSimpleBError : std::domain_error {
    using std::domain_error::domain_error;
};

// Zero counts disagree between samples of one band even after rescans.
struct InconsistentBandError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No band with exactly two simple zeros exists.
struct NoTwoZeroBandError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pwcenter
