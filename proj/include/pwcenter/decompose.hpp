#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pwcenter/trigpoly.hpp"

// Composition structure: search for real polynomials p, q and a trig
// polynomial h with a = p(h) h' and b = q(h) h', the algebraic certificate
// that every solution of x' = a(t)|x| + b(t) returns to its initial value.
namespace pwcenter {

struct CompositionWitness {
    RealPoly p;
    RealPoly q;
    TrigPoly h;
    // Antiderivatives (P, Q) with A = P(h), B = Q(h) when produced by the
    // search; absent for hand-built witnesses.
    std::optional<std::pair<RealPoly, RealPoly>> integrated;
};

enum class OutcomeKind { witness, frequency_factor, none };

struct DecompositionOutcome {
    OutcomeKind kind = OutcomeKind::none;
    std::optional<CompositionWitness> witness;
    // Common index factor of the Fourier supports; 1 when none.
    int frequency_factor = 1;
    // Recomposition residual for a witness, otherwise the best (smallest)
    // residual seen across failed candidates.
    double residual = 0.0;
};

// (a, b) from a witness: a = p(h) h', b = q(h) h', computed as derivatives of
// P(h), Q(h) so both means vanish identically. Throws ConstantInnerError when
// h is constant.
struct ConstructedPair {
    TrigPoly a;
    TrigPoly b;
};
ConstructedPair construct_from_witness(const CompositionWitness& w);

// Max coefficient deviation between (a, b) and the recomposition from w.
double verify_witness(const TrigPoly& a, const TrigPoly& b, const CompositionWitness& w);

// Least-squares Fourier matching of F = sum_j p_j H^j with m = deg F / deg H.
// ok <=> residual (max coefficient deviation) below the witness tolerance.
// Non-divisible degrees and degenerate systems report ok = false.
struct OuterSolve {
    bool ok = false;
    RealPoly poly;
    double residual = 0.0;
};
OuterSolve solve_outer_poly(const TrigPoly& F, const TrigPoly& H);

// Candidate inner factors H of degree d with A = P(H), P real of degree
// deg A / d and leading coefficient +1 or -1, H with zero constant term.
// Coefficient peeling in Laurent form enumerates every leading-coefficient
// root; candidates failing conjugate symmetry or the outer solve are pruned.
// Requires d >= 1 and d | deg A.
std::vector<TrigPoly> peel_candidates(const TrigPoly& A, int d);

// Full search pipeline: secular-drift gate, frequency-factor compression,
// zero special cases, then divisor-descending peel of A with B solved
// against each candidate. Throws BothZeroError when a and b are both zero.
DecompositionOutcome find_common_witness(const TrigPoly& a, const TrigPoly& b);

}  // namespace pwcenter
