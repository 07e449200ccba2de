#pragma once

// Dual-norm evaluation and bounding: exact l^p duals, certified upper
// bounds from Hoelder-style relaxations, and witness-backed lower bounds
// from multi-start ascent over the primal unit sphere.

#include "jameslab/james.hpp"
#include "jameslab/norms.hpp"

#include <cstdint>
#include <string>

namespace jameslab {

/// Functional against the biorthogonal system, plus a real multiple of the
/// summing functional S (J duals only; base-space duals require s_coeff 0).
struct Functional {
    CoeffVec coeffs;
    Real s_coeff;

    static Functional coordinates(CoeffVec c);
    static Functional summing(const Real& s = Real::of(1L));
};

/// Primal space the functional acts on: a base norm or J over it.
struct PrimalSpace {
    NormSpec base;
    bool james = false;
};

/// <f, x> = sum f_i x_i + s_coeff * S(x).
Real pair_with(const Functional& f, const CoeffVec& x);

/// ||f||_{p'} for p > 1. Requires s_coeff = 0.
Real lp_dual_eval(const mpq_class& p, const Functional& f);

/// sup_i |f_i| — the l^1 dual, kept separate for oracle tests.
Real sup_dual_eval(const Functional& f);

struct DualBound {
    Real lower;             // pairing of the witness, a true certificate
    Real upper;             // min over the applicable relaxation family
    bool upper_finite = false;
    bool tight = false;     // lower and upper agree to tolerance
    CoeffVec witness;       // primal-norm-normalized argmax candidate
    std::string certificate; // which relaxation produced the upper bound
};

/// Lower bound via multi-start ascent (candidates normalized by their
/// computed primal norm, so optimizer quality affects tightness only);
/// upper bound via the certified relaxation for the space at hand.
DualBound dual_bounds(const PrimalSpace& space, const Functional& f, int budget,
                      std::uint64_t seed, int dim = 0);

} // namespace jameslab
