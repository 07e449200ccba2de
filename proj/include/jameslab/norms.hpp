#pragma once

// Base norms over coefficient vectors: l^p, Lorentz d(w,p), the block
// t-norm, and its symmetric hull (sup over permutations). All four are
// 1-unconditional lattice norms.

#include "jameslab/params.hpp"
#include "jameslab/seqcore.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace jameslab {

inline constexpr int kDefaultHullExactCap = 8;
inline constexpr long kMaxExplicitCoords = 100000;

struct LpNorm {
    mpq_class p; // p >= 1; p = 1 permitted for oracle tests
};

struct LorentzNorm {
    enum class Weights { harmonic, explicit_list };
    Weights kind = Weights::harmonic;
    std::vector<Real> w; // used when kind == explicit_list; w_1 = 1, non-increasing
    mpq_class p;

    Real weight(int i) const; // 1-based
    int weight_count() const; // -1 when unbounded (harmonic)
};

struct BlockTNorm {
    std::shared_ptr<const ConstructionParams> params;
};

struct SymmetricHullNorm {
    std::shared_ptr<const ConstructionParams> params; // inner norm is BlockT
};

using NormSpec = std::variant<LpNorm, LorentzNorm, BlockTNorm, SymmetricHullNorm>;

bool is_lp(const NormSpec& s);
bool is_symmetric(const NormSpec& s); // value depends only on the coefficient multiset
std::string describe(const NormSpec& s);

/// (sum |a_i|^p)^(1/p).
Real lp_eval(const mpq_class& p, const CoeffVec& v);

/// (sum w_i (a*_i)^p)^(1/p) on the decreasing rearrangement a*.
Real lorentz_eval(const LorentzNorm& n, const CoeffVec& v);

/// max of the flat l^r norm and the l^r norm of the alpha-weighted
/// blockwise l^p norms; coordinate i lives in the block containing i.
Real t_norm_eval(const ConstructionParams& params, const CoeffVec& v);

/// Same value as t_norm_eval on the expanded vector, computed from
/// multiplicities.
Real t_norm_eval_counts(const ConstructionParams& params, const CountVec& c);

enum class HullMode { exact, dp };

struct HullEval {
    Real value;
    bool flat_term_attains = false;
    // witness: distinct |values| (decreasing) and per-block multiplicities
    std::vector<Real> distinct;
    std::vector<std::vector<mpz_class>> counts; // counts[b][d], block b+1
};

/// Sup over assignments of the multiset {|a_i|} into blocks of the t-norm
/// value. exact: exhaustive multiset-composition enumeration (deduplicated
/// by counting); dp: best contiguous-run assignment of the decreasing
/// rearrangement, a lower bound on exact (equality is an empirically tested
/// conjecture, never assumed).
HullEval symmetric_hull_eval(const ConstructionParams& params, const CoeffVec& v, HullMode mode,
                             int exact_cap = kDefaultHullExactCap);

/// Upper estimate of the number of assignments the exact hull enumeration
/// would visit (deduplicated values make constant-heavy vectors cheap).
double hull_assignment_estimate(const ConstructionParams& params, const CoeffVec& v);

/// Dispatch on the NormSpec variant (hull uses exact mode under the cap).
Real norm_eval(const NormSpec& s, const CoeffVec& v);

struct UpperPReport {
    Real worst_ratio;
    int trials = 0;
    std::uint64_t seed = 0;
    double tolerance = 0;
    bool pass = false;
    std::vector<std::vector<double>> worst_parts; // disjoint pieces of the worst trial
};

/// Samples disjointly supported x_1..x_m and reports the worst
/// ||sum x_i|| / (sum ||x_i||^p)^(1/p).
UpperPReport check_upper_p_estimate(const NormSpec& s, const mpq_class& p, int trials,
                                    std::uint64_t seed, double tolerance = 1e-12);

} // namespace jameslab
