#pragma once

// Empirical domination constants between finite basis sections,
// right-dominance profiling, and the (u_{2i-1} - u_{2i}) vs (e_{2i})
// comparison. Everything here reports witness-backed lower bounds; a sup
// over a nonconvex ratio is never claimed attained.

#include "jameslab/james.hpp"
#include "jameslab/norms.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace jameslab {

struct DominationReport {
    int dim = 0;
    Real constant_lb; // recomputed from the witness at report time
    CoeffVec witness;
    int samples = 0;
    std::uint64_t seed = 0;
};

/// Max over sampled and ascended vectors of ||a||_to / ||a||_from.
DominationReport domination_constant_lb(const NormSpec& from, const NormSpec& to, int dim,
                                        int budget, std::uint64_t seed);

struct RightDominanceReport {
    Real worst_ratio;
    int samples = 0;
    bool exhaustive_systems = false;
    std::uint64_t seed = 0;
    std::vector<int> worst_m, worst_n;
    std::vector<double> worst_values;
};

/// Samples interlaced index systems m(i) <= n(i) < m(i+1) and coefficient
/// vectors; reports the worst ratio ||sum a_i x_{m(i)}|| / ||sum a_i x_{n(i)}||.
RightDominanceReport right_dominance_profile(const NormSpec& norm, int dim, int samples,
                                             std::uint64_t seed);

struct PairEquivalenceReport {
    Real c_low, c_high;
    std::vector<double> arg_low, arg_high; // the b vectors
    int samples = 0;
    std::uint64_t seed = 0;
};

/// Ratio ||sum b_i (u_{2i-1} - u_{2i})||_J / ||sum b_i e_{2i}|| over seeded
/// b plus all sign patterns; returns min and max with witnesses.
PairEquivalenceReport pair_equivalence_report(const NormSpec& base, int m,
                                              int cap = kDefaultPartitionCap, int samples = 50,
                                              std::uint64_t seed = 1);

} // namespace jameslab
