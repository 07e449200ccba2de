#pragma once

// The J(e_i) norm over a pluggable base norm: representatives, the
// interval-partition and gap-selection norm variants, the summing
// functional S, basis projections, and the constructive block-basis
// witness used to compare block sums against the base norm.

#include "jameslab/norms.hpp"
#include "jameslab/seqcore.hpp"

#include <cstdint>
#include <vector>

namespace jameslab {

struct JamesVec {
    CoeffVec coeffs; // against (u_i)
    NormSpec base;
};

/// Block vector of (u_i): coefficients on the support [start, start+len-1].
struct BlockVector {
    int start = 1;
    CoeffVec coeffs;

    int len() const { return coeffs.n(); }
    int end() const { return start + coeffs.n() - 1; } // inclusive
};

/// Sum over blocks of P placed at the block start positions:
/// entry p(i) holds sum_{j=p(i)}^{p(i+1)-1} a_j; length is p(k).
CoeffVec representative(const CoeffVec& x, const IntervalPartition& P);

struct JamesNormResult {
    Real value;
    IntervalPartition witness; // lexicographically smallest optimal cuts
};

/// Max over all interval partitions of base-norm(representative).
JamesNormResult james_norm_exhaustive(const JamesVec& x, int cap = kDefaultPartitionCap);

/// O(n^2) maximization valid exactly when the base norm is power-additive
/// over disjoint representative blocks, i.e. l^p. Throws on other bases.
Real james_norm_dp(const JamesVec& x);

/// dp for l^p bases, exhaustive otherwise.
Real james_norm(const JamesVec& x, int cap = kDefaultPartitionCap);

/// Sup over gap selections of the base norm of the run-sum aggregates.
/// l^p bases use an O(n^2) skip-allowing recursion; other bases enumerate.
Real james_norm_gap(const JamesVec& x, int cap = kDefaultGapCap);

/// S(sum a_i u_i) = sum a_i.
Real s_functional(const JamesVec& x);
Real s_functional(const CoeffVec& x);

/// First m coefficients kept, rest zeroed; m = 0 gives the zero vector.
JamesVec basis_projection(const JamesVec& x, int m);

struct LemmaWitness {
    std::vector<CoeffVec> w_blocks;   // one representative per input block
    std::vector<Real> w_base_norms;   // ||w_m|| in the base norm
    std::vector<Real> v_james_norms;  // ||v_m|| in the J norm
    Real x_james_norm;                // ||sum v_i||_J
    Real w_sum_base_norm;             // base norm of sum w_m
    Real c_observed;                  // x_james_norm / w_sum_base_norm
    std::vector<int> refined_cuts;    // the merged cut sequence (q(i))
    bool per_block_ok = false;        // every ||w_m|| <= ||v_m||_J
};

/// Follows the block-basis construction: optimal partition for sum v_i,
/// refined by the block boundaries n(i), regrouped into one representative
/// w_m per block. Requires every block sum to be exactly zero.
LemmaWitness norm_lemma_witness(const std::vector<BlockVector>& blocks, const NormSpec& base,
                                int cap = kDefaultPartitionCap);

/// Seeded consecutive block system with small integer coefficients and
/// exactly-zero block sums, total length <= max_len.
std::vector<BlockVector> random_zero_sum_blocks(std::uint64_t seed, std::uint64_t index,
                                                int max_len);

} // namespace jameslab
