#pragma once

// Generation and verification of the block construction: minimal k-sequences
// under the growth inequalities, the box-maximization lemma checked by
// vertex enumeration, the norm of sums of basis vectors via exact count
// optimization, and the dual estimates around them.

#include "jameslab/params.hpp"
#include "jameslab/real.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace jameslab {

/// Minimal integers k_1 < k_2 < ... (each the least satisfying both growth
/// inequalities given its predecessors), with the alpha weights attached.
ConstructionParams generate_k_sequence(const mpq_class& p, const mpq_class& r, int L,
                                       long precision_bits = 128);

struct FeasibilityEntry {
    int n = 0;
    std::string inequality; // "growth-sum" (eq. coupling s_n, k_n) or "growth-ratio"
    bool pass = false;
    bool exact = false;     // exact integer reduction vs directed-rounding interval
    std::string lhs, rhs, margin;
};

struct FeasibilityReport {
    std::vector<FeasibilityEntry> entries;
    bool pass = true;
};

/// Re-verifies every inequality; exact rational reduction whenever the
/// exponents clear, directed-rounding intervals otherwise (a PASS then
/// requires the whole interval on the correct side).
FeasibilityReport check_feasibility(const ConstructionParams& params);

struct CalcInstance {
    int l = 1;
    mpz_class j;
};

struct CalcWindow {
    mpz_class lo, hi;
    bool empty() const { return lo > hi; }
};

/// Integer window of admissible j for level l.
CalcWindow calc_window(const ConstructionParams& params, int l);
bool calc_admissible(const ConstructionParams& params, const CalcInstance& inst);

struct CalcMaxResult {
    Real max_value;
    std::vector<mpz_class> maximizer; // x_1..x_l
    Real bound;                       // j/2 + 2
    bool pass = false;
};

/// Maximizes sum alpha_i^r x_i^{r/p} over the admissible box by vertex
/// enumeration (each term is convex, so the max sits at a vertex).
CalcMaxResult calc_lemma_max(const ConstructionParams& params, const CalcInstance& inst);

/// Projected-gradient interior search; a falsification probe that must
/// never exceed the vertex maximum.
Real calc_interior_probe(const ConstructionParams& params, const CalcInstance& inst, int iters,
                         std::uint64_t seed);

struct OnesNormResult {
    Real value;
    Real flat_term;
    Real block_term;
    bool flat_attains = false;
    std::vector<mpz_class> counts; // optimal j_i, sum = j
};

/// ||sum_{i<=j} e_i|| for the symmetric-hull norm: exact maximization over
/// integer counts 0 <= j_i <= k_i with sum j_i = j (optimum at a
/// near-vertex, all counts at a bound except at most one).
OnesNormResult ones_norm(const ConstructionParams& params, const mpz_class& j);

struct GrowthRow {
    mpz_class j;
    Real norm;
    Real ratio;          // norm / j^{1/r}
    Real ratio_r;        // norm^r / j
    Real block_ratio_r;  // block_term^r / j
    Real proof_bound_r;  // (j/2 + 2 + 1) / j
    bool in_window = false;
    int window_l = 0;
    bool pass = true;
};

struct GrowthReport {
    std::vector<GrowthRow> rows;
    Real worst_ratio;
    bool pass = true;
};

/// Runs ones_norm over a j-range; in-window rows assert the proof-side
/// bound on the block term, out-of-window rows are flagged and recorded.
GrowthReport example_growth_suite(const ConstructionParams& params,
                                  const std::vector<mpz_class>& js);

struct SqrtNkReport {
    int n = 0;
    Real ones_value;
    Real bound;           // sqrt(n k_n)
    Real block_candidate; // alpha_n k_n^{1/p}, the all-in-block-n assignment
    bool holds = false;
    bool equality = false;
};

/// ||sum_{i<=k_n} e_i|| >= sqrt(n k_n), witnessed without materializing
/// coordinates.
SqrtNkReport sqrt_nk_lower_bound(const ConstructionParams& params, int n);

struct DualOnesReport {
    int n = 0;
    Real upper;  // k_n^{1/p'} / alpha_n = sqrt(k_n / n)
    Real lower;  // k_n / ||sum_{i<=k_n} e_i||
    bool equality = false;
    bool pairing_ok = false; // k_n <= upper * ||sum e_i||
};

/// Certified dual bound for sum_{i<=k_n} e'_i with the matching witness.
DualOnesReport dual_ones_upper_bound(const ConstructionParams& params, int n);

struct NonDomRow {
    mpz_class j;
    Real j_pow_inv_r_conj; // j^{1/r'}
    Real j_pow_inv_p;      // j^{1/p}
    Real pairing_lower;    // j / ||sum_{i<=j} e_i||
};

struct NonDomRatioRow {
    int m = 0;
    Real ratio; // ||sum_{i<=k_m} e_i|| / sqrt(k_m/m), expected ~ m
};

struct NonDominationReport {
    std::vector<NonDomRow> growth;
    std::vector<NonDomRatioRow> ratios;
};

/// Growth tables demonstrating the two non-domination trends at the
/// available finite scales.
NonDominationReport dual_nondomination_report(const ConstructionParams& params, int n);

/// alpha_n^r k_n^{r/p} = n^{r/2} k_n^{r/2}, checked by exact rational
/// exponent reduction.
bool alpha_identity_exact(const ConstructionParams& params, int n);

} // namespace jameslab
