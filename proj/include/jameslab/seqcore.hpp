#pragma once

// Coefficient vectors, interval partitions and gap selections over [1, n]:
// the shared vocabulary of the norm machinery. Indices are 1-based to match
// the usual basis notation; storage is 0-based.

#include "jameslab/real.hpp"

#include <gmpxx.h>

#include <functional>
#include <initializer_list>
#include <utility>
#include <vector>

namespace jameslab {

inline constexpr int kDefaultPartitionCap = 20;
inline constexpr int kDefaultGapCap = 16;

/// Finitely supported coefficient vector a_1..a_n. Trailing zeros are kept
/// and significant for indexing.
struct CoeffVec {
    std::vector<Real> a;

    CoeffVec() = default;
    explicit CoeffVec(std::vector<Real> v) : a(std::move(v)) {}

    static CoeffVec zeros(int n);
    static CoeffVec ones(int n);
    static CoeffVec of(std::initializer_list<double> xs);
    static CoeffVec of(const std::vector<double>& xs);

    int n() const { return static_cast<int>(a.size()); }
    const Real& at1(int i) const { return a[static_cast<size_t>(i) - 1]; }
    Real& at1(int i) { return a[static_cast<size_t>(i) - 1]; }
    bool is_zero() const;
    bool all_finite() const;
};

/// |entries| sorted non-increasing.
CoeffVec decreasing_rearrangement(const CoeffVec& v);

/// Cuts 1 = p(1) < p(2) < ... < p(k+1) = n+1; block i is [p(i), p(i+1)-1].
struct IntervalPartition {
    std::vector<int> cuts;

    int block_count() const { return static_cast<int>(cuts.size()) - 1; }
    int block_begin(int i) const { return cuts[static_cast<size_t>(i) - 1]; }
    int block_end(int i) const { return cuts[static_cast<size_t>(i)] - 1; }
    bool valid_for(int n) const;
};

/// Disjoint ordered runs 1 <= p(1) <= q(1) < p(2) <= q(2) < ... <= n.
struct GapSelection {
    std::vector<std::pair<int, int>> runs;

    bool valid_for(int n) const;
};

/// Every interval partition is a gap selection with q(i) = p(i+1)-1.
GapSelection to_gap_selection(const IntervalPartition& p);

/// Visits all 2^(n-1) interval partitions of [1, n], each exactly once.
void for_each_interval_partition(int n, int cap,
                                 const std::function<void(const IntervalPartition&)>& fn);
std::vector<IntervalPartition> enumerate_interval_partitions(int n, int cap = kDefaultPartitionCap);

/// Visits every nonempty gap selection on [1, n], each exactly once.
void for_each_gap_selection(int n, int cap, const std::function<void(const GapSelection&)>& fn);
std::vector<GapSelection> enumerate_gap_selections(int n, int cap = kDefaultGapCap);

/// Compressed vector: groups of (value, multiplicity, block index), so the
/// norm of sums of a million basis vectors never materializes coordinates.
struct CountVec {
    struct Group {
        Real value;
        mpz_class mult;
        int block = 1;
    };
    std::vector<Group> groups;

    static CountVec single(const Real& value, const mpz_class& mult, int block);
};

} // namespace jameslab
