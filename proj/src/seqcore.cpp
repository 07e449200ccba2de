#include "jameslab/seqcore.hpp"

#include "jameslab/errors.hpp"

#include <algorithm>
#include <string>

namespace jameslab {

CoeffVec CoeffVec::zeros(int n) {
    if (n < 1) throw ConfigError("CoeffVec length must be >= 1");
    return CoeffVec(std::vector<Real>(static_cast<size_t>(n)));
}

CoeffVec CoeffVec::ones(int n) {
    CoeffVec v = zeros(n);
    for (auto& x : v.a) x = Real::of(1L);
    return v;
}

CoeffVec CoeffVec::of(std::initializer_list<double> xs) {
    return of(std::vector<double>(xs));
}

CoeffVec CoeffVec::of(const std::vector<double>& xs) {
    if (xs.empty()) throw ConfigError("CoeffVec length must be >= 1");
    std::vector<Real> v;
    v.reserve(xs.size());
    for (double x : xs) v.push_back(Real::of(x));
    return CoeffVec(std::move(v));
}

bool CoeffVec::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Real& x) { return x.is_zero(); });
}

bool CoeffVec::all_finite() const {
    return std::all_of(a.begin(), a.end(), [](const Real& x) { return x.is_finite(); });
}

CoeffVec decreasing_rearrangement(const CoeffVec& v) {
    std::vector<Real> w;
    w.reserve(v.a.size());
    for (const Real& x : v.a) w.push_back(abs(x));
    std::sort(w.begin(), w.end(), [](const Real& x, const Real& y) { return y < x; });
    return CoeffVec(std::move(w));
}

bool IntervalPartition::valid_for(int n) const {
    if (cuts.size() < 2 || cuts.front() != 1 || cuts.back() != n + 1) return false;
    for (size_t i = 1; i < cuts.size(); ++i)
        if (cuts[i] <= cuts[i - 1]) return false;
    return true;
}

bool GapSelection::valid_for(int n) const {
    if (runs.empty()) return false;
    int prev_end = 0;
    for (auto [p, q] : runs) {
        if (p <= prev_end || q < p || q > n) return false;
        prev_end = q;
    }
    return true;
}

GapSelection to_gap_selection(const IntervalPartition& p) {
    GapSelection g;
    for (int i = 1; i <= p.block_count(); ++i)
        g.runs.emplace_back(p.block_begin(i), p.block_end(i));
    return g;
}

void for_each_interval_partition(int n, int cap,
                                 const std::function<void(const IntervalPartition&)>& fn) {
    if (n < 1) throw ConfigError("partition enumeration needs n >= 1");
    if (n > cap) throw CapExceeded("interval partitions of n=" + std::to_string(n) +
                                   " exceed cap " + std::to_string(cap));
    const std::uint64_t masks = 1ULL << (n - 1);
    IntervalPartition p;
    for (std::uint64_t m = 0; m < masks; ++m) {
        p.cuts.clear();
        p.cuts.push_back(1);
        for (int i = 0; i < n - 1; ++i)
            if (m & (1ULL << i)) p.cuts.push_back(i + 2);
        p.cuts.push_back(n + 1);
        fn(p);
    }
}

std::vector<IntervalPartition> enumerate_interval_partitions(int n, int cap) {
    std::vector<IntervalPartition> out;
    for_each_interval_partition(n, cap, [&](const IntervalPartition& p) { out.push_back(p); });
    return out;
}

namespace {

void gap_rec(int n, int next, GapSelection& cur,
             const std::function<void(const GapSelection&)>& fn) {
    for (int p = next; p <= n; ++p) {
        for (int q = p; q <= n; ++q) {
            cur.runs.emplace_back(p, q);
            fn(cur);
            gap_rec(n, q + 1, cur, fn);
            cur.runs.pop_back();
        }
    }
}

} // namespace

void for_each_gap_selection(int n, int cap, const std::function<void(const GapSelection&)>& fn) {
    if (n < 1) throw ConfigError("gap enumeration needs n >= 1");
    if (n > cap) throw CapExceeded("gap selections of n=" + std::to_string(n) + " exceed cap " +
                                   std::to_string(cap));
    GapSelection cur;
    gap_rec(n, 1, cur, fn);
}

std::vector<GapSelection> enumerate_gap_selections(int n, int cap) {
    std::vector<GapSelection> out;
    for_each_gap_selection(n, cap, [&](const GapSelection& g) { out.push_back(g); });
    return out;
}

CountVec CountVec::single(const Real& value, const mpz_class& mult, int block) {
    CountVec c;
    c.groups.push_back(Group{value, mult, block});
    return c;
}

} // namespace jameslab
