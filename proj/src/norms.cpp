#include "jameslab/norms.hpp"

#include "jameslab/errors.hpp"
#include "jameslab/rng.hpp"

#include <algorithm>
#include <string>

namespace jameslab {

Real LorentzNorm::weight(int i) const {
    if (i < 1) throw ConfigError("weight index must be >= 1");
    if (kind == Weights::harmonic) return Real::of(1L) / Real::of(static_cast<long>(i));
    if (static_cast<size_t>(i) > w.size())
        throw ConfigError("Lorentz weights shorter than vector (need index " + std::to_string(i) +
                          ")");
    return w[static_cast<size_t>(i) - 1];
}

int LorentzNorm::weight_count() const {
    return kind == Weights::harmonic ? -1 : static_cast<int>(w.size());
}

bool is_lp(const NormSpec& s) { return std::holds_alternative<LpNorm>(s); }

bool is_symmetric(const NormSpec& s) {
    return std::holds_alternative<LpNorm>(s) || std::holds_alternative<LorentzNorm>(s) ||
           std::holds_alternative<SymmetricHullNorm>(s);
}

std::string describe(const NormSpec& s) {
    if (const auto* lp = std::get_if<LpNorm>(&s)) return "lp:p=" + lp->p.get_str();
    if (const auto* lo = std::get_if<LorentzNorm>(&s)) {
        std::string w = lo->kind == LorentzNorm::Weights::harmonic ? "harmonic" : "explicit";
        return "lorentz:w=" + w + ",p=" + lo->p.get_str();
    }
    if (std::holds_alternative<BlockTNorm>(s)) return "blockt";
    return "symhull:blockt";
}

Real lp_eval(const mpq_class& p, const CoeffVec& v) {
    if (p < 1) throw ConfigError("lp_eval needs p >= 1");
    Real s;
    for (const Real& x : v.a) {
        if (x.is_zero()) continue;
        s += pow_q(abs(x), p);
    }
    if (s.is_zero()) return s;
    return pow_q(s, mpq_class(1) / p);
}

Real lorentz_eval(const LorentzNorm& n, const CoeffVec& v) {
    if (n.kind == LorentzNorm::Weights::explicit_list) {
        if (n.w.empty() || n.w.front() != Real::of(1L))
            throw ConfigError("Lorentz weights must start at w_1 = 1");
        for (size_t i = 0; i < n.w.size(); ++i) {
            if (!(n.w[i] > Real())) throw ConfigError("Lorentz weights must be strictly positive");
            if (i > 0 && n.w[i] > n.w[i - 1])
                throw ConfigError("Lorentz weights must be non-increasing");
        }
    }
    if (n.weight_count() >= 0 && v.n() > n.weight_count())
        throw ConfigError("Lorentz weights cover fewer coordinates than the vector");
    CoeffVec sorted = decreasing_rearrangement(v);
    Real s;
    for (int i = 1; i <= sorted.n(); ++i) {
        const Real& x = sorted.at1(i);
        if (x.is_zero()) break; // sorted non-increasing
        s += n.weight(i) * pow_q(x, n.p);
    }
    if (s.is_zero()) return s;
    return pow_q(s, mpq_class(1) / n.p);
}

namespace {

void check_explicit_length(const ConstructionParams& params, int n) {
    if (n > kMaxExplicitCoords)
        throw CapExceeded("explicit vector of length " + std::to_string(n) +
                          " refused; use the counts pathway");
    if (mpz_class(n) > params.capacity())
        throw InsufficientParams("vector extends past block " + std::to_string(params.blocks()));
}

// Blockwise |.|^p sums of an explicit vector, one entry per block touched.
std::vector<Real> block_p_sums(const ConstructionParams& params, const CoeffVec& v) {
    std::vector<Real> sums(static_cast<size_t>(params.blocks()));
    int b = 1;
    for (int i = 1; i <= v.n(); ++i) {
        while (mpz_class(i) > params.cum[static_cast<size_t>(b)]) ++b;
        const Real& x = v.at1(i);
        if (!x.is_zero()) sums[static_cast<size_t>(b) - 1] += pow_q(abs(x), params.p);
    }
    return sums;
}

Real combine_t_norm(const ConstructionParams& params, const Real& flat_r_sum,
                    const std::vector<Real>& block_sums) {
    mpq_class inv_r = mpq_class(1) / params.r;
    Real flat = flat_r_sum.is_zero() ? Real() : pow_q(flat_r_sum, inv_r);
    Real block_r_sum;
    mpq_class r_over_p = params.r / params.p;
    for (size_t b = 0; b < block_sums.size(); ++b) {
        if (block_sums[b].is_zero()) continue;
        block_r_sum += pow_q(params.alpha[b], params.r) * pow_q(block_sums[b], r_over_p);
    }
    Real block = block_r_sum.is_zero() ? Real() : pow_q(block_r_sum, inv_r);
    return max(flat, block);
}

} // namespace

Real t_norm_eval(const ConstructionParams& params, const CoeffVec& v) {
    check_explicit_length(params, v.n());
    Real flat_r_sum;
    for (const Real& x : v.a)
        if (!x.is_zero()) flat_r_sum += pow_q(abs(x), params.r);
    return combine_t_norm(params, flat_r_sum, block_p_sums(params, v));
}

Real t_norm_eval_counts(const ConstructionParams& params, const CountVec& c) {
    std::vector<mpz_class> used(static_cast<size_t>(params.blocks()));
    Real flat_r_sum;
    std::vector<Real> block_sums(static_cast<size_t>(params.blocks()));
    for (const auto& g : c.groups) {
        if (g.block < 1 || g.block > params.blocks())
            throw CapacityError("CountVec group in nonexistent block " + std::to_string(g.block));
        if (g.mult < 0) throw CapacityError("negative multiplicity");
        if (g.mult == 0 || g.value.is_zero()) continue;
        used[static_cast<size_t>(g.block) - 1] += g.mult;
        if (used[static_cast<size_t>(g.block) - 1] > params.k_at(g.block))
            throw CapacityError("block " + std::to_string(g.block) + " capacity exceeded");
        Real m = Real::of(g.mult);
        Real av = abs(g.value);
        flat_r_sum += m * pow_q(av, params.r);
        block_sums[static_cast<size_t>(g.block) - 1] += m * pow_q(av, params.p);
    }
    return combine_t_norm(params, flat_r_sum, block_sums);
}

namespace {

struct DistinctValues {
    std::vector<Real> values; // strictly decreasing, nonzero
    std::vector<long> mults;
    long total = 0;
};

DistinctValues distinct_abs_values(const CoeffVec& v) {
    CoeffVec sorted = decreasing_rearrangement(v);
    DistinctValues d;
    for (int i = 1; i <= sorted.n(); ++i) {
        const Real& x = sorted.at1(i);
        if (x.is_zero()) break;
        if (!d.values.empty() && x == d.values.back()) {
            ++d.mults.back();
        } else {
            d.values.push_back(x);
            d.mults.push_back(1);
        }
        ++d.total;
    }
    return d;
}

struct HullExactSearch {
    const ConstructionParams& params;
    const DistinctValues& dv;
    std::vector<long> caps;                // per-block remaining capacity
    std::vector<Real> value_pow_p;         // value_d^p, precomputed
    std::vector<Real> alpha_pow_r;         // alpha_b^r, precomputed
    std::vector<std::vector<long>> assign; // assign[d][b]
    Real best_r_sum;
    std::vector<std::vector<long>> best_assign;
    bool have_best = false;

    void run() {
        value_pow_p.reserve(dv.values.size());
        for (const Real& v : dv.values) value_pow_p.push_back(pow_q(v, params.p));
        alpha_pow_r.reserve(caps.size());
        for (const Real& a : params.alpha) alpha_pow_r.push_back(pow_q(a, params.r));
        assign.assign(dv.values.size(), std::vector<long>(caps.size(), 0));
        place_value(0);
    }

    void place_value(size_t d) {
        if (d == dv.values.size()) {
            // leaf sums are built fresh from nonnegative terms only
            Real r_sum;
            mpq_class r_over_p = params.r / params.p;
            for (size_t b = 0; b < caps.size(); ++b) {
                Real s;
                for (size_t dd = 0; dd < dv.values.size(); ++dd)
                    if (assign[dd][b] > 0) s += Real::of(assign[dd][b]) * value_pow_p[dd];
                if (!s.is_zero()) r_sum += alpha_pow_r[b] * pow_q(s, r_over_p);
            }
            if (!have_best || r_sum > best_r_sum) {
                best_r_sum = r_sum;
                best_assign = assign;
                have_best = true;
            }
            return;
        }
        distribute(d, 0, dv.mults[d]);
    }

    // Split the remaining copies of value d among blocks b, b+1, ...
    void distribute(size_t d, size_t b, long remaining) {
        if (b + 1 == caps.size()) {
            if (remaining > caps[b]) return;
            add(d, b, remaining);
            place_value(d + 1);
            add(d, b, -remaining);
            return;
        }
        long here_max = std::min(remaining, caps[b]);
        for (long c = 0; c <= here_max; ++c) {
            add(d, b, c);
            distribute(d, b + 1, remaining - c);
            add(d, b, -c);
        }
    }

    void add(size_t d, size_t b, long c) {
        caps[b] -= c;
        assign[d][b] += c;
    }
};

long clamped_cap(const mpz_class& k, long n) {
    return (k > n) ? n : static_cast<long>(k.get_si());
}

} // namespace

double hull_assignment_estimate(const ConstructionParams& params, const CoeffVec& v) {
    DistinctValues dv = distinct_abs_values(v);
    double est = 1.0;
    double L = static_cast<double>(params.blocks());
    for (long m : dv.mults) {
        double ways = 1.0;
        for (int i = 1; i < static_cast<int>(L); ++i)
            ways *= (static_cast<double>(m) + i) / i; // C(m+L-1, L-1)
        est *= ways;
        if (est > 1e18) return est;
    }
    return est;
}

HullEval symmetric_hull_eval(const ConstructionParams& params, const CoeffVec& v, HullMode mode,
                             int exact_cap) {
    check_explicit_length(params, v.n());
    DistinctValues dv = distinct_abs_values(v);

    HullEval out;
    Real flat_r_sum;
    for (size_t d = 0; d < dv.values.size(); ++d)
        flat_r_sum += Real::of(dv.mults[d]) * pow_q(dv.values[d], params.r);
    mpq_class inv_r = mpq_class(1) / params.r;
    Real flat = flat_r_sum.is_zero() ? Real() : pow_q(flat_r_sum, inv_r);

    if (dv.total == 0) {
        out.value = Real();
        out.flat_term_attains = true;
        return out;
    }
    if (mpz_class(dv.total) > params.capacity())
        throw InsufficientParams("multiset does not fit the blocks");

    std::vector<long> caps(static_cast<size_t>(params.blocks()));
    for (size_t b = 0; b < caps.size(); ++b) caps[b] = clamped_cap(params.k[b], dv.total);

    Real best_r_sum;
    std::vector<std::vector<long>> best_assign;

    if (mode == HullMode::exact) {
        if (v.n() > exact_cap)
            throw CapExceeded("exact symmetric hull capped at length " +
                              std::to_string(exact_cap));
        HullExactSearch search{params, dv, caps, {}, {}, {}, {}, {}};
        search.run();
        best_r_sum = search.best_r_sum;
        best_assign = search.best_assign;
    } else {
        // Contiguous runs of the decreasing rearrangement, one per block,
        // blocks visited by decreasing alpha so the largest values meet the
        // largest weights. M[t] = best blockwise r-sum with t values consumed.
        std::vector<size_t> order(caps.size());
        for (size_t b = 0; b < order.size(); ++b) order[b] = b;
        std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
            if (params.alpha[x] != params.alpha[y]) return params.alpha[y] < params.alpha[x];
            return x < y;
        });

        std::vector<Real> expanded;
        expanded.reserve(static_cast<size_t>(dv.total));
        for (size_t d = 0; d < dv.values.size(); ++d)
            for (long c = 0; c < dv.mults[d]; ++c) expanded.push_back(dv.values[d]);
        long n = dv.total;
        std::vector<Real> prefix(static_cast<size_t>(n) + 1);
        for (long t = 0; t < n; ++t)
            prefix[static_cast<size_t>(t) + 1] =
                prefix[static_cast<size_t>(t)] + pow_q(expanded[static_cast<size_t>(t)], params.p);

        const Real minus_one = Real::of(-1L);
        std::vector<Real> M(static_cast<size_t>(n) + 1, minus_one);
        std::vector<std::vector<long>> choice(caps.size(),
                                              std::vector<long>(static_cast<size_t>(n) + 1, -1));
        M[0] = Real();
        mpq_class r_over_p = params.r / params.p;
        for (size_t step = 0; step < order.size(); ++step) {
            size_t b = order[step];
            std::vector<Real> next(static_cast<size_t>(n) + 1, minus_one);
            for (long t = 0; t <= n; ++t) {
                if (M[static_cast<size_t>(t)] < Real()) continue;
                long cmax = std::min(caps[b], n - t);
                for (long c = 0; c <= cmax; ++c) {
                    Real cand = M[static_cast<size_t>(t)];
                    if (c > 0) {
                        Real s = prefix[static_cast<size_t>(t + c)] - prefix[static_cast<size_t>(t)];
                        cand += pow_q(params.alpha[b], params.r) * pow_q(s, r_over_p);
                    }
                    Real& slot = next[static_cast<size_t>(t + c)];
                    if (slot < Real() || cand > slot) {
                        slot = cand;
                        choice[step][static_cast<size_t>(t + c)] = c;
                    }
                }
            }
            M = std::move(next);
        }
        if (M[static_cast<size_t>(n)] < Real())
            throw InsufficientParams("multiset does not fit the blocks");
        best_r_sum = M[static_cast<size_t>(n)];

        // Recover run lengths per visited block, then split the runs back
        // into distinct values.
        std::vector<long> runs(caps.size(), 0); // indexed by visit step
        long t = n;
        for (size_t step = order.size(); step-- > 0;) {
            long c = choice[step][static_cast<size_t>(t)];
            runs[step] = c;
            t -= c;
        }
        best_assign.assign(dv.values.size(), std::vector<long>(caps.size(), 0));
        size_t d = 0;
        long left = dv.values.empty() ? 0 : dv.mults[0];
        for (size_t step = 0; step < order.size(); ++step) {
            long c = runs[step];
            while (c > 0) {
                long take = std::min(c, left);
                best_assign[d][order[step]] += take;
                c -= take;
                left -= take;
                if (left == 0 && d + 1 < dv.values.size()) left = dv.mults[++d];
            }
        }
    }

    Real block = best_r_sum.is_zero() ? Real() : pow_q(best_r_sum, inv_r);
    out.flat_term_attains = !(block > flat);
    out.value = max(flat, block);
    out.distinct = dv.values;
    out.counts.assign(caps.size(), {});
    for (size_t b = 0; b < caps.size(); ++b) {
        out.counts[b].resize(dv.values.size());
        for (size_t d = 0; d < dv.values.size(); ++d)
            out.counts[b][d] = best_assign.empty() ? 0 : best_assign[d][b];
    }
    return out;
}

Real norm_eval(const NormSpec& s, const CoeffVec& v) {
    if (const auto* lp = std::get_if<LpNorm>(&s)) return lp_eval(lp->p, v);
    if (const auto* lo = std::get_if<LorentzNorm>(&s)) return lorentz_eval(*lo, v);
    if (const auto* bt = std::get_if<BlockTNorm>(&s)) return t_norm_eval(*bt->params, v);
    const auto& sh = std::get<SymmetricHullNorm>(s);
    return symmetric_hull_eval(*sh.params, v, HullMode::exact).value;
}

UpperPReport check_upper_p_estimate(const NormSpec& s, const mpq_class& p, int trials,
                                    std::uint64_t seed, double tolerance) {
    UpperPReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.tolerance = tolerance;
    rep.worst_ratio = Real();

    int dmax = 12;
    if (const auto* sh = std::get_if<SymmetricHullNorm>(&s))
        dmax = static_cast<int>(
            std::min<long>(kDefaultHullExactCap, clamped_cap(sh->params->capacity(), dmax)));
    if (const auto* bt = std::get_if<BlockTNorm>(&s))
        dmax = static_cast<int>(clamped_cap(bt->params->capacity(), dmax));

    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(t));
        int d = static_cast<int>(rng.uniform_int(2, dmax));
        int m = static_cast<int>(rng.uniform_int(2, std::min(4, d)));
        std::vector<int> part(static_cast<size_t>(d));
        int kind = static_cast<int>(rng.uniform_int(0, 2));
        std::vector<std::vector<double>> parts(static_cast<size_t>(m),
                                               std::vector<double>(static_cast<size_t>(d), 0.0));
        std::vector<double> total(static_cast<size_t>(d), 0.0);
        bool any = false;
        for (int i = 0; i < d; ++i) {
            part[static_cast<size_t>(i)] = static_cast<int>(rng.uniform_int(0, m - 1));
            double x = 0;
            switch (kind) {
                case 0: x = rng.gaussian(); break;
                case 1: x = rng.uniform01() < 0.5 ? -1.0 : 1.0; break;
                default: x = rng.uniform(-1.0, 1.0); break;
            }
            parts[static_cast<size_t>(part[static_cast<size_t>(i)])][static_cast<size_t>(i)] = x;
            total[static_cast<size_t>(i)] = x;
            if (x != 0.0) any = true;
        }
        if (!any) continue;

        Real denom_p;
        for (const auto& piece : parts) {
            CoeffVec pv = CoeffVec::of(piece);
            if (pv.is_zero()) continue;
            denom_p += pow_q(norm_eval(s, pv), p);
        }
        Real num = norm_eval(s, CoeffVec::of(total));
        Real ratio = num / pow_q(denom_p, mpq_class(1) / p);
        if (ratio > rep.worst_ratio) {
            rep.worst_ratio = ratio;
            rep.worst_parts = parts;
        }
    }
    rep.pass = rep.worst_ratio <= Real::of(1.0) + Real::of(tolerance);
    return rep;
}

} // namespace jameslab
