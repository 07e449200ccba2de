#include "jameslab/james.hpp"

#include "jameslab/errors.hpp"
#include "jameslab/rng.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace jameslab {

CoeffVec representative(const CoeffVec& x, const IntervalPartition& P) {
    if (!P.valid_for(x.n()))
        throw ConfigError("partition does not tile [1, " + std::to_string(x.n()) + "]");
    CoeffVec rep = CoeffVec::zeros(P.cuts[P.cuts.size() - 2]);
    for (int i = 1; i <= P.block_count(); ++i) {
        Real s;
        for (int j = P.block_begin(i); j <= P.block_end(i); ++j) s += x.at1(j);
        rep.at1(P.block_begin(i)) = s;
    }
    return rep;
}

namespace {

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Table of |a_i + ... + a_j|^p for 1 <= i <= j <= n.
std::vector<std::vector<Real>> interval_power_table(const CoeffVec& x, const mpq_class& p) {
    int n = x.n();
    std::vector<std::vector<Real>> W(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        W[static_cast<size_t>(i) - 1].resize(static_cast<size_t>(n - i + 1));
        Real s;
        for (int j = i; j <= n; ++j) {
            s += x.at1(j);
            Real a = abs(s);
            W[static_cast<size_t>(i) - 1][static_cast<size_t>(j - i)] =
                a.is_zero() ? Real() : pow_q(a, p);
        }
    }
    return W;
}

} // namespace

JamesNormResult james_norm_exhaustive(const JamesVec& x, int cap) {
    JamesNormResult best;
    best.value = Real();
    if (x.coeffs.n() == 0 || x.coeffs.is_zero()) {
        best.witness.cuts = {1, x.coeffs.n() + 1};
        if (x.coeffs.n() == 0) best.witness.cuts = {1};
        return best;
    }

    bool have = false;
    auto consider = [&](const Real& value, const IntervalPartition& P) {
        if (!have || value > best.value ||
            (value == best.value && lex_less(P.cuts, best.witness.cuts))) {
            best.value = value;
            best.witness = P;
            have = true;
        }
    };

    if (const auto* lp = std::get_if<LpNorm>(&x.base)) {
        auto W = interval_power_table(x.coeffs, lp->p);
        Real best_psum;
        for_each_interval_partition(x.coeffs.n(), cap, [&](const IntervalPartition& P) {
            Real s;
            for (int i = 1; i <= P.block_count(); ++i)
                s += W[static_cast<size_t>(P.block_begin(i)) - 1]
                      [static_cast<size_t>(P.block_end(i) - P.block_begin(i))];
            if (!have || s > best_psum ||
                (s == best_psum && lex_less(P.cuts, best.witness.cuts))) {
                best_psum = s;
                best.witness = P;
                have = true;
            }
        });
        best.value = best_psum.is_zero() ? Real() : pow_q(best_psum, mpq_class(1) / lp->p);
        return best;
    }

    for_each_interval_partition(x.coeffs.n(), cap, [&](const IntervalPartition& P) {
        consider(norm_eval(x.base, representative(x.coeffs, P)), P);
    });
    return best;
}

Real james_norm_dp(const JamesVec& x) {
    const auto* lp = std::get_if<LpNorm>(&x.base);
    if (!lp) throw ConfigError("james_norm_dp supports l^p bases only (unsupported-base)");
    int n = x.coeffs.n();
    if (n == 0 || x.coeffs.is_zero()) return Real();
    auto W = interval_power_table(x.coeffs, lp->p);
    // M[m] = max over partitions of [1, m] of the sum of block powers.
    std::vector<Real> M(static_cast<size_t>(n) + 1);
    for (int m = 1; m <= n; ++m) {
        Real best = W[0][static_cast<size_t>(m) - 1]; // single block [1, m]
        for (int t = 1; t < m; ++t) {
            Real cand =
                M[static_cast<size_t>(t)] + W[static_cast<size_t>(t)][static_cast<size_t>(m - t - 1)];
            if (cand > best) best = cand;
        }
        M[static_cast<size_t>(m)] = best;
    }
    return M[static_cast<size_t>(n)].is_zero() ? Real()
                                               : pow_q(M[static_cast<size_t>(n)], mpq_class(1) / lp->p);
}

Real james_norm(const JamesVec& x, int cap) {
    if (is_lp(x.base)) return james_norm_dp(x);
    return james_norm_exhaustive(x, cap).value;
}

Real james_norm_gap(const JamesVec& x, int cap) {
    int n = x.coeffs.n();
    if (n == 0 || x.coeffs.is_zero()) return Real();

    if (const auto* lp = std::get_if<LpNorm>(&x.base)) {
        auto W = interval_power_table(x.coeffs, lp->p);
        // G[m] = best over selections confined to [1, m]; runs may skip.
        std::vector<Real> G(static_cast<size_t>(n) + 1);
        for (int m = 1; m <= n; ++m) {
            Real best = G[static_cast<size_t>(m) - 1]; // m unused
            for (int t = 1; t <= m; ++t) {
                Real cand = G[static_cast<size_t>(t) - 1] +
                            W[static_cast<size_t>(t) - 1][static_cast<size_t>(m - t)];
                if (cand > best) best = cand;
            }
            G[static_cast<size_t>(m)] = best;
        }
        return G[static_cast<size_t>(n)].is_zero()
                   ? Real()
                   : pow_q(G[static_cast<size_t>(n)], mpq_class(1) / lp->p);
    }

    Real best;
    for_each_gap_selection(n, cap, [&](const GapSelection& sel) {
        CoeffVec agg = CoeffVec::zeros(sel.runs.back().first);
        for (auto [p, q] : sel.runs) {
            Real s;
            for (int j = p; j <= q; ++j) s += x.coeffs.at1(j);
            agg.at1(p) = s;
        }
        Real value = norm_eval(x.base, agg);
        if (value > best) best = value;
    });
    return best;
}

Real s_functional(const CoeffVec& x) {
    Real s;
    for (const Real& a : x.a) s += a;
    return s;
}

Real s_functional(const JamesVec& x) { return s_functional(x.coeffs); }

JamesVec basis_projection(const JamesVec& x, int m) {
    if (m < 0 || m > x.coeffs.n())
        throw ConfigError("projection index out of range: " + std::to_string(m));
    JamesVec out = x;
    for (int i = m + 1; i <= out.coeffs.n(); ++i) out.coeffs.at1(i) = Real();
    return out;
}

LemmaWitness norm_lemma_witness(const std::vector<BlockVector>& blocks, const NormSpec& base,
                                int cap) {
    if (blocks.empty()) throw ConfigError("need at least one block");
    int expect = blocks.front().start;
    if (expect < 1) throw ConfigError("block supports start at 1");
    for (const auto& b : blocks) {
        if (b.start != expect) throw ConfigError("block supports must be consecutive");
        if (b.len() < 1) throw ConfigError("empty block");
        if (!s_functional(b.coeffs).is_zero()) throw Error("nonzero block sum");
        expect = b.end() + 1;
    }
    const int N = blocks.back().end();

    CoeffVec x = CoeffVec::zeros(N);
    for (const auto& b : blocks)
        for (int j = 1; j <= b.len(); ++j) x.at1(b.start + j - 1) = b.coeffs.at1(j);

    LemmaWitness out;
    JamesNormResult jn = james_norm_exhaustive(JamesVec{x, base}, cap);
    out.x_james_norm = jn.value;

    // Refine the optimal cuts by the block boundaries n(1), ..., n(l+1).
    std::set<int> qset(jn.witness.cuts.begin(), jn.witness.cuts.end());
    for (const auto& b : blocks) qset.insert(b.start);
    qset.insert(N + 1);
    IntervalPartition refined;
    refined.cuts.assign(qset.begin(), qset.end());
    out.refined_cuts = refined.cuts;

    CoeffVec refined_rep = representative(x, refined);

    out.per_block_ok = true;
    CoeffVec w_sum = CoeffVec::zeros(N);
    for (const auto& b : blocks) {
        CoeffVec w = CoeffVec::zeros(N);
        for (int i = 1; i <= refined.block_count(); ++i) {
            int q = refined.block_begin(i);
            if (q >= b.start && q <= b.end() && q <= refined_rep.n()) {
                w.at1(q) = refined_rep.at1(q);
                w_sum.at1(q) = refined_rep.at1(q);
            }
        }
        CoeffVec v_embedded = CoeffVec::zeros(N);
        for (int j = 1; j <= b.len(); ++j) v_embedded.at1(b.start + j - 1) = b.coeffs.at1(j);

        Real w_norm = norm_eval(base, w);
        Real v_jnorm = james_norm_exhaustive(JamesVec{v_embedded, base}, cap).value;
        if (w_norm > v_jnorm) out.per_block_ok = false;
        out.w_blocks.push_back(std::move(w));
        out.w_base_norms.push_back(std::move(w_norm));
        out.v_james_norms.push_back(std::move(v_jnorm));
    }

    out.w_sum_base_norm = norm_eval(base, w_sum);
    out.c_observed = out.w_sum_base_norm.is_zero() ? Real()
                                                   : out.x_james_norm / out.w_sum_base_norm;
    return out;
}

std::vector<BlockVector> random_zero_sum_blocks(std::uint64_t seed, std::uint64_t index,
                                                int max_len) {
    if (max_len < 2) throw ConfigError("need max_len >= 2");
    Rng rng = Rng::substream(seed, index);
    int n = static_cast<int>(rng.uniform_int(2, max_len));
    int l = static_cast<int>(rng.uniform_int(1, std::max(1, std::min(3, n / 2))));

    std::vector<int> lens(static_cast<size_t>(l), 2);
    int spare = n - 2 * l;
    for (int i = 0; i < l && spare > 0; ++i) {
        int add = static_cast<int>(rng.uniform_int(0, spare));
        lens[static_cast<size_t>(i)] += add;
        spare -= add;
    }

    std::vector<BlockVector> blocks;
    int start = 1;
    for (int i = 0; i < l; ++i) {
        int m = lens[static_cast<size_t>(i)];
        std::vector<double> vals(static_cast<size_t>(m), 0.0);
        long sum = 0;
        for (int j = 0; j + 1 < m; ++j) {
            long v = rng.uniform_int(-9, 9);
            vals[static_cast<size_t>(j)] = static_cast<double>(v);
            sum += v;
        }
        vals[static_cast<size_t>(m) - 1] = static_cast<double>(-sum);
        bool all_zero = std::all_of(vals.begin(), vals.end(), [](double x) { return x == 0.0; });
        if (all_zero) {
            vals.front() = 1.0;
            vals.back() = -1.0;
        }
        BlockVector b;
        b.start = start;
        b.coeffs = CoeffVec::of(vals);
        start += m;
        blocks.push_back(std::move(b));
    }
    return blocks;
}

} // namespace jameslab
