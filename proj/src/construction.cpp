#include "jameslab/construction.hpp"

#include "jameslab/errors.hpp"
#include "jameslab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace jameslab {

namespace {

mpz_class pow_z(const mpz_class& base, unsigned long e) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

/// Least k >= 1 with k^e >= M (M >= 1).
mpz_class ceil_root(const mpz_class& M, unsigned long e) {
    if (M <= 1) return 1;
    mpz_class t;
    int exact = mpz_root(t.get_mpz_t(), M.get_mpz_t(), e);
    return exact ? t : t + 1;
}

/// Largest j >= 0 with j^e <= M.
mpz_class floor_root(const mpz_class& M, unsigned long e) {
    if (M < 1) return 0;
    mpz_class t;
    mpz_root(t.get_mpz_t(), M.get_mpz_t(), e);
    return t;
}

// ---- directed-rounding helpers (bases >= 1, exponents > 0) ----

Real pow_zq_dir(const mpz_class& base, const mpq_class& e, mpfr_rnd_t rnd, long prec) {
    Real b(prec), ex(prec), out(prec);
    mpfr_set_z(b.raw(), base.get_mpz_t(), rnd);
    mpfr_set_q(ex.raw(), e.get_mpq_t(), rnd);
    mpfr_pow(out.raw(), b.raw(), ex.raw(), rnd);
    return out;
}

struct Interval {
    Real lo, hi;
};

/// s_n = 1 + 2 sum_{i<n} (i k_i)^{r/2} enclosed with directed rounding.
Interval sum_interval(const std::vector<mpz_class>& k, int n, const mpq_class& r_half,
                      long prec) {
    Real lo(prec), hi(prec);
    mpfr_set_si(lo.raw(), 1, MPFR_RNDD);
    mpfr_set_si(hi.raw(), 1, MPFR_RNDU);
    for (int i = 1; i < n; ++i) {
        mpz_class base = mpz_class(i) * k[static_cast<size_t>(i) - 1];
        Real tlo = pow_zq_dir(base, r_half, MPFR_RNDD, prec);
        Real thi = pow_zq_dir(base, r_half, MPFR_RNDU, prec);
        mpfr_mul_si(tlo.raw(), tlo.raw(), 2, MPFR_RNDD);
        mpfr_mul_si(thi.raw(), thi.raw(), 2, MPFR_RNDU);
        mpfr_add(lo.raw(), lo.raw(), tlo.raw(), MPFR_RNDD);
        mpfr_add(hi.raw(), hi.raw(), thi.raw(), MPFR_RNDU);
    }
    return {lo, hi};
}

/// k^{1-p/2} / n^{p/2} enclosed with directed rounding.
Interval rhs_interval(const mpz_class& k, int n, const mpq_class& p, long prec) {
    mpq_class e1 = 1 - p / 2;
    mpq_class e2 = p / 2;
    Real lo(prec), hi(prec);
    {
        Real num = pow_zq_dir(k, e1, MPFR_RNDD, prec);
        Real den = pow_zq_dir(mpz_class(n), e2, MPFR_RNDU, prec);
        mpfr_div(lo.raw(), num.raw(), den.raw(), MPFR_RNDD);
    }
    {
        Real num = pow_zq_dir(k, e1, MPFR_RNDU, prec);
        Real den = pow_zq_dir(mpz_class(n), e2, MPFR_RNDD, prec);
        mpfr_div(hi.raw(), num.raw(), den.raw(), MPFR_RNDU);
    }
    return {lo, hi};
}

enum class Cert { yes, no, undecided };

struct Exponents {
    // p = a/b, r = rn/rd, all canonical
    mpz_class a, b, rn, rd;
    bool sum_exact = false; // r/2 an integer, so s_n is an exact integer
    mpz_class r_half;       // valid when sum_exact

    explicit Exponents(const mpq_class& p, const mpq_class& r) {
        a = p.get_num();
        b = p.get_den();
        rn = r.get_num();
        rd = r.get_den();
        mpq_class rh = r / 2;
        rh.canonicalize();
        if (rh.get_den() == 1) {
            sum_exact = true;
            r_half = rh.get_num();
        }
    }

    unsigned long two_b_minus_a() const { return mpz_class(2 * b - a).get_ui(); }
    unsigned long two_b() const { return mpz_class(2 * b).get_ui(); }
    unsigned long a_ui() const { return a.get_ui(); }
};

/// 1 + 2 sum_{i<n} (i k_i)^{r/2} as an exact integer (requires sum_exact).
mpz_class sum_exact_value(const std::vector<mpz_class>& k, int n, const Exponents& ex) {
    mpz_class s = 1;
    for (int i = 1; i < n; ++i)
        s += 2 * pow_z(mpz_class(i) * k[static_cast<size_t>(i) - 1], ex.r_half.get_ui());
    return s;
}

/// Exact test of s <= k^{1-p/2} / n^{p/2} via s^{2b} n^a <= k^{2b-a}.
/// Returns (pass, lhs, rhs) in the cleared integer form.
struct ExactCmp {
    bool pass;
    mpz_class lhs, rhs;
};

ExactCmp growth_sum_exact(const mpz_class& s, int n, const mpz_class& k, const Exponents& ex) {
    mpz_class lhs = pow_z(s, ex.two_b()) * pow_z(mpz_class(n), ex.a_ui());
    mpz_class rhs = pow_z(k, ex.two_b_minus_a());
    return {lhs <= rhs, lhs, rhs};
}

/// Exact test of ((n+1)/n)^{r/2} (k_n/k_{n+1})^{(1/p-1/p')r/2} <= 1/2,
/// cleared to 2^D (n+1)^G kn^E <= n^G knext^E with D = 2 a rd,
/// G = rn a, E = (2b-a) rn.
ExactCmp growth_ratio_exact(int n, const mpz_class& kn, const mpz_class& knext,
                            const Exponents& ex) {
    unsigned long D = mpz_class(2 * ex.a * ex.rd).get_ui();
    unsigned long G = mpz_class(ex.rn * ex.a).get_ui();
    unsigned long E = mpz_class((2 * ex.b - ex.a) * ex.rn).get_ui();
    mpz_class lhs = pow_z(mpz_class(2), D) * pow_z(mpz_class(n + 1), G) * pow_z(kn, E);
    mpz_class rhs = pow_z(mpz_class(n), G) * pow_z(knext, E);
    return {lhs <= rhs, lhs, rhs};
}

/// Least k_{n+1} satisfying the ratio inequality given k_n.
mpz_class growth_ratio_min_next(int n, const mpz_class& kn, const Exponents& ex) {
    unsigned long D = mpz_class(2 * ex.a * ex.rd).get_ui();
    unsigned long G = mpz_class(ex.rn * ex.a).get_ui();
    unsigned long E = mpz_class((2 * ex.b - ex.a) * ex.rn).get_ui();
    mpz_class num = pow_z(mpz_class(2), D) * pow_z(mpz_class(n + 1), G) * pow_z(kn, E);
    mpz_class den = pow_z(mpz_class(n), G);
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return ceil_root(q, E);
}

/// Certified test of the sum inequality when s is only known by interval.
Cert growth_sum_certified(const std::vector<mpz_class>& k, int n, const mpz_class& kn,
                          const mpq_class& p, const mpq_class& r, long prec) {
    for (long bits = std::max(256L, prec); bits <= 4096; bits *= 2) {
        Interval s = sum_interval(k, n, r / 2, bits);
        Interval rhs = rhs_interval(kn, n, p, bits);
        if (s.hi <= rhs.lo) return Cert::yes;
        if (s.lo > rhs.hi) return Cert::no;
    }
    return Cert::undecided;
}

/// Least k_n satisfying the sum inequality when exact reduction is
/// unavailable: bracket the threshold (s n^{p/2})^{1/(1-p/2)} with a
/// directed enclosure, then binary-search the minimal certified integer.
mpz_class growth_sum_min_k_certified(const std::vector<mpz_class>& k, int n, const mpq_class& p,
                                     const mpq_class& r, long prec) {
    long bits = std::max(256L, prec);
    Interval s = sum_interval(k, n, r / 2, bits);
    mpq_class e2 = p / 2;
    mpq_class inv = mpq_class(1) / (1 - p / 2);
    auto threshold = [&](mpfr_rnd_t rnd, const Real& s_side) {
        Real t(bits);
        Real np = pow_zq_dir(mpz_class(n), e2, rnd, bits);
        mpfr_mul(t.raw(), s_side.raw(), np.raw(), rnd);
        Real ex(bits);
        mpfr_set_q(ex.raw(), inv.get_mpq_t(), rnd);
        mpfr_pow(t.raw(), t.raw(), ex.raw(), rnd);
        return t;
    };
    // any k < lo fails, and hi is verified to pass below
    mpz_class lo = floor_z(threshold(MPFR_RNDD, s.lo)) - 1;
    mpz_class hi = ceil_z(threshold(MPFR_RNDU, s.hi));
    if (lo < 0) lo = 0;
    if (hi < 1) hi = 1;
    while (growth_sum_certified(k, n, hi, p, r, prec) != Cert::yes) hi += 1;
    while (lo + 1 < hi) {
        mpz_class mid = (lo + hi) / 2;
        // undecided keeps the larger, certainly feasible candidate
        if (growth_sum_certified(k, n, mid, p, r, prec) == Cert::yes)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

Real tol_factor_up(long prec) { return Real::of(1.0, prec) + Real::of(default_rel_tolerance(), prec); }

} // namespace

ConstructionParams generate_k_sequence(const mpq_class& p, const mpq_class& r, int L,
                                       long precision_bits) {
    if (L < 1) throw ConfigError("need L >= 1");
    // Regime validation happens in make(); do the cheap part up front so an
    // infeasible pair is rejected before any generation work.
    if (!(p > 1 && p < 2 && r > 2 && r / (r - 1) < p))
        throw ConfigError("infeasible regime: need r' < p and 1 < p < 2 < r");

    Exponents ex(p, r);
    std::vector<mpz_class> k;
    for (int n = 1; n <= L; ++n) {
        mpz_class k_sum;
        if (ex.sum_exact || n == 1) {
            mpz_class s = sum_exact_value(k, n, ex);
            k_sum = ceil_root(pow_z(s, ex.two_b()) * pow_z(mpz_class(n), ex.a_ui()),
                              ex.two_b_minus_a());
        } else {
            k_sum = growth_sum_min_k_certified(k, n, p, r, precision_bits);
        }
        mpz_class kn = k_sum;
        if (n >= 2) {
            mpz_class k_ratio = growth_ratio_min_next(n - 1, k[static_cast<size_t>(n) - 2], ex);
            if (k_ratio > kn) kn = k_ratio;
        }
        k.push_back(kn);
    }
    return ConstructionParams::make(p, r, std::move(k), precision_bits);
}

FeasibilityReport check_feasibility(const ConstructionParams& params) {
    FeasibilityReport rep;
    Exponents ex(params.p, params.r);
    const int L = params.blocks();

    for (int n = 1; n <= L; ++n) {
        FeasibilityEntry e;
        e.n = n;
        e.inequality = "growth-sum";
        if (ex.sum_exact || n == 1) {
            mpz_class s = sum_exact_value(params.k, n, ex);
            ExactCmp c = growth_sum_exact(s, n, params.k_at(n), ex);
            e.pass = c.pass;
            e.exact = true;
            e.lhs = c.lhs.get_str();
            e.rhs = c.rhs.get_str();
            e.margin = mpz_class(c.rhs - c.lhs).get_str();
        } else {
            Cert c = growth_sum_certified(params.k, n, params.k_at(n), params.p, params.r,
                                          params.precision_bits);
            e.pass = (c == Cert::yes);
            e.exact = false;
            Interval s = sum_interval(params.k, n, params.r / 2, params.precision_bits);
            Interval rhs = rhs_interval(params.k_at(n), n, params.p, params.precision_bits);
            e.lhs = s.hi.str(20);
            e.rhs = rhs.lo.str(20);
            e.margin = (c == Cert::undecided) ? "undecided" : (rhs.lo - s.hi).str(20);
        }
        if (!e.pass) rep.pass = false;
        rep.entries.push_back(std::move(e));

        if (n < L) {
            FeasibilityEntry f;
            f.n = n;
            f.inequality = "growth-ratio";
            ExactCmp c = growth_ratio_exact(n, params.k_at(n), params.k_at(n + 1), ex);
            f.pass = c.pass;
            f.exact = true;
            f.lhs = c.lhs.get_str();
            f.rhs = c.rhs.get_str();
            f.margin = mpz_class(c.rhs - c.lhs).get_str();
            if (!f.pass) rep.pass = false;
            rep.entries.push_back(std::move(f));
        }
    }
    return rep;
}

CalcWindow calc_window(const ConstructionParams& params, int l) {
    if (l < 1 || l > params.blocks()) throw ConfigError("window level out of range");
    Exponents ex(params.p, params.r);
    CalcWindow w;
    if (ex.sum_exact || l == 1) {
        w.lo = sum_exact_value(params.k, l, ex) - 1; // 2 sum_{i<l} (i k_i)^{r/2}
        // largest j with j^{2b} l^a <= k_l^{2b-a}
        mpz_class M = pow_z(params.k_at(l), ex.two_b_minus_a());
        mpz_class den = pow_z(mpz_class(l), ex.a_ui());
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), M.get_mpz_t(), den.get_mpz_t());
        mpz_class j = floor_root(q, ex.two_b());
        while (pow_z(j + 1, ex.two_b()) * den <= M) j += 1;
        while (j > 0 && pow_z(j, ex.two_b()) * den > M) j -= 1;
        w.hi = j;
    } else {
        long bits = std::max(256L, params.precision_bits);
        Interval s = sum_interval(params.k, l, params.r / 2, bits);
        Real two_s(bits);
        mpfr_mul_si(two_s.raw(), s.hi.raw(), 2, MPFR_RNDU);
        Real minus(bits);
        mpfr_sub_si(minus.raw(), two_s.raw(), 2, MPFR_RNDU); // 2(s-1) = 2 sum
        w.lo = ceil_z(minus);
        if (w.lo < 0) w.lo = 0;
        Interval rhs = rhs_interval(params.k_at(l), l, params.p, bits);
        w.hi = floor_z(rhs.lo);
    }
    if (w.lo < 0) w.lo = 0;
    return w;
}

bool calc_admissible(const ConstructionParams& params, const CalcInstance& inst) {
    if (inst.l < 1 || inst.l > params.blocks() || inst.j < 0) return false;
    CalcWindow w = calc_window(params, inst.l);
    return inst.j >= w.lo && inst.j <= w.hi;
}

CalcMaxResult calc_lemma_max(const ConstructionParams& params, const CalcInstance& inst) {
    if (!calc_admissible(params, inst)) throw Error("inadmissible (l, j) instance");
    const int l = inst.l;
    if (l > 25) throw CapExceeded("vertex enumeration capped at 25 levels");
    mpq_class r_over_p = params.r / params.p;

    std::vector<Real> full_term(static_cast<size_t>(l) - 1);
    for (int i = 1; i < l; ++i)
        full_term[static_cast<size_t>(i) - 1] =
            pow_q(params.alpha_at(i), params.r) * pow_q(Real::of(params.k_at(i)), r_over_p);
    Real alpha_l_r = pow_q(params.alpha_at(l), params.r);

    CalcMaxResult out;
    out.bound = Real::of(mpq_class(inst.j) / 2 + 2);
    bool have = false;
    const std::uint64_t masks = 1ULL << (l - 1);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        mpz_class sat = 0;
        for (int i = 0; i < l - 1; ++i)
            if (mask & (1ULL << i)) sat += params.k_at(i + 1);
        if (sat > inst.j) continue;
        mpz_class rem = inst.j - sat;
        Real value;
        for (int i = 0; i < l - 1; ++i)
            if (mask & (1ULL << i)) value += full_term[static_cast<size_t>(i)];
        if (rem > 0) value += alpha_l_r * pow_q(Real::of(rem), r_over_p);
        if (!have || value > out.max_value) {
            out.max_value = value;
            out.maximizer.assign(static_cast<size_t>(l), 0);
            for (int i = 0; i < l - 1; ++i)
                if (mask & (1ULL << i)) out.maximizer[static_cast<size_t>(i)] = params.k_at(i + 1);
            out.maximizer[static_cast<size_t>(l) - 1] = rem;
            have = true;
        }
    }
    out.pass = out.max_value <= out.bound * tol_factor_up(params.precision_bits);
    return out;
}

Real calc_interior_probe(const ConstructionParams& params, const CalcInstance& inst, int iters,
                         std::uint64_t seed) {
    if (!calc_admissible(params, inst)) throw Error("inadmissible (l, j) instance");
    const int l = inst.l;
    mpq_class r_over_p = params.r / params.p;
    Real alpha_l_r = pow_q(params.alpha_at(l), params.r);

    auto fval = [&](const std::vector<double>& x) {
        Real v;
        double used = 0;
        for (int i = 0; i < l - 1; ++i) {
            if (x[static_cast<size_t>(i)] > 0)
                v += pow_q(params.alpha_at(i + 1), params.r) *
                     pow_q(Real::of(x[static_cast<size_t>(i)]), r_over_p);
            used += x[static_cast<size_t>(i)];
        }
        double xl = std::max(0.0, Real::of(inst.j).to_double() - used);
        if (xl > 0) v += alpha_l_r * pow_q(Real::of(xl), r_over_p);
        return v;
    };

    if (l == 1) {
        std::vector<double> none;
        return fval(none);
    }

    double jd = Real::of(inst.j).to_double();
    std::vector<double> ub(static_cast<size_t>(l) - 1);
    for (int i = 0; i < l - 1; ++i) {
        double ki = Real::of(params.k_at(i + 1)).to_double();
        ub[static_cast<size_t>(i)] = std::min(ki, jd);
    }
    double rp = mpq_class(params.r / params.p).get_d();
    std::vector<double> alpha_r(static_cast<size_t>(l));
    for (int i = 1; i <= l; ++i)
        alpha_r[static_cast<size_t>(i) - 1] = pow_q(params.alpha_at(i), params.r).to_double();

    Real best;
    const int starts = 8;
    for (int s = 0; s < starts; ++s) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(s));
        std::vector<double> x(static_cast<size_t>(l) - 1);
        for (size_t i = 0; i < x.size(); ++i) x[i] = rng.uniform(0.0, ub[i]);
        double step = 0.25 * jd;
        for (int it = 0; it < iters; ++it) {
            double used = 0;
            for (double xi : x) used += xi;
            double xl = std::max(1e-300, jd - used);
            std::vector<double> g(x.size());
            for (size_t i = 0; i < x.size(); ++i) {
                double xi = std::max(1e-300, x[i]);
                g[i] = alpha_r[i] * rp * std::pow(xi, rp - 1.0) -
                       alpha_r[static_cast<size_t>(l) - 1] * rp * std::pow(xl, rp - 1.0);
            }
            std::vector<double> y(x.size());
            double norm = 0;
            for (double gi : g) norm += gi * gi;
            norm = std::sqrt(std::max(norm, 1e-300));
            for (size_t i = 0; i < x.size(); ++i)
                y[i] = std::clamp(x[i] + step * g[i] / norm, 0.0, ub[i]);
            double ysum = 0;
            for (double yi : y) ysum += yi;
            if (ysum > jd)
                for (auto& yi : y) yi *= jd / ysum;
            Real fy = fval(y);
            if (fy > best) best = fy;
            if (fy > fval(x))
                x = y;
            else
                step *= 0.7;
        }
        Real fx = fval(x);
        if (fx > best) best = fx;
    }
    return best;
}

OnesNormResult ones_norm(const ConstructionParams& params, const mpz_class& j) {
    if (j < 0) throw ConfigError("j must be nonnegative");
    if (j > params.capacity())
        throw InsufficientParams("j exceeds the total block capacity " +
                                 params.capacity().get_str());
    const int L = params.blocks();
    if (L > 25) throw CapExceeded("count optimization capped at 25 blocks");
    mpq_class r_over_p = params.r / params.p;
    mpq_class inv_r = mpq_class(1) / params.r;

    OnesNormResult out;
    out.counts.assign(static_cast<size_t>(L), 0);
    if (j == 0) {
        out.value = Real();
        out.flat_attains = true;
        return out;
    }

    std::vector<Real> full_term(static_cast<size_t>(L));
    for (int i = 1; i <= L; ++i)
        full_term[static_cast<size_t>(i) - 1] =
            pow_q(params.alpha_at(i), params.r) * pow_q(Real::of(params.k_at(i)), r_over_p);

    Real best;
    std::vector<mpz_class> best_counts(static_cast<size_t>(L), 0);
    bool have = false;
    const std::uint64_t masks = 1ULL << L;
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        mpz_class sat = 0;
        for (int i = 0; i < L; ++i)
            if (mask & (1ULL << i)) sat += params.k_at(i + 1);
        if (sat > j) continue;
        mpz_class rem = j - sat;
        Real base_val;
        for (int i = 0; i < L; ++i)
            if (mask & (1ULL << i)) base_val += full_term[static_cast<size_t>(i)];

        auto consider = [&](int t, const mpz_class& extra) {
            Real value = base_val;
            if (t > 0 && extra > 0)
                value += pow_q(params.alpha_at(t), params.r) * pow_q(Real::of(extra), r_over_p);
            if (!have || value > best) {
                best = value;
                best_counts.assign(static_cast<size_t>(L), 0);
                for (int i = 0; i < L; ++i)
                    if (mask & (1ULL << i)) best_counts[static_cast<size_t>(i)] = params.k_at(i + 1);
                if (t > 0) best_counts[static_cast<size_t>(t) - 1] += extra;
                have = true;
            }
        };

        if (rem == 0) {
            consider(0, 0);
        } else {
            for (int t = 1; t <= L; ++t) {
                if (mask & (1ULL << (t - 1))) continue;
                if (params.k_at(t) < rem) continue;
                consider(t, rem);
            }
        }
    }

    out.flat_term = pow_q(Real::of(j), inv_r);
    out.block_term = (have && !best.is_zero()) ? pow_q(best, inv_r) : Real();
    out.flat_attains = !(out.block_term > out.flat_term);
    out.value = max(out.flat_term, out.block_term);
    out.counts = best_counts;
    return out;
}

GrowthReport example_growth_suite(const ConstructionParams& params,
                                  const std::vector<mpz_class>& js) {
    GrowthReport rep;
    rep.worst_ratio = Real();
    std::vector<CalcWindow> windows;
    for (int l = 1; l <= params.blocks(); ++l) windows.push_back(calc_window(params, l));
    Real tol_up = tol_factor_up(params.precision_bits);

    for (const mpz_class& j : js) {
        if (j < 1) continue;
        GrowthRow row;
        row.j = j;
        OnesNormResult on = ones_norm(params, j);
        row.norm = on.value;
        Real jr = Real::of(j);
        row.ratio = on.value / pow_q(jr, mpq_class(1) / params.r);
        row.ratio_r = pow_q(on.value, params.r) / jr;
        row.block_ratio_r =
            on.block_term.is_zero() ? Real() : pow_q(on.block_term, params.r) / jr;
        row.proof_bound_r = Real::of((mpq_class(j) / 2 + 3) / mpq_class(j));
        for (int l = 1; l <= params.blocks(); ++l) {
            if (j >= windows[static_cast<size_t>(l) - 1].lo &&
                j <= windows[static_cast<size_t>(l) - 1].hi) {
                row.in_window = true;
                row.window_l = l;
                break;
            }
        }
        if (row.in_window) {
            Real cap = max(Real::of(1L), row.proof_bound_r) * tol_up;
            row.pass = (row.block_ratio_r <= row.proof_bound_r * tol_up) && (row.ratio_r <= cap);
        }
        if (row.ratio > rep.worst_ratio) rep.worst_ratio = row.ratio;
        if (!row.pass) rep.pass = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

SqrtNkReport sqrt_nk_lower_bound(const ConstructionParams& params, int n) {
    if (n < 1 || n > params.blocks()) throw ConfigError("block index out of range");
    SqrtNkReport rep;
    rep.n = n;
    OnesNormResult on = ones_norm(params, params.k_at(n));
    rep.ones_value = on.value;
    rep.bound = sqrt(Real::of(static_cast<long>(n)) * Real::of(params.k_at(n)));
    rep.block_candidate = params.alpha_at(n) * pow_q(Real::of(params.k_at(n)), mpq_class(1) / params.p);
    Real tol = rep.bound * Real::of(default_rel_tolerance());
    rep.holds = rep.ones_value + tol >= rep.bound;
    rep.equality = rel_close(rep.ones_value, rep.bound);
    return rep;
}

DualOnesReport dual_ones_upper_bound(const ConstructionParams& params, int n) {
    if (n < 1 || n > params.blocks()) throw ConfigError("block index out of range");
    DualOnesReport rep;
    rep.n = n;
    rep.upper = pow_q(Real::of(params.k_at(n)), mpq_class(1) / params.p_conj()) / params.alpha_at(n);
    OnesNormResult on = ones_norm(params, params.k_at(n));
    rep.lower = Real::of(params.k_at(n)) / on.value;
    rep.equality = rel_close(rep.lower, rep.upper);
    Real pairing = Real::of(params.k_at(n));
    rep.pairing_ok = pairing <= rep.upper * on.value * tol_factor_up(params.precision_bits);
    return rep;
}

NonDominationReport dual_nondomination_report(const ConstructionParams& params, int n) {
    if (n < 1 || n > params.blocks()) throw ConfigError("block index out of range");
    NonDominationReport rep;
    std::set<mpz_class> js = {1, 2, 3};
    for (int m = 1; m <= n; ++m) {
        js.insert(params.k_at(m));
        CalcWindow w = calc_window(params, m);
        if (!w.empty()) {
            if (w.lo >= 1) js.insert(w.lo);
            js.insert(w.hi);
        }
    }
    for (const mpz_class& j : js) {
        if (j < 1 || j > params.capacity()) continue;
        NonDomRow row;
        row.j = j;
        Real jr = Real::of(j);
        row.j_pow_inv_r_conj = pow_q(jr, mpq_class(1) / params.r_conj());
        row.j_pow_inv_p = pow_q(jr, mpq_class(1) / params.p);
        row.pairing_lower = jr / ones_norm(params, j).value;
        rep.growth.push_back(std::move(row));
    }
    for (int m = 1; m <= n; ++m) {
        NonDomRatioRow row;
        row.m = m;
        Real dual_upper = sqrt(Real::of(params.k_at(m)) / Real::of(static_cast<long>(m)));
        row.ratio = ones_norm(params, params.k_at(m)).value / dual_upper;
        rep.ratios.push_back(std::move(row));
    }
    return rep;
}

bool alpha_identity_exact(const ConstructionParams& params, int n) {
    if (n < 1 || n > params.blocks()) throw ConfigError("block index out of range");
    // alpha_n^r k_n^{r/p} = n^{r/2} k_n^{r e + r/p} with e = (1/p'-1/p)/2;
    // the identity holds iff the k exponent reduces to r/2 exactly.
    mpq_class lhs_exp = params.r * params.alpha_exponent() + params.r / params.p;
    lhs_exp.canonicalize();
    mpq_class rhs_exp = params.r / 2;
    rhs_exp.canonicalize();
    if (lhs_exp != rhs_exp) return false;
    Real lhs = pow_q(params.alpha_at(n), params.r) *
               pow_q(Real::of(params.k_at(n)), params.r / params.p);
    Real rhs = pow_q(Real::of(static_cast<long>(n)), params.r / 2) *
               pow_q(Real::of(params.k_at(n)), params.r / 2);
    return rel_close(lhs, rhs, 1e-30);
}

} // namespace jameslab
