#include "jameslab/cli.hpp"

#include "jameslab/construction.hpp"
#include "jameslab/domination.hpp"
#include "jameslab/duality.hpp"
#include "jameslab/errors.hpp"
#include "jameslab/james.hpp"
#include "jameslab/report.hpp"
#include "jameslab/rng.hpp"
#include "jameslab/specparse.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace jameslab {

namespace {

using nlohmann::json;

std::vector<double> parse_coeff_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            double v = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ConfigError("bad coefficient '" + item + "'");
        }
    }
    if (out.empty()) throw ConfigError("empty coefficient list");
    return out;
}

void emit(const json& j, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw ConfigError("cannot write " + out_path);
        f << j.dump(2) << "\n";
    }
}

void emit_report(const Report& rep, const std::string& out_path, bool csv, std::ostream& out) {
    if (csv) {
        if (out_path.empty()) {
            out << rep.to_csv();
        } else {
            std::ofstream f(out_path);
            if (!f) throw ConfigError("cannot write " + out_path);
            f << rep.to_csv();
        }
        return;
    }
    emit(rep.to_json(true), out_path, out);
}

std::shared_ptr<const ConstructionParams> load_params(const std::string& path) {
    if (path.empty()) throw ConfigError("this suite needs --params");
    return std::make_shared<ConstructionParams>(ConstructionParams::load(path));
}

json ones_witness(const OnesNormResult& on) {
    json counts = json::array();
    for (const auto& c : on.counts) counts.push_back(c.get_str());
    return json{{"counts", counts}, {"flat_term_attains", on.flat_attains}};
}

// ---- verify suites ----

Report suite_feasibility(const std::string& params_path) {
    Report rep;
    rep.suite = "feasibility";
    auto params = load_params(params_path);
    rep.config = {{"params", json::parse(params->to_json_string())}};
    FeasibilityReport fr = check_feasibility(*params);
    for (const auto& e : fr.entries) {
        Assertion a;
        a.name = e.inequality + " n=" + std::to_string(e.n) + (e.exact ? " (exact)" : " (interval)");
        a.pass = e.pass;
        a.lhs = e.lhs;
        a.rhs = e.rhs;
        a.margin = e.margin;
        rep.add(std::move(a));
    }
    return rep;
}

Report suite_calc_lemma(const std::string& params_path, int level, std::uint64_t seed) {
    Report rep;
    rep.suite = "calc-lemma";
    auto params = load_params(params_path);
    rep.config = {{"params", json::parse(params->to_json_string())},
                  {"l", level},
                  {"seed", seed}};

    std::vector<int> levels;
    if (level > 0)
        levels.push_back(level);
    else
        for (int l = 1; l <= params->blocks(); ++l) levels.push_back(l);

    for (int l : levels) {
        CalcWindow w = calc_window(*params, l);
        if (w.empty()) {
            Assertion a;
            a.name = "window l=" + std::to_string(l);
            a.pass = false;
            a.margin = "empty window";
            rep.add(std::move(a));
            continue;
        }
        std::vector<mpz_class> js;
        mpz_class size = w.hi - w.lo + 1;
        if (size <= 1000) {
            for (mpz_class j = w.lo; j <= w.hi; ++j) js.push_back(j);
        } else {
            for (int t = 0; t < 100; ++t) {
                mpz_class j = w.lo + (w.hi - w.lo) * t / 99;
                if (js.empty() || js.back() != j) js.push_back(j);
            }
        }
        for (const mpz_class& j : js) {
            CalcInstance inst{l, j};
            CalcMaxResult mx = calc_lemma_max(*params, inst);
            Assertion a = Assertion::compare("vertex-max l=" + std::to_string(l) + " j=" + j.get_str(),
                                             mx.pass, mx.max_value, mx.bound);
            json maximizer = json::array();
            for (const auto& x : mx.maximizer) maximizer.push_back(x.get_str());
            a.witness = {{"maximizer", maximizer}};
            rep.add(std::move(a));

            Real probe = calc_interior_probe(*params, inst, 60, seed);
            Real cap = mx.max_value * (Real::of(1L) + Real::of(default_rel_tolerance()));
            rep.add(Assertion::compare("interior-probe l=" + std::to_string(l) + " j=" + j.get_str(),
                                       probe <= cap, probe, mx.max_value));
        }
    }
    return rep;
}

Report suite_norm_lemma(const std::string& base_spec, int samples, std::uint64_t seed, int max_n,
                        int cap) {
    Report rep;
    rep.suite = "norm-lemma";
    rep.config = {{"base", base_spec},
                  {"samples", samples},
                  {"seed", seed},
                  {"max_n", max_n},
                  {"cap", cap}};
    NormSpec base = parse_norm_spec(base_spec);

    // Hand instance: two blocks u1-u2, u3-u4.
    {
        std::vector<BlockVector> blocks;
        blocks.push_back(BlockVector{1, CoeffVec::of({1.0, -1.0})});
        blocks.push_back(BlockVector{3, CoeffVec::of({1.0, -1.0})});
        LemmaWitness lw = norm_lemma_witness(blocks, base, cap);
        rep.add(Assertion::compare("hand-instance c=1", lw.c_observed == Real::of(1L),
                                   lw.c_observed, Real::of(1L)));
    }

    int violations = 0;
    Real c_max;
    std::uint64_t worst_index = 0;
    for (int t = 0; t < samples; ++t) {
        auto blocks = random_zero_sum_blocks(seed, static_cast<std::uint64_t>(t), max_n);
        LemmaWitness lw = norm_lemma_witness(blocks, base, cap);
        if (!lw.per_block_ok) ++violations;
        if (lw.c_observed > c_max) {
            c_max = lw.c_observed;
            worst_index = static_cast<std::uint64_t>(t);
        }
    }
    {
        Assertion a;
        a.name = "per-block representative bound";
        a.pass = violations == 0;
        a.lhs = std::to_string(violations);
        a.rhs = "0";
        a.margin = "violations";
        rep.add(std::move(a));
        Assertion c;
        c.name = "c-max over suite";
        c.pass = c_max.is_finite();
        c.lhs = real_str(c_max);
        c.rhs = "";
        c.margin = "";
        c.witness = {{"sample_index", worst_index}};
        rep.add(std::move(c));
    }
    return rep;
}

Report suite_growth(const std::string& params_path, long jmax) {
    Report rep;
    rep.suite = "growth";
    auto params = load_params(params_path);
    rep.config = {{"params", json::parse(params->to_json_string())}, {"jmax", jmax}};

    std::vector<mpz_class> js;
    for (long j = 1; j <= jmax && mpz_class(j) <= params->capacity(); ++j) js.push_back(j);
    for (int m = 1; m <= params->blocks(); ++m)
        if (params->k_at(m) > jmax) js.push_back(params->k_at(m));

    GrowthReport gr = example_growth_suite(*params, js);
    for (const auto& row : gr.rows) {
        Assertion a;
        std::string tag = row.in_window ? (" (window l=" + std::to_string(row.window_l) + ")")
                                        : " (out-of-window)";
        a.name = "growth j=" + row.j.get_str() + tag;
        a.pass = row.pass;
        a.lhs = real_str(row.ratio_r);
        a.rhs = real_str(row.proof_bound_r);
        a.margin = real_str(row.proof_bound_r - row.ratio_r);
        a.witness = {{"norm", real_str(row.norm)},
                     {"ratio", real_str(row.ratio)},
                     {"block_ratio_r", real_str(row.block_ratio_r)}};
        rep.add(std::move(a));
    }
    Assertion worst;
    worst.name = "worst ratio over range";
    worst.pass = true;
    worst.lhs = real_str(gr.worst_ratio);
    rep.add(std::move(worst));
    return rep;
}

Report suite_duality(const std::string& params_path, std::uint64_t seed) {
    Report rep;
    rep.suite = "duality";
    rep.config = {{"seed", seed}};

    // lp duals agree with ascent+certificate bounds on small instances.
    {
        Rng rng(seed);
        Real worst_gap;
        for (int t = 0; t < 20; ++t) {
            int n = static_cast<int>(rng.uniform_int(1, 6));
            std::vector<double> c(static_cast<size_t>(n));
            for (auto& x : c) x = rng.gaussian();
            Functional f = Functional::coordinates(CoeffVec::of(c));
            Real exact = lp_dual_eval(2, f);
            DualBound db = dual_bounds(PrimalSpace{LpNorm{2}, false}, f, 800,
                                       seed + static_cast<std::uint64_t>(t), n);
            Real gap = abs(db.upper - db.lower);
            if (!exact.is_zero()) gap /= exact;
            if (gap > worst_gap) worst_gap = gap;
        }
        rep.add(Assertion::compare("lp dual agreement (20 seeded, n<=6)",
                                   worst_gap <= Real::of(1e-9), worst_gap, Real::of(1e-9)));
    }
    // S over James-l2: the partition {[1,n]} certificate meets the witness u1.
    {
        DualBound db = dual_bounds(PrimalSpace{LpNorm{2}, true}, Functional::summing(), 300, seed, 5);
        rep.add(Assertion::compare("james-l2 S lower=1", db.lower == Real::of(1L), db.lower,
                                   Real::of(1L)));
        rep.add(Assertion::compare("james-l2 S upper=1", db.upper == Real::of(1L), db.upper,
                                   Real::of(1L)));
    }
    {
        CoeffVec e1 = CoeffVec::zeros(2);
        e1.at1(1) = Real::of(1L);
        DualBound db =
            dual_bounds(PrimalSpace{LpNorm{2}, true}, Functional::coordinates(e1), 300, seed, 2);
        rep.add(Assertion::compare("james-l2 u'_1 tight at 1",
                                   db.lower == Real::of(1L) && db.upper == Real::of(1L), db.lower,
                                   db.upper));
    }

    if (!params_path.empty()) {
        auto params = load_params(params_path);
        rep.config["params"] = json::parse(params->to_json_string());
        for (int n = 1; n <= params->blocks(); ++n) {
            DualOnesReport d = dual_ones_upper_bound(*params, n);
            Assertion a = Assertion::compare("dual-ones n=" + std::to_string(n) + " lower<=upper",
                                             d.lower <= d.upper * (Real::of(1L) + Real::of(1e-24)),
                                             d.lower, d.upper);
            a.witness = {{"equality", d.equality}, {"pairing_ok", d.pairing_ok}};
            rep.add(std::move(a));
        }
        NonDominationReport nd = dual_nondomination_report(*params, params->blocks());
        for (const auto& row : nd.ratios) {
            Real m = Real::of(static_cast<long>(row.m));
            Assertion a = Assertion::compare(
                "nondomination ratio at k_" + std::to_string(row.m) + " >= " + std::to_string(row.m),
                row.ratio * (Real::of(1L) + Real::of(default_rel_tolerance())) >= m, row.ratio, m);
            rep.add(std::move(a));
        }
        {
            nlohmann::json growth = nlohmann::json::array();
            for (const auto& row : nd.growth)
                growth.push_back({{"j", row.j.get_str()},
                                  {"j_pow_inv_r_conj", real_str(row.j_pow_inv_r_conj)},
                                  {"j_pow_inv_p", real_str(row.j_pow_inv_p)},
                                  {"pairing_lower", real_str(row.pairing_lower)}});
            Assertion a;
            a.name = "nondomination growth table";
            a.pass = true;
            a.witness = std::move(growth);
            rep.add(std::move(a));
        }
        // Cross-check block 2 against the generic machinery when it is small
        // enough to norm explicitly.
        if (params->blocks() >= 2 && params->k_at(2) <= 2000) {
            long kn = params->k_at(2).get_si();
            Functional f = Functional::coordinates(CoeffVec::ones(static_cast<int>(kn)));
            DualBound db = dual_bounds(PrimalSpace{SymmetricHullNorm{params}, false}, f,
                                       static_cast<int>(kn) + 80, seed, static_cast<int>(kn));
            DualOnesReport d = dual_ones_upper_bound(*params, 2);
            rep.add(Assertion::compare("symhull ones(k_2) dual_bounds matches certified route",
                                       rel_close(db.lower, d.lower, 1e-20) &&
                                           rel_close(db.upper, d.upper, 1e-20),
                                       db.lower, d.upper));
        }
    }
    return rep;
}

Report suite_equivalence(const std::string& base_spec, int m_max, int cap, int samples,
                         std::uint64_t seed) {
    Report rep;
    rep.suite = "equivalence";
    rep.config = {{"base", base_spec},
                  {"m_max", m_max},
                  {"cap", cap},
                  {"samples", samples},
                  {"seed", seed}};
    NormSpec base = parse_norm_spec(base_spec);
    bool is_l2 = false;
    if (const auto* lp = std::get_if<LpNorm>(&base)) is_l2 = (lp->p == 2);

    for (int m = 1; m <= m_max; ++m) {
        PairEquivalenceReport pr = pair_equivalence_report(base, m, cap, samples, seed);
        bool sane = pr.c_low > Real() && pr.c_low <= pr.c_high && pr.c_high.is_finite();
        Assertion a = Assertion::compare("range m=" + std::to_string(m), sane, pr.c_low, pr.c_high);
        a.witness = {{"arg_low", pr.arg_low}, {"arg_high", pr.arg_high}};
        rep.add(std::move(a));
    }
    if (is_l2 && m_max >= 2) {
        PairEquivalenceReport p1 = pair_equivalence_report(base, 1, cap, samples, seed);
        rep.add(Assertion::compare("m=1 witness sqrt(2)", rel_close(p1.c_high, sqrt(Real::of(2L)), 1e-24),
                                   p1.c_high, sqrt(Real::of(2L))));
        PairEquivalenceReport p2 = pair_equivalence_report(base, 2, cap, samples, seed);
        rep.add(Assertion::compare("m=2 witness sqrt(3)", rel_close(p2.c_high, sqrt(Real::of(3L)), 1e-24),
                                   p2.c_high, sqrt(Real::of(3L))));
    }
    return rep;
}

Report suite_right_dominance(const std::string& space_spec, int dim, int samples,
                             std::uint64_t seed) {
    Report rep;
    rep.suite = "right-dominance";
    rep.config = {{"space", space_spec}, {"dim", dim}, {"samples", samples}, {"seed", seed}};
    NormSpec norm = parse_norm_spec(space_spec);
    RightDominanceReport rd = right_dominance_profile(norm, dim, samples, seed);
    Assertion a;
    a.name = is_symmetric(norm) ? "worst ratio == 1 (symmetric basis)" : "worst ratio (recorded)";
    a.pass = is_symmetric(norm) ? (rd.worst_ratio == Real::of(1L)) : rd.worst_ratio.is_finite();
    a.lhs = real_str(rd.worst_ratio);
    a.rhs = "1";
    a.margin = rd.exhaustive_systems ? "exhaustive systems" : "sampled systems";
    a.witness = {{"m", rd.worst_m}, {"n", rd.worst_n}, {"values", rd.worst_values},
                 {"samples", rd.samples}};
    rep.add(std::move(a));
    return rep;
}

Report suite_upper_p(const std::string& space_spec, const std::string& p_text, int trials,
                     std::uint64_t seed) {
    Report rep;
    rep.suite = "upper-p";
    rep.config = {{"space", space_spec}, {"p", p_text}, {"trials", trials}, {"seed", seed}};
    NormSpec norm = parse_norm_spec(space_spec);
    mpq_class p = parse_rational(p_text);
    UpperPReport up = check_upper_p_estimate(norm, p, trials, seed);
    Assertion a = Assertion::compare("worst ratio <= 1 + 1e-12", up.pass, up.worst_ratio,
                                     Real::of(1L) + Real::of(up.tolerance));
    a.witness = {{"worst_parts", up.worst_parts}};
    rep.add(std::move(a));
    return rep;
}

// ---- commands ----

int cmd_norm(const std::string& space_spec, const std::string& coeffs_text, long ones_count,
             bool witness, const std::string& out_path, std::ostream& out) {
    PrimalSpace space = parse_space_spec(space_spec);
    json j;
    j["space"] = space_spec;

    if (ones_count > 0) {
        if (space.james) throw ConfigError("--ones is a base-norm pathway");
        if (const auto* sh = std::get_if<SymmetricHullNorm>(&space.base)) {
            OnesNormResult on = ones_norm(*sh->params, mpz_class(ones_count));
            j["value"] = on.value.to_double();
            j["value_str"] = real_str(on.value);
            if (witness) j["witness"] = ones_witness(on);
        } else if (const auto* bt = std::get_if<BlockTNorm>(&space.base)) {
            // identity placement: the first `ones` coordinates of the t-basis
            CountVec cv;
            mpz_class left = ones_count;
            for (int b = 1; b <= bt->params->blocks() && left > 0; ++b) {
                mpz_class take = std::min(left, bt->params->k_at(b));
                cv.groups.push_back(CountVec::Group{Real::of(1L), take, b});
                left -= take;
            }
            if (left > 0) throw InsufficientParams("ones count exceeds capacity");
            Real v = t_norm_eval_counts(*bt->params, cv);
            j["value"] = v.to_double();
            j["value_str"] = real_str(v);
        } else {
            if (ones_count > kMaxExplicitCoords) throw CapExceeded("ones count too large");
            Real v = norm_eval(space.base, CoeffVec::ones(static_cast<int>(ones_count)));
            j["value"] = v.to_double();
            j["value_str"] = real_str(v);
        }
        emit(j, out_path, out);
        return 0;
    }

    if (const auto* lp = std::get_if<LpNorm>(&space.base))
        if (lp->p == 1) j["note"] = "p = 1 base is non-shrinking; oracle use only";

    CoeffVec v = CoeffVec::of(parse_coeff_list(coeffs_text));
    if (space.james) {
        if (witness || !is_lp(space.base)) {
            JamesNormResult r = james_norm_exhaustive(JamesVec{v, space.base});
            j["value"] = r.value.to_double();
            j["value_str"] = real_str(r.value);
            if (witness) {
                std::vector<int> starts(r.witness.cuts.begin(), r.witness.cuts.end() - 1);
                j["partition"] = starts;
            }
        } else {
            Real r = james_norm_dp(JamesVec{v, space.base});
            j["value"] = r.to_double();
            j["value_str"] = real_str(r);
        }
    } else if (const auto* sh = std::get_if<SymmetricHullNorm>(&space.base)) {
        HullEval h = symmetric_hull_eval(*sh->params, v, HullMode::exact);
        j["value"] = h.value.to_double();
        j["value_str"] = real_str(h.value);
        if (witness) {
            json counts = json::array();
            for (const auto& row : h.counts) {
                json r = json::array();
                for (const auto& c : row) r.push_back(c.get_str());
                counts.push_back(std::move(r));
            }
            j["witness"] = {{"distinct", coeffs_json(h.distinct)},
                            {"block_counts", counts},
                            {"flat_term_attains", h.flat_term_attains}};
        }
    } else {
        Real r = norm_eval(space.base, v);
        j["value"] = r.to_double();
        j["value_str"] = real_str(r);
    }
    emit(j, out_path, out);
    return 0;
}

int cmd_construct(const std::string& p_text, const std::string& r_text, int L, long precision,
                  const std::string& out_path, std::ostream& out) {
    mpq_class p = parse_rational(p_text);
    mpq_class r = parse_rational(r_text);
    ConstructionParams params = generate_k_sequence(p, r, L, precision);
    FeasibilityReport fr = check_feasibility(params);
    if (!fr.pass) throw Error("generated parameters failed re-verification");
    if (!out_path.empty()) params.save(out_path);
    json j = json::parse(params.to_json_string());
    json alphas = json::array();
    for (const auto& a : params.alpha) alphas.push_back(real_str(a));
    j["alpha"] = alphas;
    j["verified"] = true;
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_dominate(const std::string& from_spec, const std::string& to_spec, int dim, int budget,
                 std::uint64_t seed, const std::string& out_path, std::ostream& out) {
    NormSpec from = parse_norm_spec(from_spec);
    NormSpec to = parse_norm_spec(to_spec);
    DominationReport rep = domination_constant_lb(from, to, dim, budget, seed);
    json j;
    j["config"] = {{"from", from_spec}, {"to", to_spec}, {"dim", dim}, {"budget", budget},
                   {"seed", seed}};
    j["constant_lb"] = rep.constant_lb.to_double();
    j["constant_lb_str"] = real_str(rep.constant_lb);
    j["witness"] = coeffs_json(rep.witness.a);
    j["samples"] = rep.samples;
    emit(j, out_path, out);
    return 0;
}

int cmd_dual(const std::string& space_spec, const std::string& functional_text, int dim,
             int budget, std::uint64_t seed, const std::string& out_path, std::ostream& out) {
    PrimalSpace space = parse_space_spec(space_spec);
    Functional f;
    if (functional_text == "S")
        f = Functional::summing();
    else
        f = Functional::coordinates(CoeffVec::of(parse_coeff_list(functional_text)));

    json j;
    j["config"] = {{"space", space_spec}, {"functional", functional_text}, {"dim", dim},
                   {"budget", budget}, {"seed", seed}};
    if (!space.james && is_lp(space.base) && functional_text != "S") {
        const auto& lp = std::get<LpNorm>(space.base);
        if (lp.p > 1) {
            Real v = lp_dual_eval(lp.p, f);
            j["value"] = v.to_double();
            j["value_str"] = real_str(v);
        }
    }
    DualBound db = dual_bounds(space, f, budget, seed, dim);
    j["lower"] = db.lower.to_double();
    j["lower_str"] = real_str(db.lower);
    j["upper"] = db.upper.to_double();
    j["upper_str"] = real_str(db.upper);
    j["certificate"] = db.certificate;
    j["tight"] = db.tight;
    j["witness"] = coeffs_json(db.witness.a);
    emit(j, out_path, out);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"James-type sequence-space norm laboratory"};
    app.require_subcommand(1);

    long precision = 128;
    app.add_option("--precision", precision, "working precision in bits")->capture_default_str();

    // norm
    auto* norm = app.add_subcommand("norm", "evaluate a norm");
    std::string norm_space, norm_coeffs, norm_out;
    long norm_ones = 0;
    bool norm_witness = false;
    norm->add_option("--space", norm_space, "space spec")->required();
    norm->add_option("--coeffs", norm_coeffs, "comma-separated coefficients");
    norm->add_option("--ones", norm_ones, "norm of the sum of the first N basis vectors");
    norm->add_flag("--witness", norm_witness, "include the argmax witness");
    norm->add_option("--out", norm_out, "write the JSON to a file");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite, v_params, v_base = "lp:p=2", v_space = "lp:p=2", v_p = "2", v_out;
    int v_samples = 100, v_dim = 8, v_l = 0, v_maxn = 12, v_cap = kDefaultPartitionCap;
    int v_m = 3, v_trials = 200;
    long v_jmax = 20;
    bool v_csv = false;
    std::uint64_t v_seed = 42;
    verify->add_option("suite", suite,
                       "one of: calc-lemma feasibility norm-lemma growth duality equivalence "
                       "right-dominance upper-p")
        ->required();
    verify->add_option("--params", v_params, "construction params JSON");
    verify->add_option("--base", v_base, "base norm spec");
    verify->add_option("--space", v_space, "norm spec");
    verify->add_option("--p", v_p, "exponent for upper-p");
    verify->add_option("--samples", v_samples, "sample count");
    verify->add_option("--trials", v_trials, "trial count (upper-p)");
    verify->add_option("--seed", v_seed, "seed");
    verify->add_option("--dim", v_dim, "dimension");
    verify->add_option("--l", v_l, "level (calc-lemma; 0 = all)");
    verify->add_option("--max-n", v_maxn, "max system length (norm-lemma)");
    verify->add_option("--cap", v_cap, "enumeration cap");
    verify->add_option("--m", v_m, "max pair count (equivalence)");
    verify->add_option("--jmax", v_jmax, "range limit (growth)");
    verify->add_flag("--csv", v_csv, "emit a flat CSV table instead of JSON");
    verify->add_option("--out", v_out, "write the report to a file");

    // construct
    auto* construct = app.add_subcommand("construct", "generate construction parameters");
    std::string c_p, c_r, c_out;
    int c_L = 3;
    construct->add_option("--p", c_p, "exact rational, e.g. 3/2")->required();
    construct->add_option("--r", c_r, "exact rational, e.g. 4")->required();
    construct->add_option("--L", c_L, "number of blocks")->capture_default_str();
    construct->add_option("--out", c_out, "params file to write");

    // dominate
    auto* dominate = app.add_subcommand("dominate", "estimate a domination constant");
    std::string d_from, d_to, d_out;
    int d_dim = 4, d_budget = 5000;
    std::uint64_t d_seed = 0;
    dominate->add_option("--from", d_from, "spec of the dominating side")->required();
    dominate->add_option("--to", d_to, "spec of the dominated side")->required();
    dominate->add_option("--dim", d_dim, "dimension")->capture_default_str();
    dominate->add_option("--budget", d_budget, "norm evaluations")->capture_default_str();
    dominate->add_option("--seed", d_seed, "seed")->required();
    dominate->add_option("--out", d_out, "write the JSON to a file");

    // dual
    auto* dual = app.add_subcommand("dual", "bound a dual norm");
    std::string u_space, u_functional, u_out;
    int u_dim = 0, u_budget = 2000;
    std::uint64_t u_seed = 1;
    dual->add_option("--space", u_space, "primal space spec")->required();
    dual->add_option("--functional", u_functional, "S or comma-separated coefficients")->required();
    dual->add_option("--dim", u_dim, "witness search dimension (default: functional length)");
    dual->add_option("--budget", u_budget, "norm evaluations")->capture_default_str();
    dual->add_option("--seed", u_seed, "seed")->required();
    dual->add_option("--out", u_out, "write the JSON to a file");

    std::vector<std::string> raw = args;
    std::vector<const char*> argv;
    argv.push_back("jameslab");
    for (const auto& a : raw) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        set_default_precision(precision);
        if (*norm) return cmd_norm(norm_space, norm_coeffs, norm_ones, norm_witness, norm_out, out);
        if (*construct) return cmd_construct(c_p, c_r, c_L, precision, c_out, out);
        if (*dominate) return cmd_dominate(d_from, d_to, d_dim, d_budget, d_seed, d_out, out);
        if (*dual) return cmd_dual(u_space, u_functional, u_dim, u_budget, u_seed, u_out, out);
        if (*verify) {
            Report rep;
            if (suite == "feasibility")
                rep = suite_feasibility(v_params);
            else if (suite == "calc-lemma")
                rep = suite_calc_lemma(v_params, v_l, v_seed);
            else if (suite == "norm-lemma")
                rep = suite_norm_lemma(v_base, v_samples, v_seed, v_maxn, v_cap);
            else if (suite == "growth")
                rep = suite_growth(v_params, v_jmax);
            else if (suite == "duality")
                rep = suite_duality(v_params, v_seed);
            else if (suite == "equivalence")
                rep = suite_equivalence(v_base, v_m, v_cap, v_samples, v_seed);
            else if (suite == "right-dominance")
                rep = suite_right_dominance(v_space, v_dim, v_samples, v_seed);
            else if (suite == "upper-p")
                rep = suite_upper_p(v_space, v_p, v_trials, v_seed);
            else
                throw ConfigError("unknown suite '" + suite + "'");
            emit_report(rep, v_out, v_csv, out);
            return rep.all_pass() ? 0 : 1;
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace jameslab
