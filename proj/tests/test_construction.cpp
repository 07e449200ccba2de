#include "jameslab/construction.hpp"

#include "jameslab/errors.hpp"
#include "jameslab/norms.hpp"
#include "testutil.hpp"

#include <doctest.h>

using namespace jameslab;

namespace {

const ConstructionParams& preset(int L) {
    static ConstructionParams p2 = generate_k_sequence(mpq_class(3, 2), mpq_class(4), 2);
    static ConstructionParams p3 = generate_k_sequence(mpq_class(3, 2), mpq_class(4), 3);
    return L == 2 ? p2 : p3;
}

const mpz_class& k3_expected() {
    // 3359235^4 * 27 with 3359235 = 1 + 2(1 + 4*648^2)
    static mpz_class k3("3438153881397726834464116875");
    return k3;
}

} // namespace

TEST_CASE("generate_k_sequence produces the minimal preset") {
    const ConstructionParams& p = preset(2);
    REQUIRE(p.blocks() == 2);
    CHECK(p.k_at(1) == 1);
    CHECK(p.k_at(2) == 648); // 3^4 * 2^3, exact
    CHECK(p.alpha_at(1) == Real::of(1L));

    const ConstructionParams& q = preset(3);
    REQUIRE(q.blocks() == 3);
    CHECK(q.k_at(3) == k3_expected());

    ConstructionParams one = generate_k_sequence(mpq_class(3, 2), mpq_class(4), 1);
    CHECK(one.blocks() == 1);
    CHECK(one.k_at(1) == 1);
}

TEST_CASE("infeasible regimes are rejected at entry") {
    // r' = 2 > p
    CHECK_THROWS_AS(generate_k_sequence(mpq_class(3, 2), mpq_class(2), 2), ConfigError);
    CHECK_THROWS_AS(generate_k_sequence(mpq_class(5, 2), mpq_class(4), 2), ConfigError);
    // r' = 3/2 < 7/4: regime fine, generation must succeed
    ConstructionParams ok = generate_k_sequence(mpq_class(7, 4), mpq_class(3), 2);
    CHECK(ok.blocks() == 2);
    CHECK(check_feasibility(ok).pass);
}

TEST_CASE("check_feasibility: margins and tampering") {
    FeasibilityReport good = check_feasibility(preset(2));
    CHECK(good.pass);
    bool found_binding = false;
    for (const auto& e : good.entries) {
        if (e.inequality == "growth-sum" && e.n == 2) {
            CHECK(e.exact);
            CHECK(e.margin == "0"); // 648 = 3^4 * 2^3 exactly
            found_binding = true;
        }
    }
    CHECK(found_binding);

    ConstructionParams bad = ConstructionParams::make(mpq_class(3, 2), mpq_class(4), {1, 647});
    FeasibilityReport tampered = check_feasibility(bad);
    CHECK_FALSE(tampered.pass);

    ConstructionParams lone = ConstructionParams::make(mpq_class(3, 2), mpq_class(4), {1});
    CHECK(check_feasibility(lone).pass);
}

TEST_CASE("generated sequences re-verify and are minimal at the last step") {
    for (auto [pn, pd, rn, rd] : {std::tuple{3L, 2L, 4L, 1L}, std::tuple{7L, 4L, 3L, 1L},
                                  std::tuple{5L, 3L, 7L, 2L}}) {
        ConstructionParams p =
            generate_k_sequence(mpq_class(pn, pd), mpq_class(rn, rd), 3);
        CHECK(check_feasibility(p).pass);
        // one integer below the last block size must violate an inequality
        std::vector<mpz_class> k = p.k;
        k.back() -= 1;
        ConstructionParams shaved = ConstructionParams::make(p.p, p.r, k, p.precision_bits);
        CHECK_FALSE(check_feasibility(shaved).pass);
    }
}

TEST_CASE("calc windows") {
    CalcWindow w1 = calc_window(preset(3), 1);
    CHECK(w1.lo == 0);
    CHECK(w1.hi == 1);
    CalcWindow w2 = calc_window(preset(3), 2);
    CHECK(w2.lo == 2);
    CHECK(w2.hi == 3); // 648^{1/4} / 2^{3/4} = 3 exactly
    CalcWindow w3 = calc_window(preset(3), 3);
    CHECK(w3.lo == 3359234);
    CHECK(w3.hi == 3359235);

    CHECK(calc_admissible(preset(3), CalcInstance{2, 3}));
    CHECK_FALSE(calc_admissible(preset(3), CalcInstance{2, 4}));
}

TEST_CASE("calc lemma vertex maximization") {
    // l=1, j=1: f = x^{8/3} on [0,1], max 1 <= 2.5
    CalcMaxResult a = calc_lemma_max(preset(3), CalcInstance{1, 1});
    CHECK(a.max_value == Real::of(1L));
    CHECK(a.bound == Real::of(2.5));
    CHECK(a.pass);

    // l=1, j=0 edge: f = 0 <= 2
    CalcMaxResult zero = calc_lemma_max(preset(3), CalcInstance{1, 0});
    CHECK(zero.max_value.is_zero());
    CHECK(zero.pass);

    // l=2, j=3: best vertex 1 + alpha_2^4 * 2^{8/3} ~= 1.3392 <= 3.5
    CalcMaxResult b = calc_lemma_max(preset(3), CalcInstance{2, 3});
    CHECK(b.pass);
    CHECK(testutil::close(b.max_value, Real::of(1.3391745903), 1e-9));
    REQUIRE(b.maximizer.size() == 2);
    CHECK(b.maximizer[0] == 1);
    CHECK(b.maximizer[1] == 2);

    CHECK_THROWS_AS(calc_lemma_max(preset(3), CalcInstance{2, 7}), Error);
}

TEST_CASE("interior probe never beats the vertex max") {
    for (const CalcInstance inst : {CalcInstance{1, 1}, CalcInstance{2, 2}, CalcInstance{2, 3},
                                    CalcInstance{3, mpz_class(3359234)},
                                    CalcInstance{3, mpz_class(3359235)}}) {
        CalcMaxResult mx = calc_lemma_max(preset(3), inst);
        Real probe = calc_interior_probe(preset(3), inst, 80, 4);
        CHECK(probe <= mx.max_value * (Real::of(1L) + Real::of(1e-24)));
    }
}

TEST_CASE("ones norm closed forms") {
    CHECK(ones_norm(preset(2), 1).value == Real::of(1L));
    CHECK(testutil::close(ones_norm(preset(2), 3).value, pow_q(Real::of(3L), mpq_class(1, 4)),
                          1e-30));
    OnesNormResult full = ones_norm(preset(2), 648);
    CHECK(testutil::close(full.value, Real::of(36L), 1e-30));
    REQUIRE(full.counts.size() == 2);
    CHECK(full.counts[0] == 0);
    CHECK(full.counts[1] == 648);
    CHECK_FALSE(full.flat_attains);

    CHECK(ones_norm(preset(2), 0).value.is_zero());
    CHECK_THROWS_AS(ones_norm(preset(2), 650), InsufficientParams);
}

TEST_CASE("ones norm is non-decreasing in j") {
    Real prev;
    for (long j = 0; j <= 40; ++j) {
        Real v = ones_norm(preset(2), j).value;
        CHECK(v + Real::of(1e-30) >= prev);
        prev = v;
    }
}

TEST_CASE("ones norm count route matches the exact hull on synthetic blocks") {
    // k = (2, 3) fails the growth inequalities; as a pure optimization
    // instance both routes must still agree.
    ConstructionParams synth = ConstructionParams::make(mpq_class(3, 2), mpq_class(4), {2, 3});
    for (long j = 0; j <= 5; ++j) {
        OnesNormResult count_route = ones_norm(synth, j);
        if (j == 0) {
            CHECK(count_route.value.is_zero());
            continue;
        }
        HullEval hull =
            symmetric_hull_eval(synth, CoeffVec::ones(static_cast<int>(j)), HullMode::exact);
        CHECK(testutil::close(count_route.value, hull.value, 1e-30));
    }
    for (long j = 0; j <= 8; ++j) {
        OnesNormResult count_route = ones_norm(preset(2), j);
        if (j == 0) continue;
        HullEval hull =
            symmetric_hull_eval(preset(2), CoeffVec::ones(static_cast<int>(j)), HullMode::exact);
        CHECK(testutil::close(count_route.value, hull.value, 1e-30));
    }
}

TEST_CASE("growth suite") {
    std::vector<mpz_class> js;
    for (long j = 1; j <= 3; ++j) js.push_back(j);
    GrowthReport small = example_growth_suite(preset(2), js);
    REQUIRE(small.rows.size() == 3);
    for (const auto& row : small.rows) {
        CHECK(row.in_window);
        CHECK(row.pass);
        CHECK(row.ratio <= Real::of(1L)); // flat term attains on 1..3
    }

    GrowthReport at_k2 = example_growth_suite(preset(2), {mpz_class(648)});
    REQUIRE(at_k2.rows.size() == 1);
    CHECK_FALSE(at_k2.rows[0].in_window); // 648 > 3, outside every window
    CHECK(testutil::close(at_k2.rows[0].ratio,
                          Real::of(36L) / pow_q(Real::of(648L), mpq_class(1, 4)), 1e-24));

    CHECK(example_growth_suite(preset(2), {}).rows.empty());
}

TEST_CASE("sqrt(n k_n) lower bound") {
    SqrtNkReport a = sqrt_nk_lower_bound(preset(3), 1);
    CHECK(a.holds);
    CHECK(a.equality); // ||e_1|| = 1 = sqrt(1*1)
    SqrtNkReport b = sqrt_nk_lower_bound(preset(3), 2);
    CHECK(b.holds);
    CHECK(b.equality); // 36 = sqrt(2*648)
    CHECK(testutil::close(b.bound, Real::of(36L), 1e-30));
    SqrtNkReport c = sqrt_nk_lower_bound(preset(3), 3); // counts route, k_3 ~ 3.4e27
    CHECK(c.holds);
    CHECK(c.equality);
}

TEST_CASE("dual ones bounds") {
    DualOnesReport a = dual_ones_upper_bound(preset(3), 1);
    CHECK(a.upper == Real::of(1L)); // 1/alpha_1
    CHECK(testutil::close(a.lower, Real::of(1L), 1e-30));
    CHECK(a.equality);
    CHECK(a.pairing_ok);

    DualOnesReport b = dual_ones_upper_bound(preset(3), 2);
    CHECK(testutil::close(b.upper, Real::of(18L), 1e-30)); // sqrt(648/2)
    CHECK(testutil::close(b.lower, Real::of(18L), 1e-30)); // 648/36
    CHECK(b.equality);
    CHECK(b.pairing_ok);

    DualOnesReport c = dual_ones_upper_bound(preset(3), 3);
    CHECK(c.lower <= c.upper * (Real::of(1L) + Real::of(1e-24)));
    CHECK(c.pairing_ok);
}

TEST_CASE("duality pairing at the checkpoints") {
    for (int n = 1; n <= 2; ++n) {
        const mpz_class& kn = preset(2).k_at(n);
        Real ones_val = ones_norm(preset(2), kn).value;
        Real upper = dual_ones_upper_bound(preset(2), n).upper;
        CHECK(Real::of(kn) <= ones_val * upper * (Real::of(1L) + Real::of(1e-24)));
    }
}

TEST_CASE("non-domination growth tables") {
    NonDominationReport rep = dual_nondomination_report(preset(3), 2);
    REQUIRE(rep.ratios.size() == 2);
    CHECK(testutil::close(rep.ratios[0].ratio, Real::of(1L), 1e-24));
    CHECK(testutil::close(rep.ratios[1].ratio, Real::of(2L), 1e-24)); // 36/18 = 2 = n
    bool found3 = false;
    for (const auto& row : rep.growth) {
        if (row.j == 3) {
            // j^{1/r'} = 3^{3/4} matches the pairing route 3/3^{1/4}
            CHECK(testutil::close(row.j_pow_inv_r_conj, row.pairing_lower, 1e-24));
            found3 = true;
        }
        // r' < p, so the dual-side exponent grows strictly faster
        if (row.j >= 2) CHECK(row.j_pow_inv_r_conj > row.j_pow_inv_p);
    }
    CHECK(found3);
}

TEST_CASE("alpha identity holds exactly for the preset") {
    for (int n = 1; n <= 3; ++n) CHECK(alpha_identity_exact(preset(3), n));
    ConstructionParams other = generate_k_sequence(mpq_class(7, 4), mpq_class(3), 2);
    for (int n = 1; n <= 2; ++n) CHECK(alpha_identity_exact(other, n));
}

TEST_CASE("params JSON round trip") {
    const ConstructionParams& p = preset(3);
    ConstructionParams q = ConstructionParams::from_json_string(p.to_json_string());
    CHECK(q.p == p.p);
    CHECK(q.r == p.r);
    CHECK(q.k == p.k);
    CHECK(q.precision_bits == p.precision_bits);
    CHECK_THROWS_AS(ConstructionParams::from_json_string("{\"p\": \"1.5\"}"), ConfigError);
    CHECK_THROWS_AS(parse_rational("1.5"), ConfigError);
    CHECK(parse_rational("3/2") == mpq_class(3, 2));
}
