#include "jameslab/domination.hpp"

#include "jameslab/errors.hpp"
#include "testutil.hpp"

#include <doctest.h>

#include <memory>

using namespace jameslab;

namespace {

NormSpec lp(long p) { return LpNorm{mpq_class(p)}; }
NormSpec lp(const mpq_class& p) { return LpNorm{p}; }

std::shared_ptr<const ConstructionParams> preset2() {
    static auto p = std::make_shared<const ConstructionParams>(
        ConstructionParams::make(mpq_class(3, 2), mpq_class(4), {1, 648}));
    return p;
}

} // namespace

TEST_CASE("domination constants for lp pairs") {
    // l1 dominates l2 with constant exactly 1 (basis witness)
    DominationReport a = domination_constant_lb(lp(1), lp(2), 4, 2000, 7);
    CHECK(a.constant_lb == Real::of(1L));

    // l2 -> l1 at dim n: the constant vector achieves sqrt(n)
    for (int n = 1; n <= 6; ++n) {
        DominationReport b = domination_constant_lb(lp(2), lp(1), n, 2000, 7);
        CHECK(b.constant_lb + Real::of(1e-6) >= sqrt(Real::of(static_cast<long>(n))));
    }

    // identity
    DominationReport c = domination_constant_lb(lp(mpq_class(3, 2)), lp(mpq_class(3, 2)), 5, 500, 3);
    CHECK(c.constant_lb == Real::of(1L));

    CHECK_THROWS_AS(domination_constant_lb(lp(1), lp(2), 0, 10, 1), ConfigError);
}

TEST_CASE("domination lower bound is monotone in dim") {
    Real prev;
    for (int n = 1; n <= 6; ++n) {
        DominationReport r = domination_constant_lb(lp(2), lp(1), n, 1500, 11);
        CHECK(r.constant_lb + Real::of(1e-18) >= prev); // witnesses embed by zero-padding
        prev = r.constant_lb;
    }
}

TEST_CASE("domination reports are reproducible") {
    DominationReport a = domination_constant_lb(lp(2), lp(1), 4, 800, 123);
    DominationReport b = domination_constant_lb(lp(2), lp(1), 4, 800, 123);
    CHECK(a.constant_lb == b.constant_lb);
    CHECK(a.witness.a == b.witness.a);
}

TEST_CASE("right dominance: symmetric bases sit at exactly 1") {
    RightDominanceReport a = right_dominance_profile(lp(mpq_class(3, 2)), 6, 100, 5);
    CHECK(a.exhaustive_systems);
    CHECK(a.worst_ratio == Real::of(1L));

    LorentzNorm lor;
    lor.p = 2;
    RightDominanceReport b = right_dominance_profile(NormSpec{lor}, 6, 100, 5);
    CHECK(b.worst_ratio == Real::of(1L));
}

TEST_CASE("right dominance: block norm profile is recorded and deterministic") {
    NormSpec bt{BlockTNorm{preset2()}};
    RightDominanceReport a = right_dominance_profile(bt, 30, 300, 42);
    RightDominanceReport b = right_dominance_profile(bt, 30, 300, 42);
    CHECK(a.worst_ratio == b.worst_ratio);
    CHECK(a.worst_ratio.is_finite());
    CHECK(a.worst_ratio >= Real::of(1L)); // m(i) = n(i) systems are sampled
}

TEST_CASE("pair equivalence report on l2") {
    PairEquivalenceReport m1 = pair_equivalence_report(lp(2), 1);
    CHECK(testutil::close(m1.c_low, sqrt(Real::of(2L)), 1e-30));
    CHECK(testutil::close(m1.c_high, sqrt(Real::of(2L)), 1e-30));

    PairEquivalenceReport m2 = pair_equivalence_report(lp(2), 2);
    // b = (1,1): ||(1,-1,1,-1)||_J / ||e_2 + e_4|| = 2 / sqrt(2)
    CHECK(testutil::close(m2.c_low, sqrt(Real::of(2L)), 1e-24));
    // b = (1,-1): sqrt(6) / sqrt(2)
    CHECK(testutil::close(m2.c_high, sqrt(Real::of(3L)), 1e-24));

    PairEquivalenceReport m3 = pair_equivalence_report(lp(2), 3);
    CHECK(m3.c_low > Real());
    CHECK(m3.c_low <= m3.c_high);
    CHECK(m3.c_high.is_finite());

    CHECK_THROWS_AS(pair_equivalence_report(lp(2), 6, 20), CapExceeded); // 4m > cap
}
