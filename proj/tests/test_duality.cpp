#include "jameslab/duality.hpp"

#include "jameslab/errors.hpp"
#include "testutil.hpp"

#include <doctest.h>

#include <memory>

using namespace jameslab;

namespace {

NormSpec lp2() { return LpNorm{mpq_class(2)}; }

std::shared_ptr<const ConstructionParams> preset2() {
    static auto p = std::make_shared<const ConstructionParams>(
        ConstructionParams::make(mpq_class(3, 2), mpq_class(4), {1, 648}));
    return p;
}

} // namespace

TEST_CASE("pairing") {
    Functional u2 = Functional::coordinates(CoeffVec::of({0, 1}));
    CHECK(pair_with(u2, CoeffVec::of({1, -1})) == Real::of(-1L));
    CHECK(pair_with(Functional::summing(), CoeffVec::of({1, -1})).is_zero());
    Functional e123 = Functional::coordinates(CoeffVec::of({1, 1, 1}));
    CHECK(pair_with(e123, CoeffVec::of({1, 1, 1})) == Real::of(3L));
}

TEST_CASE("biorthogonality") {
    for (int i = 1; i <= 4; ++i) {
        CoeffVec fi = CoeffVec::zeros(4);
        fi.at1(i) = Real::of(1L);
        for (int j = 1; j <= 4; ++j) {
            CoeffVec ej = CoeffVec::zeros(4);
            ej.at1(j) = Real::of(1L);
            Real v = pair_with(Functional::coordinates(fi), ej);
            CHECK(v == (i == j ? Real::of(1L) : Real()));
        }
    }
}

TEST_CASE("lp dual closed forms") {
    CHECK(testutil::close(lp_dual_eval(2, Functional::coordinates(CoeffVec::of({1, 1}))),
                          sqrt(Real::of(2L)), 1e-30));
    CHECK(lp_dual_eval(2, Functional::coordinates(CoeffVec::of({1}))) == Real::of(1L));
    // p = 4, p' = 4/3: ||(1,1)||_{4/3} = 2^{3/4}
    CHECK(testutil::close(lp_dual_eval(4, Functional::coordinates(CoeffVec::of({1, 1}))),
                          pow_q(Real::of(2L), mpq_class(3, 4)), 1e-30));
    CHECK_THROWS_AS(lp_dual_eval(1, Functional::coordinates(CoeffVec::of({1}))), ConfigError);
    CHECK_THROWS_AS(lp_dual_eval(2, Functional::summing()), ConfigError);
    // the l^1 dual is the sup norm, kept separate
    CHECK(sup_dual_eval(Functional::coordinates(CoeffVec::of({1, -3, 2}))) == Real::of(3L));
}

TEST_CASE("dual bounds: James over l2 with the summing functional") {
    DualBound db = dual_bounds(PrimalSpace{lp2(), true}, Functional::summing(), 300, 3, 5);
    CHECK(db.lower == Real::of(1L)); // witness u_1
    CHECK(db.upper == Real::of(1L)); // |sum a_i| <= ||a||_J via {[1,n]}
    CHECK(db.tight);
}

TEST_CASE("dual bounds: coordinate functional over James-l2") {
    CoeffVec e1 = CoeffVec::zeros(2);
    e1.at1(1) = Real::of(1L);
    DualBound db = dual_bounds(PrimalSpace{lp2(), true}, Functional::coordinates(e1), 300, 3, 2);
    CHECK(db.lower == Real::of(1L));
    CHECK(db.upper == Real::of(1L));
}

TEST_CASE("dual bounds: hull ones functional is tight at sqrt(k_2/2)") {
    auto params = preset2();
    Functional f = Functional::coordinates(CoeffVec::ones(648));
    DualBound db = dual_bounds(PrimalSpace{SymmetricHullNorm{params}, false}, f, 800, 7, 648);
    CHECK(testutil::close(db.lower, Real::of(18L), 1e-24));
    CHECK(testutil::close(db.upper, Real::of(18L), 1e-24));
    CHECK(db.certificate == "symhull-block-placement");
    // pairing identity: <ones/36, sum e'> = 648/36 = 18
    CHECK(testutil::close(pair_with(f, db.witness), Real::of(18L), 1e-24));
}

TEST_CASE("weak duality on every emitted bound") {
    Rng rng(99);
    for (int t = 0; t < 15; ++t) {
        int n = static_cast<int>(rng.uniform_int(1, 6));
        std::vector<double> c(static_cast<size_t>(n));
        for (auto& x : c) x = rng.gaussian();
        Functional f = Functional::coordinates(CoeffVec::of(c));
        for (bool james : {false, true}) {
            DualBound db =
                dual_bounds(PrimalSpace{lp2(), james}, f, 400, static_cast<std::uint64_t>(t), n);
            CHECK(db.lower <= db.upper * (Real::of(1L) + Real::of(1e-24)));
            // the witness pairing reproduces the lower bound
            if (db.witness.n() > 0)
                CHECK(testutil::close(abs(pair_with(f, db.witness)), db.lower, 1e-24));
        }
    }
}

TEST_CASE("lp dual agrees with the bound machinery") {
    for (mpq_class p : {mpq_class(3, 2), mpq_class(2), mpq_class(3)}) {
        Rng rng(5 + static_cast<std::uint64_t>(p.get_num().get_si()));
        for (int t = 0; t < 10; ++t) {
            int n = static_cast<int>(rng.uniform_int(1, 6));
            std::vector<double> c(static_cast<size_t>(n));
            for (auto& x : c) x = rng.gaussian();
            Functional f = Functional::coordinates(CoeffVec::of(c));
            Real exact = lp_dual_eval(p, f);
            DualBound db = dual_bounds(PrimalSpace{NormSpec{LpNorm{p}}, false}, f, 500,
                                       static_cast<std::uint64_t>(t), n);
            CHECK(testutil::close(db.lower, exact, 1e-9));
            CHECK(testutil::close(db.upper, exact, 1e-9));
        }
    }
}

TEST_CASE("pairing bound |<f,x>| <= upper * ||x|| per norm") {
    LorentzNorm lor;
    lor.p = 2;
    std::vector<NormSpec> bases = {lp2(), NormSpec{lor}, NormSpec{BlockTNorm{preset2()}},
                                   NormSpec{SymmetricHullNorm{preset2()}}};
    Functional f = Functional::coordinates(CoeffVec::of({2, -1, 0.5}));
    for (size_t bi = 0; bi < bases.size(); ++bi) {
        DualBound db = dual_bounds(PrimalSpace{bases[bi], false}, f, 300, 17, 3);
        for (std::uint64_t i = 0; i < 500; ++i) {
            CoeffVec x = testutil::random_vector(18 + bi, i, 3);
            CoeffVec padded = CoeffVec::zeros(3);
            for (int j = 1; j <= x.n(); ++j) padded.at1(j) = x.at1(j);
            CHECK(abs(pair_with(f, padded)) <=
                  db.upper * norm_eval(bases[bi], padded) * (Real::of(1L) + Real::of(1e-30)));
        }
    }
}

TEST_CASE("dual bounds rejects bad configs") {
    CHECK_THROWS_AS(dual_bounds(PrimalSpace{lp2(), false}, Functional::summing(), 100, 1, 3),
                    ConfigError);
    CHECK_THROWS_AS(
        dual_bounds(PrimalSpace{lp2(), true}, Functional::coordinates(CoeffVec::of({1})), 0, 1, 1),
        ConfigError);
}
