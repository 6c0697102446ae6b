#include <catch2/catch_amalgamated.hpp>

#include "ringcodes/presets.hpp"
#include "ringcodes/quantum.hpp"

using namespace ringcodes;

namespace {
FPoly fparse(FqPtr F, const std::string& s) { return polyparse::parse(fdom(F), s); }
RPoly rparse(RingPtr R, const std::string& s) { return polyparse::parse(rdom(R), s); }

ChainCodeExp exp_code(std::shared_ptr<RingFactorSet> fs, std::map<long, int> nonzero) {
    std::map<long, int> e;
    for (auto& [rep, f] : fs->factors) e[rep] = 0;
    for (auto& [rep, k] : nonzero) e.at(rep) = k;
    return ChainCodeExp::make(std::move(fs), std::move(e));
}
}  // namespace

TEST_CASE("two-code CSS construction", "[quantum]") {
    auto F2 = Fq::make(2, 1);
    auto H = LinearCode::cyclic(F2, 7, fparse(F2, "x^3+x+1"));
    auto dH = min_distance_exhaustive(H);
    auto qp = css_two_codes(H, dH, H, dH);
    CHECK(qp.n == 7);
    CHECK(qp.k == 1);
    CHECK(qp.d_lower == 3);
    CHECK_FALSE(qp.d_exact.has_value());
    CHECK(qp.q == 2);
    CHECK(qp.flags.nmds);

    auto full = LinearCode::cyclic(F2, 5, FPoly::one(fdom(F2)));
    auto dfull = min_distance_exhaustive(full);
    auto qf = css_two_codes(full, dfull, full, dfull);
    CHECK(qf.k == 5);
    CHECK(qf.d_lower == 1);

    auto golay = LinearCode::cyclic(F2, 23, fparse(F2, "x^11+x^9+x^7+x^6+x^5+x+1"));
    auto dgolay = min_distance_exhaustive(golay);
    auto qg = css_two_codes(golay, dgolay, golay, dgolay);
    CHECK(qg.bracket() == "[[23,1,>=7]]_2");
    CHECK_FALSE(qg.flags.nmds);

    auto simplex = H.dual();
    auto ds = min_distance_exhaustive(simplex);
    CHECK_THROWS_AS(css_two_codes(simplex, ds, simplex, ds), DualityPreconditionFailed);
}

TEST_CASE("dual-containing CSS construction", "[quantum]") {
    auto F2 = Fq::make(2, 1);
    auto C = LinearCode::cyclic(F2, 15, fparse(F2, "x^4+x+1"));
    auto qp = css_dual_containing(C, min_distance_exhaustive(C));
    CHECK(qp.bracket() == "[[15,7,>=3]]_2");

    auto C31 = LinearCode::cyclic(F2, 31, fparse(F2, "x^5+x^2+1") * fparse(F2, "x^5+x^3+x^2+x+1"));
    REQUIRE(C31.k() == 21);
    auto q31 = css_dual_containing(C31, min_distance_exhaustive(C31));
    CHECK(q31.bracket() == "[[31,11,>=5]]_2");

    // MDS input pins the distance: [6,5,2] over F_7
    auto F7 = Fq::make(7, 1);
    auto C6 = LinearCode::cyclic(F7, 6, fparse(F7, "x-5"));
    auto d6 = min_distance_exhaustive(C6);
    REQUIRE(d6.value == 2);
    auto q6 = css_dual_containing(C6, d6);
    CHECK(q6.k == 4);
    REQUIRE(q6.d_exact.has_value());
    CHECK(*q6.d_exact == 2);
    CHECK(q6.flags.mds);

    auto simplex = LinearCode::cyclic(F2, 7, fparse(F2, "x^3+x+1")).dual();
    CHECK_THROWS_AS(css_dual_containing(simplex, min_distance_exhaustive(simplex)),
                    DualityPreconditionFailed);
}

TEST_CASE("self-dual chain code constructions", "[quantum]") {
    auto f2u = ring_preset("f2u");
    auto C = ChainCodeFGH::make(f2u, 7, rparse(f2u, "x^3+x^2+1"), rparse(f2u, "x^3+x+1"),
                                rparse(f2u, "x+1"));
    SECTION("route 1 and route 2 on the n=7 triple") {
        auto q1 = quantum_from_chain_selfdual(C);
        CHECK(q1.bracket() == "[[7,1,>=3]]_2");
        CHECK(q1.flags.nmds);
        auto q2 = quantum_from_chain_selfdual(C, 0, 1, {}, "thm3.9.2");
        CHECK(q2.n == 7);
        CHECK(q2.k == 0);
        CHECK(q2.d_lower == 3);
    }
    SECTION("level-2 route equals route 1 at (i, j) = (1, 0)") {
        auto q = quantum_from_chain_selfdual(C, 1, 0);
        CHECK(q.n == 7);
        CHECK(q.k == 1);
        CHECK(q.d_lower == 3);
    }
    SECTION("the Z_49 length-6 code is quantum MDS") {
        auto z49 = ring_preset("z49");
        // f = x-19, g = x+18, h = (x-1)(x+1)(x-18)(x+19)
        auto f = rparse(z49, "x-19");
        auto g = rparse(z49, "x+18");
        auto h = rparse(z49, "x-1") * rparse(z49, "x+1") * rparse(z49, "x-18") *
                 rparse(z49, "x+19");
        auto Cz = ChainCodeFGH::make(z49, 6, f, g, h);
        REQUIRE(Cz.is_selfdual());
        auto qp = quantum_from_chain_selfdual(Cz);
        CHECK(qp.bracket() == "[[6,4,2]]_7");
        CHECK(qp.flags.mds);
    }
    SECTION("non-self-dual triples are rejected") {
        auto bad = ChainCodeFGH::make(f2u, 7, rparse(f2u, "x+1"), rparse(f2u, "x^3+x+1"),
                                      rparse(f2u, "x^3+x^2+1"));
        REQUIRE_FALSE(bad.is_selfdual());
        CHECK_THROWS_AS(quantum_from_chain_selfdual(bad), NotSelfDual);
        CHECK_THROWS_AS(quantum_from_chain_selfdual(C, 1, 1), LevelOutOfRange);
    }
}

TEST_CASE("hermitian gray construction", "[quantum]") {
    auto f81u = ring_preset("f81u");
    auto fs = std::make_shared<RingFactorSet>(factor_xn_minus_1u(f81u, 8));
    SECTION("the n=8 catalog code gives [[16,10,>=3]]_9") {
        auto C = exp_code(fs, {{0, 1}, {1, 2}});
        auto qp = quantum_from_hermitian_gray(C, {1 << 20, 5});
        CHECK(qp.bracket() == "[[16,10,>=3]]_9");
        CHECK(qp.flags.nmds);
        CHECK(qp.q == 9);
    }
    SECTION("full space") {
        auto C = exp_code(fs, {});
        auto qp = quantum_from_hermitian_gray(C, {1 << 20, 5});
        CHECK(qp.n == 16);
        CHECK(qp.k == 16);
        CHECK(qp.d_lower == 1);
    }
    SECTION("failing the exponent criterion is rejected") {
        auto C = exp_code(fs, {{0, 2}});
        CHECK_THROWS_AS(quantum_from_hermitian_gray(C, {1 << 20, 5}),
                        DualityPreconditionFailed);
    }
}

TEST_CASE("classification", "[quantum]") {
    QuantumParams qp;
    qp.n = 6;
    qp.k = 4;
    qp.d_exact = 2;
    qp.d_lower = 2;
    qp.q = 7;
    auto c = classify(qp);
    CHECK(c.flags.mds);
    CHECK(c.flags.singleton_ok);
    CHECK(c.flags.nmds);  // mds implies 2d >= n-k here

    QuantumParams nm;
    nm.n = 16;
    nm.k = 10;
    nm.d_lower = 3;
    nm.q = 9;
    CHECK(classify(nm).flags.nmds);
    CHECK_FALSE(classify(nm).flags.mds);  // no exact distance claimed

    QuantumParams bad;
    bad.n = 7;
    bad.k = 6;
    bad.d_exact = 3;
    bad.d_lower = 3;
    bad.q = 2;
    CHECK_THROWS_AS(classify(bad), SingletonViolation);
}
