#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <set>

#include "ringcodes/chain_code.hpp"
#include "ringcodes/presets.hpp"

using namespace ringcodes;

namespace {
RPoly rparse(RingPtr R, const std::string& s) { return polyparse::parse(rdom(R), s); }

ChainCodeFGH example_3101() {
    auto f2u = ring_preset("f2u");
    return ChainCodeFGH::make(f2u, 7, rparse(f2u, "x^3+x^2+1"), rparse(f2u, "x^3+x+1"),
                              rparse(f2u, "x+1"));
}

std::shared_ptr<RingFactorSet> fs_f9u_n(u64 n) {
    static std::map<u64, std::shared_ptr<RingFactorSet>> cache;
    if (!cache.count(n))
        cache[n] = std::make_shared<RingFactorSet>(factor_xn_minus_1u(ring_preset("f9u"), n));
    return cache[n];
}

ChainCodeExp exp_code(std::shared_ptr<RingFactorSet> fs, std::map<long, int> nonzero) {
    std::map<long, int> e;
    for (auto& [rep, f] : fs->factors) e[rep] = 0;
    for (auto& [rep, k] : nonzero) e.at(rep) = k;
    return ChainCodeExp::make(std::move(fs), std::move(e));
}
}  // namespace

TEST_CASE("standard form", "[chain]") {
    auto f2u = ring_preset("f2u");
    SECTION("unit pivot first, then the gamma row") {
        rel u = f2u->gamma();
        auto sf = standard_form(f2u, 2, {{1, u}, {0, u}});
        CHECK(sf.kcounts == std::vector<int>{1, 1});
        CHECK(sf.card() == Cardinality{2, 3});
    }
    SECTION("generator of the n=7 self-dual triple") {
        auto sf = example_3101().matrix().std_form();
        CHECK(sf.kcounts == std::vector<int>{3, 1});
        CHECK(sf.card() == Cardinality{2, 7});
    }
    SECTION("zero matrix") {
        auto sf = standard_form(f2u, 3, {{0, 0, 0}, {0, 0, 0}});
        CHECK(sf.kcounts == std::vector<int>{0, 0});
        CHECK(sf.card() == Cardinality{2, 0});
    }
}

TEST_CASE("standard form preserves the span and has the block layout", "[chain]") {
    std::mt19937_64 rng(97);
    for (std::string pre : {std::string("f4u"), std::string("z9"), std::string("f25u")}) {
        auto R = ring_preset(pre);
        for (int it = 0; it < 30; ++it) {
            size_t n = 2 + rng() % 7, m = 1 + rng() % (n + 2);
            std::vector<rrow> rows(m, rrow(n));
            for (auto& r : rows)
                for (auto& v : r) v = rel(rng() % R->size());
            auto sf = standard_form(R, n, rows);
            // span preservation: every input row reduces to zero, and the
            // reduced rows lie in the span of the input rows
            for (const auto& r : rows) CHECK(sf.reduces_to_zero(r));
            auto back = ChainMatCode::from_rows(R, n, rows);
            for (size_t i = 0; i < sf.rows.size(); ++i) {
                rrow orig(n);
                for (size_t pos = 0; pos < n; ++pos) orig[sf.perm[pos]] = sf.rows[i][pos];
                CHECK(back.contains_word(orig));
            }
            // block layout: pivot i sits at permuted column i with value
            // exactly gamma^level; entries below and at other pivots of the
            // same or higher level are zero; every entry of a level-v row
            // has valuation >= v
            for (size_t i = 0; i < sf.rows.size(); ++i) {
                rel expect = sf.row_level[i] == 0 ? R->one() : R->gamma();
                CHECK(sf.rows[i][i] == expect);
                for (size_t j = 0; j < sf.rows.size(); ++j) {
                    if (i == j) continue;
                    if (sf.row_level[j] >= sf.row_level[i]) CHECK(sf.rows[j][i] == 0);
                }
                for (size_t c = 0; c < n; ++c)
                    CHECK(R->val(sf.rows[i][c]) >= sf.row_level[i]);
            }
            // levels are nondecreasing
            for (size_t i = 1; i < sf.rows.size(); ++i)
                CHECK(sf.row_level[i - 1] <= sf.row_level[i]);
        }
    }
}

TEST_CASE("exponent-form double dual is the identity", "[chain]") {
    auto fs = fs_f9u_n(8);
    std::mt19937_64 rng(101);
    for (int it = 0; it < 20; ++it) {
        std::map<long, int> e;
        for (auto& [rep, f] : fs->factors) e[rep] = int(rng() % 3);
        auto C = ChainCodeExp::make(fs, e);
        CHECK(C.hermitian_dual().hermitian_dual().exps() == C.exps());
    }
}

TEST_CASE("matrix dual over chain rings", "[chain]") {
    std::mt19937_64 rng(41);
    for (std::string pre : {std::string("f4u"), std::string("z9"), std::string("f9u")}) {
        auto R = ring_preset(pre);
        for (int it = 0; it < 40; ++it) {
            size_t n = 2 + rng() % 7, m = 1 + rng() % (n + 2);
            std::vector<rrow> rows(m, rrow(n));
            for (auto& r : rows)
                for (auto& v : r) v = rel(rng() % R->size());
            auto C = ChainMatCode::from_rows(R, n, rows);
            auto D = C.dual();
            // orthogonality of all generator pairs
            for (const auto& c : C.gen_rows())
                for (const auto& d : D.gen_rows()) CHECK(euclid_ip_ring(R, c, d) == 0);
            // |C| * |D| = |R|^n
            CHECK(C.card().exp + D.card().exp == long(2 * n));
            // dual of dual
            CHECK(D.dual().equals(C));
            // type counts: k_0(D) = n - k(C), k_1(D) = k_1(C)
            auto& kc = C.std_form().kcounts;
            auto& kd = D.std_form().kcounts;
            CHECK(kd[0] == long(n) - (kc[0] + kc[1]));
            CHECK(kd[1] == kc[1]);
        }
    }
}

TEST_CASE("fgh codes", "[chain]") {
    auto f2u = ring_preset("f2u");
    SECTION("the n=7 triple is self-dual") {
        auto C = example_3101();
        CHECK(C.is_selfdual());
        CHECK(C.card() == Cardinality{2, 7});
        // swapping f and g preserves self-duality
        auto C2 = ChainCodeFGH::make(f2u, 7, rparse(f2u, "x^3+x+1"), rparse(f2u, "x^3+x^2+1"),
                                     rparse(f2u, "x+1"));
        CHECK(C2.is_selfdual());
    }
    SECTION("bad factorizations are rejected") {
        CHECK_THROWS_AS(ChainCodeFGH::make(f2u, 7, rparse(f2u, "x^3+x^2+1"),
                                           rparse(f2u, "x^3+x^2+1"), rparse(f2u, "x+1")),
                        BadFactorization);
        // the printed n=11 triple over Z_9 has degree sum 7, not 11
        auto z9 = ring_preset("z9");
        CHECK_THROWS_AS(ChainCodeFGH::make(z9, 11, rparse(z9, "x^5+7x^4+8x^3+x^2+6x+8"),
                                           rparse(z9, "x-1"), rparse(z9, "x-1")),
                        BadFactorization);
    }
    SECTION("corrected n=11 triple over Z_9 is self-dual") {
        auto z9 = ring_preset("z9");
        auto C = ChainCodeFGH::make(z9, 11, -rparse(z9, "x^5-2x^4-x^3+x^2-3x-1"),
                                    rparse(z9, "x^5+3x^4+8x^3+x^2+2x-1"), -rparse(z9, "x-1"));
        CHECK(C.is_selfdual());
        CHECK(C.card() == Cardinality{3, 11});
    }
    SECTION("dual triple agrees with the matrix-level dual") {
        std::vector<std::tuple<std::string, u64, std::string, std::string, std::string>> cases = {
            {"f2u", 7, "x^3+x^2+1", "x+1", "x^3+x+1"},
            {"f2u", 7, "1", "x^3+x^2+1", "(unused)"},
            {"z9", 4, "x-1", "x+1", "x^2+1"},
        };
        for (auto& [pre, n, fs, gs, hs] : cases) {
            auto R = ring_preset(pre);
            RPoly f = rparse(R, fs), g = rparse(R, gs);
            RPoly h = (RPoly::xn_minus(rdom(R), n, 1) / (f * g));
            auto C = ChainCodeFGH::make(R, n, f, g, h);
            auto D = C.dual();
            CHECK(D.matrix().equals(C.matrix().dual()));
            CHECK(C.dual().dual().matrix().equals(C.matrix()));
        }
    }
    SECTION("tower projections") {
        auto C = example_3101();
        auto F2 = f2u->residue_field();
        auto lev1 = C.tower_projection(1);
        CHECK(lev1 == LinearCode::cyclic(F2, 7, polyparse::parse(fdom(F2), "x^3+x^2+1")));
        CHECK(lev1.k() == 4);
        auto lev0 = C.tower_projection(0);
        CHECK(lev0 ==
              LinearCode::cyclic(F2, 7, polyparse::parse(fdom(F2), "x^3+x^2+1") *
                                            polyparse::parse(fdom(F2), "x+1")));
        CHECK(lev0.k() == 3);
        CHECK(lev1.contains(lev0));
        CHECK_THROWS_AS(C.tower_projection(2), LevelOutOfRange);
        CHECK_THROWS_AS(C.tower_projection(-1), LevelOutOfRange);
    }
    SECTION("tower projection agrees with the standard-form route") {
        std::mt19937_64 rng(77);
        auto z9 = ring_preset("z9");
        for (u64 n : {4, 5, 7, 8}) {
            auto fs = factor_xn_minus_1(Fq::make(3, 1), n);
            auto lift = hensel_lift(fs, z9);
            // random assignment of the factors to (f, g, h)
            RingDomain RD{z9};
            RPoly f = RPoly::one(RD), g = RPoly::one(RD), h = RPoly::one(RD);
            for (auto& [rep, fac] : lift.factors) {
                int pick = int(rng() % 3);
                (pick == 0 ? f : pick == 1 ? g : h) = (pick == 0 ? f : pick == 1 ? g : h) * fac;
            }
            auto C = ChainCodeFGH::make(z9, n, f, g, h);
            // standard-form route: project the level blocks
            auto sf = C.matrix().std_form();
            auto F3 = z9->residue_field();
            std::vector<frow> lvl0;
            for (size_t i = 0; i < sf.rows.size(); ++i) {
                if (sf.row_level[i] != 0) continue;
                frow w(sf.n);
                for (size_t pos = 0; pos < sf.n; ++pos)
                    w[sf.perm[pos]] = z9->project(sf.rows[i][pos]);
                lvl0.push_back(std::move(w));
            }
            std::vector<frow> lvl01 = lvl0;
            for (size_t i = 0; i < sf.rows.size(); ++i) {
                if (sf.row_level[i] != 1) continue;
                frow w(sf.n);
                for (size_t pos = 0; pos < sf.n; ++pos)
                    w[sf.perm[pos]] = z9->project(z9->div_gamma_pow(sf.rows[i][pos], 1));
                lvl01.push_back(std::move(w));
            }
            CHECK(LinearCode::from_rows(F3, n, lvl0) == C.tower_projection(0));
            CHECK(LinearCode::from_rows(F3, n, lvl01) == C.tower_projection(1));
        }
    }
}

TEST_CASE("exponent codes", "[chain]") {
    auto f81u = ring_preset("f81u");
    auto fs81 = std::make_shared<RingFactorSet>(factor_xn_minus_1u(f81u, 8));
    SECTION("cardinality and dual-containment") {
        auto C = exp_code(fs81, {{0, 1}, {1, 2}});
        CHECK(C.card() == Cardinality{81, 13});
        CHECK(C.is_dual_containing());
        auto D = C.hermitian_dual();
        CHECK(D.card() == Cardinality{81, 3});  // sum k_j deg M_j
        CHECK(C.card().exp + D.card().exp == 2 * 8);
        CHECK(C.contains(D));
        // all exponents zero: the full space, whose dual is zero
        auto full = exp_code(fs81, {});
        CHECK(full.card() == Cardinality{81, 16});
        CHECK(full.hermitian_dual().card() == Cardinality{81, 0});
        CHECK(full.is_dual_containing());
        // a symmetric coset with exponent 2 breaks dual-containment
        CHECK_FALSE(exp_code(fs81, {{0, 2}}).is_dual_containing());
    }
    SECTION("incomplete exponent maps are rejected") {
        std::map<long, int> partial = {{0, 1}};
        CHECK_THROWS_AS(ChainCodeExp::make(fs81, partial), IncompleteExponents);
        auto bad = [&] {
            std::map<long, int> e;
            for (auto& [rep, f] : fs81->factors) e[rep] = 0;
            e[0] = 3;
            return e;
        }();
        CHECK_THROWS_AS(ChainCodeExp::make(fs81, bad), IncompleteExponents);
    }
    SECTION("res and tor codes") {
        auto C = exp_code(fs81, {{0, 1}, {1, 2}});
        CHECK(C.res_code().k() == 6);
        CHECK(C.tor_code().k() == 7);
        auto full = exp_code(fs81, {});
        CHECK(full.res_code().k() == 8);
        CHECK(full.tor_code().k() == 8);
        std::map<long, int> all2;
        for (auto& [rep, f] : fs81->factors) all2[rep] = 2;
        auto zero = ChainCodeExp::make(fs81, all2);
        CHECK(zero.res_code().k() == 0);
        CHECK(zero.tor_code().k() == 0);
        CHECK(zero.card() == Cardinality{81, 0});
    }
    SECTION("matrix expansion matches the exponent cardinality") {
        auto fs9 = fs_f9u_n(8);
        std::mt19937_64 rng(53);
        for (int it = 0; it < 30; ++it) {
            std::map<long, int> e;
            for (auto& [rep, f] : fs9->factors) e[rep] = int(rng() % 3);
            auto C = ChainCodeExp::make(fs9, e);
            auto M = C.matrix();  // asserts cardinality agreement internally
            CHECK(M.card() == C.card());
        }
    }
    SECTION("hermitian dual at matrix level") {
        auto fs9 = fs_f9u_n(5);
        std::mt19937_64 rng(59);
        for (int it = 0; it < 10; ++it) {
            std::map<long, int> e;
            for (auto& [rep, f] : fs9->factors) e[rep] = int(rng() % 3);
            auto C = ChainCodeExp::make(fs9, e);
            CHECK(C.hermitian_dual().matrix().equals(C.matrix().hermitian_dual()));
        }
    }
    SECTION("res/tor against the enumeration oracle") {
        auto fs9 = fs_f9u_n(5);
        std::mt19937_64 rng(61);
        auto F9 = ring_preset("f9u")->residue_field();
        for (int it = 0; it < 8; ++it) {
            std::map<long, int> e;
            for (auto& [rep, f] : fs9->factors) e[rep] = int(1 + rng() % 2);
            auto C = ChainCodeExp::make(fs9, e);
            if (C.card().exp > 8) continue;
            auto R = C.ring();
            std::vector<frow> res_words, tor_words;
            C.matrix().enumerate([&](const rrow& w) {
                frow a(w.size()), b(w.size());
                bool pure_u = true;
                for (size_t i = 0; i < w.size(); ++i) {
                    auto d = R->gamma_decompose(w[i]);
                    a[i] = d[0];
                    b[i] = d[1];
                    if (d[0] != 0) pure_u = false;
                }
                res_words.push_back(a);
                if (pure_u) tor_words.push_back(b);
            });
            CHECK(LinearCode::from_rows(F9, C.n(), res_words) == C.res_code());
            CHECK(LinearCode::from_rows(F9, C.n(), tor_words) == C.tor_code());
        }
    }
}

TEST_CASE("level-1 projections of self-dual codes contain their duals", "[chain]") {
    // the property behind the quantum constructions, checked on the catalog
    // triples from every instantiated ring
    auto f2u = ring_preset("f2u");
    auto z9 = ring_preset("z9");
    auto z25 = ring_preset("z25");
    auto z49 = ring_preset("z49");
    std::vector<ChainCodeFGH> cat;
    cat.push_back(example_3101());
    cat.push_back(ChainCodeFGH::make(f2u, 15, rparse(f2u, "x^4+x+1"), rparse(f2u, "x^4+x^3+1"),
                                     rparse(f2u, "x+1") * rparse(f2u, "x^2+x+1") *
                                         rparse(f2u, "x^4+x^3+x^2+x+1")));
    cat.push_back(ChainCodeFGH::make(z9, 11, rparse(z9, "x^5-2x^4-x^3+x^2-3x-1"),
                                     rparse(z9, "x^5+3x^4+8x^3+x^2+2x-1"), rparse(z9, "x-1")));
    cat.push_back(ChainCodeFGH::make(z25, 11, rparse(z25, "x^5+9x^4+24x^3+x^2+8x+24"),
                                     rparse(z25, "x^5+17x^4+24x^3+x^2+16x+24"),
                                     rparse(z25, "x-1")));
    cat.push_back(ChainCodeFGH::make(z49, 6, rparse(z49, "x-19"), rparse(z49, "x+18"),
                                     rparse(z49, "x-1") * rparse(z49, "x+1") *
                                         rparse(z49, "x-18") * rparse(z49, "x+19")));
    for (const auto& C : cat) {
        REQUIRE(C.is_selfdual());
        auto proj = C.tower_projection(1);
        CHECK(proj.is_dual_containing());
        CHECK(proj.contains(C.tower_projection(0)));
    }
}

TEST_CASE("codeword enumeration visits each word once", "[chain]") {
    auto f4u = ring_preset("f4u");
    auto C = ChainMatCode::from_rows(f4u, 3, {{1, 2, f4u->gamma()}, {0, f4u->gamma(), 4}});
    std::set<rrow> seen;
    C.enumerate([&](const rrow& w) {
        CHECK(C.contains_word(w));
        seen.insert(w);
    });
    Cardinality c = C.card();
    u64 expect = 1;
    for (long i = 0; i < c.exp; ++i) expect *= c.base;
    CHECK(seen.size() == expect);
}
