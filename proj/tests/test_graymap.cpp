#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "ringcodes/distance.hpp"
#include "ringcodes/presets.hpp"

using namespace ringcodes;

namespace {
std::shared_ptr<RingFactorSet> factor_set(const std::string& pre, u64 n) {
    return std::make_shared<RingFactorSet>(factor_xn_minus_1u(ring_preset(pre), n));
}

ChainCodeExp exp_code(std::shared_ptr<RingFactorSet> fs, std::map<long, int> nonzero) {
    std::map<long, int> e;
    for (auto& [rep, f] : fs->factors) e[rep] = 0;
    for (auto& [rep, k] : nonzero) e.at(rep) = k;
    return ChainCodeExp::make(std::move(fs), std::move(e));
}
}  // namespace

TEST_CASE("gray map basics", "[gray]") {
    auto f169u = ring_preset("f169u");
    auto g = GrayContext::make(f169u);
    auto F = f169u->residue_field();
    CHECK(F->add(F->mul(g.alpha, g.alpha), 1) == 0);
    CHECK(g.pm == 13);
    CHECK(g.duality_preserving);  // 13 = 1 mod 4

    SECTION("formula and zero") {
        rrow v = {f169u->make_fqu_elem(3, 2)};
        frow img = gray_map(g, v);
        CHECK(img[0] == F->mul(g.alpha, 2));
        CHECK(img[1] == 5);
        CHECK(gray_map(g, rrow{0, 0}) == frow{0, 0, 0, 0});
    }
    SECTION("u*c interleaves (alpha c_i, c_i)") {
        rrow v = {f169u->make_fqu_elem(0, 7), f169u->make_fqu_elem(0, 1)};
        frow img = gray_map(g, v);
        CHECK(img == frow{F->mul(g.alpha, 7), 7, g.alpha, 1});
    }
    SECTION("linearity and injectivity, sampled") {
        std::mt19937_64 rng(67);
        for (int it = 0; it < 200; ++it) {
            rrow a(4), b(4);
            for (auto& x : a) x = rel(rng() % f169u->size());
            for (auto& x : b) x = rel(rng() % f169u->size());
            gfel s = rng() % 169;
            rrow sum(4);
            for (int i = 0; i < 4; ++i)
                sum[i] = f169u->add(f169u->mul(f169u->embed(s), a[i]), b[i]);
            frow ia = gray_map(g, a), ib = gray_map(g, b), isum = gray_map(g, sum);
            for (int i = 0; i < 8; ++i)
                CHECK(isum[i] == F->add(F->mul(s, ia[i]), ib[i]));
            if (a != b) CHECK(ia != ib);
        }
    }
}

TEST_CASE("gray weight equals image Hamming weight", "[gray]") {
    for (std::string pre :
         {std::string("f9u"), std::string("f4u"), std::string("f25u"), std::string("f81u")}) {
        auto R = ring_preset(pre);
        auto g = GrayContext::make(R);
        // exhaustive over R^2
        for (rel a = 0; a < R->size(); ++a)
            for (rel b = 0; b < R->size(); ++b) {
                rrow v = {a, b};
                CHECK(gray_weight(R, v) == hamming_weight(gray_map(g, v)));
            }
    }
    // the weight table: w(0) = 0; w(a) = 1; w(a+ub) = 1 when a+b = 0, else 2
    auto f9u = ring_preset("f9u");
    CHECK(gray_weight(f9u, rel(0)) == 0);
    CHECK(gray_weight(f9u, f9u->make_fqu_elem(5, 0)) == 1);
    auto F9 = f9u->residue_field();
    CHECK(gray_weight(f9u, f9u->make_fqu_elem(5, F9->neg(5))) == 1);
    CHECK(gray_weight(f9u, f9u->make_fqu_elem(1, 1)) == 2);
}

TEST_CASE("hermitian inner products", "[gray]") {
    auto F4 = Fq::make(2, 2);
    frow v = {1, 2};  // (1, w)
    CHECK(inner_product(F4, v, frow{0, 0}, Inner::Hermitian) == 0);
    CHECK(inner_product(F4, v, v, Inner::Hermitian) == 0);  // 1 + w*w^2 = 0
    CHECK_THROWS_AS(inner_product(F4, v, frow{1}, Inner::Hermitian), LengthMismatch);

    std::mt19937_64 rng(71);
    auto F9 = Fq::make(3, 2);
    for (int it = 0; it < 100; ++it) {
        frow a(3), b(3);
        for (auto& x : a) x = rng() % 9;
        for (auto& x : b) x = rng() % 9;
        gfel s = rng() % 9;
        // sesquilinear: [sa, b] = s[a, b], [a, sb] = conj(s)[a, b]
        frow sa(3), sb(3);
        for (int i = 0; i < 3; ++i) {
            sa[i] = F9->mul(s, a[i]);
            sb[i] = F9->mul(s, b[i]);
        }
        gfel ab = inner_product(F9, a, b, Inner::Hermitian);
        CHECK(inner_product(F9, sa, b, Inner::Hermitian) == F9->mul(s, ab));
        CHECK(inner_product(F9, a, sb, Inner::Hermitian) == F9->mul(F9->conjugate(s), ab));
        CHECK(inner_product(F9, b, a, Inner::Hermitian) == F9->conjugate(ab));
    }

    SECTION("ring-level product decomposes as sum a c* + u sum (b c* + a d*)") {
        auto f9u = ring_preset("f9u");
        for (int it = 0; it < 100; ++it) {
            rrow x(3), y(3);
            for (auto& v2 : x) v2 = rel(rng() % 81);
            for (auto& v2 : y) v2 = rel(rng() % 81);
            rel ip = hermitian_ip_ring(f9u, x, y);
            gfel part0 = 0, part1 = 0;
            for (int i = 0; i < 3; ++i) {
                auto [a, b] = f9u->gamma_decompose(x[i]);
                auto [c, d] = f9u->gamma_decompose(y[i]);
                part0 = F9->add(part0, F9->mul(a, F9->conjugate(c)));
                part1 = F9->add(part1, F9->add(F9->mul(b, F9->conjugate(c)),
                                               F9->mul(a, F9->conjugate(d))));
            }
            CHECK(ip == f9u->make_fqu_elem(part0, part1));
        }
    }
}

TEST_CASE("gray image codes", "[gray]") {
    SECTION("zero and the n=8 catalog code") {
        auto f81u = ring_preset("f81u");
        auto g = GrayContext::make(f81u);
        auto fs = factor_set("f81u", 8);
        auto C = exp_code(fs, {{0, 1}, {1, 2}});
        auto img = gray_image_code(g, C);
        CHECK(img.n() == 16);
        CHECK(img.k() == 13);

        std::map<long, int> all2;
        for (auto& [rep, f] : fs->factors) all2[rep] = 2;
        auto img0 = gray_image_code(g, ChainCodeExp::make(fs, all2));
        CHECK(img0.k() == 0);
    }
    SECTION("image of a Hermitian self-dual code is Hermitian self-dual") {
        // over F_25+uF_25 the duality-preserving condition holds (p^m = 5)
        auto f25u = ring_preset("f25u");
        auto g = GrayContext::make(f25u);
        REQUIRE(g.duality_preserving);
        auto fs = factor_set("f25u", 4);  // cosets 0,1,2,3; symmetric 0 and 2
        auto C = exp_code(fs, {{0, 1}, {2, 1}, {1, 0}, {3, 2}});
        REQUIRE(C.is_hermitian_selfdual());
        auto img = gray_image_code(g, C);
        CHECK(img.dual(Inner::Hermitian) == img);
    }
}

TEST_CASE("gray image duality transfer needs p^m = 1 mod 4", "[gray]") {
    // over F_25+uF_25 (p^m = 5) the Gray image of the Hermitian dual is the
    // Hermitian dual of the Gray image, for every exponent vector of n = 4
    {
        auto f25u = ring_preset("f25u");
        auto g = GrayContext::make(f25u);
        auto fs = factor_set("f25u", 4);
        std::vector<long> reps;
        for (auto& [rep, f] : fs->factors) reps.push_back(rep);
        REQUIRE(reps.size() == 4);
        for (int code = 0; code < 81; ++code) {
            int c = code;
            std::map<long, int> e;
            for (long rep : reps) {
                e[rep] = c % 3;
                c /= 3;
            }
            auto C = ChainCodeExp::make(fs, e);
            CHECK(gray_image_code(g, C.hermitian_dual()) ==
                  gray_image_code(g, C).dual(Inner::Hermitian));
        }
    }
    // over F_9+uF_9 (p^m = 3, not 1 mod 4) the transfer provably fails:
    // alpha has order 4, so alpha^(p^m+1) = 1 instead of -1, and already the
    // code <u(x+1)> of length 2 is a counterexample
    {
        auto f9u = ring_preset("f9u");
        auto g = GrayContext::make(f9u);
        REQUIRE_FALSE(g.duality_preserving);
        auto fs = factor_set("f9u", 2);
        auto C = exp_code(fs, {{0, 1}});
        CHECK_FALSE(gray_image_code(g, C.hermitian_dual()) ==
                    gray_image_code(g, C).dual(Inner::Hermitian));
    }
}
