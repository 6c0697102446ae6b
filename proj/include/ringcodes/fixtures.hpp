// The worked-example catalog behind the `reproduce` subcommand.
//
// Each fixture re-derives one catalog entry end to end and reports PASS,
// NOTE, or FAIL. PASS means every expectation held and nothing unusual
// fired. NOTE means the result is as documented *including* a known
// discrepancy in the reference tables (a printed triple that fails its own
// preconditions, a table entry that is provably not a factor, a bracket
// whose dimension disagrees with the construction arithmetic). Expectations
// are never silently altered to match a defective table entry: the fixture
// records both what the reference prints and what the derivation yields.

#ifndef RINGCODES_FIXTURES_HPP
#define RINGCODES_FIXTURES_HPP

#include <cstdlib>
#include <functional>
#include <future>
#include <sstream>
#include <thread>

#include "presets.hpp"
#include "quantum.hpp"

namespace ringcodes {

enum class FixtureStatus { Pass, Note, Fail };

inline const char* status_name(FixtureStatus s) {
    switch (s) {
        case FixtureStatus::Pass: return "PASS";
        case FixtureStatus::Note: return "NOTE";
        case FixtureStatus::Fail: return "FAIL";
    }
    return "?";
}

struct FixtureReport {
    std::string id;
    std::string title;
    std::vector<std::pair<std::string, bool>> checks;  // (label, ok)
    std::vector<std::string> notes;                    // fired discrepancies
    std::vector<std::string> derived;                  // derived brackets / facts
    FixtureStatus status = FixtureStatus::Fail;

    bool all_ok() const {
        for (auto& [l, ok] : checks)
            if (!ok) return false;
        return true;
    }
    void finalize(size_t expected_note_count) {
        if (!all_ok() || notes.size() != expected_note_count)
            status = FixtureStatus::Fail;
        else
            status = notes.empty() ? FixtureStatus::Pass : FixtureStatus::Note;
    }
};

namespace fixtures_detail {

inline RPoly rp(const RingPtr& R, const std::string& s) {
    return polyparse::parse(rdom(R), s);
}

struct TripleSpec {
    std::string id, title, ring;
    u64 n;
    std::vector<std::string> f, g, h;  // factor lists, multiplied together
    long expect_k1;                    // route-1 dimension
    long expect_d_floor;               // reference distance bound
    std::optional<long> expect_d_exact;  // frozen exact projection distance
    bool expect_nmds = false;
    bool expect_mds = false;
};

inline void run_triple(FixtureReport& rep, const TripleSpec& t, const DistancePolicy& pol) {
    auto R = ring_preset(t.ring);
    auto mul_list = [&](const std::vector<std::string>& parts) {
        RPoly acc = RPoly::one(rdom(R));
        for (auto& s : parts) acc = acc * rp(R, s);
        return acc;
    };
    auto C = ChainCodeFGH::make(R, t.n, mul_list(t.f), mul_list(t.g), mul_list(t.h));
    rep.checks.emplace_back(t.id + " triple is self-dual", C.is_selfdual());
    auto q1 = quantum_from_chain_selfdual(C, pol, "thm3.9.1");
    rep.derived.push_back(q1.bracket());
    rep.checks.emplace_back("route 1 gives n=" + std::to_string(t.n), q1.n == long(t.n));
    rep.checks.emplace_back("route 1 gives k=" + std::to_string(t.expect_k1),
                            q1.k == t.expect_k1);
    rep.checks.emplace_back("route 1 d >= " + std::to_string(t.expect_d_floor),
                            q1.d_lower >= t.expect_d_floor);
    if (t.expect_d_exact)
        rep.checks.emplace_back("projection distance = " + std::to_string(*t.expect_d_exact),
                                q1.d_lower == *t.expect_d_exact);
    if (t.expect_nmds) rep.checks.emplace_back("near-MDS", q1.flags.nmds);
    if (t.expect_mds) rep.checks.emplace_back("MDS", q1.flags.mds);
    auto q2 = quantum_from_chain_selfdual(C, 0, 1, pol, "thm3.9.2");
    rep.derived.push_back(q2.bracket());
    long df = C.f().is_one() ? 0 : long(C.f().degree());
    long dh = C.h().is_one() ? 0 : long(C.h().degree());
    rep.checks.emplace_back("route 2 gives k = n - 2deg f - deg h",
                            q2.k == long(t.n) - 2 * df - dh);
}

inline FixtureReport fx_3_10_1() {
    FixtureReport rep;
    rep.id = "3.10.1";
    rep.title = "length 7 over F2+uF2";
    run_triple(rep, {"3.10.1", "", "f2u", 7, {"x^3+x^2+1"}, {"x^3+x+1"}, {"x+1"},
                     1, 3, 3, true, false},
               {});
    rep.finalize(0);
    return rep;
}

inline FixtureReport fx_3_10_2() {
    FixtureReport rep;
    rep.id = "3.10.2";
    rep.title = "length 15 over F2+uF2";
    run_triple(rep, {"3.10.2", "", "f2u", 15, {"x^4+x+1"}, {"x^4+x^3+1"},
                     {"x+1", "x^2+x+1", "x^4+x^3+x^2+x+1"}, 7, 3, 3, false, false},
               {});
    rep.finalize(0);
    return rep;
}

inline FixtureReport fx_3_10_3() {
    FixtureReport rep;
    rep.id = "3.10.3";
    rep.title = "length 21 over F2+uF2";
    run_triple(rep, {"3.10.3", "", "f2u", 21, {"x^6+x^4+x^2+x+1"}, {"x^6+x^5+x^4+x^2+1"},
                     {"x+1", "x^2+x+1", "x^3+x+1", "x^3+x^2+1"}, 9, 3, 3, false, false},
               {});
    rep.finalize(0);
    return rep;
}

inline FixtureReport fx_3_10_4() {
    FixtureReport rep;
    rep.id = "3.10.4";
    rep.title = "length 23 over F2+uF2";
    run_triple(rep, {"3.10.4", "", "f2u", 23, {"x^11+x^9+x^7+x^6+x^5+x+1"},
                     {"x^11+x^10+x^6+x^5+x^4+x^2+1"}, {"x+1"}, 1, 7, 7, false, false},
               {});
    rep.finalize(0);
    return rep;
}

inline FixtureReport fx_3_10_5() {
    FixtureReport rep;
    rep.id = "3.10.5";
    rep.title = "length 31 over F2+uF2";
    // f = f1 f2, g = f1c f2c, h = (x+1) f3 f3c from the reference table
    run_triple(rep, {"3.10.5", "", "f2u", 31, {"x^5+x^2+1", "x^5+x^3+x^2+x+1"},
                     {"x^5+x^3+1", "x^5+x^4+x^3+x^2+1"},
                     {"x+1", "x^5+x^4+x^2+x+1", "x^5+x^4+x^3+x+1"}, 11, 5, 5, false, false},
               {});
    rep.notes.push_back(
        "reference prints [[31,21,>=5]]; the construction dimension is n - 2 deg f = 11, "
        "so the derivation yields [[31,11,>=5]] (21 is the dimension of the projected "
        "classical code, not the quantum dimension)");
    rep.finalize(1);
    return rep;
}

inline FixtureReport fx_3_11_1() {
    FixtureReport rep;
    rep.id = "3.11.1";
    rep.title = "lengths 11 and 13 over Z9";
    auto z9 = ring_preset("z9");
    DistancePolicy pol;
    // printed n=11 triple: f = -f3, g = f1, h = -f1 has degree sum 7 != 11
    bool printed_rejected = false;
    try {
        ChainCodeFGH::make(z9, 11, -rp(z9, "x^5-2x^4-x^3+x^2-3x-1"), rp(z9, "x-1"),
                           -rp(z9, "x-1"));
    } catch (const BadFactorization&) {
        printed_rejected = true;
    }
    rep.checks.emplace_back("printed n=11 triple fails f*g*h = x^11-1", printed_rejected);
    rep.notes.push_back(
        "printed n=11 triple (f=-f3, g=f1, h=-f1) cannot satisfy f*g*h = x^11-1 "
        "(degree sum 7); the degree- and duality-consistent reading g=f2, h=-f1 is used");
    run_triple(rep, {"3.11.1", "", "z9", 11, {"x^5-2x^4-x^3+x^2-3x-1"},
                     {"x^5+3x^4+8x^3+x^2+2x-1"}, {"x-1"}, 1, 2, 5, false, false},
               pol);
    // n=13: the reference fifth factor is off; the lift forces x^3+2x^2+5x+8
    auto printed_f5 = rp(z9, "x^3+2x^2+7x+8");
    bool printed_f5_divides =
        RPoly::xn_minus(rdom(z9), 13, 1).divmod(printed_f5).second.is_zero();
    rep.checks.emplace_back("printed f5 is not a factor of x^13-1", !printed_f5_divides);
    rep.notes.push_back(
        "reference factor table for x^13-1 prints f5 = x^3+2x^2+7x+8, which does not divide "
        "x^13-1 over Z9; the unique lift gives x^3+2x^2+5x+8");
    run_triple(rep, {"3.11.1", "", "z9", 13, {"x^3+7x^2+3x+8"}, {"x^3+6x^2+2x+8"},
                     {"x-1", "x^3+4x^2+7x+8", "x^3+2x^2+5x+8"}, 7, 3, 3, true, false},
               pol);
    rep.finalize(2);
    return rep;
}

inline FixtureReport fx_3_11_2() {
    FixtureReport rep;
    rep.id = "3.11.2";
    rep.title = "lengths 11 and 22 over Z25";
    auto z25 = ring_preset("z25");
    run_triple(rep, {"3.11.2", "", "z25", 11, {"x^5+9x^4+24x^3+x^2+8x+24"},
                     {"x^5+17x^4+24x^3+x^2+16x+24"}, {"x-1"}, 1, 5, 5, true, false},
               {});
    // n=22: the printed f2 = x+24 literally equals f1 = x-1 over Z25, so the
    // printed list is not a factorization; the printed f4 and f6 fail the
    // divisor oracle outright
    auto target = RPoly::xn_minus(rdom(z25), 22, 1);
    rep.checks.emplace_back("printed f2 = x+24 duplicates f1 = x-1",
                            rp(z25, "x+24") == rp(z25, "x-1"));
    for (const char* s : {"x^5+17x^4+24x^3+x^2+16x+1", "x^5+9x^4+24x^3+x^2+16x+1"}) {
        bool divides = target.divmod(rp(z25, s)).second.is_zero();
        rep.checks.emplace_back(std::string("printed entry ") + s + " is not a factor of x^22-1",
                                !divides);
    }
    rep.notes.push_back(
        "reference factor table for x^22-1 prints f2 = x+24 (duplicating f1 = x-1; the true "
        "factor is x+1) and misprints f4, f6 (the lift forces x^5+17x^4+24x^3+x^2+16x+24 and "
        "x^5+9x^4+24x^3+x^2+8x+24)");
    run_triple(rep, {"3.11.2", "", "z25", 22, {"x^5+8x^4+24x^3+24x^2+16x+1"},
                     {"x^5+16x^4+24x^3+24x^2+8x+1"},
                     {"x-1", "x+1", "x^5+9x^4+24x^3+x^2+8x+24", "x^5+17x^4+24x^3+x^2+16x+24"},
                     12, 2, 2, false, false},
               {});
    rep.finalize(1);
    return rep;
}

inline FixtureReport fx_3_11_3() {
    FixtureReport rep;
    rep.id = "3.11.3";
    rep.title = "length 6 over Z49";
    auto z49 = ring_preset("z49");
    // printed triple: f ~ x-19, g = x-18, h ~ (x-1)(x+1)(x+18)(x+19)
    auto printed = ChainCodeFGH::make(
        z49, 6, rp(z49, "x-19"), rp(z49, "x-18"),
        rp(z49, "x-1") * rp(z49, "x+1") * rp(z49, "x+18") * rp(z49, "x+19"));
    rep.checks.emplace_back("printed triple constructs (degrees are consistent)", true);
    bool rejected = false;
    try {
        quantum_from_chain_selfdual(printed);
    } catch (const NotSelfDual&) {
        rejected = true;
    }
    rep.checks.emplace_back("printed triple is not self-dual (g* ~ x+19, not f)", rejected);
    rep.notes.push_back(
        "printed triple takes g = f4 = x-18, whose reciprocal pairs with f5 = x+19, not with "
        "f = x-19; self-duality needs g = f3 = x+18 (and h picks up f4 in place of f3)");
    run_triple(rep, {"3.11.3", "", "z49", 6, {"x-19"}, {"x+18"},
                     {"x-1", "x+1", "x-18", "x+19"}, 4, 2, 2, false, true},
               {});
    rep.finalize(1);
    return rep;
}

inline FixtureReport fx_4_15() {
    FixtureReport rep;
    rep.id = "4.15";
    rep.title = "length 25 over F169+uF169";
    DistancePolicy pol{1ull << 22, 5};
    auto f169u = ring_preset("f169u");
    auto fs = std::make_shared<RingFactorSet>(factor_xn_minus_1u(f169u, 25));
    std::vector<size_t> degs;
    for (auto& [rep2, f] : fs->factors) degs.push_back(f.degree());
    std::sort(degs.begin(), degs.end());
    rep.checks.emplace_back("x^25-(1+u) factors with degrees 1,2,2,10,10",
                            degs == std::vector<size_t>{1, 2, 2, 10, 10});
    auto make_code = [&](std::map<long, int> nz) {
        std::map<long, int> e;
        for (auto& [r2, f] : fs->factors) e[r2] = 0;
        for (auto& [r2, k] : nz) e.at(r2) = k;
        return ChainCodeExp::make(fs, e);
    };
    auto printed = make_code({{0, 1}, {1, 2}, {10, 2}});
    rep.checks.emplace_back("printed generator is Hermitian dual-containing",
                            printed.is_dual_containing());
    rep.checks.emplace_back("printed generator has |C| = 169^25",
                            printed.card() == Cardinality{169, 25});
    auto dg = gray_distance_res_tor(printed, pol);
    rep.checks.emplace_back("printed generator has exact Gray distance 4",
                            dg.exact && dg.value == 4);
    auto qp = quantum_from_hermitian_gray(printed, pol);
    rep.derived.push_back(qp.bracket() + " (printed generator)");
    rep.checks.emplace_back("printed generator yields k = 0", qp.k == 0);
    rep.notes.push_back(
        "reference prints [[50,42,>=4]]; the printed generator M0*M1^2*M10^2 has "
        "|C| = 169^25 and hence quantum dimension 2k-2n = 0");
    // candidate exponent vectors with sum k_j deg M_j = 4 restore k = 42
    std::vector<std::pair<std::string, std::map<long, int>>> candidates = {
        {"k5=2", {{5, 2}}}, {"k10=2", {{10, 2}}}, {"k5=k10=1", {{5, 1}, {10, 1}}}};
    bool any_d4 = false;
    for (auto& [label, nz] : candidates) {
        auto C = make_code(nz);
        auto q = quantum_from_hermitian_gray(C, pol);
        auto d = gray_distance_res_tor(C, pol);
        rep.derived.push_back(q.bracket() + " (candidate " + label + ")");
        rep.checks.emplace_back("candidate " + label + " yields k = 42", q.k == 42);
        rep.checks.emplace_back("candidate " + label + " Gray distance is exact", d.exact);
        if (d.value >= 4) any_d4 = true;
    }
    if (!any_d4)
        rep.notes.push_back(
            "no dimension-42 candidate reaches Gray distance 4 (all three have exact Gray "
            "distance 2), so the printed bracket is not reproducible from any admissible "
            "exponent vector");
    rep.finalize(2);
    return rep;
}

inline FixtureReport fx_4_16() {
    FixtureReport rep;
    rep.id = "4.16";
    rep.title = "length 8 over F81+uF81";
    DistancePolicy pol{1ull << 20, 5};
    auto f81u = ring_preset("f81u");
    auto fs = std::make_shared<RingFactorSet>(factor_xn_minus_1u(f81u, 8));
    rep.checks.emplace_back("x^8-(1+u) splits into 8 linear factors",
                            fs->factors.size() == 8);
    rel one_minus_u = f81u->make_fqu_elem(1, f81u->residue_field()->neg(1));
    RPoly m0(rdom(f81u), {f81u->neg(one_minus_u), 1});
    rep.checks.emplace_back("the coset-0 factor is x-(1-u)", fs->by_rep(0) == m0);
    std::map<long, int> e;
    for (auto& [r2, f] : fs->factors) e[r2] = 0;
    e[0] = 1;
    e[1] = 2;
    auto C = ChainCodeExp::make(fs, e);
    rep.checks.emplace_back("exponent criterion holds", C.is_dual_containing());
    auto res = C.res_code(), tor = C.tor_code();
    auto dres = min_distance_support_search(res, pol.w_max);
    auto dtor = min_distance_support_search(tor, pol.w_max);
    rep.checks.emplace_back("Res = [8,6] with d = 3",
                            res.k() == 6 && dres.exact && dres.value == 3);
    rep.checks.emplace_back("Tor = [8,7] with d = 2",
                            tor.k() == 7 && dtor.exact && dtor.value == 2);
    auto dg = gray_distance_res_tor(C, pol);
    rep.checks.emplace_back("Gray distance = 3", dg.exact && dg.value == 3);
    auto qp = quantum_from_hermitian_gray(C, pol);
    rep.derived.push_back(qp.bracket());
    rep.checks.emplace_back("derived [[16,10,>=3]]_9",
                            qp.n == 16 && qp.k == 10 && qp.d_lower == 3 && qp.q == 9);
    rep.checks.emplace_back("near-MDS", qp.flags.nmds);
    rep.finalize(0);
    return rep;
}

}  // namespace fixtures_detail

struct Fixture {
    std::string id;
    std::string title;
    std::function<FixtureReport()> run;
};

inline const std::vector<Fixture>& fixture_catalog() {
    using namespace fixtures_detail;
    static const std::vector<Fixture> cat = {
        {"3.10.1", "length 7 over F2+uF2", fx_3_10_1},
        {"3.10.2", "length 15 over F2+uF2", fx_3_10_2},
        {"3.10.3", "length 21 over F2+uF2", fx_3_10_3},
        {"3.10.4", "length 23 over F2+uF2", fx_3_10_4},
        {"3.10.5", "length 31 over F2+uF2", fx_3_10_5},
        {"3.11.1", "lengths 11 and 13 over Z9", fx_3_11_1},
        {"3.11.2", "lengths 11 and 22 over Z25", fx_3_11_2},
        {"3.11.3", "length 6 over Z49", fx_3_11_3},
        {"4.15", "length 25 over F169+uF169", fx_4_15},
        {"4.16", "length 8 over F81+uF81", fx_4_16},
    };
    return cat;
}

inline FixtureReport run_fixture(const std::string& id) {
    for (const auto& f : fixture_catalog())
        if (f.id == id) return f.run();
    throw InternalError("no such catalog entry: " + id);
}

// Fixtures are independent and run concurrently; rows come back ordered by
// id. RINGCODES_THREADS caps the parallelism.
inline std::vector<FixtureReport> run_all_fixtures() {
    const auto& cat = fixture_catalog();
    unsigned threads = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("RINGCODES_THREADS")) {
        unsigned t = unsigned(std::strtoul(env, nullptr, 10));
        if (t >= 1) threads = t;
    }
    if (threads < 1) threads = 1;
    std::vector<FixtureReport> out(cat.size());
    std::vector<std::future<void>> pending;
    size_t next = 0;
    while (next < cat.size() || !pending.empty()) {
        while (next < cat.size() && pending.size() < threads) {
            size_t i = next++;
            pending.push_back(std::async(std::launch::async, [&out, &cat, i] {
                out[i] = cat[i].run();
            }));
        }
        pending.front().get();
        pending.erase(pending.begin());
    }
    return out;
}

}  // namespace ringcodes

#endif
