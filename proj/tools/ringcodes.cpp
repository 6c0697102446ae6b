// ringcodes command-line tool: factor cyclotomic targets over chain rings,
// construct and check codes, measure exact minimum distances, derive quantum
// code parameters, and re-derive the worked-example catalog.

#include <CLI11.hpp>
#include <iostream>

#include "ringcodes/json_records.hpp"
#include "ringcodes/ringcodes.hpp"

using namespace ringcodes;

namespace {

FqPtr parse_field(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw InternalError("expected field as p:e");
    u64 p = std::stoull(spec.substr(0, colon));
    unsigned e = unsigned(std::stoul(spec.substr(colon + 1)));
    return Fq::make(p, e);
}

std::map<long, int> parse_exps(const RingFactorSet& fs, const std::string& text) {
    std::map<long, int> e;
    for (auto& [rep, f] : fs.factors) e[rep] = 0;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw InternalError("expected exps as rep:k,...");
        long rep = std::stol(tok.substr(0, colon));
        int k = std::stoi(tok.substr(colon + 1));
        if (!e.count(rep)) throw IncompleteExponents("no coset with rep " + std::to_string(rep));
        e[rep] = k;
    }
    return e;
}

RingFactorSet factor_ring_target(const RingPtr& R, u64 n, const std::string& target) {
    if (target == "xn-minus-1u") return factor_xn_minus_1u(R, n);
    if (target != "xn-minus-1") throw InternalError("unknown target: " + target);
    if (R->is_fqu()) {
        u64 pm = 1;
        auto F = R->residue_field();
        if (F->e() % 2 == 0) pm = u64(ipow_u128(F->p(), F->e() / 2));
        return embed_factorization(factor_xn_minus_1(F, n, pm), R);
    }
    return hensel_lift_xn_minus_1(R, n);
}

DistanceResult distance_with_method(const LinearCode& C, const std::string& method,
                                    const DistancePolicy& pol) {
    if (method == "exhaustive") return min_distance_exhaustive(C, pol.budget);
    if (method == "support") return min_distance_support_search(C, pol.w_max);
    if (method == "auto") return min_distance_auto(C, pol);
    throw InternalError("unknown method: " + method);
}

void oracle_check(const LinearCode& C, const DistanceResult& d, const DistancePolicy& pol,
                  ojson& rec) {
    if (!d.exact) {
        rec["oracle"] = "skipped (primary result is a bound)";
        return;
    }
    DistanceResult alt;
    if (d.method == DistMethod::Exhaustive) {
        alt = min_distance_support_search(C, int(d.value));
    } else {
        u128 words = 1;
        for (size_t i = 0; i < C.k(); ++i) {
            words *= u64(C.field()->q());
            if (words > pol.budget) {
                rec["oracle"] = "skipped (enumeration over budget)";
                return;
            }
        }
        alt = min_distance_exhaustive(C, pol.budget);
    }
    if (alt.value != d.value || !alt.exact)
        throw InternalError("distance oracle disagreement");
    rec["oracle"] = "agreed";
}

struct FghArgs {
    std::vector<std::string> polys;  // f, g, h
    ChainCodeFGH build(const RingPtr& R, u64 n) const {
        if (polys.size() != 3) throw InternalError("--fgh needs exactly three polynomials");
        return ChainCodeFGH::make(R, n, polyparse::parse(rdom(R), polys[0]),
                                  polyparse::parse(rdom(R), polys[1]),
                                  polyparse::parse(rdom(R), polys[2]));
    }
};

int run(int argc, char** argv) {
    CLI::App app{"codes over finite chain rings: factorizations, duals, Gray images, "
                 "exact distances, quantum parameters"};
    app.require_subcommand(1);

    std::string ring_name, target = "xn-minus-1", exps_text, via = "thm3.9", field_spec,
                cyclic_poly, method = "auto", format = "json", example_id;
    u64 n = 0;
    FghArgs fgh;
    u64 budget = 1ull << 24;
    int wmax = 8;
    int level_i = 1, level_j = 0;
    bool all = false, oracle = false;

    auto* cf = app.add_subcommand("factor", "factor x^n-1 or x^n-(1+u) over a chain ring");
    cf->add_option("--ring", ring_name)->required();
    cf->add_option("--n", n)->required();
    cf->add_option("--target", target)->check(CLI::IsMember({"xn-minus-1", "xn-minus-1u"}));
    cf->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* cc = app.add_subcommand("code", "construct a chain-ring code and report its checks");
    cc->add_option("--ring", ring_name)->required();
    cc->add_option("--n", n)->required();
    cc->add_option("--fgh", fgh.polys)->expected(3);
    cc->add_option("--exps", exps_text);

    auto* cd = app.add_subcommand("distance", "exact minimum distance of a code");
    cd->add_option("--field", field_spec);
    cd->add_option("--cyclic", cyclic_poly);
    cd->add_option("--ring", ring_name);
    cd->add_option("--exps", exps_text);
    cd->add_option("--n", n)->required();
    cd->add_option("--method", method)
        ->check(CLI::IsMember({"auto", "exhaustive", "support", "res-tor"}));
    cd->add_option("--budget", budget);
    cd->add_option("--wmax", wmax);
    cd->add_flag("--oracle", oracle);

    auto* cg = app.add_subcommand("gray", "Gray image generator matrix of an exponent code");
    cg->add_option("--ring", ring_name)->required();
    cg->add_option("--n", n)->required();
    cg->add_option("--exps", exps_text)->required();

    auto* cq = app.add_subcommand("quantum", "derive quantum code parameters");
    cq->add_option("--ring", ring_name);
    cq->add_option("--n", n)->required();
    cq->add_option("--fgh", fgh.polys)->expected(3);
    cq->add_option("--exps", exps_text);
    cq->add_option("--field", field_spec);
    cq->add_option("--cyclic", cyclic_poly);
    cq->add_option("--via", via)
        ->check(CLI::IsMember({"thm2.2", "cor2.3", "thm3.6.1", "thm3.6.2", "thm3.9",
                               "thm3.9.1", "thm3.9.2", "thm4.14"}));
    cq->add_option("--i", level_i);
    cq->add_option("--j", level_j);
    cq->add_option("--budget", budget);
    cq->add_option("--wmax", wmax);
    cq->add_flag("--oracle", oracle);

    auto* cr = app.add_subcommand("reproduce", "re-derive the worked-example catalog");
    cr->add_option("--example", example_id);
    cr->add_flag("--all", all);
    cr->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "md"}));

    CLI11_PARSE(app, argc, argv);
    DistancePolicy pol{budget, wmax};

    if (cf->parsed()) {
        auto R = ring_preset(ring_name);
        auto fs = factor_ring_target(R, n, target);
        if (format == "text") {
            std::cout << R->describe() << "  " << fs.target << "  n=" << fs.n << "\n";
            for (auto& [rep, f] : fs.factors) {
                const auto& c = fs.coset_by_rep(rep);
                std::cout << "M_" << rep << " deg=" << f.degree()
                          << (c.symmetric ? " symmetric" : " partner=" + std::to_string(c.partner))
                          << "  " << f.to_string() << "\n";
            }
        } else {
            std::cout << factor_record(fs).dump(2) << "\n";
        }
        return 0;
    }

    if (cc->parsed()) {
        auto R = ring_preset(ring_name);
        if (!fgh.polys.empty()) {
            auto C = fgh.build(R, n);
            bool dc = C.matrix().contains(C.matrix().dual());
            std::cout << code_record(ring_name, n, "fgh", C.card(), C.is_selfdual(), dc).dump(2)
                      << "\n";
        } else if (!exps_text.empty()) {
            auto fs = std::make_shared<RingFactorSet>(factor_xn_minus_1u(R, n));
            auto C = ChainCodeExp::make(fs, parse_exps(*fs, exps_text));
            std::cout << code_record(ring_name, n, "exps", C.card(), C.is_hermitian_selfdual(),
                                     C.is_dual_containing())
                             .dump(2)
                      << "\n";
        } else {
            throw InternalError("code needs --fgh or --exps");
        }
        return 0;
    }

    if (cd->parsed()) {
        if (method == "res-tor" || (!exps_text.empty() && field_spec.empty())) {
            auto R = ring_preset(ring_name);
            auto fs = std::make_shared<RingFactorSet>(factor_xn_minus_1u(R, n));
            auto C = ChainCodeExp::make(fs, parse_exps(*fs, exps_text));
            auto d = gray_distance_res_tor(C, pol);
            ojson rec = distance_record(d);
            if (d.exact && !d.ring_certificate.empty()) {
                ojson cert = ojson::array();
                for (rel v : d.ring_certificate) cert.push_back(R->to_string(v));
                rec["ring_certificate"] = cert;
            }
            std::cout << rec.dump(2) << "\n";
            return 0;
        }
        auto F = parse_field(field_spec);
        auto C = LinearCode::cyclic(F, n, polyparse::parse(fdom(F), cyclic_poly));
        auto d = distance_with_method(C, method, pol);
        ojson rec = distance_record(d);
        if (oracle) oracle_check(C, d, pol, rec);
        std::cout << rec.dump(2) << "\n";
        return 0;
    }

    if (cg->parsed()) {
        auto R = ring_preset(ring_name);
        auto g = GrayContext::make(R);
        auto fs = std::make_shared<RingFactorSet>(factor_xn_minus_1u(R, n));
        auto C = ChainCodeExp::make(fs, parse_exps(*fs, exps_text));
        std::cout << gray_record(g, gray_image_code(g, C)).dump(2) << "\n";
        return 0;
    }

    if (cq->parsed()) {
        QuantumParams qp;
        bool chain_route = false;
        if (via == "thm4.14") {
            auto R = ring_preset(ring_name);
            auto fs = std::make_shared<RingFactorSet>(factor_xn_minus_1u(R, n));
            auto C = ChainCodeExp::make(fs, parse_exps(*fs, exps_text));
            qp = quantum_from_hermitian_gray(C, pol);
        } else if (via == "thm2.2" || via == "cor2.3") {
            auto F = parse_field(field_spec);
            auto C = LinearCode::cyclic(F, n, polyparse::parse(fdom(F), cyclic_poly));
            auto d = distance_with_method(C, "auto", pol);
            qp = (via == "thm2.2") ? css_two_codes(C, d, C, d, via)
                                   : css_dual_containing(C, d, via);
        } else {
            chain_route = true;
            auto R = ring_preset(ring_name);
            auto C = fgh.build(R, n);
            if (via == "thm3.9" || via == "thm3.9.1" || via == "thm3.6.1")
                qp = quantum_from_chain_selfdual(C, pol, via == "thm3.6.1" ? via : "thm3.9.1");
            else if (via == "thm3.9.2")
                qp = quantum_from_chain_selfdual(C, 0, 1, pol, via);
            else
                qp = quantum_from_chain_selfdual(C, level_i, level_j, pol, via);
        }
        ojson rec = quantum_record(qp);
        if (oracle && chain_route &&
            (via == "thm3.9" || via == "thm3.9.1" || via == "thm3.6.1")) {
            auto R = ring_preset(ring_name);
            auto C = fgh.build(R, n);
            auto proj = C.tower_projection(1);
            auto d = min_distance_auto(proj, pol);
            oracle_check(proj, d, pol, rec);
        }
        std::cout << rec.dump(2) << "\n";
        return 0;
    }

    if (cr->parsed()) {
        std::vector<FixtureReport> rows;
        if (all) {
            rows = run_all_fixtures();
        } else if (!example_id.empty()) {
            rows.push_back(run_fixture(example_id));
        } else {
            throw InternalError("reproduce needs --example or --all");
        }
        if (format == "csv")
            std::cout << reproduce_csv(rows);
        else if (format == "md")
            std::cout << reproduce_md(rows);
        else
            std::cout << reproduce_record(rows).dump(2) << "\n";
        for (const auto& r : rows)
            if (r.status == FixtureStatus::Fail) return 1;
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const rc_error& e) {
        std::cerr << e.what() << "\n";  // what() leads with the error name
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
