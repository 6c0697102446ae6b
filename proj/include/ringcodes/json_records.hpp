// JSON record builders shared by the CLI and its tests. Key order is fixed
// (ordered_json + fixed insertion order), so identical inputs give
// byte-identical output.

#ifndef RINGCODES_JSON_RECORDS_HPP
#define RINGCODES_JSON_RECORDS_HPP

#include <json.hpp>

#include "distance.hpp"
#include "fixtures.hpp"
#include "quantum.hpp"

namespace ringcodes {

using ojson = nlohmann::ordered_json;

inline ojson factor_record(const RingFactorSet& fs) {
    ojson rec;
    rec["ring"] = fs.ring->describe();
    rec["n"] = fs.n;
    rec["target"] = fs.target;
    rec["factors"] = ojson::array();
    for (auto& [rep, f] : fs.factors) {
        const auto& c = fs.coset_by_rep(rep);
        ojson fr;
        fr["coset_rep"] = rep;
        fr["degree"] = f.degree();
        fr["symmetric"] = c.symmetric;
        fr["partner"] = c.partner;
        ojson coeffs = ojson::array();
        for (rel v : f.coeffs()) coeffs.push_back(fs.ring->to_string(v));
        fr["coefficients"] = coeffs;
        rec["factors"].push_back(fr);
    }
    return rec;
}

inline ojson cardinality_record(const Cardinality& c) {
    ojson j;
    j["base"] = c.base;
    j["exp"] = c.exp;
    return j;
}

inline ojson code_record(const std::string& ring, u64 n, const std::string& form,
                         const Cardinality& card, bool selfdual, bool dual_containing) {
    ojson rec;
    rec["ring"] = ring;
    rec["n"] = n;
    rec["form"] = form;
    rec["cardinality"] = cardinality_record(card);
    rec["selfdual"] = selfdual;
    rec["dual_containing"] = dual_containing;
    return rec;
}

inline ojson distance_record(const DistanceResult& d) {
    ojson rec;
    rec["value"] = d.value;
    rec["exact"] = d.exact;
    rec["method"] = method_name(d.method);
    if (d.exact && !d.certificate.empty()) {
        ojson cert = ojson::array();
        for (gfel v : d.certificate) cert.push_back(u128_str(v));
        rec["certificate"] = cert;
    } else {
        rec["certificate"] = nullptr;
    }
    return rec;
}

inline ojson quantum_record(const QuantumParams& qp) {
    ojson rec;
    rec["n"] = qp.n;
    rec["k"] = qp.k;
    rec["d_lower"] = qp.d_lower;
    if (qp.d_exact) rec["d_exact"] = *qp.d_exact;
    rec["q"] = qp.q;
    rec["construction"] = qp.construction;
    rec["flags"] = {{"singleton_ok", qp.flags.singleton_ok},
                    {"mds", qp.flags.mds},
                    {"nmds", qp.flags.nmds}};
    rec["provenance"] = {{"theorem", qp.construction}, {"inputs", qp.inputs}};
    rec["bracket"] = qp.bracket();
    return rec;
}

inline ojson reproduce_record(const std::vector<FixtureReport>& rows) {
    ojson rec;
    rec["rows"] = ojson::array();
    int pass = 0, note = 0, fail = 0;
    for (const auto& r : rows) {
        ojson row;
        row["id"] = r.id;
        row["title"] = r.title;
        row["status"] = status_name(r.status);
        row["derived"] = r.derived;
        row["notes"] = r.notes;
        ojson checks = ojson::array();
        for (auto& [label, ok] : r.checks) checks.push_back({{"check", label}, {"ok", ok}});
        row["checks"] = checks;
        rec["rows"].push_back(row);
        if (r.status == FixtureStatus::Pass) ++pass;
        if (r.status == FixtureStatus::Note) ++note;
        if (r.status == FixtureStatus::Fail) ++fail;
    }
    rec["summary"] = {{"pass", pass}, {"note", note}, {"fail", fail}};
    return rec;
}

inline std::string reproduce_csv(const std::vector<FixtureReport>& rows) {
    std::string out = "id,status,derived,notes\n";
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + v[i];
        return s;
    };
    for (const auto& r : rows) {
        out += r.id;
        out += ",";
        out += status_name(r.status);
        out += ",\"" + join(r.derived) + "\",\"" + join(r.notes) + "\"\n";
    }
    return out;
}

inline std::string reproduce_md(const std::vector<FixtureReport>& rows) {
    std::string out = "| id | status | derived | notes |\n|---|---|---|---|\n";
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + v[i];
        return s;
    };
    for (const auto& r : rows) {
        out += "| " + r.id + " | " + status_name(r.status) + " | " + join(r.derived) + " | " +
               join(r.notes) + " |\n";
    }
    int fail = 0;
    for (const auto& r : rows)
        if (r.status == FixtureStatus::Fail) ++fail;
    out += "\n" + std::to_string(rows.size()) + " rows, " + std::to_string(fail) + " FAIL\n";
    return out;
}

inline ojson gray_record(const GrayContext& g, const LinearCode& img) {
    ojson rec;
    rec["ring"] = g.R->describe();
    rec["alpha"] = u128_str(g.alpha);
    rec["duality_preserving"] = g.duality_preserving;
    rec["n"] = img.n();
    rec["k"] = img.k();
    ojson rows = ojson::array();
    for (const auto& r : img.gen()) {
        ojson row = ojson::array();
        for (gfel v : r) row.push_back(u128_str(v));
        rows.push_back(row);
    }
    rec["generator"] = rows;
    return rec;
}

}  // namespace ringcodes

#endif
