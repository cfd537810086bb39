#pragma once

// Analysis reports. The table rendering is produced from the JSON document so both
// carry the same data.

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "small_cover.hpp"

namespace smallcover {

using ReportJson = nlohmann::ordered_json;

namespace detail {

inline ReportJson group_json(int degree, const FinAbGroup& g) {
    ReportJson torsion = ReportJson::array();
    for (const auto& q : g.torsion) torsion.push_back(q.str());
    return {{"degree", degree}, {"rank", g.rank}, {"torsion", torsion}, {"group", g.to_string()}};
}

inline ReportJson matrix_json(const gf2::BitMatrix& m) {
    ReportJson rows = ReportJson::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r).to_string());
    return rows;
}

inline ReportJson class_json(const GradedRingBasis& ring, const SimplicialComplex& k, const RingClass& c) {
    ReportJson terms = ReportJson::array();
    for (auto b : c.coeffs.support()) {
        std::string mono;
        for (int t : ring.basis_monomial(c.degree, b))
            mono += (mono.empty() ? "" : "*") + std::string("v") + std::to_string(k.labels()[static_cast<std::size_t>(ring.free_variables()[static_cast<std::size_t>(t)])]);
        terms.push_back(mono.empty() ? "1" : mono);
    }
    return terms;
}

}  // namespace detail

/// `selected` lists the 1-based conditions to include; empty means all seven.
inline ReportJson report_json(const Analysis& a, const std::vector<int>& selected = {}) {
    const auto& m = a.space;
    const auto& k = m.complex;
    const auto& r = a.report;
    auto label_of = [&](int pos) { return k.labels()[static_cast<std::size_t>(pos)]; };

    ReportJson j;
    j["name"] = m.name;
    j["n"] = m.n;
    j["m"] = k.vertex_count();
    j["facets"] = k.facets().size();
    j["hypotheses"] = {{"closed_pseudomanifold", m.closed_pseudomanifold},
                       {"strongly_connected", m.strongly_connected},
                       {"shelling_found", m.shelling.has_value()}};

    ReportJson cls;
    cls["image"] = to_string(m.pullback.label);
    cls["flips"] = m.closed_pseudomanifold && m.strongly_connected ? ReportJson(to_string(a.flips.label)) : ReportJson(nullptr);
    cls["simplex_pullback"] = m.pullback.is_simplex_pullback;
    if (m.pullback.witness) {
        ReportJson coloring = ReportJson::object();
        for (std::size_t v = 0; v < k.vertex_count(); ++v)
            coloring[std::to_string(k.labels()[v])] = m.pullback.witness->coloring[v];
        cls["basis_change"] = detail::matrix_json(m.pullback.witness->basis_change);
        cls["coloring"] = coloring;
    }
    j["classification"] = cls;

    j["betti"] = {{"rational", r.betti.rational}, {"mod2", r.betti.mod2}, {"mu", r.betti.mu}};
    ReportJson coh = ReportJson::array();
    for (int d = 0; d <= m.n; ++d) coh.push_back(detail::group_json(d, r.cohomology.at(d)));
    j["integral_cohomology"] = coh;
    j["ring_dimensions"] = r.ring_dimensions;

    ReportJson conds = ReportJson::array();
    for (std::size_t i = 0; i < 7; ++i) {
        const int idx = static_cast<int>(i) + 1;
        if (!selected.empty() && std::find(selected.begin(), selected.end(), idx) == selected.end()) continue;
        conds.push_back({{"index", idx}, {"name", condition_name(i)}, {"value", r.conditions[i]}});
    }
    j["conditions"] = conds;

    ReportJson w;
    w["odd_torsion_degrees"] = r.odd_torsion_degrees;
    w["sq1_nonvanishing_degrees"] = r.sq1_nonvanishing_degrees;
    w["betti_failures"] = r.betti_failures;
    if (r.sq1_witness) {
        const auto& s = *r.sq1_witness;
        const auto verts = mask_positions(s.facet);
        std::vector<int> facet;
        for (int p : verts) facet.push_back(label_of(p));
        w["sq1"] = {{"facet", facet},
                    {"position", s.position},
                    {"support", s.support},
                    {"s", label_of(verts[static_cast<std::size_t>(s.s - 1)])},
                    {"t", label_of(verts[static_cast<std::size_t>(s.t - 1)])},
                    {"flip_vertex", label_of(s.flip_vertex)},
                    {"class", detail::class_json(a.ring, k, s.witness)},
                    {"sq1_class", detail::class_json(a.ring, k, s.square)}};
    } else {
        w["sq1"] = nullptr;
    }
    j["witnesses"] = w;

    j["checks"] = {{"odd_mu_vanishes", r.odd_mu_vanishes},
                   {"condition6_matches_odd_mu", r.odd_mu_vanishes == r.conditions[5]},
                   {"sq1_degree2_check", r.sq1_degree2_check ? ReportJson(*r.sq1_degree2_check) : ReportJson(nullptr)}};
    if (!r.wu_coefficients.empty()) {
        ReportJson wu = ReportJson::array();
        for (std::size_t i = 0; i < r.wu_coefficients.size(); ++i)
            if (r.wu_coefficients[i]) wu.push_back("tau^" + std::to_string(i));
        j["wu"] = {{"formula", "Wu_i = C(n-i, i) tau^i"}, {"nonzero_terms", wu}, {"verified", false}};
    }
    j["verdict"] = r.verdict();
    j["warnings"] = r.warnings;
    return j;
}

namespace detail {

inline std::string join_values(const ReportJson& arr) {
    std::string s;
    for (const auto& v : arr) s += (s.empty() ? "" : " ") + (v.is_string() ? v.get<std::string>() : v.dump());
    return s;
}

}  // namespace detail

inline std::string render_table(const ReportJson& j) {
    std::ostringstream os;
    os << "instance   " << j["name"].get<std::string>() << "  (n=" << j["n"] << ", m=" << j["m"] << ", facets=" << j["facets"] << ")\n";
    os << "hypotheses ";
    for (const auto& [key, val] : j["hypotheses"].items()) os << key << "=" << (val.get<bool>() ? "yes" : "no") << " ";
    os << "\n";
    const auto& c = j["classification"];
    os << "class      " << c["image"].get<std::string>();
    if (!c["flips"].is_null()) os << " (flips: " << c["flips"].get<std::string>() << ")";
    os << "\n";
    if (c.contains("coloring")) {
        os << "coloring  ";
        for (const auto& [label, color] : c["coloring"].items()) os << " " << label << ":" << color;
        os << "\n";
    }
    os << "\n  q  b^q  b^q_Z2  mu^q  H^q(M;Z)\n";
    const auto& b = j["betti"];
    for (std::size_t q = 0; q < b["rational"].size(); ++q) {
        char line[64];
        std::snprintf(line, sizeof line, "%3zu %4lld %7lld %5lld  ", q, b["rational"][q].get<long long>(), b["mod2"][q].get<long long>(),
                      b["mu"][q].get<long long>());
        os << line << j["integral_cohomology"][q]["group"].get<std::string>() << "\n";
    }
    os << "ring dims  " << detail::join_values(j["ring_dimensions"]) << "\n\n";
    for (const auto& cond : j["conditions"])
        os << "  (" << cond["index"] << ") " << (cond["value"].get<bool>() ? "true " : "false") << "  " << cond["name"].get<std::string>()
           << "\n";
    const auto& w = j["witnesses"];
    if (!w["odd_torsion_degrees"].empty()) os << "odd torsion in degrees " << detail::join_values(w["odd_torsion_degrees"]) << "\n";
    if (!w["sq1_nonvanishing_degrees"].empty()) os << "Sq^1 nonzero on degrees " << detail::join_values(w["sq1_nonvanishing_degrees"]) << "\n";
    if (!w["betti_failures"].empty()) os << "Betti identity fails for k = " << detail::join_values(w["betti_failures"]) << "\n";
    if (!w["sq1"].is_null()) {
        const auto& s = w["sq1"];
        os << "Sq^1 witness: facet " << s["facet"].dump() << ", i=" << s["position"] << ", S=" << s["support"].dump() << ", x = v"
           << s["s"] << "*v" << s["t"] << " = " << detail::join_values(s["class"]) << ", Sq^1 x = " << detail::join_values(s["sq1_class"])
           << "\n";
    }
    const auto& ch = j["checks"];
    os << "checks     odd_mu_vanishes=" << ch["odd_mu_vanishes"] << " condition6_matches_odd_mu=" << ch["condition6_matches_odd_mu"]
       << " sq1_degree2_check=" << ch["sq1_degree2_check"] << "\n";
    if (j.contains("wu"))
        os << "wu         " << j["wu"]["formula"].get<std::string>() << ": " << detail::join_values(j["wu"]["nonzero_terms"]) << " (unverified)\n";
    if (j.contains("timings_ms")) os << "timings_ms " << j["timings_ms"].dump() << "\n";
    os << "verdict    " << j["verdict"].get<std::string>() << "\n";
    for (const auto& warn : j["warnings"]) os << "warning: " << warn.get<std::string>() << "\n";
    return os.str();
}

}  // namespace smallcover
