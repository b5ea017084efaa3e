/*
   Copyright 2026 The genbetti authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// vendored single-header nlohmann/json
#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "betti.hpp"
#include "hilbert.hpp"
#include "koszul.hpp"
#include "oracle.hpp"
#include "poly.hpp"

// Structured (JSON) serialization.  Exact integers are decimal strings so
// that no value is ever squeezed through a double; everything round-trips.
namespace genbetti {

inline nlohmann::json to_json(const IntPoly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const Int& c : p.coeffs()) a.push_back(c.str());
    return a;
}

inline IntPoly poly_from_json(const nlohmann::json& a) {
    std::vector<Int> c;
    for (const auto& v : a) c.emplace_back(v.get<std::string>());
    return IntPoly(std::move(c));
}

inline std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Koszul: return "koszul";
        case Provenance::Strand: return "strand";
        case Provenance::Given: return "given";
    }
    return "given";
}

inline Provenance provenance_from_string(const std::string& s) {
    if (s == "koszul") return Provenance::Koszul;
    if (s == "strand") return Provenance::Strand;
    if (s == "given") return Provenance::Given;
    throw std::invalid_argument("unknown provenance: " + s);
}

inline nlohmann::json to_json(const HilbertData& h) {
    return {{"series", to_json(h.series)},
            {"numerator", to_json(h.numerator)},
            {"regularity", h.regularity},
            {"n", h.n}};
}

inline HilbertData hilbert_from_json(const nlohmann::json& j) {
    HilbertData h;
    h.series = poly_from_json(j.at("series"));
    h.numerator = poly_from_json(j.at("numerator"));
    h.regularity = j.at("regularity").get<int>();
    h.n = j.at("n").get<int>();
    return h;
}

inline nlohmann::json to_json(const BettiTable& t) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [ij, e] : t.entries)
        entries.push_back({{"i", ij.first},
                           {"j", ij.second},
                           {"value", e.value.str()},
                           {"provenance", to_string(e.provenance)}});
    return {{"n", t.n}, {"regularity", t.regularity}, {"betti", entries}};
}

inline BettiTable betti_from_json(const nlohmann::json& j) {
    BettiTable t;
    t.n = j.at("n").get<int>();
    t.regularity = j.at("regularity").get<int>();
    for (const auto& e : j.at("betti"))
        t.set(e.at("i").get<int>(), e.at("j").get<int>(), Int(e.at("value").get<std::string>()),
              provenance_from_string(e.at("provenance").get<std::string>()));
    return t;
}

inline nlohmann::json to_json(const std::vector<GhostReport>& ghosts) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& g : ghosts) {
        nlohmann::json members = nlohmann::json::array();
        for (const auto& m : g.members)
            members.push_back({{"i", m.i}, {"koszul", m.koszul_explained}});
        a.push_back({{"j", g.internal_degree}, {"members", members}});
    }
    return a;
}

inline std::vector<GhostReport> ghosts_from_json(const nlohmann::json& a) {
    std::vector<GhostReport> out;
    for (const auto& g : a) {
        GhostReport r;
        r.internal_degree = g.at("j").get<int>();
        for (const auto& m : g.at("members"))
            r.members.push_back({m.at("i").get<int>(), m.at("koszul").get<bool>()});
        out.push_back(std::move(r));
    }
    return out;
}

inline nlohmann::json to_json(const UnimodalityClass& c) {
    nlohmann::json j;
    switch (c.kind) {
        case UnimodKind::StrictlyUnimodal: j["kind"] = "strictly_unimodal"; break;
        case UnimodKind::Plateaued: j["kind"] = "plateaued"; break;
        case UnimodKind::NotSymmetric: j["kind"] = "not_symmetric"; break;
        case UnimodKind::NotUnimodal: j["kind"] = "not_unimodal"; break;
    }
    if (c.plateau_start) j["plateau"] = {*c.plateau_start, *c.plateau_end};
    if (c.halfwidth_k) j["halfwidth_k"] = *c.halfwidth_k;
    return j;
}

inline UnimodalityClass unimodality_from_json(const nlohmann::json& j) {
    UnimodalityClass c;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "strictly_unimodal") c.kind = UnimodKind::StrictlyUnimodal;
    else if (kind == "plateaued") c.kind = UnimodKind::Plateaued;
    else if (kind == "not_symmetric") c.kind = UnimodKind::NotSymmetric;
    else if (kind == "not_unimodal") c.kind = UnimodKind::NotUnimodal;
    else throw std::invalid_argument("unknown kind: " + kind);
    if (j.contains("plateau")) {
        c.plateau_start = j["plateau"][0].get<int>();
        c.plateau_end = j["plateau"][1].get<int>();
    }
    if (j.contains("halfwidth_k")) c.halfwidth_k = j["halfwidth_k"].get<int>();
    return c;
}

inline nlohmann::json to_json(const OracleReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"degree", row.degree},
                        {"monomials", row.monomial_count.str()},
                        {"rank", row.rank.str()},
                        {"value", row.value.str()},
                        {"expected", row.expected.str()},
                        {"match", row.match}});
    return {{"prime", r.prime}, {"seed", r.seed},      {"attempts", r.attempts},
            {"proven", r.proven}, {"all_match", r.all_match}, {"rows", rows}};
}

inline OracleReport oracle_from_json(const nlohmann::json& j) {
    OracleReport r;
    r.prime = j.at("prime").get<std::uint32_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.attempts = j.at("attempts").get<int>();
    r.proven = j.at("proven").get<bool>();
    r.all_match = j.at("all_match").get<bool>();
    for (const auto& e : j.at("rows")) {
        OracleReport::Row row;
        row.degree = e.at("degree").get<int>();
        row.monomial_count = Int(e.at("monomials").get<std::string>());
        row.rank = Int(e.at("rank").get<std::string>());
        row.value = Int(e.at("value").get<std::string>());
        row.expected = Int(e.at("expected").get<std::string>());
        row.match = e.at("match").get<bool>();
        r.rows.push_back(std::move(row));
    }
    return r;
}

inline nlohmann::json to_json(const QuadricFamilyReport& r) {
    nlohmann::json nk = nlohmann::json::array();
    for (const auto& [ij, v] : r.non_koszul_entries)
        nk.push_back({{"i", ij.first}, {"j", ij.second}, {"value", v.str()}});
    nlohmann::json j = to_json(r.hilbert);
    const nlohmann::json table = to_json(r.table);
    j["k"] = r.k;
    j["betti"] = table.at("betti");
    j["ghosts"] = to_json(r.ghosts);
    j["non_koszul"] = nk;
    return j;
}

}  // namespace genbetti
