#pragma once

// JSON serialization for the file-facing types.  nlohmann::json keeps object
// keys sorted, so every dump here is byte-stable; nothing emits timestamps,
// hostnames, or other run-dependent noise.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hwl/bound.hpp"
#include "hwl/checks.hpp"
#include "hwl/embedding.hpp"
#include "hwl/rational.hpp"
#include "hwl/report.hpp"
#include "hwl/takagi.hpp"
#include "hwl/vertex_set.hpp"

namespace hwl {

using json = nlohmann::json;

// exact value plus a human-readable truncated decimal
inline json rational_to_json(const Rational& x) {
    json j;
    j["num"] = rat_num(x).str();
    j["den"] = rat_den(x).str();
    j["decimal"] = decimal_string(x);
    return j;
}

// ---- embeddings ----

// On disk a labeling is {"n": ..., "base": b, "map": [...]} with map[v] the
// label of vertex v (x_1 = most significant bit) and labels running over
// {b, ..., b + 2^n - 1}.  Internally labels are 1-based.
inline json embedding_to_json(const Embedding& e) {
    e.validate();
    json j;
    j["n"] = e.n;
    j["base"] = 0;
    std::vector<std::int64_t> m;
    m.reserve(e.map.size());
    for (std::int32_t v : e.map) m.push_back(v - 1);
    j["map"] = m;
    return j;
}

inline Embedding embedding_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("map"))
        throw std::invalid_argument("embedding: need object with \"n\" and \"map\"");
    const int n = j.at("n").get<int>();
    if (n < 1 || n > 24) throw std::invalid_argument("embedding: n out of [1, 24]");
    const std::int64_t base = j.value("base", std::int64_t(0));
    const auto& arr = j.at("map");
    if (!arr.is_array() || std::int64_t(arr.size()) != (std::int64_t(1) << n))
        throw std::invalid_argument("embedding: map must hold exactly 2^n labels");
    Embedding e;
    e.n = n;
    e.map.reserve(arr.size());
    for (const auto& x : arr) {
        const std::int64_t lab = x.get<std::int64_t>() - base + 1;
        if (lab < 1 || lab > (std::int64_t(1) << n))
            throw std::invalid_argument("embedding: label out of range after base shift");
        e.map.push_back(std::int32_t(lab));
    }
    e.validate();
    return e;
}

// ---- vertex sets ----

inline json vertex_set_to_json(const VertexSet& s) {
    json j;
    j["n"] = s.dim();
    j["bits"] = to_hex(s);
    return j;
}

inline VertexSet vertex_set_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("bits"))
        throw std::invalid_argument("vertex set: need object with \"n\" and \"bits\"");
    return from_hex(j.at("n").get<int>(), j.at("bits").get<std::string>());
}

// ---- reports ----

inline json grid_report_to_json(const GridReport& r) {
    json j;
    j["region"] = r.region;
    j["strict"] = r.strict;
    j["cells"] = r.cells;
    j["min_gap"] = rational_to_json(r.min_gap);
    j["min_count"] = r.min_count;
    j["argmin_i"] = r.argmin_i;
    j["argmin_j"] = r.argmin_j;
    j["pass"] = r.pass;
    j["witnesses"] = r.witnesses;
    j["theta_cells"] = r.theta_cells;
    j["theta_pass"] = r.theta_pass;
    j["theta_witnesses"] = r.theta_witnesses;
    return j;
}

inline json pipeline_report_to_json(const PipelineReport& r) {
    json j;
    j["n"] = r.n;
    j["wl"] = r.wl;
    j["align_mode"] = r.align_mode;
    j["second_peak"] = r.second_peak;
    j["plateau"] = r.plateau;
    json stages = json::array();
    for (const auto& s : r.stages) {
        json js;
        js["name"] = s.name;
        js["sum"] = s.sum;
        js["values"] = s.values;
        stages.push_back(js);
    }
    j["stages"] = stages;
    j["gray_total"] = r.gray_total;
    j["verdict"] = r.verdict;
    j["trust"] = r.trust;
    j["notes"] = r.notes;
    return j;
}

inline json identity_report_to_json(const IdentityReport& r) {
    json j;
    j["ok"] = r.ok;
    j["failures"] = r.failures;
    return j;
}

inline json check_suite_to_json(const CheckSuite& s) {
    json j;
    j["ok"] = s.ok();
    json checks = json::array();
    for (const auto& c : s.checks) {
        json jc;
        jc["name"] = c.name;
        jc["ok"] = c.ok;
        jc["detail"] = c.detail;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    return j;
}

// ---- files ----

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

} // namespace hwl
