#pragma once

// JSON views of reports and records.  Everything uses ordered_json with
// fixed insertion order so repeated runs serialize byte-identically.

#include <json.hpp>

#include <string>

#include "rmf/analysis.hpp"
#include "rmf/gen.hpp"
#include "rmf/metrics.hpp"
#include "rmf/prune.hpp"

namespace rmf {

using Json = nlohmann::ordered_json;

/// S fits a JSON number only up to 2^63-1; beyond that it becomes a decimal
/// string.
inline Json big_count_json(const BigCount& s) {
    if (s <= std::numeric_limits<std::int64_t>::max())
        return Json(s.convert_to<std::int64_t>());
    return Json(s.str());
}

inline Json to_json(const Metrics& m) {
    Json j;
    j["n"] = m.n;
    j["S"] = big_count_json(m.S);
    j["G"] = m.G;
    j["depth"] = m.depth;
    j["alternation_depth"] = m.alternation_depth;
    j["max_gate_fanout"] = m.max_gate_fanout;
    j["is_formula"] = m.is_formula;
    return j;
}

inline Json to_json(const BoundReport& r) {
    Json j;
    j["n"] = r.n;
    j["S"] = big_count_json(r.S);
    j["G"] = r.G;
    j["term_n"] = r.term_n;
    j["term_sqrt_S"] = r.term_sqrt_s;
    j["term_n_G"] = r.term_n_g;
    j["upper"] = r.upper;
    j["active_term"] = active_term_name(r.active_term);
    j["regime"] = regime_name(r.regime);
    return j;
}

inline Json to_json(const QueryLedger& l) {
    Json j;
    j["charged"] = l.charged;
    Json log = Json::array();
    for (const auto& e : l.log) {
        Json entry;
        entry["op"] = e.op;
        entry["detail"] = e.detail;
        entry["cost"] = e.cost;
        log.push_back(std::move(entry));
    }
    j["log"] = std::move(log);
    return j;
}

inline Json to_json(const PassReport& p) {
    Json j;
    j["rounds"] = p.rounds;
    j["m_sequence"] = p.m_sequence;
    j["exhausted"] = p.exhausted;
    j["halt_reason"] = p.halt_reason;
    j["charged"] = p.charged;
    Json elim = Json::array();
    for (const auto& e : p.eliminated) {
        Json entry;
        entry["literal"] = e.literal;
        entry["gates_deleted"] = e.gates_deleted;
        elim.push_back(std::move(entry));
    }
    j["eliminated"] = std::move(elim);
    return j;
}

inline Json to_json(const PruneReport& r) {
    Json j;
    j["s_before"] = big_count_json(r.s_before);
    j["s_after"] = big_count_json(r.s_after);
    j["g_before"] = r.g_before;
    j["tau"] = r.tau;
    j["rounds_or"] = r.or_pass.rounds;
    j["rounds_and"] = r.and_pass.rounds;
    j["max_or_degree"] = r.max_or_degree;
    j["max_and_degree"] = r.max_and_degree;
    j["or_pass"] = to_json(r.or_pass);
    j["and_pass"] = to_json(r.and_pass);
    j["ledger"] = to_json(r.ledger);
    return j;
}

inline Json to_json(const CertificateReport& r) {
    Json j;
    j["c0"] = r.c0;
    j["c1"] = r.c1;
    j["has_zero_input"] = r.has_zero_input;
    j["has_one_input"] = r.has_one_input;
    Json w0, w1;
    w0["input"] = r.witness0.input;
    w0["certificate"] = r.witness0.certificate;
    w1["input"] = r.witness1.input;
    w1["certificate"] = r.witness1.certificate;
    j["witness0"] = std::move(w0);
    j["witness1"] = std::move(w1);
    return j;
}

inline Json to_json(const AuditResult& r) {
    Json j;
    j["pass"] = r.pass;
    j["detail"] = r.detail;
    return j;
}

/// Sidecar schema: family, params, citation, lb_formula, lb_value, metrics.
inline Json sidecar_json(const InstanceRecord& rec) {
    Json j;
    j["family"] = family_name(rec.family);
    Json params;
    for (const auto& [k, v] : rec.params)
        params[k] = v;
    j["params"] = std::move(params);
    j["citation"] = rec.citation;
    j["lb_formula"] = rec.lb_formula;
    j["lb_value"] = rec.lb_value;
    j["metrics"] = to_json(rec.metrics);
    return j;
}

} // namespace rmf
