#pragma once

// Reference evaluation.  `evaluate` computes every reachable node bottom-up;
// `evaluate_counting` evaluates lazily with short-circuiting in child-list
// order and charges one ledger query per distinct variable actually read.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rmf/circuit.hpp"

namespace rmf {

using Assignment = std::unordered_map<std::string, bool>;

struct LedgerEntry {
    std::string op;     // e.g. "read", "search", "search_exhausted"
    std::string detail; // variable touched or round parameters
    std::uint64_t cost = 0;
};

/// Simulated oracle-query account.  `charged` always equals the sum of the
/// logged costs.
struct QueryLedger {
    std::uint64_t charged = 0;
    std::vector<LedgerEntry> log;

    void charge(std::string op, std::string detail, std::uint64_t cost) {
        charged += cost;
        log.push_back({std::move(op), std::move(detail), cost});
    }
};

/// Assignment from a bit string in declared input order ("0110...").
inline Assignment assignment_from_bits(const Circuit& c, const std::string& bits) {
    if (bits.size() != c.inputs.size())
        throw Error(Errc::MissingVariable,
                    "expected " + std::to_string(c.inputs.size()) + " bits, got " +
                        std::to_string(bits.size()));
    Assignment x;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1')
            throw Error(Errc::MissingVariable, "assignment bits must be 0 or 1");
        x[c.inputs[i]] = bits[i] == '1';
    }
    return x;
}

/// Assignment from the low bits of `mask`, input i = bit i.  Test helper.
inline Assignment assignment_from_mask(const Circuit& c, std::uint64_t mask) {
    Assignment x;
    for (std::size_t i = 0; i < c.inputs.size(); ++i)
        x[c.inputs[i]] = (mask >> i) & 1;
    return x;
}

namespace detail {
inline void check_covers(const Circuit& c, const Assignment& x) {
    for (const auto& v : c.inputs)
        if (!x.count(v))
            throw Error(Errc::MissingVariable, "assignment misses input '" + v + "'");
}
} // namespace detail

/// Full bottom-up evaluation.  Pre: valid circuit, x covers declared inputs.
inline bool evaluate(const Circuit& c, const Assignment& x) {
    detail::check_covers(c, x);
    std::vector<std::uint8_t> val(c.nodes.size(), 0);
    for (NodeId id : topological_order(c)) {
        const Gate& g = c.nodes[id];
        switch (g.kind) {
        case GateKind::Input: val[id] = x.at(g.var); break;
        case GateKind::Const0: val[id] = 0; break;
        case GateKind::Const1: val[id] = 1; break;
        case GateKind::Not: val[id] = !val[g.children[0]]; break;
        case GateKind::And: {
            std::uint8_t v = 1;
            for (NodeId ch : g.children) v &= val[ch];
            val[id] = v;
            break;
        }
        case GateKind::Or: {
            std::uint8_t v = 0;
            for (NodeId ch : g.children) v |= val[ch];
            val[id] = v;
            break;
        }
        }
    }
    return val[c.output];
}

/// Short-circuit evaluation that charges the ledger once per distinct
/// variable read.  Same value as `evaluate`; charges at most n queries.
inline bool evaluate_counting(const Circuit& c, const Assignment& x, QueryLedger& ledger) {
    detail::check_covers(c, x);
    std::vector<std::int8_t> val(c.nodes.size(), -1);
    std::unordered_set<std::string> seen;

    auto read = [&](const std::string& v) -> bool {
        if (seen.insert(v).second)
            ledger.charge("read", v, 1);
        return x.at(v);
    };

    // Explicit stack machine; idx is the next child to examine.
    std::vector<std::pair<NodeId, std::size_t>> stack{{c.output, 0}};
    while (!stack.empty()) {
        auto& [id, idx] = stack.back();
        if (val[id] >= 0) {
            stack.pop_back();
            continue;
        }
        const Gate& g = c.nodes[id];
        switch (g.kind) {
        case GateKind::Input:
            val[id] = read(g.var);
            stack.pop_back();
            break;
        case GateKind::Const0:
            val[id] = 0;
            stack.pop_back();
            break;
        case GateKind::Const1:
            val[id] = 1;
            stack.pop_back();
            break;
        case GateKind::Not:
            if (val[g.children[0]] < 0) {
                stack.push_back({g.children[0], 0});
            } else {
                val[id] = !val[g.children[0]];
                stack.pop_back();
            }
            break;
        case GateKind::And:
        case GateKind::Or: {
            const std::int8_t absorbing = g.kind == GateKind::And ? 0 : 1;
            std::int8_t result = -1;
            NodeId pending = 0;
            bool have_pending = false;
            while (idx < g.children.size()) {
                NodeId ch = g.children[idx];
                if (val[ch] < 0) {
                    pending = ch;
                    have_pending = true;
                    break;
                }
                if (val[ch] == absorbing) {
                    result = absorbing;
                    break;
                }
                ++idx;
            }
            if (result >= 0) {
                val[id] = result;
                stack.pop_back();
            } else if (have_pending) {
                stack.push_back({pending, 0});
            } else {
                val[id] = !absorbing;
                stack.pop_back();
            }
            break;
        }
        }
    }
    return val[c.output];
}

} // namespace rmf
