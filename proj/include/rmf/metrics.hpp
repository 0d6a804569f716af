#pragma once

// Size and shape measures.  Formula size S counts leaf occurrences along the
// tree expansion of the DAG (path counts multiply through shared gates), so
// it can be astronomically large for deep shared structures; it is kept in an
// arbitrary-precision integer.  Gate count G counts AND/OR nodes only.

#include <algorithm>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "rmf/circuit.hpp"

namespace rmf {

using BigCount = boost::multiprecision::cpp_int;

struct Metrics {
    std::size_t n = 0;                 // declared input variables
    BigCount S = 0;                    // leaf occurrences, tree expansion
    std::size_t G = 0;                 // AND/OR gates (NOT excluded)
    std::size_t depth = 0;             // longest gate path (AND/OR/NOT all count)
    std::size_t alternation_depth = 0; // AND/OR levels, NOTs absorbed into literals
    std::size_t max_gate_fanout = 0;   // max out-degree over AND/OR/NOT nodes
    bool is_formula = false;           // every gate has out-degree <= 1

    bool operator==(const Metrics&) const = default;
};

namespace detail {

// Alternation depth with polarity tracking: a NOT flips the effective kind
// of everything below it, so NOT(AND(..)) counts as one OR level.
inline std::size_t alternation_depth_of(const Circuit& c) {
    enum class Top : std::uint8_t { None, And, Or };
    struct Entry {
        std::size_t levels = 0;
        Top top = Top::None;
    };
    // Two slots per node: [0] positive polarity, [1] negated.
    std::vector<Entry> memo(c.nodes.size() * 2);
    std::vector<std::uint8_t> have(c.nodes.size() * 2, 0);

    auto slot = [](NodeId id, bool neg) { return std::size_t(id) * 2 + (neg ? 1 : 0); };

    std::vector<std::pair<NodeId, bool>> stack{{c.output, false}};
    while (!stack.empty()) {
        auto [id, neg] = stack.back();
        if (have[slot(id, neg)]) {
            stack.pop_back();
            continue;
        }
        const Gate& g = c.nodes[id];
        if (is_leaf(g.kind)) {
            memo[slot(id, neg)] = {0, Top::None};
            have[slot(id, neg)] = 1;
            stack.pop_back();
            continue;
        }
        if (g.kind == GateKind::Not) {
            if (!have[slot(g.children[0], !neg)]) {
                stack.push_back({g.children[0], !neg});
                continue;
            }
            memo[slot(id, neg)] = memo[slot(g.children[0], !neg)];
            have[slot(id, neg)] = 1;
            stack.pop_back();
            continue;
        }
        bool ready = true;
        for (NodeId ch : g.children)
            if (!have[slot(ch, neg)]) {
                stack.push_back({ch, neg});
                ready = false;
            }
        if (!ready) continue;
        Top k = ((g.kind == GateKind::And) != neg) ? Top::And : Top::Or;
        std::size_t levels = 0;
        for (NodeId ch : g.children) {
            const Entry& e = memo[slot(ch, neg)];
            levels = std::max(levels, e.levels + (e.top == k ? 0 : 1));
        }
        memo[slot(id, neg)] = {levels, k};
        have[slot(id, neg)] = 1;
        stack.pop_back();
    }
    return memo[slot(c.output, false)].levels;
}

} // namespace detail

/// Computes all measures in one reachable-subgraph sweep.  Pre: valid circuit.
inline Metrics metrics(const Circuit& c) {
    Metrics m;
    m.n = c.inputs.size();

    const auto topo = topological_order(c); // children first, reachable only

    // Gate count, fanout, formula-ness over reachable nodes.
    std::vector<std::size_t> parents(c.nodes.size(), 0);
    for (NodeId id : topo) {
        const Gate& g = c.nodes[id];
        if (g.kind == GateKind::And || g.kind == GateKind::Or) ++m.G;
        for (NodeId ch : g.children)
            ++parents[ch];
    }
    m.is_formula = true;
    for (NodeId id : topo) {
        if (!is_gate(c.nodes[id].kind)) continue;
        m.max_gate_fanout = std::max(m.max_gate_fanout, parents[id]);
        if (parents[id] > 1) m.is_formula = false;
    }

    // S: number of root-to-leaf paths per leaf, summed.  Parents before
    // children, i.e. reverse topological order.
    std::vector<BigCount> paths(c.nodes.size(), 0);
    paths[c.output] = 1;
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        const Gate& g = c.nodes[*it];
        if (is_leaf(g.kind)) {
            m.S += paths[*it];
            continue;
        }
        for (NodeId ch : g.children)
            paths[ch] += paths[*it];
    }

    // depth: gates along the longest output-to-leaf path, children first.
    std::vector<std::size_t> d(c.nodes.size(), 0);
    for (NodeId id : topo) {
        const Gate& g = c.nodes[id];
        if (is_leaf(g.kind)) continue;
        std::size_t best = 0;
        for (NodeId ch : g.children)
            best = std::max(best, d[ch]);
        d[id] = best + 1;
    }
    m.depth = d[c.output];

    m.alternation_depth = detail::alternation_depth_of(c);
    return m;
}

} // namespace rmf
