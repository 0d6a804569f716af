#pragma once

// Core circuit IR: a DAG of AND/OR/NOT/CONST gates over named input
// variables, with a single designated output.  Node ids are dense and
// assigned in topological order by the builder, so children always have
// smaller ids than their parents in canonically built circuits.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace rmf {

using NodeId = std::uint32_t;

enum class GateKind : std::uint8_t { And, Or, Not, Input, Const0, Const1 };

inline const char* kind_name(GateKind k) {
    switch (k) {
    case GateKind::And: return "and";
    case GateKind::Or: return "or";
    case GateKind::Not: return "not";
    case GateKind::Input: return "input";
    case GateKind::Const0: return "const0";
    case GateKind::Const1: return "const1";
    }
    return "?";
}

inline bool is_gate(GateKind k) {
    return k == GateKind::And || k == GateKind::Or || k == GateKind::Not;
}

inline bool is_leaf(GateKind k) {
    return k == GateKind::Input || k == GateKind::Const0 || k == GateKind::Const1;
}

enum class Errc {
    CyclicGraph,
    DanglingReference,
    BadArity,
    UndeclaredVariable,
    UnreachableNode,
    MissingVariable,
    SyntaxError,
    DuplicateId,
    UseBeforeDef,
    ArityError,
    NotAFormula,
    NotNNF,
    NotCanonical,
    NotPowerOfTwo,
    BadDivisibility,
    BadParams,
    NotPrime,
    QExceedsN,
    TooLarge,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::CyclicGraph: return "CyclicGraph";
    case Errc::DanglingReference: return "DanglingReference";
    case Errc::BadArity: return "BadArity";
    case Errc::UndeclaredVariable: return "UndeclaredVariable";
    case Errc::UnreachableNode: return "UnreachableNode";
    case Errc::MissingVariable: return "MissingVariable";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::UseBeforeDef: return "UseBeforeDef";
    case Errc::ArityError: return "ArityError";
    case Errc::NotAFormula: return "NotAFormula";
    case Errc::NotNNF: return "NotNNF";
    case Errc::NotCanonical: return "NotCanonical";
    case Errc::NotPowerOfTwo: return "NotPowerOfTwo";
    case Errc::BadDivisibility: return "BadDivisibility";
    case Errc::BadParams: return "BadParams";
    case Errc::NotPrime: return "NotPrime";
    case Errc::QExceedsN: return "QExceedsN";
    case Errc::TooLarge: return "TooLarge";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

struct Gate {
    GateKind kind = GateKind::Const0;
    std::vector<NodeId> children; // arbitrary arity for AND/OR, one for NOT
    std::string var;              // INPUT only

    bool operator==(const Gate&) const = default;
};

/// Immutable-by-convention circuit value.  `nodes[i]` is the gate with id i;
/// `inputs` is the declared variable list in interface order.  Input nodes
/// exist for every declared variable (ids 0..n-1 in canonical circuits) and
/// are exempt from the reachability requirement; gates and constants must be
/// reachable from the output.
struct Circuit {
    std::string name = "c";
    std::vector<Gate> nodes;
    NodeId output = 0;
    std::vector<std::string> inputs;

    const Gate& node(NodeId id) const { return nodes.at(id); }
    std::size_t size() const { return nodes.size(); }

    /// Position of a declared variable, or npos.
    std::size_t input_index(const std::string& v) const {
        for (std::size_t i = 0; i < inputs.size(); ++i)
            if (inputs[i] == v) return i;
        return std::string::npos;
    }

    bool operator==(const Circuit&) const = default;
};

struct ValidationIssue {
    Errc code;
    NodeId node;
    std::string detail;
};

/// Checks all structural invariants; returns the first violation found, or
/// nullopt when the circuit is well formed.  Works on arbitrary (not just
/// canonically ordered) node layouts.
inline std::optional<ValidationIssue> validate(const Circuit& c) {
    const std::size_t n = c.nodes.size();
    if (n == 0)
        return ValidationIssue{Errc::DanglingReference, 0, "circuit has no nodes"};
    if (c.output >= n)
        return ValidationIssue{Errc::DanglingReference, c.output, "output id out of range"};

    std::unordered_set<std::string> declared(c.inputs.begin(), c.inputs.end());
    for (NodeId id = 0; id < n; ++id) {
        const Gate& g = c.nodes[id];
        for (NodeId ch : g.children)
            if (ch >= n)
                return ValidationIssue{Errc::DanglingReference, id, "child id out of range"};
        switch (g.kind) {
        case GateKind::And:
        case GateKind::Or:
            if (g.children.empty())
                return ValidationIssue{Errc::BadArity, id, "and/or needs at least one child"};
            break;
        case GateKind::Not:
            if (g.children.size() != 1)
                return ValidationIssue{Errc::BadArity, id, "not takes exactly one child"};
            break;
        case GateKind::Input:
            if (!g.children.empty())
                return ValidationIssue{Errc::BadArity, id, "input takes no children"};
            if (!declared.count(g.var))
                return ValidationIssue{Errc::UndeclaredVariable, id, "variable '" + g.var + "' not declared"};
            break;
        case GateKind::Const0:
        case GateKind::Const1:
            if (!g.children.empty())
                return ValidationIssue{Errc::BadArity, id, "constant takes no children"};
            break;
        }
    }

    // Cycle check: iterative three-color DFS over the full node set.
    enum : std::uint8_t { White, Grey, Black };
    std::vector<std::uint8_t> color(n, White);
    std::vector<std::pair<NodeId, std::size_t>> stack;
    for (NodeId root = 0; root < n; ++root) {
        if (color[root] != White) continue;
        stack.push_back({root, 0});
        color[root] = Grey;
        while (!stack.empty()) {
            auto& [id, idx] = stack.back();
            const auto& ch = c.nodes[id].children;
            if (idx < ch.size()) {
                NodeId next = ch[idx++];
                if (color[next] == Grey)
                    return ValidationIssue{Errc::CyclicGraph, next, "node lies on a cycle"};
                if (color[next] == White) {
                    color[next] = Grey;
                    stack.push_back({next, 0});
                }
            } else {
                color[id] = Black;
                stack.pop_back();
            }
        }
    }

    // Reachability from the output; declared input nodes are interface
    // sources and may legitimately be unreferenced.
    std::vector<bool> reach(n, false);
    std::vector<NodeId> work{c.output};
    reach[c.output] = true;
    while (!work.empty()) {
        NodeId id = work.back();
        work.pop_back();
        for (NodeId ch : c.nodes[id].children)
            if (!reach[ch]) {
                reach[ch] = true;
                work.push_back(ch);
            }
    }
    for (NodeId id = 0; id < n; ++id)
        if (!reach[id] && c.nodes[id].kind != GateKind::Input)
            return ValidationIssue{Errc::UnreachableNode, id, "node not reachable from output"};

    return std::nullopt;
}

inline void require_valid(const Circuit& c) {
    if (auto issue = validate(c))
        throw Error(issue->code, issue->detail + " (node " + std::to_string(issue->node) + ")");
}

/// Reachable nodes in children-first order, starting from `root`.
/// Deterministic: children are expanded in list order.
inline std::vector<NodeId> topological_order(const Circuit& c, NodeId root) {
    std::vector<NodeId> order;
    order.reserve(c.nodes.size());
    std::vector<std::uint8_t> state(c.nodes.size(), 0); // 0 new, 1 open, 2 done
    std::vector<std::pair<NodeId, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
        auto& [id, idx] = stack.back();
        const auto& ch = c.nodes[id].children;
        if (idx < ch.size()) {
            NodeId next = ch[idx++];
            if (state[next] == 0) {
                state[next] = 1;
                stack.push_back({next, 0});
            }
        } else {
            state[id] = 2;
            order.push_back(id);
            stack.pop_back();
        }
    }
    return order;
}

inline std::vector<NodeId> topological_order(const Circuit& c) {
    return topological_order(c, c.output);
}

/// Incremental builder.  Declares inputs eagerly (ids 0..n-1) and appends
/// gates referencing existing nodes only, so the result is always densely
/// topologically ordered.
class CircuitBuilder {
  public:
    explicit CircuitBuilder(std::string name = "c") { circ_.name = std::move(name); }

    NodeId input(const std::string& v) {
        if (by_name_.count(v))
            throw Error(Errc::DuplicateId, "input '" + v + "' declared twice");
        if (circ_.nodes.size() != circ_.inputs.size())
            throw Error(Errc::NotCanonical, "declare all inputs before adding gates");
        NodeId id = add_node({GateKind::Input, {}, v});
        circ_.inputs.push_back(v);
        by_name_.emplace(v, id);
        return id;
    }

    /// Node of an already declared variable.
    NodeId input_node(const std::string& v) const {
        auto it = by_name_.find(v);
        if (it == by_name_.end())
            throw Error(Errc::UndeclaredVariable, "variable '" + v + "' not declared");
        return it->second;
    }

    bool has_input(const std::string& v) const { return by_name_.count(v) != 0; }

    NodeId const0() { return add_node({GateKind::Const0, {}, {}}); }
    NodeId const1() { return add_node({GateKind::Const1, {}, {}}); }
    NodeId constant(bool b) { return b ? const1() : const0(); }

    NodeId not_(NodeId a) { return gate(GateKind::Not, {a}); }
    NodeId and_(std::vector<NodeId> ch) { return gate(GateKind::And, std::move(ch)); }
    NodeId or_(std::vector<NodeId> ch) { return gate(GateKind::Or, std::move(ch)); }

    NodeId gate(GateKind k, std::vector<NodeId> ch) {
        if (k == GateKind::Not && ch.size() != 1)
            throw Error(Errc::BadArity, "not takes exactly one child");
        if ((k == GateKind::And || k == GateKind::Or) && ch.empty())
            throw Error(Errc::BadArity, "and/or needs at least one child");
        if (!is_gate(k))
            throw Error(Errc::BadArity, "leaf kinds carry no children");
        for (NodeId c : ch)
            if (c >= circ_.nodes.size())
                throw Error(Errc::DanglingReference, "child id " + std::to_string(c) + " undefined");
        return add_node({k, std::move(ch), {}});
    }

    void set_output(NodeId id) {
        if (id >= circ_.nodes.size())
            throw Error(Errc::DanglingReference, "output id undefined");
        circ_.output = id;
        have_output_ = true;
    }

    std::size_t node_count() const { return circ_.nodes.size(); }

    /// Finalizes and validates.  The builder is left empty.
    Circuit build() {
        if (!have_output_)
            throw Error(Errc::DanglingReference, "no output designated");
        Circuit out = std::move(circ_);
        circ_ = Circuit{};
        by_name_.clear();
        have_output_ = false;
        require_valid(out);
        return out;
    }

  private:
    NodeId add_node(Gate g) {
        circ_.nodes.push_back(std::move(g));
        return static_cast<NodeId>(circ_.nodes.size() - 1);
    }

    Circuit circ_;
    std::unordered_map<std::string, NodeId> by_name_;
    bool have_output_ = false;
};

} // namespace rmf
