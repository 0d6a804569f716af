#pragma once

// Structure-preserving transformations: constant propagation, De Morgan
// monotonization onto doubled literals, root negation by dualization, and
// circuit composition with same-kind boundary merging.

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rmf/circuit.hpp"
#include "rmf/evaluate.hpp"
#include "rmf/metrics.hpp"

namespace rmf {

/// Positive/negative literal names introduced for each original variable.
/// The positive literal keeps the original name; the negative one gets a
/// "_neg" suffix, lengthened if it would collide with an existing name.
struct LiteralMap {
    std::vector<std::string> base;                          // original inputs, in order
    std::vector<std::pair<std::string, std::string>> lits;  // (pos, neg), aligned with base

    const std::pair<std::string, std::string>& at(const std::string& v) const {
        for (std::size_t i = 0; i < base.size(); ++i)
            if (base[i] == v) return lits[i];
        throw Error(Errc::UndeclaredVariable, "no literal pair for '" + v + "'");
    }

    /// Doubled input list, interleaved: v0, v0_neg, v1, v1_neg, ...
    std::vector<std::string> doubled_inputs() const {
        std::vector<std::string> out;
        out.reserve(lits.size() * 2);
        for (const auto& [p, q] : lits) {
            out.push_back(p);
            out.push_back(q);
        }
        return out;
    }

    /// Name of the opposite literal.
    const std::string& partner(const std::string& lit) const {
        for (const auto& [p, q] : lits) {
            if (p == lit) return q;
            if (q == lit) return p;
        }
        throw Error(Errc::UndeclaredVariable, "'" + lit + "' is not a known literal");
    }
};

inline LiteralMap make_literal_map(const std::vector<std::string>& vars) {
    LiteralMap lm;
    lm.base = vars;
    std::unordered_set<std::string> taken(vars.begin(), vars.end());
    for (const auto& v : vars) {
        std::string neg = v + "_neg";
        while (taken.count(neg)) neg += "_";
        taken.insert(neg);
        lm.lits.emplace_back(v, neg);
    }
    return lm;
}

/// Assignment over the doubled literals consistent with x: pos = x_v,
/// neg = !x_v.
inline Assignment consistent_doubling(const LiteralMap& lm, const Assignment& x) {
    Assignment out;
    for (std::size_t i = 0; i < lm.base.size(); ++i) {
        bool bit = x.at(lm.base[i]);
        out[lm.lits[i].first] = bit;
        out[lm.lits[i].second] = !bit;
    }
    return out;
}

/// Rebuilds the reachable part of c with dense topological ids (postorder,
/// children in list order).  Declared inputs are preserved verbatim.
inline Circuit compact(const Circuit& c) {
    CircuitBuilder b(c.name);
    for (const auto& v : c.inputs)
        b.input(v);
    std::vector<NodeId> map(c.nodes.size(), 0);
    for (NodeId id : topological_order(c)) {
        const Gate& g = c.nodes[id];
        switch (g.kind) {
        case GateKind::Input: map[id] = b.input_node(g.var); break;
        case GateKind::Const0: map[id] = b.const0(); break;
        case GateKind::Const1: map[id] = b.const1(); break;
        default: {
            std::vector<NodeId> ch;
            ch.reserve(g.children.size());
            for (NodeId x : g.children)
                ch.push_back(map[x]);
            map[id] = b.gate(g.kind, std::move(ch));
        }
        }
    }
    b.set_output(map[c.output]);
    return b.build();
}

/// Constant propagation to fixpoint: identity/annihilator rules through
/// AND/OR/NOT, unit-fanin AND/OR unwrapping, unreachable removal.  No
/// absorption or idempotence rules, so the measured S and G of generated
/// constructions stay meaningful.  Semantics preserved; S and G never grow.
inline Circuit simplify(const Circuit& c) {
    struct Res {
        std::int8_t cval = -1; // >= 0: constant
        NodeId rep = 0;        // live representative (original id)
    };
    const auto topo = topological_order(c);
    std::vector<Res> res(c.nodes.size());
    std::vector<std::vector<NodeId>> kids(c.nodes.size()); // for live gates, rep ids

    for (NodeId id : topo) {
        const Gate& g = c.nodes[id];
        switch (g.kind) {
        case GateKind::Input: res[id] = {-1, id}; break;
        case GateKind::Const0: res[id] = {0, 0}; break;
        case GateKind::Const1: res[id] = {1, 0}; break;
        case GateKind::Not: {
            const Res& r = res[g.children[0]];
            if (r.cval >= 0)
                res[id] = {static_cast<std::int8_t>(1 - r.cval), 0};
            else {
                res[id] = {-1, id};
                kids[id] = {r.rep};
            }
            break;
        }
        case GateKind::And:
        case GateKind::Or: {
            const std::int8_t absorbing = g.kind == GateKind::And ? 0 : 1;
            std::vector<NodeId> live;
            bool absorbed = false;
            for (NodeId chid : g.children) {
                const Res& r = res[chid];
                if (r.cval == absorbing) {
                    absorbed = true;
                    break;
                }
                if (r.cval < 0)
                    live.push_back(r.rep);
            }
            if (absorbed)
                res[id] = {absorbing, 0};
            else if (live.empty())
                res[id] = {static_cast<std::int8_t>(1 - absorbing), 0};
            else if (live.size() == 1)
                res[id] = {-1, live[0]}; // unit wrapper removed
            else {
                res[id] = {-1, id};
                kids[id] = std::move(live);
            }
            break;
        }
        }
    }

    CircuitBuilder b(c.name);
    for (const auto& v : c.inputs)
        b.input(v);

    const Res root = res[c.output];
    if (root.cval >= 0) {
        b.set_output(b.constant(root.cval));
        return b.build();
    }

    // Build the live structure reachable from the root representative.
    std::vector<NodeId> map(c.nodes.size(), 0);
    std::vector<std::uint8_t> built(c.nodes.size(), 0);
    std::vector<std::pair<NodeId, std::size_t>> stack{{root.rep, 0}};
    while (!stack.empty()) {
        auto& [id, idx] = stack.back();
        if (built[id]) {
            stack.pop_back();
            continue;
        }
        const Gate& g = c.nodes[id];
        if (g.kind == GateKind::Input) {
            map[id] = b.input_node(g.var);
            built[id] = 1;
            stack.pop_back();
            continue;
        }
        if (idx < kids[id].size()) {
            NodeId next = kids[id][idx++];
            if (!built[next]) stack.push_back({next, 0});
            continue;
        }
        std::vector<NodeId> ch;
        ch.reserve(kids[id].size());
        for (NodeId x : kids[id])
            ch.push_back(map[x]);
        map[id] = b.gate(g.kind, std::move(ch));
        built[id] = 1;
        stack.pop_back();
    }
    b.set_output(map[root.rep]);
    return b.build();
}

struct MonotonizeResult {
    Circuit circuit;
    LiteralMap literals;
    bool negated = false; // true: circuit computes the negation of the input
};

enum class TopKind : std::uint8_t { Any, And, Or };

namespace detail {

// NNF rewrite with polarity tracking.  Literal leaves are resolved by the
// caller: either onto doubled-literal input nodes (monotonize) or onto
// NOT-wrapped originals (plain negation).
template <typename LeafFn>
Circuit nnf_rewrite(const Circuit& c, bool start_negated, const std::vector<std::string>& out_inputs,
                    const std::string& name, LeafFn&& leaf) {
    CircuitBuilder b(name);
    for (const auto& v : out_inputs)
        b.input(v);

    constexpr NodeId kUnset = ~NodeId(0);
    std::vector<NodeId> memo(c.nodes.size() * 2, kUnset);
    auto slot = [](NodeId id, bool neg) { return std::size_t(id) * 2 + (neg ? 1 : 0); };

    std::vector<std::pair<NodeId, bool>> stack{{c.output, start_negated}};
    while (!stack.empty()) {
        auto [id, neg] = stack.back();
        if (memo[slot(id, neg)] != kUnset) {
            stack.pop_back();
            continue;
        }
        const Gate& g = c.nodes[id];
        switch (g.kind) {
        case GateKind::Input:
            memo[slot(id, neg)] = leaf(b, g.var, neg);
            stack.pop_back();
            break;
        case GateKind::Const0:
            memo[slot(id, neg)] = b.constant(neg);
            stack.pop_back();
            break;
        case GateKind::Const1:
            memo[slot(id, neg)] = b.constant(!neg);
            stack.pop_back();
            break;
        case GateKind::Not:
            if (memo[slot(g.children[0], !neg)] == kUnset) {
                stack.push_back({g.children[0], !neg});
            } else {
                memo[slot(id, neg)] = memo[slot(g.children[0], !neg)];
                stack.pop_back();
            }
            break;
        case GateKind::And:
        case GateKind::Or: {
            bool ready = true;
            for (NodeId ch : g.children)
                if (memo[slot(ch, neg)] == kUnset) {
                    stack.push_back({ch, neg});
                    ready = false;
                }
            if (!ready) break;
            std::vector<NodeId> ch;
            ch.reserve(g.children.size());
            for (NodeId x : g.children)
                ch.push_back(memo[slot(x, neg)]);
            const bool is_and = (g.kind == GateKind::And) != neg;
            memo[slot(id, neg)] = b.gate(is_and ? GateKind::And : GateKind::Or, std::move(ch));
            stack.pop_back();
            break;
        }
        }
    }
    b.set_output(memo[slot(c.output, start_negated)]);
    return b.build();
}

inline GateKind root_kind(const Circuit& c) { return c.nodes[c.output].kind; }

} // namespace detail

/// Pushes NOT gates to the inputs by De Morgan's laws onto 2n doubled
/// literals.  If want_top names a gate kind and the natural top gate differs,
/// the negation is built instead and `negated` is set.  Gate count at most
/// doubles; formulas keep their exact size.
inline MonotonizeResult monotonize(const Circuit& c, TopKind want_top = TopKind::Any) {
    require_valid(c);
    LiteralMap lm = make_literal_map(c.inputs);
    std::vector<std::string> doubled = lm.doubled_inputs();

    std::unordered_map<std::string, std::string> neg_name;
    for (const auto& [p, q] : lm.lits)
        neg_name.emplace(p, q);

    auto leaf = [&](CircuitBuilder& b, const std::string& var, bool neg) {
        return b.input_node(neg ? neg_name.at(var) : var);
    };

    auto build = [&](bool negated) {
        return detail::nnf_rewrite(c, negated, doubled, c.name, leaf);
    };

    Circuit mono = build(false);
    bool negated = false;
    if (want_top != TopKind::Any) {
        GateKind rk = detail::root_kind(mono);
        GateKind want = want_top == TopKind::And ? GateKind::And : GateKind::Or;
        if ((rk == GateKind::And || rk == GateKind::Or) && rk != want) {
            mono = build(true);
            negated = true;
        }
    }
    return {std::move(mono), std::move(lm), negated};
}

/// Negation without a LiteralMap: NNF dualization with NOT gates only above
/// leaves.  AND/OR counts are unchanged.
inline Circuit negate_root(const Circuit& c) {
    require_valid(c);
    auto leaf = [](CircuitBuilder& b, const std::string& var, bool neg) {
        NodeId in = b.input_node(var);
        return neg ? b.not_(in) : in;
    };
    return detail::nnf_rewrite(c, true, c.inputs, c.name, leaf);
}

/// Negation of a monotone circuit over doubled literals: swaps AND/OR,
/// flips constants, and redirects every literal to its partner.  Node ids
/// are preserved one-for-one, so applying it twice is a structural identity.
inline Circuit negate_root(const Circuit& c, const LiteralMap& lm) {
    require_valid(c);
    std::unordered_map<std::string, std::string> partner;
    for (const auto& [p, q] : lm.lits) {
        partner.emplace(p, q);
        partner.emplace(q, p);
    }
    Circuit out = c;
    std::unordered_map<std::string, NodeId> input_at;
    for (NodeId id = 0; id < out.nodes.size(); ++id)
        if (out.nodes[id].kind == GateKind::Input)
            input_at.emplace(out.nodes[id].var, id);

    std::vector<NodeId> remap(out.nodes.size());
    for (NodeId id = 0; id < out.nodes.size(); ++id) {
        const Gate& g = out.nodes[id];
        if (g.kind == GateKind::Input) {
            auto it = partner.find(g.var);
            if (it == partner.end())
                throw Error(Errc::UndeclaredVariable, "'" + g.var + "' has no literal partner");
            auto at = input_at.find(it->second);
            if (at == input_at.end())
                throw Error(Errc::UndeclaredVariable, "partner literal '" + it->second + "' has no node");
            remap[id] = at->second;
        } else {
            remap[id] = id;
        }
    }
    for (NodeId id = 0; id < out.nodes.size(); ++id) {
        Gate& g = out.nodes[id];
        switch (g.kind) {
        case GateKind::And: g.kind = GateKind::Or; break;
        case GateKind::Or: g.kind = GateKind::And; break;
        case GateKind::Const0: g.kind = GateKind::Const1; break;
        case GateKind::Const1: g.kind = GateKind::Const0; break;
        case GateKind::Not:
            throw Error(Errc::NotNNF, "dualization expects a monotone circuit");
        case GateKind::Input: break;
        }
        for (NodeId& ch : g.children)
            ch = remap[ch];
    }
    out.output = remap[out.output];
    require_valid(out);
    return out;
}

struct ComposeResult {
    Circuit circuit;    // h = f' applied to one g-copy per f' input
    Circuit f_prepared; // monotone f over doubled literals
    Circuit g_prepared; // monotone g copy placed at every f' input (possibly dualized)
    LiteralMap f_literals;
    LiteralMap g_literals;
    bool g_dualized = false;
    std::size_t blocks = 0;     // number of input blocks = f_prepared inputs
    std::size_t block_size = 0; // variables per block = g_prepared inputs
};

/// Block-structured variable name of g-input `gvar` inside block `j`.
inline std::string block_var(std::size_t j, const std::string& gvar) {
    return "b" + std::to_string(j) + "_" + gvar;
}

namespace detail {

// Alternation level of each gate measured from the root (same-kind
// parent/child pairs share a level); used to find the gate kind at the
// deepest leaf-attachment level.
inline GateKind deepest_leaf_parent_kind(const Circuit& c) {
    const auto topo = topological_order(c);
    std::vector<std::size_t> level(c.nodes.size(), 0);
    if (!is_gate(c.nodes[c.output].kind))
        return GateKind::And; // no gates at all; arbitrary
    level[c.output] = 1;
    std::size_t best_level = 0;
    std::size_t and_votes = 0, or_votes = 0;
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        const Gate& g = c.nodes[*it];
        if (!is_gate(g.kind)) continue;
        bool has_leaf_child = false;
        for (NodeId ch : g.children) {
            const Gate& cg = c.nodes[ch];
            if (is_leaf(cg.kind)) {
                has_leaf_child = true;
                continue;
            }
            std::size_t lvl = level[*it] + (cg.kind == g.kind ? 0 : 1);
            level[ch] = std::max(level[ch], lvl);
        }
        if (has_leaf_child) {
            if (level[*it] > best_level) {
                best_level = level[*it];
                and_votes = or_votes = 0;
            }
            if (level[*it] == best_level) {
                (g.kind == GateKind::And ? and_votes : or_votes) += 1;
            }
        }
    }
    return and_votes >= or_votes ? GateKind::And : GateKind::Or;
}

} // namespace detail

/// Composition h = f'(g'', ..., g'') per the adjacent-gate-merging scheme:
/// both sides are monotonized, g is dualized if needed so its top gate kind
/// matches the gates at f's deepest leaf level, and every input of f' is
/// replaced by a copy of g'' on a fresh block of variables.  Where a leaf's
/// parent gate and the copy's top gate agree in kind they are merged.  When
/// g'' is a single gate level the copy is replicated per leaf occurrence
/// (formulas stay formulas); otherwise one copy per f' input is shared.
inline ComposeResult compose(const Circuit& f, const Circuit& g) {
    ComposeResult r;
    MonotonizeResult mf = monotonize(f, TopKind::Any);
    MonotonizeResult mg = monotonize(g, TopKind::Any);

    const GateKind want = detail::deepest_leaf_parent_kind(mf.circuit);
    Circuit gp = std::move(mg.circuit);
    if (is_gate(gp.nodes[gp.output].kind) && gp.nodes[gp.output].kind != GateKind::Not &&
        gp.nodes[gp.output].kind != want) {
        gp = negate_root(gp, mg.literals);
        r.g_dualized = true;
    }

    const Circuit& fp = mf.circuit;
    const std::size_t blocks = fp.inputs.size();
    const std::size_t block_size = gp.inputs.size();
    const bool replicate = metrics(gp).alternation_depth <= 1;

    CircuitBuilder b(f.name + "_" + g.name);
    for (std::size_t j = 0; j < blocks; ++j)
        for (const auto& gv : gp.inputs)
            b.input(block_var(j, gv));

    // Instantiates the copy for block j.  Returns the mapped node per gp id;
    // the root gate itself is created lazily so fully merged copies never
    // leave an unreachable node behind.
    struct Copy {
        std::vector<NodeId> map;
        bool have_root = false;
        NodeId root = 0;
        std::vector<NodeId> root_children;
        GateKind root_kind = GateKind::And;
        bool root_is_gate = false;
    };
    std::vector<Copy> shared(blocks);
    std::vector<bool> shared_built(blocks, false);

    auto build_copy = [&](std::size_t j) {
        Copy cp;
        cp.map.assign(gp.nodes.size(), 0);
        for (NodeId id : topological_order(gp)) {
            const Gate& gg = gp.nodes[id];
            if (id == gp.output && is_gate(gg.kind)) {
                cp.root_is_gate = true;
                cp.root_kind = gg.kind;
                for (NodeId ch : gg.children)
                    cp.root_children.push_back(cp.map[ch]);
                continue;
            }
            switch (gg.kind) {
            case GateKind::Input: cp.map[id] = b.input_node(block_var(j, gg.var)); break;
            case GateKind::Const0: cp.map[id] = b.const0(); break;
            case GateKind::Const1: cp.map[id] = b.const1(); break;
            default: {
                std::vector<NodeId> ch;
                for (NodeId x : gg.children)
                    ch.push_back(cp.map[x]);
                cp.map[id] = b.gate(gg.kind, std::move(ch));
            }
            }
        }
        if (!cp.root_is_gate)
            cp.root = cp.map[gp.output];
        return cp;
    };

    auto copy_root = [&](Copy& cp) {
        if (!cp.root_is_gate) return cp.root;
        if (!cp.have_root) {
            cp.root = b.gate(cp.root_kind, cp.root_children);
            cp.have_root = true;
        }
        return cp.root;
    };

    // Append the copy for block j to `out`, merging when the parent kind
    // matches the copy's top gate.
    auto attach = [&](std::vector<NodeId>& out, GateKind parent, std::size_t j) {
        if (replicate) {
            Copy cp = build_copy(j);
            if (cp.root_is_gate && cp.root_kind == parent)
                out.insert(out.end(), cp.root_children.begin(), cp.root_children.end());
            else
                out.push_back(copy_root(cp));
            return;
        }
        if (!shared_built[j]) {
            shared[j] = build_copy(j);
            shared_built[j] = true;
        }
        Copy& cp = shared[j];
        if (cp.root_is_gate && cp.root_kind == parent)
            out.insert(out.end(), cp.root_children.begin(), cp.root_children.end());
        else
            out.push_back(copy_root(cp));
    };

    std::vector<NodeId> map(fp.nodes.size(), 0);
    for (NodeId id : topological_order(fp)) {
        const Gate& fg = fp.nodes[id];
        switch (fg.kind) {
        case GateKind::Input:
            break; // handled at each referencing gate
        case GateKind::Const0: map[id] = b.const0(); break;
        case GateKind::Const1: map[id] = b.const1(); break;
        case GateKind::Not:
            throw Error(Errc::NotNNF, "monotonized f still has a not gate");
        case GateKind::And:
        case GateKind::Or: {
            std::vector<NodeId> ch;
            for (NodeId x : fg.children) {
                const Gate& cg = fp.nodes[x];
                if (cg.kind == GateKind::Input) {
                    std::size_t j = fp.input_index(cg.var);
                    attach(ch, fg.kind, j);
                } else {
                    ch.push_back(map[x]);
                }
            }
            map[id] = b.gate(fg.kind, std::move(ch));
            break;
        }
        }
    }

    const Gate& froot = fp.nodes[fp.output];
    if (froot.kind == GateKind::Input) {
        // Degenerate f: a bare literal.  h is a single copy of g''.
        std::size_t j = fp.input_index(froot.var);
        if (!shared_built[j]) {
            shared[j] = build_copy(j);
            shared_built[j] = true;
        }
        b.set_output(copy_root(shared[j]));
    } else {
        b.set_output(map[fp.output]);
    }

    r.circuit = b.build();
    r.f_prepared = std::move(mf.circuit);
    r.g_prepared = std::move(gp);
    r.f_literals = std::move(mf.literals);
    r.g_literals = std::move(mg.literals);
    r.blocks = blocks;
    r.block_size = block_size;
    return r;
}

/// Assignment for h built from per-block bits: one bit per (original f
/// variable, original g variable); positive literal blocks carry the doubled
/// block bits, negative literal blocks the doubled complement.  On blocks
/// where g(~bits) = !g(bits) (uniform blocks, for instance) this reproduces
/// the undoubled composition f(g(block_1), ..., g(block_nf)).
inline Assignment consistent_block_assignment(const ComposeResult& r,
                                              const std::vector<bool>& bits) {
    const std::size_t nf = r.f_literals.base.size();
    const std::size_t ng = r.g_literals.base.size();
    if (bits.size() != nf * ng)
        throw Error(Errc::MissingVariable, "expected " + std::to_string(nf * ng) + " block bits");
    Assignment out;
    for (std::size_t i = 0; i < nf; ++i) {
        for (std::size_t pol = 0; pol < 2; ++pol) {
            const std::size_t j = 2 * i + pol; // block index within f' inputs
            for (std::size_t k = 0; k < ng; ++k) {
                bool bit = bits[i * ng + k];
                if (pol == 1) bit = !bit;
                out[block_var(j, r.g_literals.lits[k].first)] = bit;
                out[block_var(j, r.g_literals.lits[k].second)] = !bit;
            }
        }
    }
    return out;
}

} // namespace rmf
