#pragma once

// Formula pruning driven by a simulated quantum search.  A bipartite index
// tracks literal-to-gate adjacency; rounds of search locate satisfied
// high-degree literals whose OR gates (resp. falsified literals whose AND
// gates) collapse to constants.  Search cost is charged to a ledger at the
// expected-queries rate ceil(alpha*sqrt(N/t)); an empty search charges the
// round's cutoff budget ceil(budget_factor*alpha*sqrt(N)).

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rmf/circuit.hpp"
#include "rmf/evaluate.hpp"
#include "rmf/metrics.hpp"
#include "rmf/transform.hpp"

namespace rmf {

struct SearchConfig {
    double alpha = 1.0;         // multiplier on sqrt(N/t) charges
    double budget_factor = 10.0; // cutoff at budget_factor * expected cost
    std::uint64_t rng_seed = 0;

    void check() const {
        if (!(alpha > 0.0))
            throw Error(Errc::BadParams, "alpha must be positive");
        if (!(budget_factor >= 1.0))
            throw Error(Errc::BadParams, "budget_factor must be at least 1");
    }
};

namespace detail {

/// Deterministic uniform draw from [0, n) by rejection; mt19937_64 output is
/// specified by the standard, so seeded runs reproduce everywhere.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t reject_above = std::numeric_limits<std::uint64_t>::max() / n * n;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= reject_above);
    return r % n;
}

} // namespace detail

struct SearchOutcome {
    std::optional<std::size_t> index;  // nullopt: exhausted (no marked item)
    std::uint64_t marked_count = 0;    // simulator-private t, surfaced for reports
    std::uint64_t cost = 0;
};

/// Marked-item search simulator over indices [0, n).  Picks a uniformly
/// random marked index and charges ceil(alpha*sqrt(n/t)); with no marked
/// item it charges the cutoff budget ceil(budget_factor*alpha*sqrt(n)) and
/// reports exhaustion.  The caller never sees t except through the report.
inline SearchOutcome search_marked(std::size_t n, const std::function<bool(std::size_t)>& marked,
                                   const SearchConfig& cfg, QueryLedger& ledger,
                                   std::mt19937_64& rng) {
    if (n == 0)
        throw Error(Errc::BadParams, "search space must be nonempty");
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < n; ++i)
        if (marked(i)) hits.push_back(i);

    SearchOutcome out;
    out.marked_count = hits.size();
    if (hits.empty()) {
        out.cost = static_cast<std::uint64_t>(
            std::ceil(cfg.budget_factor * cfg.alpha * std::sqrt(static_cast<double>(n))));
        ledger.charge("search_exhausted", "N=" + std::to_string(n) + " t=0", out.cost);
        return out;
    }
    out.cost = static_cast<std::uint64_t>(std::ceil(
        cfg.alpha * std::sqrt(static_cast<double>(n) / static_cast<double>(hits.size()))));
    out.index = hits[detail::uniform_index(rng, hits.size())];
    ledger.charge("search", "N=" + std::to_string(n) + " t=" + std::to_string(hits.size()),
                  out.cost);
    return out;
}

struct EliminationEntry {
    std::string literal;          // e.g. "x3" or "!x3"
    std::uint64_t gates_deleted = 0;
};

struct PassReport {
    std::vector<std::uint64_t> m_sequence; // marked counts of successful rounds
    std::uint64_t rounds = 0;              // search invocations
    bool exhausted = false;                // ended in a budget-capped empty search
    std::uint64_t charged = 0;
    std::vector<EliminationEntry> eliminated;
    std::string halt_reason;               // gates_exhausted | no_high_degree | search_exhausted
};

struct PruneReport {
    PassReport or_pass;
    PassReport and_pass;
    QueryLedger ledger;
    BigCount s_before = 0;
    BigCount s_after = 0;
    std::uint64_t g_before = 0;
    std::uint64_t tau = 0;
    // Literal degree maxima on the pruned formula before the final constant
    // propagation; this is the object the ceil(sqrt(G)) bound speaks about.
    std::uint64_t max_or_degree = 0;
    std::uint64_t max_and_degree = 0;
};

struct PruneResult {
    Circuit circuit;
    PruneReport report;
};

namespace detail {

struct Literal {
    std::string var;
    bool positive = true;

    std::string display() const { return positive ? var : "!" + var; }
};

// Mutable pruning state over an NNF formula: literals on one side, AND/OR
// gates on the other, degrees maintained as gates die.
struct PruneModel {
    const Circuit& c;
    std::vector<Literal> lits;
    std::unordered_map<std::string, std::size_t> lit_id; // "v" / "!v"
    std::vector<std::vector<NodeId>> lit_or;  // distinct adjacent OR gates
    std::vector<std::vector<NodeId>> lit_and; // distinct adjacent AND gates
    std::vector<std::uint64_t> or_deg, and_deg;
    std::vector<std::vector<std::size_t>> gate_lits; // per node, distinct literal ids
    std::vector<std::int8_t> replaced;               // -1 live, else constant value
    std::unordered_set<std::uint64_t> dropped;       // (gate<<32)|lit wires removed
    std::size_t live_or = 0, live_and = 0;

    explicit PruneModel(const Circuit& circuit) : c(circuit) {
        replaced.assign(c.nodes.size(), -1);
        gate_lits.resize(c.nodes.size());
        auto lit_of = [&](NodeId ch) -> std::optional<Literal> {
            const Gate& g = c.nodes[ch];
            if (g.kind == GateKind::Input) return Literal{g.var, true};
            if (g.kind == GateKind::Not) {
                const Gate& sub = c.nodes[g.children[0]];
                if (sub.kind != GateKind::Input)
                    throw Error(Errc::NotNNF, "not gate above a non-input");
                return Literal{sub.var, false};
            }
            return std::nullopt;
        };
        for (NodeId id : topological_order(c)) {
            const Gate& g = c.nodes[id];
            if (g.kind != GateKind::And && g.kind != GateKind::Or) continue;
            (g.kind == GateKind::Or ? live_or : live_and) += 1;
            std::unordered_set<std::size_t> seen;
            for (NodeId ch : g.children) {
                auto lit = lit_of(ch);
                if (!lit) continue;
                std::size_t li = intern(*lit);
                if (!seen.insert(li).second) continue; // parallel wire, one edge
                gate_lits[id].push_back(li);
                if (g.kind == GateKind::Or) {
                    lit_or[li].push_back(id);
                    ++or_deg[li];
                } else {
                    lit_and[li].push_back(id);
                    ++and_deg[li];
                }
            }
        }
    }

    std::size_t intern(const Literal& l) {
        auto [it, inserted] = lit_id.try_emplace(l.display(), lits.size());
        if (inserted) {
            lits.push_back(l);
            lit_or.emplace_back();
            lit_and.emplace_back();
            or_deg.push_back(0);
            and_deg.push_back(0);
        }
        return it->second;
    }

    std::optional<std::size_t> find(const std::string& var, bool positive) const {
        auto it = lit_id.find(positive ? var : "!" + var);
        if (it == lit_id.end()) return std::nullopt;
        return it->second;
    }

    /// Deletes every live `kind` gate adjacent to literal li, replacing each
    /// with `value`; updates degrees incrementally.  Returns gates deleted.
    std::uint64_t delete_adjacent(std::size_t li, GateKind kind, std::int8_t value) {
        const auto& adj = kind == GateKind::Or ? lit_or[li] : lit_and[li];
        std::uint64_t killed = 0;
        for (NodeId gid : adj) {
            if (replaced[gid] >= 0) continue;
            replaced[gid] = value;
            (kind == GateKind::Or ? live_or : live_and) -= 1;
            ++killed;
            for (std::size_t other : gate_lits[gid]) {
                auto& deg = kind == GateKind::Or ? or_deg : and_deg;
                --deg[other];
            }
        }
        return killed;
    }

    /// Removes the wires of literal li into live `kind` gates (its value is
    /// the identity element there); an emptied gate becomes the identity
    /// constant.
    void drop_wires(std::size_t li, GateKind kind) {
        auto& adj = kind == GateKind::Or ? lit_or[li] : lit_and[li];
        auto& deg = kind == GateKind::Or ? or_deg : and_deg;
        for (NodeId gid : adj) {
            if (replaced[gid] >= 0) continue;
            dropped.insert((std::uint64_t(gid) << 32) | li);
            --deg[li];
            bool any_left = false;
            for (NodeId ch : c.nodes[gid].children) {
                // a child survives if it is a non-literal or an undropped literal
                const Gate& cg = c.nodes[ch];
                std::optional<std::size_t> cli;
                if (cg.kind == GateKind::Input)
                    cli = find(cg.var, true);
                else if (cg.kind == GateKind::Not)
                    cli = find(c.nodes[cg.children[0]].var, false);
                if (cli && dropped.count((std::uint64_t(gid) << 32) | *cli)) continue;
                any_left = true;
                break;
            }
            if (!any_left) {
                replaced[gid] = kind == GateKind::Or ? 0 : 1;
                (kind == GateKind::Or ? live_or : live_and) -= 1;
                for (std::size_t other : gate_lits[gid]) {
                    auto& d2 = kind == GateKind::Or ? or_deg : and_deg;
                    if (!dropped.count((std::uint64_t(gid) << 32) | other))
                        --d2[other];
                }
            }
        }
    }

    bool any_high_degree(GateKind kind, std::uint64_t tau) const {
        const auto& deg = kind == GateKind::Or ? or_deg : and_deg;
        for (std::uint64_t d : deg)
            if (d > tau) return true;
        return false;
    }

    /// Rebuilds the circuit with dead gates as constants and dropped literal
    /// wires removed; original declared inputs are preserved.
    Circuit rebuild() const {
        CircuitBuilder b(c.name);
        for (const auto& v : c.inputs)
            b.input(v);
        std::vector<NodeId> map(c.nodes.size(), 0);
        std::vector<std::uint8_t> done(c.nodes.size(), 0);
        std::vector<std::pair<NodeId, std::size_t>> stack{{c.output, 0}};
        while (!stack.empty()) {
            auto& [id, idx] = stack.back();
            if (done[id]) {
                stack.pop_back();
                continue;
            }
            const Gate& g = c.nodes[id];
            if (replaced[id] >= 0) {
                map[id] = b.constant(replaced[id]);
                done[id] = 1;
                stack.pop_back();
                continue;
            }
            if (g.kind == GateKind::Input) {
                map[id] = b.input_node(g.var);
                done[id] = 1;
                stack.pop_back();
                continue;
            }
            if (g.kind == GateKind::Const0 || g.kind == GateKind::Const1) {
                map[id] = b.constant(g.kind == GateKind::Const1);
                done[id] = 1;
                stack.pop_back();
                continue;
            }
            bool pushed = false;
            while (idx < g.children.size()) {
                NodeId ch = g.children[idx];
                if (is_wire_dropped(id, ch)) {
                    ++idx;
                    continue;
                }
                if (!done[ch]) {
                    stack.push_back({ch, 0});
                    pushed = true;
                    break;
                }
                ++idx;
            }
            if (pushed) continue;
            std::vector<NodeId> keep;
            keep.reserve(g.children.size());
            for (NodeId ch : g.children) {
                if (is_wire_dropped(id, ch)) continue;
                keep.push_back(map[ch]);
            }
            if (keep.empty())
                map[id] = b.constant(g.kind == GateKind::Or ? 0 : 1);
            else
                map[id] = b.gate(g.kind, std::move(keep));
            done[id] = 1;
            stack.pop_back();
        }
        b.set_output(map[c.output]);
        return b.build();
    }

    bool is_wire_dropped(NodeId gid, NodeId ch) const {
        if (dropped.empty()) return false;
        const Gate& cg = c.nodes[ch];
        std::optional<std::size_t> cli;
        if (cg.kind == GateKind::Input)
            cli = find(cg.var, true);
        else if (cg.kind == GateKind::Not)
            cli = find(c.nodes[cg.children[0]].var, false);
        if (!cli) return false;
        return dropped.count((std::uint64_t(gid) << 32) | *cli) != 0;
    }
};

} // namespace detail

/// Prunes a formula in negation normal form against assignment x: high-degree
/// satisfied literals collapse their OR gates to 1, then symmetrically
/// high-degree falsified literals collapse their AND gates to 0, with search
/// rounds charged to the ledger.  The returned circuit is the constant-
/// propagated pruned formula; it evaluates to the same bit as the input on x,
/// and every surviving literal has at most ceil(sqrt(G)) wires into gates of
/// either kind.
inline PruneResult prune(const Circuit& formula, const Assignment& x, const SearchConfig& cfg) {
    cfg.check();
    require_valid(formula);
    const Metrics m0 = metrics(formula);
    if (!m0.is_formula)
        throw Error(Errc::NotAFormula, "gate fanout exceeds 1");
    for (NodeId id : topological_order(formula)) {
        const Gate& g = formula.nodes[id];
        if (g.kind == GateKind::Not && formula.nodes[g.children[0]].kind != GateKind::Input)
            throw Error(Errc::NotNNF, "not gate above a non-input");
    }
    detail::check_covers(formula, x);

    PruneResult res;
    PruneReport& rep = res.report;
    rep.s_before = m0.S;
    rep.g_before = m0.G;
    rep.tau = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(m0.G))));

    detail::PruneModel model(formula);
    std::mt19937_64 rng(cfg.rng_seed);

    auto run_pass = [&](GateKind kind, PassReport& pass) {
        const std::uint64_t tau = rep.tau;
        const bool or_pass = kind == GateKind::Or;
        // The literal whose truth value lets us collapse `kind` gates: a
        // satisfied literal fixes an OR, a falsified literal fixes an AND.
        auto justifying = [&](std::size_t var_idx) -> std::optional<std::size_t> {
            const std::string& v = formula.inputs[var_idx];
            bool positive = x.at(v) == or_pass;
            return model.find(v, positive);
        };
        auto degree = [&](std::size_t li) {
            return or_pass ? model.or_deg[li] : model.and_deg[li];
        };

        std::vector<std::size_t> live_vars(formula.inputs.size());
        for (std::size_t i = 0; i < live_vars.size(); ++i)
            live_vars[i] = i;

        const std::uint64_t charged_before = rep.ledger.charged;
        while (true) {
            if ((or_pass ? model.live_or : model.live_and) == 0) {
                pass.halt_reason = "gates_exhausted";
                break;
            }
            if (!model.any_high_degree(kind, tau)) {
                pass.halt_reason = "no_high_degree";
                break;
            }
            if (live_vars.empty()) {
                // high-degree literals remain but none can be found; the
                // stuck search is cut off without queries over an empty space
                pass.exhausted = true;
                pass.halt_reason = "search_exhausted";
                break;
            }
            auto marked = [&](std::size_t pos) {
                auto li = justifying(live_vars[pos]);
                return li && degree(*li) > tau;
            };
            ++pass.rounds;
            SearchOutcome got = search_marked(live_vars.size(), marked, cfg, rep.ledger, rng);
            if (!got.index) {
                pass.exhausted = true;
                pass.halt_reason = "search_exhausted";
                break;
            }
            pass.m_sequence.push_back(got.marked_count);
            const std::size_t var_idx = live_vars[*got.index];
            const std::size_t li = *justifying(var_idx);
            std::uint64_t killed = model.delete_adjacent(li, kind, or_pass ? 1 : 0);
            pass.eliminated.push_back({model.lits[li].display(), killed});
            live_vars.erase(live_vars.begin() + static_cast<std::ptrdiff_t>(*got.index));
        }
        if (pass.exhausted) {
            // Everything still high-degree is falsified for this pass (a
            // satisfied one would have been marked), so its wires carry the
            // identity element and can be removed.
            for (std::size_t li = 0; li < model.lits.size(); ++li)
                if (degree(li) > tau)
                    model.drop_wires(li, kind);
        }
        pass.charged = rep.ledger.charged - charged_before;
        if (pass.rounds > rep.tau + 1)
            throw std::logic_error("pruning pass exceeded its round bound");
    };

    run_pass(GateKind::Or, rep.or_pass);
    run_pass(GateKind::And, rep.and_pass);

    for (std::size_t li = 0; li < model.lits.size(); ++li) {
        rep.max_or_degree = std::max(rep.max_or_degree, model.or_deg[li]);
        rep.max_and_degree = std::max(rep.max_and_degree, model.and_deg[li]);
    }

    res.circuit = simplify(model.rebuild());
    rep.s_after = metrics(res.circuit).S;
    return res;
}

} // namespace rmf
