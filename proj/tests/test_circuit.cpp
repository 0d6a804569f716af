#include <catch2/catch_amalgamated.hpp>

#include "rmf/rmf.hpp"
#include "support/oracles.hpp"

using namespace rmf;

namespace {

Circuit or2() {
    CircuitBuilder b("c");
    auto x0 = b.input("x0");
    auto x1 = b.input("x1");
    b.set_output(b.or_({x0, x1}));
    return b.build();
}

} // namespace

TEST_CASE("minimal well-formed circuit validates", "[circuit]") {
    Circuit c = or2();
    CHECK(!validate(c).has_value());
}

TEST_CASE("validate flags arity violations", "[circuit]") {
    // hand-assembled: NOT with two children
    Circuit c;
    c.inputs = {"x0", "x1"};
    c.nodes = {{GateKind::Input, {}, "x0"},
               {GateKind::Input, {}, "x1"},
               {GateKind::Not, {0, 1}, ""}};
    c.output = 2;
    auto issue = validate(c);
    REQUIRE(issue.has_value());
    CHECK(issue->code == Errc::BadArity);
    CHECK(issue->node == 2);
}

TEST_CASE("validate flags cycles, dangling refs, undeclared vars, unreachable nodes",
          "[circuit]") {
    Circuit cyc;
    cyc.inputs = {"x0"};
    cyc.nodes = {{GateKind::Input, {}, "x0"},
                 {GateKind::And, {0, 2}, ""},
                 {GateKind::Or, {1}, ""}}; // 1 <-> 2 loop
    cyc.output = 2;
    auto issue = validate(cyc);
    REQUIRE(issue.has_value());
    CHECK(issue->code == Errc::CyclicGraph);

    Circuit dangling = or2();
    dangling.nodes[2].children[1] = 99;
    issue = validate(dangling);
    REQUIRE(issue.has_value());
    CHECK(issue->code == Errc::DanglingReference);

    Circuit undeclared = or2();
    undeclared.nodes[0].var = "y";
    issue = validate(undeclared);
    REQUIRE(issue.has_value());
    CHECK(issue->code == Errc::UndeclaredVariable);

    Circuit unreachable = or2();
    unreachable.nodes.push_back({GateKind::And, {0, 1}, ""});
    issue = validate(unreachable);
    REQUIRE(issue.has_value());
    CHECK(issue->code == Errc::UnreachableNode);

    // declared-but-unreferenced inputs are part of the interface, not an error
    CircuitBuilder b("c");
    auto x0 = b.input("x0");
    b.input("x1");
    b.set_output(x0);
    CHECK(!validate(b.build()).has_value());
}

TEST_CASE("metrics of a single wide OR gate", "[metrics]") {
    CircuitBuilder b("w");
    std::vector<NodeId> in;
    for (int i = 0; i < 8; ++i)
        in.push_back(b.input("x" + std::to_string(i)));
    b.set_output(b.or_(in));
    Metrics m = metrics(b.build());
    CHECK(m.n == 8);
    CHECK(m.S == 8);
    CHECK(m.G == 1);
    CHECK(m.depth == 1);
    CHECK(m.alternation_depth == 1);
    CHECK(m.is_formula);
}

TEST_CASE("metrics of a bare input", "[metrics]") {
    CircuitBuilder b("w");
    b.set_output(b.input("x0"));
    Metrics m = metrics(b.build());
    CHECK(m.n == 1);
    CHECK(m.S == 1);
    CHECK(m.G == 0);
    CHECK(m.depth == 0);
    CHECK(m.alternation_depth == 0);
}

TEST_CASE("tree-expansion size multiplies through shared gates", "[metrics]") {
    // chain of 100 diamonds: S = 2^100, needs big-count arithmetic
    CircuitBuilder b("d");
    NodeId cur = b.input("x0");
    for (int i = 0; i < 100; ++i)
        cur = b.and_({cur, cur});
    b.set_output(cur);
    Metrics m = metrics(b.build());
    CHECK(m.S == BigCount(1) << 100);
    CHECK(m.G == 100);
    CHECK_FALSE(m.is_formula);
    CHECK(m.max_gate_fanout == 2);
}

TEST_CASE("formula flag tracks gate fanout, and S, G agree with direct tree counts",
          "[metrics]") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 30; ++iter) {
        Circuit f = testsupport::random_nnf_formula(rng, 5, 8);
        Metrics m = metrics(f);
        CHECK(m.is_formula);
        // independent counts: every positive literal is an AND/OR -> INPUT
        // edge, every negative literal is one NOT node
        std::size_t leaves = 0, gates = 0;
        for (NodeId id : topological_order(f)) {
            const Gate& g = f.nodes[id];
            if (g.kind == GateKind::Not) {
                ++leaves;
                continue;
            }
            if (g.kind != GateKind::And && g.kind != GateKind::Or) continue;
            ++gates;
            for (NodeId ch : g.children)
                if (f.nodes[ch].kind == GateKind::Input) ++leaves;
        }
        CHECK(m.G == gates);
        CHECK(m.S == leaves);
    }
}

TEST_CASE("alternation depth collapses same-kind chains and absorbs NOTs", "[metrics]") {
    CircuitBuilder b("a");
    auto x0 = b.input("x0");
    auto x1 = b.input("x1");
    b.set_output(b.and_({b.and_({x0, x1}), x1}));
    CHECK(metrics(b.build()).alternation_depth == 1);

    CircuitBuilder b2("a2");
    auto y0 = b2.input("x0");
    auto y1 = b2.input("x1");
    b2.set_output(b2.not_(b2.and_({y0, y1})));
    Metrics m2 = metrics(b2.build());
    CHECK(m2.alternation_depth == 1);
    CHECK(m2.depth == 2); // plain depth counts the NOT

    CircuitBuilder b3("a3");
    auto z0 = b3.input("x0");
    auto z1 = b3.input("x1");
    // NOT over AND flips the subtree: OR(AND, NOT(AND)) has 2 levels, not 3
    b3.set_output(b3.or_({b3.and_({z0, z1}), b3.not_(b3.and_({z0, z1}))}));
    CHECK(metrics(b3.build()).alternation_depth == 2);
}

TEST_CASE("evaluate matches spec anchors", "[evaluate]") {
    Circuit c = or2();
    CHECK(evaluate(c, {{"x0", false}, {"x1", false}}) == false);
    CHECK(evaluate(c, {{"x0", true}, {"x1", false}}) == true);

    CircuitBuilder b("contradiction");
    auto x0 = b.input("x0");
    b.set_output(b.and_({x0, b.not_(x0)}));
    Circuit k = b.build();
    CHECK(evaluate(k, {{"x0", false}}) == false);
    CHECK(evaluate(k, {{"x0", true}}) == false);

    CHECK_THROWS_AS(evaluate(c, {{"x0", true}}), Error);
}

TEST_CASE("evaluate agrees with an independent recursive oracle exhaustively", "[evaluate]") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 25; ++iter) {
        const std::size_t n = 2 + rng() % 9; // up to 10 inputs
        Circuit c = testsupport::random_circuit(rng, n, 3 + rng() % 10);
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            Assignment x = assignment_from_mask(c, mask);
            CHECK(evaluate(c, x) == testsupport::naive_eval(c, x));
        }
    }
}

TEST_CASE("counting evaluation short-circuits in child order", "[evaluate]") {
    CircuitBuilder b("w");
    std::vector<NodeId> in;
    for (int i = 0; i < 8; ++i)
        in.push_back(b.input("x" + std::to_string(i)));
    b.set_output(b.or_(in));
    Circuit c = b.build();

    Assignment x;
    for (int i = 0; i < 8; ++i)
        x["x" + std::to_string(i)] = false;
    x["x0"] = true;

    QueryLedger ledger;
    CHECK(evaluate_counting(c, x, ledger) == true);
    CHECK(ledger.charged == 1); // x0 answers immediately

    CircuitBuilder ba("wa");
    std::vector<NodeId> ia;
    for (int i = 0; i < 8; ++i)
        ia.push_back(ba.input("x" + std::to_string(i)));
    ba.set_output(ba.and_(ia));
    Assignment ones;
    for (int i = 0; i < 8; ++i)
        ones["x" + std::to_string(i)] = true;
    QueryLedger la;
    CHECK(evaluate_counting(ba.build(), ones, la) == true);
    CHECK(la.charged == 8); // conjunction must read everything

    CircuitBuilder bc("k1");
    bc.set_output(bc.const1());
    QueryLedger lc;
    CHECK(evaluate_counting(bc.build(), {}, lc) == true);
    CHECK(lc.charged == 0);
}

TEST_CASE("counting evaluation equals full evaluation and charges at most n", "[evaluate]") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 40; ++iter) {
        const std::size_t n = 2 + rng() % 7;
        Circuit c = testsupport::random_circuit(rng, n, 3 + rng() % 9);
        for (int k = 0; k < 20; ++k) {
            Assignment x = testsupport::random_assignment(rng, c);
            QueryLedger ledger;
            CHECK(evaluate_counting(c, x, ledger) == evaluate(c, x));
            CHECK(ledger.charged <= metrics(c).n);
            std::uint64_t sum = 0;
            for (const auto& e : ledger.log)
                sum += e.cost;
            CHECK(sum == ledger.charged);
        }
    }
}
