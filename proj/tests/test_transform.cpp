#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rmf/rmf.hpp"
#include "support/oracles.hpp"

using namespace rmf;

namespace {

/// Sequential composition semantics: evaluate each block through the
/// prepared g, then the prepared f on the block values.
bool sequential_compose_eval(const ComposeResult& r, const Assignment& y) {
    Assignment fx;
    for (std::size_t j = 0; j < r.blocks; ++j) {
        Assignment gx;
        for (const auto& gv : r.g_prepared.inputs)
            gx[gv] = y.at(block_var(j, gv));
        fx[r.f_prepared.inputs[j]] = evaluate(r.g_prepared, gx);
    }
    return evaluate(r.f_prepared, fx);
}

Circuit build_or2() {
    CircuitBuilder b("f");
    auto x0 = b.input("x0");
    auto x1 = b.input("x1");
    b.set_output(b.or_({x0, x1}));
    return b.build();
}

} // namespace

TEST_CASE("simplify applies identity, annihilator and unit rules", "[transform]") {
    CircuitBuilder b("s1");
    auto x0 = b.input("x0");
    b.set_output(b.and_({x0, b.const1()}));
    Circuit s1 = simplify(b.build());
    CHECK(s1.output == 0);
    CHECK(metrics(s1).G == 0);

    CircuitBuilder b2("s2");
    auto y0 = b2.input("x0");
    b2.set_output(b2.or_({y0, b2.const1()}));
    Circuit s2 = simplify(b2.build());
    CHECK(s2.nodes[s2.output].kind == GateKind::Const1);

    CircuitBuilder b3("s3");
    auto z0 = b3.input("x0");
    b3.set_output(b3.and_({b3.or_({b3.const1()}), z0}));
    Circuit s3 = simplify(b3.build());
    CHECK(s3.output == 0);
    CHECK(s3.nodes[s3.output].kind == GateKind::Input);
}

TEST_CASE("simplify preserves semantics, never grows, and is idempotent", "[transform]") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 30; ++iter) {
        const std::size_t n = 2 + rng() % 7; // <= 8
        Circuit c = testsupport::random_circuit(rng, n, 3 + rng() % 8);
        Circuit s = simplify(c);
        Metrics before = metrics(c), after = metrics(s);
        CHECK(after.S <= before.S);
        CHECK(after.G <= before.G);
        CHECK(simplify(s) == s);
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            Assignment x = assignment_from_mask(c, mask);
            CHECK(evaluate(s, x) == evaluate(c, x));
        }
    }
}

TEST_CASE("monotonize pushes NOTs through by De Morgan", "[transform]") {
    CircuitBuilder b("t");
    auto x0 = b.input("x0");
    auto x1 = b.input("x1");
    b.set_output(b.not_(b.and_({x0, x1})));
    auto res = monotonize(b.build(), TopKind::Or);
    CHECK_FALSE(res.negated);
    CHECK(res.circuit.inputs ==
          std::vector<std::string>{"x0", "x0_neg", "x1", "x1_neg"});
    const Gate& root = res.circuit.nodes[res.circuit.output];
    CHECK(root.kind == GateKind::Or);
    CHECK(res.circuit.nodes[root.children[0]].var == "x0_neg");
    CHECK(res.circuit.nodes[root.children[1]].var == "x1_neg");
}

TEST_CASE("a top-gate request of the opposite kind negates the function", "[transform]") {
    CircuitBuilder b("t");
    auto x0 = b.input("x0");
    auto x1 = b.input("x1");
    b.set_output(b.and_({x0, x1}));
    Circuit c = b.build();
    auto res = monotonize(c, TopKind::Or);
    CHECK(res.negated);
    CHECK(res.circuit.nodes[res.circuit.output].kind == GateKind::Or);
    // negated semantics under the consistent doubling
    for (std::uint64_t mask = 0; mask < 4; ++mask) {
        Assignment x = assignment_from_mask(c, mask);
        CHECK(evaluate(res.circuit, consistent_doubling(res.literals, x)) == !evaluate(c, x));
    }
}

TEST_CASE("monotonize keeps formulas at the same size and NOT-free", "[transform]") {
    InstanceRecord parity = gen_parity(2);
    auto res = monotonize(parity.circuit);
    Metrics m = metrics(res.circuit);
    CHECK(m.S == 4);
    CHECK(m.G == 3);
    CHECK(m.is_formula);
    CHECK(m.n == 4); // doubled literals
    for (const Gate& g : res.circuit.nodes)
        CHECK(g.kind != GateKind::Not);
}

TEST_CASE("monotonize properties on random circuits", "[transform]") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 25; ++iter) {
        const std::size_t n = 2 + rng() % 7; // <= 8 for exhaustive checking
        Circuit c = testsupport::random_circuit(rng, n, 3 + rng() % 8);
        Metrics before = metrics(c);
        auto res = monotonize(c);
        Metrics after = metrics(res.circuit);
        for (const Gate& g : res.circuit.nodes)
            CHECK(g.kind != GateKind::Not);
        CHECK(after.G <= 2 * before.G);
        CHECK(after.alternation_depth == before.alternation_depth);
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            Assignment x = assignment_from_mask(c, mask);
            bool want = evaluate(c, x);
            bool got = evaluate(res.circuit, consistent_doubling(res.literals, x));
            CHECK(got == (res.negated ? !want : want));
        }
    }
}

TEST_CASE("negate_root flips semantics with NOTs only at leaves", "[transform]") {
    Circuit c = build_or2();
    Circuit neg = negate_root(c);
    const Gate& root = neg.nodes[neg.output];
    CHECK(root.kind == GateKind::And);
    for (NodeId ch : root.children)
        CHECK(neg.nodes[ch].kind == GateKind::Not);
    CHECK(negate_root(neg) == c);

    CircuitBuilder b("k");
    b.set_output(b.const1());
    Circuit k1 = b.build();
    CHECK(negate_root(k1).nodes[negate_root(k1).output].kind == GateKind::Const0);

    std::mt19937_64 rng(53);
    for (int iter = 0; iter < 20; ++iter) {
        const std::size_t n = 2 + rng() % 7;
        Circuit r = testsupport::random_circuit(rng, n, 3 + rng() % 8);
        Circuit rn = negate_root(r);
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            Assignment x = assignment_from_mask(r, mask);
            CHECK(evaluate(rn, x) == !evaluate(r, x));
        }
        // on NNF inputs (here: monotone) the AND/OR count is exactly preserved
        Circuit mono = monotonize(r).circuit;
        CHECK(metrics(negate_root(mono)).G == metrics(mono).G);
    }
}

TEST_CASE("dualization over doubled literals is an exact structural involution",
          "[transform]") {
    std::mt19937_64 rng(61);
    for (int iter = 0; iter < 15; ++iter) {
        const std::size_t n = 2 + rng() % 6;
        Circuit c = testsupport::random_circuit(rng, n, 3 + rng() % 6);
        auto mono = monotonize(c);
        Circuit dual = negate_root(mono.circuit, mono.literals);
        CHECK(negate_root(dual, mono.literals) == mono.circuit);
        CHECK(metrics(dual).G == metrics(mono.circuit).G);
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            Assignment x = consistent_doubling(mono.literals, assignment_from_mask(c, mask));
            CHECK(evaluate(dual, x) == !evaluate(mono.circuit, x));
        }
    }
}

TEST_CASE("same-kind composition merges into one gate", "[compose]") {
    Circuit f = build_or2();
    ComposeResult r = compose(f, f);
    Metrics m = metrics(r.circuit);
    CHECK(m.G == 1);
    CHECK(m.alternation_depth == 1);
    CHECK(m.n == 16); // 4 * n_f * n_g
    CHECK(r.circuit.nodes[r.circuit.output].children.size() == 4);
}

TEST_CASE("parity composed with AND blocks keeps the product formula size", "[compose]") {
    const std::uint64_t m_arity = 4, block = 4;
    ComposeResult r = compose(gen_parity(m_arity).circuit,
                              gen_single_gate(GateKind::And, block, "and4"));
    Metrics m = metrics(r.circuit);
    CHECK(m.is_formula);
    CHECK(m.S == m_arity * m_arity * block); // S_f * S_g
    CHECK(m.G == m_arity * m_arity - 1);     // merged into the bottom level
    CHECK(m.alternation_depth == metrics(gen_parity(m_arity).circuit).alternation_depth);
}

TEST_CASE("composition depth arithmetic: onto over onto gives depth 5", "[compose]") {
    Circuit onto2 = gen_onto(2).circuit;
    ComposeResult r = compose(onto2, onto2);
    CHECK(metrics(r.circuit).alternation_depth == 5);
}

TEST_CASE("composition contracts over random generator pairs", "[compose]") {
    std::vector<Circuit> pool;
    pool.push_back(gen_parity(2).circuit);
    pool.push_back(gen_parity(4).circuit);
    pool.push_back(gen_onto(2).circuit);
    pool.push_back(gen_ed(2).circuit);
    pool.push_back(gen_bvpv(BitMatrix::identity(2)).circuit);
    pool.push_back(gen_single_gate(GateKind::And, 3, "and3"));
    pool.push_back(gen_single_gate(GateKind::Or, 4, "or4"));

    std::mt19937_64 rng(71);
    for (int iter = 0; iter < 12; ++iter) {
        const Circuit& f = pool[rng() % pool.size()];
        const Circuit& g = pool[rng() % pool.size()];
        Metrics mf = metrics(f), mg = metrics(g);
        ComposeResult r = compose(f, g);
        Metrics mh = metrics(r.circuit);
        CHECK(mh.n == 4 * mf.n * mg.n);
        CHECK(mh.alternation_depth == mf.alternation_depth + mg.alternation_depth - 1);
        CHECK(mh.G <= 2 * mf.G + 4 * mf.n * mg.G);
        for (int k = 0; k < 100; ++k) {
            Assignment y = testsupport::random_assignment(rng, r.circuit);
            CHECK(evaluate(r.circuit, y) == sequential_compose_eval(r, y));
        }
    }
}

TEST_CASE("consistent block assignments recover the composition on uniform blocks",
          "[compose]") {
    // parity of two AND_4 blocks on the all-ones input is parity(1,1) = 0
    ComposeResult r = compose(gen_parity(2).circuit, gen_single_gate(GateKind::And, 4, "and4"));
    std::vector<bool> ones(8, true);
    CHECK(evaluate(r.circuit, consistent_block_assignment(r, ones)) == false);
    // block values 1 and 0: parity(1,0) = 1
    std::vector<bool> oneZero = {true, true, true, true, false, false, false, false};
    CHECK(evaluate(r.circuit, consistent_block_assignment(r, oneZero)) == true);
}
