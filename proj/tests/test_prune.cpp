#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rmf/rmf.hpp"
#include "support/oracles.hpp"

using namespace rmf;

namespace {

Circuit worked_example() {
    // AND of three ORs all fed by x0; G = 4, tau = 2, x0 has OR-degree 3
    CircuitBuilder b("w");
    auto x0 = b.input("x0");
    auto x1 = b.input("x1");
    auto x2 = b.input("x2");
    auto x3 = b.input("x3");
    b.set_output(b.and_({b.or_({x0, x1}), b.or_({x0, x2}), b.or_({x0, x3})}));
    return b.build();
}

} // namespace

TEST_CASE("search simulator charges the expected-cost rate", "[search]") {
    SearchConfig cfg;
    std::mt19937_64 rng(0);

    QueryLedger l1;
    auto r1 = search_marked(100, [](std::size_t i) { return i < 25; }, cfg, l1, rng);
    REQUIRE(r1.index.has_value());
    CHECK(*r1.index < 25);
    CHECK(r1.marked_count == 25);
    CHECK(l1.charged == 2); // ceil(sqrt(100/25))

    QueryLedger l2;
    auto r2 = search_marked(100, [](std::size_t) { return false; }, cfg, l2, rng);
    CHECK_FALSE(r2.index.has_value());
    CHECK(l2.charged == 100); // ceil(10 * sqrt(100))

    QueryLedger l3;
    auto r3 = search_marked(1, [](std::size_t) { return true; }, cfg, l3, rng);
    REQUIRE(r3.index.has_value());
    CHECK(*r3.index == 0);
    CHECK(l3.charged == 1);
}

TEST_CASE("search returns each marked index with positive probability", "[search]") {
    SearchConfig cfg;
    std::mt19937_64 rng(12345);
    std::vector<int> seen(4, 0);
    for (int i = 0; i < 200; ++i) {
        QueryLedger l;
        auto r = search_marked(16, [](std::size_t i) { return i % 4 == 0; }, cfg, l, rng);
        REQUIRE(r.index.has_value());
        ++seen[*r.index / 4];
    }
    for (int count : seen)
        CHECK(count > 10);
}

TEST_CASE("worked pruning example collapses to constant 1", "[prune]") {
    Circuit f = worked_example();
    Assignment x{{"x0", true}, {"x1", false}, {"x2", false}, {"x3", false}};
    SearchConfig cfg;
    PruneResult r = prune(f, x, cfg);
    CHECK(r.report.tau == 2);
    CHECK(r.circuit.nodes[r.circuit.output].kind == GateKind::Const1);
    CHECK(evaluate(r.circuit, x) == evaluate(f, x));
    CHECK(r.report.or_pass.m_sequence == std::vector<std::uint64_t>{1});
    CHECK(r.report.or_pass.eliminated.size() == 1);
    CHECK(r.report.or_pass.eliminated[0].literal == "x0");
    CHECK(r.report.or_pass.eliminated[0].gates_deleted == 3);
    CHECK(r.report.or_pass.halt_reason == "gates_exhausted");
    CHECK(r.report.and_pass.halt_reason == "no_high_degree");
}

TEST_CASE("a formula without high-degree literals is returned as its simplification",
          "[prune]") {
    InstanceRecord parity = gen_parity(4);
    Assignment x = assignment_from_mask(parity.circuit, 0b1010);
    SearchConfig cfg;
    PruneResult r = prune(parity.circuit, x, cfg);
    // parity_4: G = 15, tau = 4; literal degrees are all 1
    CHECK(r.report.or_pass.rounds == 0);
    CHECK(r.report.and_pass.rounds == 0);
    CHECK(r.report.ledger.charged == 0);
    CHECK(r.circuit == simplify(parity.circuit));
    CHECK(evaluate(r.circuit, x) == evaluate(parity.circuit, x));
}

TEST_CASE("pruning the parity-of-ANDs instance under all ones", "[prune]") {
    ComposeResult comp =
        compose(gen_parity(8).circuit, gen_single_gate(GateKind::And, 8, "and8"));
    Circuit f = comp.circuit;
    Assignment ones;
    for (const auto& v : f.inputs)
        ones[v] = true;
    SearchConfig cfg;
    PruneResult r = prune(f, ones, cfg);
    CHECK(evaluate(r.circuit, ones) == evaluate(f, ones));
    // everything is satisfied, so the AND pass has nothing marked
    CHECK(r.report.and_pass.eliminated.empty());
    CHECK(r.report.max_or_degree <= r.report.tau);
    CHECK(r.report.max_and_degree <= r.report.tau);
}

TEST_CASE("prune rejects non-formulas, non-NNF inputs and missing variables", "[prune]") {
    CircuitBuilder b("dag");
    auto x0 = b.input("x0");
    auto x1 = b.input("x1");
    auto shared = b.or_({x0, x1});
    b.set_output(b.and_({shared, shared}));
    SearchConfig cfg;
    CHECK_THROWS_MATCHES(prune(b.build(), {{"x0", true}, {"x1", true}}, cfg), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::NotAFormula; }));

    CircuitBuilder b2("nonnnf");
    auto y0 = b2.input("x0");
    auto y1 = b2.input("x1");
    b2.set_output(b2.not_(b2.and_({y0, y1})));
    CHECK_THROWS_MATCHES(prune(b2.build(), {{"x0", true}, {"x1", true}}, cfg), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::NotNNF; }));

    Circuit w = worked_example();
    CHECK_THROWS_MATCHES(prune(w, {{"x0", true}}, cfg), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::MissingVariable; }));
}

TEST_CASE("pruning invariants hold across random NNF formulas", "[prune][property]") {
    std::mt19937_64 rng(2024);
    SearchConfig cfg;
    for (int iter = 0; iter < 60; ++iter) {
        const std::size_t n = 8 + rng() % 25;
        const std::size_t g = 16 + rng() % 65;
        Circuit f = testsupport::random_nnf_formula(rng, n, g);
        Metrics m = metrics(f);
        cfg.rng_seed = iter;
        for (int k = 0; k < 3; ++k) {
            Assignment x = testsupport::random_assignment(rng, f);
            PruneResult r = prune(f, x, cfg);

            CHECK(evaluate(r.circuit, x) == evaluate(f, x));
            CHECK(r.report.max_or_degree <= r.report.tau);
            CHECK(r.report.max_and_degree <= r.report.tau);
            CHECK(r.report.s_after <= r.report.s_before);
            CHECK(r.report.s_after <= BigCount(4) * m.n * r.report.tau);

            // closed-form ledger bound at the default alpha and budget factor
            const double nn = static_cast<double>(m.n);
            const double tau = static_cast<double>(r.report.tau);
            const double closed =
                cfg.budget_factor * cfg.alpha * (2.0 * std::sqrt(nn * (tau + 1)) + 2.0 * std::sqrt(nn)) +
                2.0 * std::ceil(cfg.budget_factor * cfg.alpha * std::sqrt(2.0 * nn));
            CHECK(static_cast<double>(r.report.ledger.charged) <= closed);

            AuditResult audit = ledger_audit(r.report, m, cfg);
            INFO(audit.detail);
            CHECK(audit.pass);
        }
    }
}

TEST_CASE("a fixed seed reproduces the report bit for bit", "[prune]") {
    std::mt19937_64 rng(5150);
    Circuit f = testsupport::random_nnf_formula(rng, 16, 48);
    Assignment x = testsupport::random_assignment(rng, f);
    SearchConfig cfg;
    cfg.rng_seed = 77;
    PruneResult a = prune(f, x, cfg);
    PruneResult b = prune(f, x, cfg);
    CHECK(to_json(a.report).dump() == to_json(b.report).dump());
    CHECK(print(a.circuit) == print(b.circuit));
}
