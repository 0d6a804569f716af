#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "rmf/rmf.hpp"
#include "support/oracles.hpp"

using namespace rmf;

TEST_CASE("smallest program parses to a one-gate circuit", "[textio]") {
    Circuit c = parse("circuit c { inputs x0 x1; g1 = or(x0,x1); output g1; }");
    CHECK(c.name == "c");
    CHECK(c.inputs == std::vector<std::string>{"x0", "x1"});
    REQUIRE(c.nodes.size() == 3);
    CHECK(c.nodes[2].kind == GateKind::Or);
    CHECK(c.nodes[2].children == std::vector<NodeId>{0, 1});
    CHECK(c.output == 2);
}

TEST_CASE("parser rejects bad arity, duplicates, use-before-def", "[textio]") {
    auto code_of = [](const std::string& text) {
        try {
            parse(text);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::SyntaxError;
    };
    CHECK(code_of("circuit c { inputs x0 x1; g1 = not(x0,x1); output g1; }") == Errc::ArityError);
    CHECK(code_of("circuit c { inputs x0 x1; g1 = not(); output g1; }") == Errc::ArityError);
    CHECK(code_of("circuit c { inputs x0 x1; g1 = and(); output g1; }") == Errc::ArityError);
    CHECK(code_of("circuit c { inputs x0 x1; g1 = const0(x0); output g1; }") == Errc::ArityError);
    CHECK(code_of("circuit c { inputs x0 x0; output x0; }") == Errc::DuplicateId);
    CHECK(code_of("circuit c { inputs x0; x0 = and(x0); output x0; }") == Errc::DuplicateId);
    CHECK(code_of("circuit c { inputs x0; g1 = and(g2); output g1; }") == Errc::UseBeforeDef);
    CHECK(code_of("circuit c { inputs x0; output g9; }") == Errc::UseBeforeDef);
    CHECK(code_of("circuit c { inputs x0; output x0; } trailing") == Errc::SyntaxError);
    CHECK(code_of("circuit c { inputs x0; g1 = nand(x0); output g1; }") == Errc::SyntaxError);
    CHECK(code_of("") == Errc::SyntaxError);
}

TEST_CASE("parse errors carry a source span", "[textio]") {
    try {
        parse("circuit c { inputs x0;\ng1 = or(x0,\nzz); output g1; }");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.code() == Errc::UseBeforeDef);
        CHECK(e.span().line == 3);
        CHECK(e.span().column == 1);
    }
}

TEST_CASE("print emits the canonical layout", "[textio]") {
    CircuitBuilder b("c");
    auto x0 = b.input("x0");
    auto x1 = b.input("x1");
    b.set_output(b.or_({x0, x1}));
    CHECK(print(b.build()) == "circuit c {\ninputs x0 x1;\ng2 = or(x0,x1);\noutput g2;\n}\n");

    CircuitBuilder b2("c");
    b2.set_output(b2.input("x0"));
    CHECK(print(b2.build()) == "circuit c {\ninputs x0;\noutput x0;\n}\n");
}

TEST_CASE("shared definitions print once and survive the roundtrip", "[textio]") {
    CircuitBuilder b("dag");
    auto x0 = b.input("x0");
    auto x1 = b.input("x1");
    auto shared = b.or_({x0, x1});
    b.set_output(b.and_({shared, shared}));
    Circuit c = b.build();
    std::string text = print(c);
    CHECK(text.find("g2,g2") != std::string::npos);
    CHECK(parse(text) == c);
}

TEST_CASE("gate names dodge inputs that look like g<number>", "[textio]") {
    CircuitBuilder b("c");
    auto g1 = b.input("g1");
    auto x = b.input("x");
    b.set_output(b.or_({g1, x}));
    Circuit c = b.build();
    Circuit back = parse(print(c));
    CHECK(back == c);
}

TEST_CASE("print then parse is the identity on generated instances", "[textio]") {
    auto roundtrip = [](const Circuit& c) {
        Circuit back = parse(print(c));
        CHECK(back == c);
        CHECK(print(back) == print(c));
    };
    roundtrip(gen_parity(4).circuit);
    roundtrip(gen_parity_and(8, 2).circuit);
    roundtrip(gen_onto(2).circuit);
    roundtrip(gen_ed(2).circuit);
    roundtrip(gen_bvpv(BitMatrix::identity(2)).circuit);
    roundtrip(gen_bmpv(BitMatrix::identity(2)).general.circuit);
    roundtrip(gen_projective_plane(2).second.circuit);
}

TEST_CASE("parser is total over random byte strings", "[textio][fuzz]") {
    std::mt19937_64 rng(99);
    const std::string alphabet = "circuit inputs output andornotconst01(){};=,_x \n\t";
    for (int iter = 0; iter < 10000; ++iter) {
        std::string text;
        const std::size_t len = rng() % 120;
        for (std::size_t i = 0; i < len; ++i) {
            if (rng() % 8 == 0)
                text += static_cast<char>(rng() % 256);
            else
                text += alphabet[rng() % alphabet.size()];
        }
        try {
            (void)parse(text);
        } catch (const Error&) {
            // any structured error is fine; crashes are not
        }
    }
    SUCCEED("no crash across 10000 fuzz inputs");
}
