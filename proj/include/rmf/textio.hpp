#pragma once

// Text interchange format (.rmf).  One circuit per file:
//
//   circuit <name> {
//   inputs <v> <v> ...;
//   <id> = <kind>(<arg>,<arg>);
//   output <id>;
//   }
//
// Definitions come strictly before use, which makes the grammar LL(1) and
// rules out cycles syntactically.  The printer emits the canonical layout:
// topological id order, single-space separation, LF line endings.  See
// docs/format.md for the frozen grammar.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rmf/circuit.hpp"

namespace rmf {

struct SourceSpan {
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t offset = 0;
};

class ParseError : public Error {
  public:
    ParseError(Errc code, const std::string& what, SourceSpan span)
        : Error(code, what + " at " + std::to_string(span.line) + ":" + std::to_string(span.column)),
          span_(span) {}

    const SourceSpan& span() const { return span_; }

  private:
    SourceSpan span_;
};

namespace detail {

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    SourceSpan span() const { return span_; }

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\r')
                advance();
            else if (c == '\n')
                advance();
            else
                break;
        }
        span_ = {line_, col_, pos_};
    }

    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(Errc::SyntaxError, std::string("expected '") + c + "'", span_);
        advance();
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            advance();
            return true;
        }
        return false;
    }

    std::string ident() {
        skip_ws();
        if (pos_ >= text_.size() || !ident_start(text_[pos_]))
            throw ParseError(Errc::SyntaxError, "expected identifier", span_);
        std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_]))
            advance();
        return std::string(text_.substr(start, pos_ - start));
    }

    void keyword(std::string_view kw) {
        SourceSpan at = (skip_ws(), span_);
        std::string id = ident();
        if (id != kw)
            throw ParseError(Errc::SyntaxError, "expected '" + std::string(kw) + "'", at);
    }

  private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    SourceSpan span_;
};

inline bool is_keyword(const std::string& s) {
    return s == "circuit" || s == "inputs" || s == "output" || s == "and" || s == "or" ||
           s == "not" || s == "const0" || s == "const1";
}

} // namespace detail

/// Parses a single circuit.  Total: any input yields a Circuit or throws a
/// ParseError (or a subclass-coded duplicate/arity error with a span).
inline Circuit parse(std::string_view text) {
    detail::Lexer lex(text);
    lex.keyword("circuit");

    SourceSpan name_at = (lex.skip_ws(), lex.span());
    std::string name = lex.ident();
    if (detail::is_keyword(name))
        throw ParseError(Errc::SyntaxError, "'" + name + "' is reserved", name_at);

    CircuitBuilder b(name);
    std::unordered_map<std::string, NodeId> symbols;

    lex.expect('{');
    lex.keyword("inputs");
    while (lex.peek() != ';') {
        SourceSpan at = (lex.skip_ws(), lex.span());
        std::string v = lex.ident();
        if (detail::is_keyword(v))
            throw ParseError(Errc::SyntaxError, "'" + v + "' is reserved", at);
        if (symbols.count(v))
            throw ParseError(Errc::DuplicateId, "input '" + v + "' declared twice", at);
        symbols.emplace(v, b.input(v));
    }
    lex.expect(';');

    bool have_output = false;
    while (!have_output) {
        SourceSpan stmt_at = (lex.skip_ws(), lex.span());
        std::string head = lex.ident();
        if (head == "output") {
            SourceSpan at = (lex.skip_ws(), lex.span());
            std::string ref = lex.ident();
            auto it = symbols.find(ref);
            if (it == symbols.end())
                throw ParseError(Errc::UseBeforeDef, "'" + ref + "' is not defined", at);
            lex.expect(';');
            b.set_output(it->second);
            have_output = true;
            continue;
        }
        if (detail::is_keyword(head))
            throw ParseError(Errc::SyntaxError, "'" + head + "' is reserved", stmt_at);
        if (symbols.count(head))
            throw ParseError(Errc::DuplicateId, "'" + head + "' defined twice", stmt_at);

        lex.expect('=');
        SourceSpan kind_at = (lex.skip_ws(), lex.span());
        std::string kind = lex.ident();
        lex.expect('(');
        std::vector<NodeId> args;
        if (lex.peek() != ')') {
            while (true) {
                SourceSpan at = (lex.skip_ws(), lex.span());
                std::string ref = lex.ident();
                auto it = symbols.find(ref);
                if (it == symbols.end())
                    throw ParseError(Errc::UseBeforeDef, "'" + ref + "' is not defined", at);
                args.push_back(it->second);
                if (!lex.consume(','))
                    break;
            }
        }
        lex.expect(')');
        lex.expect(';');

        NodeId id;
        if (kind == "and" || kind == "or") {
            if (args.empty())
                throw ParseError(Errc::ArityError, kind + " needs at least one argument", kind_at);
            id = b.gate(kind == "and" ? GateKind::And : GateKind::Or, std::move(args));
        } else if (kind == "not") {
            if (args.size() != 1)
                throw ParseError(Errc::ArityError, "not takes exactly one argument", kind_at);
            id = b.not_(args[0]);
        } else if (kind == "const0" || kind == "const1") {
            if (!args.empty())
                throw ParseError(Errc::ArityError, kind + " takes no arguments", kind_at);
            id = b.constant(kind == "const1");
        } else {
            throw ParseError(Errc::SyntaxError, "unknown gate kind '" + kind + "'", kind_at);
        }
        symbols.emplace(head, id);
    }

    lex.expect('}');
    if (!lex.eof())
        throw ParseError(Errc::SyntaxError, "trailing content after '}'", lex.span());

    Circuit c = b.build(); // validate runs here, defense in depth
    return c;
}

namespace detail {

// Gate names are "g<id>" unless a declared input looks like one, in which
// case the g-prefix is lengthened until no input can collide.
inline std::string gate_prefix(const Circuit& c) {
    std::size_t depth = 1;
    bool again = true;
    while (again) {
        again = false;
        for (const auto& v : c.inputs) {
            if (v.size() <= depth) continue;
            bool match = true;
            for (std::size_t i = 0; i < depth; ++i)
                if (v[i] != 'g') { match = false; break; }
            for (std::size_t i = depth; i < v.size() && match; ++i)
                if (!std::isdigit(static_cast<unsigned char>(v[i]))) match = false;
            if (match) {
                ++depth;
                again = true;
                break;
            }
        }
    }
    return std::string(depth, 'g');
}

} // namespace detail

/// Canonical text.  Pre: valid circuit in canonical layout (declared inputs
/// are nodes 0..n-1 in order, children precede parents); throws NotCanonical
/// otherwise.  parse(print(c)) is structurally equal to c.
inline std::string print(const Circuit& c) {
    require_valid(c);
    const std::size_t n = c.inputs.size();
    if (c.nodes.size() < n)
        throw Error(Errc::NotCanonical, "fewer nodes than declared inputs");
    for (std::size_t i = 0; i < n; ++i) {
        const Gate& g = c.nodes[i];
        if (g.kind != GateKind::Input || g.var != c.inputs[i])
            throw Error(Errc::NotCanonical, "declared inputs must be nodes 0..n-1 in order");
    }
    for (NodeId id = static_cast<NodeId>(n); id < c.nodes.size(); ++id) {
        const Gate& g = c.nodes[id];
        if (g.kind == GateKind::Input)
            throw Error(Errc::NotCanonical, "input node after gate section");
        for (NodeId ch : g.children)
            if (ch >= id)
                throw Error(Errc::NotCanonical, "definition used before it appears");
    }

    const std::string gp = detail::gate_prefix(c);
    auto ref = [&](NodeId id) {
        return id < n ? c.nodes[id].var : gp + std::to_string(id);
    };

    std::string out;
    out += "circuit " + c.name + " {\n";
    out += "inputs";
    for (const auto& v : c.inputs)
        out += " " + v;
    out += ";\n";
    for (NodeId id = static_cast<NodeId>(n); id < c.nodes.size(); ++id) {
        const Gate& g = c.nodes[id];
        out += ref(id) + " = " + kind_name(g.kind) + "(";
        for (std::size_t i = 0; i < g.children.size(); ++i) {
            if (i) out += ",";
            out += ref(g.children[i]);
        }
        out += ");\n";
    }
    out += "output " + ref(c.output) + ";\n}\n";
    return out;
}

} // namespace rmf
