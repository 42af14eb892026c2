#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gca/cayley_expr.hpp"
#include "gca/errors.hpp"

namespace gca {

/// Byte range [start, end) into the input, for error reporting.
struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;

    bool operator==(const SourceSpan&) const = default;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::string message, SourceSpan span, std::vector<std::string> expected)
        : Error(compose(message, span, expected)), span_(span), expected_(std::move(expected)) {}

    const SourceSpan& span() const { return span_; }

    /// Token spellings that would have allowed the parse to progress.
    const std::vector<std::string>& expected() const { return expected_; }

private:
    static std::string compose(const std::string& message, SourceSpan span, const std::vector<std::string>& expected) {
        std::string out = message + " at offset " + std::to_string(span.start);
        if (!expected.empty()) {
            out += "; expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i > 0) out += (i + 1 == expected.size()) ? " or " : ", ";
                out += expected[i];
            }
        }
        return out;
    }

    SourceSpan span_;
    std::vector<std::string> expected_;
};

enum class TokenKind { Point, Meet, Join, LParen, RParen, End };

struct Token {
    TokenKind kind;
    std::string lexeme;
    SourceSpan span;
};

/// Lexes the expression language. "^" or "∧" is MEET; "v", "∨" or "*" is
/// JOIN ('v' is reserved, so it is never a point name); a point is one
/// letter plus trailing primes, so "bc'" lexes as the two points b, c'.
/// Whitespace separates tokens and is otherwise insignificant.
inline std::vector<Token> tokenize(std::string_view input) {
    std::vector<Token> out;
    std::size_t i = 0;
    const auto starts_with = [&](std::string_view s) { return input.substr(i, s.size()) == s; };
    while (i < input.size()) {
        const char c = input[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        if (c == '(') {
            out.push_back({TokenKind::LParen, "(", {i, i + 1}});
            ++i;
            continue;
        }
        if (c == ')') {
            out.push_back({TokenKind::RParen, ")", {i, i + 1}});
            ++i;
            continue;
        }
        if (c == '^') {
            out.push_back({TokenKind::Meet, "^", {i, i + 1}});
            ++i;
            continue;
        }
        if (c == 'v' || c == '*') {
            out.push_back({TokenKind::Join, std::string(1, c), {i, i + 1}});
            ++i;
            continue;
        }
        if (starts_with("∧")) { // ∧
            out.push_back({TokenKind::Meet, "^", {i, i + 3}});
            i += 3;
            continue;
        }
        if (starts_with("∨")) { // ∨
            out.push_back({TokenKind::Join, "v", {i, i + 3}});
            i += 3;
            continue;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
            std::size_t j = i + 1;
            while (j < input.size() && input[j] == '\'') ++j;
            out.push_back({TokenKind::Point, std::string(input.substr(i, j - i)), {i, j}});
            i = j;
            continue;
        }
        throw SyntaxError("unexpected character '" + std::string(1, c) + "'", {i, i + 1},
                          {"POINT", "'('", "')'", "'^'", "'v'"});
    }
    out.push_back({TokenKind::End, "", {input.size(), input.size()}});
    return out;
}

namespace detail {

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    CayleyExpr parse() {
        CayleyExpr e = meet_chain();
        if (peek().kind != TokenKind::End)
            throw SyntaxError("trailing input", peek().span, {"end of input"});
        return e;
    }

private:
    // meetChain := joinChain { MEET joinChain }   (left-associative)
    CayleyExpr meet_chain() {
        CayleyExpr e = join_chain();
        while (peek().kind == TokenKind::Meet) {
            ++pos_;
            e = CayleyExpr::meet(std::move(e), join_chain());
        }
        return e;
    }

    // joinChain := primary { [JOIN] primary }
    // Juxtaposition and explicit JOIN build one flat chain; a chain of two
    // or more primaries becomes a single n-ary Join node.
    CayleyExpr join_chain() {
        std::vector<CayleyExpr> chain;
        chain.push_back(primary());
        while (true) {
            if (peek().kind == TokenKind::Join) {
                ++pos_;
                chain.push_back(primary());
            } else if (peek().kind == TokenKind::Point || peek().kind == TokenKind::LParen) {
                chain.push_back(primary());
            } else {
                break;
            }
        }
        if (chain.size() == 1) return std::move(chain.front());
        return CayleyExpr::join(std::move(chain));
    }

    CayleyExpr primary() {
        const Token& t = peek();
        if (t.kind == TokenKind::Point) {
            ++pos_;
            return CayleyExpr::atom(t.lexeme);
        }
        if (t.kind == TokenKind::LParen) {
            ++pos_;
            CayleyExpr e = meet_chain();
            if (peek().kind != TokenKind::RParen)
                throw SyntaxError("unclosed parenthesis", peek().span, {"POINT", "')'"});
            ++pos_;
            return e;
        }
        throw SyntaxError("expected an operand", t.span, {"POINT", "'('"});
    }

    const Token& peek() const { return tokens_[pos_]; }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses the expression language. Unknown point names are not an error
/// here; they surface as UnknownPointError at evaluation time.
inline CayleyExpr parse(std::string_view input) { return detail::Parser(tokenize(input)).parse(); }

namespace detail {

inline void print_expr(const CayleyExpr& e, std::string& out);

inline void print_join_child(const CayleyExpr& e, std::string& out) {
    if (e.is_atom()) {
        out += e.name();
    } else {
        out += '(';
        print_expr(e, out);
        out += ')';
    }
}

inline void print_meet_operand(const CayleyExpr& e, std::string& out, bool parenthesize_meet) {
    if (e.kind() == CayleyExpr::Kind::Meet && parenthesize_meet) {
        out += '(';
        print_expr(e, out);
        out += ')';
    } else {
        print_expr(e, out);
    }
}

inline void print_expr(const CayleyExpr& e, std::string& out) {
    switch (e.kind()) {
    case CayleyExpr::Kind::Atom:
        out += e.name();
        return;
    case CayleyExpr::Kind::Join: {
        const auto kids = e.children();
        for (std::size_t i = 0; i < kids.size(); ++i) {
            if (i > 0) {
                const bool both_atoms = kids[i - 1].is_atom() && kids[i].is_atom();
                if (!both_atoms) out += " v ";
            }
            print_join_child(kids[i], out);
        }
        return;
    }
    case CayleyExpr::Kind::Meet:
        // Meet is left-associative, so only a right child that is itself
        // a meet needs parentheses.
        print_meet_operand(e.left(), out, false);
        out += " ^ ";
        print_meet_operand(e.right(), out, true);
        return;
    }
}

} // namespace detail

/// Canonical ASCII rendering: juxtaposition between atom join children,
/// " v " next to any non-atomic join child, " ^ " for meets, minimal
/// parentheses. parse(print(e)) is structurally equal to e.
inline std::string print(const CayleyExpr& e) {
    std::string out;
    detail::print_expr(e, out);
    return out;
}

} // namespace gca
