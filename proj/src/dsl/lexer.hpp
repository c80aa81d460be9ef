#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace riesz::dsl {

enum class TokenKind { ident, integer, symbol, newline, end };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t line;
    std::size_t column;

    bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
    bool is_symbol(std::string_view t) const { return is(TokenKind::symbol, t); }
    bool is_ident(std::string_view t) const { return is(TokenKind::ident, t); }
};

/// Splits DSL text into tokens. '#' starts a comment running to end of line.
/// Throws ParseError on characters outside the language.
std::vector<Token> tokenize(std::string_view text);

} // namespace riesz::dsl
