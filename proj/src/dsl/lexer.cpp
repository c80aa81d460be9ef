#include "lexer.hpp"

#include <array>
#include <cctype>

#include "riesz/dsl.hpp"

namespace riesz::dsl {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column) {}

std::vector<Token> tokenize(std::string_view text) {
    static constexpr std::array<std::string_view, 18> symbols = {
        "\\/", "/\\", "=>", "+", "-", "*", "/", "|", "(", ")", "[", "]", "{", "}", ":", ",", "=", "^"};
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&](std::size_t n) {
        i += n;
        col += n;
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            out.push_back({TokenKind::newline, "\n", line, col});
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        const std::size_t start = i, start_col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) advance(1);
            out.push_back({TokenKind::integer, std::string(text.substr(start, i - start)), line, start_col});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) advance(1);
            out.push_back({TokenKind::ident, std::string(text.substr(start, i - start)), line, start_col});
            continue;
        }
        bool matched = false;
        for (auto sym : symbols) {
            if (text.substr(i, sym.size()) == sym) {
                out.push_back({TokenKind::symbol, std::string(sym), line, start_col});
                advance(sym.size());
                matched = true;
                break;
            }
        }
        if (!matched) throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back({TokenKind::end, "", line, col});
    return out;
}

} // namespace riesz::dsl
