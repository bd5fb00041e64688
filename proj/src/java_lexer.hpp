// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jdclones::java {

enum class TokenKind {
    Identifier,  // includes keywords
    Number,
    String,
    Char,
    Punct,
    Javadoc,     // text holds the comment body between `/**` and `*/`
    End,
};

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t line;
};

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Tokenizes Java source. Ordinary comments are dropped; `/** ... */` blocks
// are kept as Javadoc tokens. The last token is always End.
// Throws SyntaxError on unterminated comments or literals.
[[nodiscard]] std::vector<Token> tokenize(std::string_view source);

}  // namespace jdclones::java
