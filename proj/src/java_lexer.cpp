// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

#include "java_lexer.hpp"

#include <cctype>

namespace jdclones::java {

namespace {

bool ident_start(char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalpha(u) || c == '_' || c == '$' || u >= 0x80;
}

bool ident_part(char c) {
    return ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            if (pos_ >= src_.size()) break;
            const char c = src_[pos_];
            const std::size_t line = line_;

            if (c == '/' && peek(1) == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
                continue;
            }
            if (c == '/' && peek(1) == '*') {
                const bool javadoc = peek(2) == '*' && peek(3) != '/';
                const auto close = src_.find("*/", pos_ + 2);
                if (close == std::string_view::npos) {
                    throw SyntaxError(line, "unterminated comment");
                }
                if (javadoc) {
                    out.push_back({TokenKind::Javadoc,
                                   std::string(src_.substr(pos_ + 3, close - (pos_ + 3))), line});
                }
                advance_to(close + 2);
                continue;
            }
            if (c == '"') {
                out.push_back({TokenKind::String, read_string(), line});
                continue;
            }
            if (c == '\'') {
                out.push_back({TokenKind::Char, read_quoted('\''), line});
                continue;
            }
            if (ident_start(c)) {
                const std::size_t start = pos_;
                while (pos_ < src_.size() && ident_part(src_[pos_])) ++pos_;
                out.push_back({TokenKind::Identifier, std::string(src_.substr(start, pos_ - start)), line});
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c)) ||
                (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
                out.push_back({TokenKind::Number, read_number(), line});
                continue;
            }
            if (c == '.' && peek(1) == '.' && peek(2) == '.') {
                out.push_back({TokenKind::Punct, "...", line});
                pos_ += 3;
                continue;
            }
            out.push_back({TokenKind::Punct, std::string(1, c), line});
            ++pos_;
        }
        out.push_back({TokenKind::End, "", line_});
        return out;
    }

private:
    char peek(std::size_t ahead) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void advance_to(std::size_t target) {
        for (; pos_ < target && pos_ < src_.size(); ++pos_) {
            if (src_[pos_] == '\n') ++line_;
        }
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '\n') {
                ++line_;
            } else if (!(c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v')) {
                break;
            }
            ++pos_;
        }
    }

    std::string read_string() {
        if (peek(1) == '"' && peek(2) == '"') {
            const std::size_t line = line_;
            std::size_t i = pos_ + 3;
            while (i < src_.size()) {
                if (src_[i] == '\\') {
                    i += 2;
                    continue;
                }
                if (src_.compare(i, 3, "\"\"\"") == 0) {
                    std::string body(src_.substr(pos_ + 3, i - (pos_ + 3)));
                    advance_to(i + 3);
                    return body;
                }
                ++i;
            }
            throw SyntaxError(line, "unterminated text block");
        }
        return read_quoted('"');
    }

    std::string read_quoted(char quote) {
        const std::size_t line = line_;
        std::size_t i = pos_ + 1;
        while (i < src_.size() && src_[i] != quote) {
            if (src_[i] == '\n') throw SyntaxError(line, "unterminated literal");
            i += src_[i] == '\\' ? 2 : 1;
        }
        if (i >= src_.size()) throw SyntaxError(line, "unterminated literal");
        std::string body(src_.substr(pos_ + 1, i - pos_ - 1));
        pos_ = i + 1;
        return body;
    }

    std::string read_number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
                ++pos_;
            } else if ((c == '+' || c == '-') && pos_ > start &&
                       (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E' ||
                        src_[pos_ - 1] == 'p' || src_[pos_ - 1] == 'P') &&
                       !(src_[start] == '0' && pos_ > start + 1 &&
                         (src_[start + 1] == 'x' || src_[start + 1] == 'X') &&
                         (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E'))) {
                ++pos_;
            } else {
                break;
            }
        }
        return std::string(src_.substr(start, pos_ - start));
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
    return Lexer(source).run();
}

}  // namespace jdclones::java
