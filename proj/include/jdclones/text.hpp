// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace jdclones {

/**
 * Strips Javadoc markup from a comment fragment.
 *
 * HTML element tags and comments are removed (angle brackets of generic
 * types are kept), `@see` lines and inline tags such as `{@link ...}` are
 * dropped, `{@code X}`, `{@literal X}` and `{@summary X}` are unwrapped to X,
 * whitespace runs collapse to a single space and the result is trimmed.
 * Applying it twice gives the same result as applying it once.
 */
[[nodiscard]] std::string clean_text(std::string_view raw);

[[nodiscard]] std::string collapse_whitespace(std::string_view s);
[[nodiscard]] std::string_view trim(std::string_view s);
[[nodiscard]] std::string to_lower_ascii(std::string_view s);
[[nodiscard]] std::vector<std::string> split_whitespace(std::string_view s);

[[nodiscard]] inline bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Replaces malformed UTF-8 sequences with U+FFFD. Returns the number of
// replacements made.
std::size_t sanitize_utf8(std::string& text);

}  // namespace jdclones
