// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

#include "jdclones/text.hpp"

#include <cctype>
#include <set>

namespace jdclones {

namespace {

bool is_alpha(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool starts_with_at(std::string_view s, std::size_t pos, std::string_view prefix) {
    return s.substr(pos, prefix.size()) == prefix;
}

// Index of the '}' closing the brace at `open`, or npos.
std::size_t matching_brace(std::string_view s, std::size_t open) {
    int depth = 0;
    for (std::size_t i = open; i < s.size(); ++i) {
        if (s[i] == '{') {
            ++depth;
        } else if (s[i] == '}') {
            if (--depth == 0) return i;
        }
    }
    return std::string_view::npos;
}

bool is_html_element(const std::string& name) {
    static const std::set<std::string, std::less<>> kElements = {
        "a",      "abbr",   "b",     "big",   "blockquote", "br",     "caption", "center", "cite",
        "code",   "col",    "dd",    "del",   "dfn",        "div",    "dl",      "dt",     "em",
        "font",   "h1",     "h2",    "h3",    "h4",         "h5",     "h6",      "hr",     "i",
        "img",    "ins",    "kbd",   "li",    "ol",         "p",      "pre",     "q",      "s",
        "samp",   "small",  "span",  "strike", "strong",    "sub",    "sup",     "table",  "tbody",
        "td",     "tfoot",  "th",    "thead", "tr",         "tt",     "u",       "ul",     "var",
    };
    return kElements.count(name) > 0;
}

// One past the end of the HTML tag or comment starting at `lt`, or npos.
// Only known HTML element names count, so generics like "List<T>" survive.
std::size_t html_markup_end(std::string_view s, std::size_t lt) {
    if (starts_with_at(s, lt, "<!--")) {
        const auto end = s.find("-->", lt + 4);
        return end == std::string_view::npos ? end : end + 3;
    }
    std::size_t i = lt + 1;
    if (i < s.size() && s[i] == '/') ++i;
    const std::size_t name_start = i;
    while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i])) != 0) ++i;
    if (i == name_start || !is_html_element(to_lower_ascii(s.substr(name_start, i - name_start)))) {
        return std::string_view::npos;
    }
    if (i < s.size() && s[i] != '>' && s[i] != '/' && !is_space(s[i])) return std::string_view::npos;
    const auto close = s.find('>', i);
    return close == std::string_view::npos ? close : close + 1;
}

std::string clean_once(std::string_view in) {
    std::string out;
    out.reserve(in.size());
    std::size_t i = 0;
    while (i < in.size()) {
        const char c = in[i];

        // @see runs to the end of its line.
        if (c == '@' && starts_with_at(in, i, "@see") &&
            (i == 0 || is_space(in[i - 1])) &&
            (i + 4 == in.size() || !is_alpha(in[i + 4]))) {
            const auto eol = in.find('\n', i);
            out.push_back(' ');
            if (eol == std::string_view::npos) break;
            i = eol;
            continue;
        }

        if (c == '{' && i + 1 < in.size() && in[i + 1] == '@') {
            const auto close = matching_brace(in, i);
            if (close != std::string_view::npos) {
                std::size_t name_end = i + 2;
                while (name_end < close && is_alpha(in[name_end])) ++name_end;
                const auto name = in.substr(i + 2, name_end - (i + 2));
                if (name == "code" || name == "literal" || name == "summary") {
                    out += trim(in.substr(name_end, close - name_end));
                } else {
                    out.push_back(' ');
                }
                i = close + 1;
                continue;
            }
        }

        if (c == '<') {
            if (const auto end = html_markup_end(in, i); end != std::string_view::npos) {
                out.push_back(' ');
                i = end;
                continue;
            }
        }

        if (c == '&' && starts_with_at(in, i, "&nbsp;")) {
            out.push_back(' ');
            i += 6;
            continue;
        }
        // U+00A0
        if (c == '\xC2' && i + 1 < in.size() && in[i + 1] == '\xA0') {
            out.push_back(' ');
            i += 2;
            continue;
        }

        out.push_back(c);
        ++i;
    }
    return collapse_whitespace(out);
}

}  // namespace

std::string clean_text(std::string_view raw) {
    std::string current = clean_once(raw);
    for (;;) {
        std::string next = clean_once(current);
        if (next == current) return current;
        current = std::move(next);
    }
}

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    for (const char c : s) {
        if (is_space(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) out.push_back(' ');
        pending_space = false;
        out.push_back(c);
    }
    return out;
}

std::string_view trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return s.substr(b, e - b);
}

std::string to_lower_ascii(std::string_view s) {
    std::string out(s);
    for (auto& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

std::vector<std::string> split_whitespace(std::string_view s) {
    std::vector<std::string> words;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) ++i;
        const std::size_t start = i;
        while (i < s.size() && !is_space(s[i])) ++i;
        if (i > start) words.emplace_back(s.substr(start, i - start));
    }
    return words;
}

std::size_t sanitize_utf8(std::string& text) {
    static constexpr std::string_view kReplacement = "\xEF\xBF\xBD";
    std::string out;
    out.reserve(text.size());
    std::size_t replaced = 0;
    const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
    const auto in_range = [&](std::size_t i, unsigned lo, unsigned hi) {
        return i < text.size() && byte(i) >= lo && byte(i) <= hi;
    };

    std::size_t i = 0;
    while (i < text.size()) {
        const unsigned b = byte(i);
        std::size_t len = 0;
        if (b < 0x80) {
            len = 1;
        } else if (b >= 0xC2 && b <= 0xDF) {
            if (in_range(i + 1, 0x80, 0xBF)) len = 2;
        } else if (b >= 0xE0 && b <= 0xEF) {
            const unsigned lo = b == 0xE0 ? 0xA0 : 0x80;
            const unsigned hi = b == 0xED ? 0x9F : 0xBF;
            if (in_range(i + 1, lo, hi) && in_range(i + 2, 0x80, 0xBF)) len = 3;
        } else if (b >= 0xF0 && b <= 0xF4) {
            const unsigned lo = b == 0xF0 ? 0x90 : 0x80;
            const unsigned hi = b == 0xF4 ? 0x8F : 0xBF;
            if (in_range(i + 1, lo, hi) && in_range(i + 2, 0x80, 0xBF) &&
                in_range(i + 3, 0x80, 0xBF)) {
                len = 4;
            }
        }
        if (len == 0) {
            out += kReplacement;
            ++replaced;
            ++i;
        } else {
            out.append(text, i, len);
            i += len;
        }
    }
    if (replaced > 0) text = std::move(out);
    return replaced;
}

}  // namespace jdclones
