// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "jdclones/extractor.hpp"

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace jdclones {

/// Multiset of stemmed tokens. Counts are always positive.
class BagOfWords {
public:
    BagOfWords() = default;

    void add(const std::string& token, int count = 1);
    void add_all(const std::vector<std::string>& tokens);

    [[nodiscard]] const std::map<std::string, int>& counts() const { return counts_; }
    [[nodiscard]] int count(const std::string& token) const;
    [[nodiscard]] bool empty() const { return counts_.empty(); }
    [[nodiscard]] std::size_t distinct() const { return counts_.size(); }

    friend bool operator==(const BagOfWords&, const BagOfWords&) = default;

private:
    std::map<std::string, int> counts_;
};

/// Lowercase abbreviation -> expansion words.
class AbbrevTable {
public:
    AbbrevTable() = default;

    void add(std::string abbreviation, std::vector<std::string> expansion);
    [[nodiscard]] const std::vector<std::string>* find(const std::string& word) const;
    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] const std::map<std::string, std::vector<std::string>>& entries() const { return entries_; }

    /// Built-in table of common English, IT and Java abbreviations.
    [[nodiscard]] static AbbrevTable defaults();
    /// Parses `abbr=expansion words` lines; `#` starts a comment.
    [[nodiscard]] static AbbrevTable parse(std::string_view text, Diagnostics* diag = nullptr);
    [[nodiscard]] static AbbrevTable load(const std::filesystem::path& path, Diagnostics* diag = nullptr);

private:
    std::map<std::string, std::vector<std::string>> entries_;
};

class StopwordSet {
public:
    StopwordSet() = default;
    explicit StopwordSet(std::set<std::string, std::less<>> words) : words_(std::move(words)) {}

    [[nodiscard]] bool contains(std::string_view word) const { return words_.count(word) > 0; }
    [[nodiscard]] std::size_t size() const { return words_.size(); }
    [[nodiscard]] const std::set<std::string, std::less<>>& words() const { return words_; }

    /// The 174-word default English stopword list.
    [[nodiscard]] static StopwordSet defaults();
    /// One word per line; `#` starts a comment.
    [[nodiscard]] static StopwordSet parse(std::string_view text);
    [[nodiscard]] static StopwordSet load(const std::filesystem::path& path);

private:
    std::set<std::string, std::less<>> words_;
};

/// The word tables used to normalize tokens.
struct Lexicon {
    AbbrevTable abbrev;
    StopwordSet stop;

    [[nodiscard]] static Lexicon defaults() { return {AbbrevTable::defaults(), StopwordSet::defaults()}; }
};

/**
 * Splits a source identifier into lowercase words.
 *
 * Boundaries: `_`, `$` and other non-alphanumerics, letter/digit changes,
 * lower-to-upper camel case, and the last capital of an uppercase run that is
 * followed by a lowercase letter ("XMLParser" -> xml, parser).
 */
[[nodiscard]] std::vector<std::string> split_identifier(std::string_view ident);

/**
 * Expands abbreviations, drops stopwords and applies the Porter stemmer, in
 * that order. Tokens left with fewer than two characters are dropped.
 */
[[nodiscard]] std::vector<std::string> normalize_tokens(const std::vector<std::string>& words,
                                                        const Lexicon& lexicon);

/// Splits text into sentences terminated by '.', '!' or '?' followed by whitespace or the end.
[[nodiscard]] std::vector<std::string> split_sentences(std::string_view text);

[[nodiscard]] BagOfWords text_bow(std::string_view text, const Lexicon& lexicon);
[[nodiscard]] BagOfWords signature_bow(const MethodInfo& method, const Lexicon& lexicon);
[[nodiscard]] BagOfWords signature_bow(const FieldInfo& field, const Lexicon& lexicon);

/// Cosine of the two count vectors; 0 when either bag is empty.
[[nodiscard]] double cosine(const BagOfWords& a, const BagOfWords& b);

}  // namespace jdclones
