// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "jdclones/corpus.hpp"

#include <filesystem>
#include <regex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jdclones {

enum class CloneKind { Whole, FreeText, Param, Return, Throws, Field };

/// Label used in the CSV and in report entries: Whole, Summary, @param, @return, @throws, Field.
[[nodiscard]] std::string_view to_string(CloneKind kind);

struct CloneRecord {
    std::string class1_fqn;
    std::string class2_fqn;
    std::string elem1_sig;
    std::string elem2_sig;
    CloneKind kind = CloneKind::Whole;
    std::string cloned_text;  // the cleaned text as written on the first element
    bool legit = false;
    Scope scope = Scope::IntraClass;
    Relation relation = Relation::SameClass;
    MemberRef first;
    MemberRef second;
    // Parameter names (Param) or exception type names (Throws); empty otherwise.
    std::pair<std::string, std::string> aux;
};

/// How the word-count / generic-pattern test interacts with the same-exception-type rule.
enum class ThrowsRule {
    // Same exception type is legit only if the text is long and specific enough.
    GateSameType,
    // Same exception type is legit; short or generic texts are legit as well.
    FilterShortOrGeneric,
};

class GenericPatterns {
public:
    GenericPatterns() = default;

    /// One ECMAScript regex per line, case-insensitive; `#` comments. Throws ConfigError.
    [[nodiscard]] static GenericPatterns parse(std::string_view text);
    [[nodiscard]] static GenericPatterns load(const std::filesystem::path& path);
    [[nodiscard]] static GenericPatterns defaults();

    [[nodiscard]] bool matches(const std::string& text) const;
    [[nodiscard]] std::size_t size() const { return patterns_.size(); }

private:
    std::vector<std::regex> patterns_;
};

struct DetectorConfig {
    int min_throws_words = 4;
    GenericPatterns generic_throws = GenericPatterns::defaults();
    bool strict_case = false;  // exact (case- and period-sensitive) clone equality
    ThrowsRule throws_rule = ThrowsRule::GateSameType;
};

/// Clone-equality key: lowercase, single spaces, trailing periods removed.
[[nodiscard]] std::string comparable_text(std::string_view part_text);

/// Clone records for one pair. A matching whole comment suppresses part records.
[[nodiscard]] std::vector<CloneRecord> compare_pair(const ElementPair& pair, const Corpus& corpus,
                                                    Scope scope, const DetectorConfig& cfg);

/// Applies the legitimacy heuristics to a record found between `e1` and `e2`.
[[nodiscard]] bool is_legitimate(const CloneRecord& record, const ElementView& e1, const ElementView& e2,
                                 const DetectorConfig& cfg);

/// Java primitives, their boxed types and String.
[[nodiscard]] bool is_primitive_like(std::string_view type_name);

/// compare_pair over every pair, records in canonical pair order.
[[nodiscard]] std::vector<CloneRecord> detect_clones(const Corpus& corpus, const std::vector<ElementPair>& pairs,
                                                     Scope scope, const DetectorConfig& cfg);

}  // namespace jdclones
