// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "jdclones/corpus.hpp"
#include "jdclones/detector.hpp"
#include "jdclones/similarity.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jdclones {

enum class Severity { Low, Mild, High };

[[nodiscard]] std::string_view to_string(Severity s);

struct AnalyzerConfig {
    double min_threshold = 0.25;
    double high_threshold = 0.50;
    double diff_threshold = 0.1;
    // Also report every later branch that matches, as the unexited pseudo-code would.
    bool multi_warn = false;

    /// Throws ConfigError unless 0 <= min < high <= 1 and diff > 0.
    void validate() const;
};

enum class Side { First, Second };

/// Which rule of the classification fired.
enum class Branch {
    WholeOverloaded,   // Mild
    WholeNotOverloaded,  // High
    PoorInfo,          // Mild
    FalsePositive,     // Low
    OwnerFound,        // High
    FixBoth,           // High
};

struct AnalysisResult {
    CloneRecord record;
    std::size_t record_number = 0;  // 1-based row in the CSV file
    Severity severity = Severity::High;
    Branch branch = Branch::FixBoth;
    std::optional<double> m1_sim;
    std::optional<double> m2_sim;
    std::optional<Side> owner;  // element more related to the cloned text
    std::vector<std::string> messages;
    // Branches that also matched after the first one (multi_warn only).
    std::vector<Branch> extra_branches;
};

/// Equal simple names; constructors compare their class names.
[[nodiscard]] bool is_overloading(const MethodInfo& m1, const MethodInfo& m2);

/// cosine(signature_bow(e), text_bow(cloned_text))
[[nodiscard]] double element_similarity(const ElementView& e, std::string_view cloned_text, const Lexicon& lexicon);

/**
 * Assigns a severity to a non-legit clone record. Rules are tried in order
 * and the first one that matches decides:
 *   whole comment of overloaded methods          -> Mild
 *   whole comment otherwise                      -> High (owner hint if the gap allows)
 *   both similarities below min_threshold        -> Mild
 *   both similarities above high_threshold       -> Low
 *   similarity gap above diff_threshold          -> High, owner = more similar element
 *   otherwise                                    -> High, both comments flagged
 * Comparisons are strict.
 */
[[nodiscard]] AnalysisResult analyze(const CloneRecord& record, const ElementView& e1, const ElementView& e2,
                                     const AnalyzerConfig& cfg, const Lexicon& lexicon);

/// Analyzes every non-legit record; record numbers follow the records' 1-based positions.
[[nodiscard]] std::vector<AnalysisResult> analyze_all(const std::vector<CloneRecord>& records, const Corpus& corpus,
                                                      const AnalyzerConfig& cfg, const Lexicon& lexicon);

}  // namespace jdclones
