// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "jdclones/analyzer.hpp"
#include "jdclones/corpus.hpp"
#include "jdclones/detector.hpp"
#include "jdclones/diagnostics.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jdclones {

inline constexpr std::string_view kCsvName = "javadoc_clones.csv";
inline constexpr std::string_view kDuplicateGroupsName = "duplicate_groups.txt";

struct RunConfig {
    std::vector<std::filesystem::path> roots;
    Scope scope = Scope::IntraClass;
    Target target = Target::All;
    std::filesystem::path out_dir = ".";
    AnalyzerConfig analyzer;
    DetectorConfig detector;
    std::optional<std::filesystem::path> abbrev_path;
    std::optional<std::filesystem::path> stopword_path;
    std::optional<std::filesystem::path> patterns_path;
    bool group_duplicates = false;
};

struct RunSummary {
    std::size_t source_files = 0;
    std::size_t classes = 0;
    std::size_t pairs = 0;
    std::size_t records = 0;
    std::size_t legit = 0;
    std::size_t high = 0;
    std::size_t mild = 0;
    std::size_t low = 0;
    std::vector<std::filesystem::path> outputs;
};

/// RFC 4180 field quoting: fields with a comma, quote, CR or LF are quoted, quotes doubled.
[[nodiscard]] std::string csv_field(std::string_view value);

/// "fqn1" for same-class records, "fqn1|fqn2" otherwise.
[[nodiscard]] std::string csv_class_column(const CloneRecord& record);

/// Header plus one LF-terminated row per record.
[[nodiscard]] std::string format_csv(const std::vector<CloneRecord>& records);

/// Writes format_csv(records) to `path` and returns the row count. Throws IoError.
std::size_t write_csv(const std::vector<CloneRecord>& records, const std::filesystem::path& path);

/// One report entry: record header, class lines, blank line, numbered messages.
[[nodiscard]] std::string format_entry(const AnalysisResult& result, std::string_view csv_name);

/// Entries of one severity, separated by blank lines; empty when there are none.
[[nodiscard]] std::string format_report(const std::vector<AnalysisResult>& results, Severity severity,
                                        std::string_view csv_name);

/// Writes high_severity.txt, mild_severity.txt and low_severity.txt. Throws IoError.
std::vector<std::filesystem::path> write_reports(const std::vector<AnalysisResult>& results,
                                                 std::string_view csv_name, const std::filesystem::path& out_dir);

/// Records sharing the same cloned text (case and trailing periods ignored), largest groups first.
[[nodiscard]] std::string format_duplicate_groups(const std::vector<CloneRecord>& records);

/// Loads the word tables named in the config, or the built-in ones.
[[nodiscard]] Lexicon load_lexicon(const RunConfig& cfg, Diagnostics& diag);

/**
 * Runs extraction, pairing, detection and analysis, then writes the CSV and
 * the severity reports into cfg.out_dir. Nothing is written when no source
 * file was found. Throws IoError or ConfigError.
 */
RunSummary run_pipeline(const RunConfig& cfg, Diagnostics& diag);

}  // namespace jdclones
