// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: jdclones analyze ROOTS... [options]

#include "jdclones/report.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kEmptyCorpus = 2, kIoFailure = 3 };

void print_warnings(const jdclones::Diagnostics& diag) {
    for (const auto& w : diag.warnings()) std::cerr << jdclones::to_string(w) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    using namespace jdclones;

    CLI::App app{"Detects cloned Javadoc comments and ranks them by severity."};
    app.require_subcommand(1);
    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze the .java files under the given roots");

    RunConfig cfg;
    std::string scope = "intra";
    std::string target = "all";
    std::string out_dir = ".";
    std::string abbrev_path;
    std::string stopword_path;
    std::string patterns_path;
    bool multi_warn = false;
    std::vector<std::string> roots;

    analyze_cmd->add_option("roots", roots, "Source files or directories")->required();
    analyze_cmd->add_option("--scope", scope, "intra, hierarchy or inter")
        ->check(CLI::IsMember({"intra", "hierarchy", "inter"}))
        ->capture_default_str();
    analyze_cmd->add_option("--target", target, "methods, fields or all")
        ->check(CLI::IsMember({"methods", "fields", "all"}))
        ->capture_default_str();
    analyze_cmd->add_option("--min-threshold", cfg.analyzer.min_threshold, "Poor-information threshold")
        ->capture_default_str();
    analyze_cmd->add_option("--high-threshold", cfg.analyzer.high_threshold, "False-positive threshold")
        ->capture_default_str();
    analyze_cmd->add_option("--diff-threshold", cfg.analyzer.diff_threshold, "Minimum similarity gap for an owner")
        ->capture_default_str();
    analyze_cmd->add_option("--min-throws-words", cfg.detector.min_throws_words,
                            "Words a cloned @throws text needs to be legit")
        ->capture_default_str();
    analyze_cmd->add_option("--abbreviations", abbrev_path, "Abbreviation table (abbr=expansion per line)");
    analyze_cmd->add_option("--stopwords", stopword_path, "Stopword list (one word per line)");
    analyze_cmd->add_option("--generic-throws", patterns_path, "Generic @throws patterns (one regex per line)");
    analyze_cmd->add_flag("--strict-case", cfg.detector.strict_case, "Case- and period-sensitive clone equality");
    analyze_cmd->add_flag("--group-duplicates", cfg.group_duplicates, "Also write duplicate_groups.txt");
    analyze_cmd->add_flag("--multi-warn", multi_warn, "Note every severity rule a record matches");
    analyze_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    cfg.scope = *parse_scope(scope);
    cfg.target = *parse_target(target);
    cfg.out_dir = out_dir;
    cfg.analyzer.multi_warn = multi_warn;
    for (const auto& r : roots) cfg.roots.emplace_back(r);
    if (!abbrev_path.empty()) cfg.abbrev_path = abbrev_path;
    if (!stopword_path.empty()) cfg.stopword_path = stopword_path;
    if (!patterns_path.empty()) cfg.patterns_path = patterns_path;

    Diagnostics diag;
    RunSummary summary;
    try {
        summary = run_pipeline(cfg, diag);
    } catch (const ConfigError& e) {
        print_warnings(diag);
        std::cerr << "error: " << e.what() << '\n' << analyze_cmd->help();
        return kUsage;
    } catch (const IoError& e) {
        print_warnings(diag);
        std::cerr << "error: " << e.what() << '\n';
        return kIoFailure;
    }
    print_warnings(diag);

    if (summary.source_files == 0) {
        std::cerr << "error: no .java files found\n";
        return kEmptyCorpus;
    }

    std::cout << "files: " << summary.source_files << "\n"
              << "classes: " << summary.classes << "\n"
              << "clone records: " << summary.records << "\n"
              << "legit: " << summary.legit << "\n"
              << "high: " << summary.high << "\n"
              << "mild: " << summary.mild << "\n"
              << "low: " << summary.low << "\n";
    return kOk;
}
