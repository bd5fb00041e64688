// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

#include "jdclones/report.hpp"

#include <algorithm>
#include <fstream>
#include <map>

namespace jdclones {

namespace fs = std::filesystem;

std::string csv_field(std::string_view value) {
    if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
    std::string out = "\"";
    for (const char c : value) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string csv_class_column(const CloneRecord& record) {
    if (record.class1_fqn == record.class2_fqn) return record.class1_fqn;
    return record.class1_fqn + "|" + record.class2_fqn;
}

std::string format_csv(const std::vector<CloneRecord>& records) {
    std::string out = "class,element1,element2,kind,cloned_text,legit\n";
    for (const auto& r : records) {
        out += csv_field(csv_class_column(r));
        out += ',' + csv_field(r.elem1_sig);
        out += ',' + csv_field(r.elem2_sig);
        out += ',' + csv_field(to_string(r.kind));
        out += ',' + csv_field(r.cloned_text);
        out += r.legit ? ",true\n" : ",false\n";
    }
    return out;
}

namespace {

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
    out.close();
    if (!out) throw IoError("error writing " + path.string());
}

std::string_view branch_label(Branch b) {
    switch (b) {
        case Branch::WholeOverloaded:    return "mild (overloaded whole comment)";
        case Branch::WholeNotOverloaded: return "high (whole comment, not overloaded)";
        case Branch::PoorInfo:           return "mild (poor information)";
        case Branch::FalsePositive:      return "low (likely false positive)";
        case Branch::OwnerFound:         return "high (comment owner identified)";
        case Branch::FixBoth:            return "high (both comments need fixing)";
    }
    return "";
}

}  // namespace

std::size_t write_csv(const std::vector<CloneRecord>& records, const fs::path& path) {
    write_file(path, format_csv(records));
    return records.size();
}

std::string format_entry(const AnalysisResult& result, std::string_view csv_name) {
    const CloneRecord& r = result.record;
    std::string out = "---- Record #" + std::to_string(result.record_number) + " file:" + std::string(csv_name) +
                      " ----\n";
    switch (r.relation) {
        case Relation::SameClass:
            out += "In class: " + r.class1_fqn + "\n";
            break;
        case Relation::FirstIsAncestor:
            out += "In class: " + r.class2_fqn + "\nAnd its superclass: " + r.class1_fqn + "\n";
            break;
        case Relation::SecondIsAncestor:
            out += "In class: " + r.class1_fqn + "\nAnd its superclass: " + r.class2_fqn + "\n";
            break;
        case Relation::Unrelated:
            out += "In class: " + r.class1_fqn + "\nAnd class: " + r.class2_fqn + "\n";
            break;
    }

    std::vector<std::string> messages = result.messages;
    if (!result.extra_branches.empty()) {
        std::string also = "Also matched:";
        for (const auto b : result.extra_branches) also += std::string(" ") + std::string(branch_label(b)) + ";";
        also.pop_back();
        messages.push_back(std::move(also));
    }
    for (std::size_t i = 0; i < messages.size(); ++i) {
        out += "\n" + std::to_string(i + 1) + ") " + messages[i] + "\n";
    }
    return out;
}

std::string format_report(const std::vector<AnalysisResult>& results, Severity severity, std::string_view csv_name) {
    std::string out;
    for (const auto& res : results) {
        if (res.severity != severity) continue;
        if (!out.empty()) out += "\n";
        out += format_entry(res, csv_name);
    }
    return out;
}

std::vector<fs::path> write_reports(const std::vector<AnalysisResult>& results, std::string_view csv_name,
                                    const fs::path& out_dir) {
    std::vector<fs::path> paths;
    const std::pair<Severity, const char*> files[] = {
        {Severity::High, "high_severity.txt"},
        {Severity::Mild, "mild_severity.txt"},
        {Severity::Low, "low_severity.txt"},
    };
    for (const auto& [sev, name] : files) {
        const auto path = out_dir / name;
        write_file(path, format_report(results, sev, csv_name));
        paths.push_back(path);
    }
    return paths;
}

std::string format_duplicate_groups(const std::vector<CloneRecord>& records) {
    std::map<std::string, std::vector<std::size_t>> groups;
    std::map<std::string, std::string> shown;
    for (std::size_t i = 0; i < records.size(); ++i) {
        auto key = comparable_text(records[i].cloned_text);
        shown.try_emplace(key, records[i].cloned_text);
        groups[std::move(key)].push_back(i + 1);
    }
    std::vector<const std::pair<const std::string, std::vector<std::size_t>>*> order;
    for (const auto& g : groups) {
        if (g.second.size() > 1) order.push_back(&g);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto* a, const auto* b) { return a->second.size() > b->second.size(); });

    std::string out;
    for (const auto* g : order) {
        out += std::to_string(g->second.size()) + " records: \"" + shown[g->first] + "\"\n  #";
        for (std::size_t i = 0; i < g->second.size(); ++i) {
            if (i > 0) out += ", #";
            out += std::to_string(g->second[i]);
        }
        out += "\n";
    }
    return out;
}

Lexicon load_lexicon(const RunConfig& cfg, Diagnostics& diag) {
    Lexicon lex = Lexicon::defaults();
    if (cfg.abbrev_path) lex.abbrev = AbbrevTable::load(*cfg.abbrev_path, &diag);
    if (cfg.stopword_path) lex.stop = StopwordSet::load(*cfg.stopword_path);
    return lex;
}

RunSummary run_pipeline(const RunConfig& cfg, Diagnostics& diag) {
    cfg.analyzer.validate();
    if (cfg.detector.min_throws_words < 0) throw ConfigError("min-throws-words must not be negative");
    DetectorConfig detector = cfg.detector;
    if (cfg.patterns_path) detector.generic_throws = GenericPatterns::load(*cfg.patterns_path);
    const Lexicon lexicon = load_lexicon(cfg, diag);

    RunSummary summary;
    Corpus corpus = resolve_supertypes(build_corpus(cfg.roots, diag), diag);
    summary.source_files = corpus.source_files;
    summary.classes = corpus.classes.size();
    if (corpus.no_sources()) return summary;

    const auto element_pairs = pairs(corpus, cfg.scope, cfg.target);
    const auto records = detect_clones(corpus, element_pairs, cfg.scope, detector);
    const auto results = analyze_all(records, corpus, cfg.analyzer, lexicon);

    summary.pairs = element_pairs.size();
    summary.records = records.size();
    summary.legit = static_cast<std::size_t>(std::count_if(records.begin(), records.end(),
                                                           [](const CloneRecord& r) { return r.legit; }));
    for (const auto& res : results) {
        switch (res.severity) {
            case Severity::High: ++summary.high; break;
            case Severity::Mild: ++summary.mild; break;
            case Severity::Low:  ++summary.low; break;
        }
    }

    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    if (ec) throw IoError("cannot create " + cfg.out_dir.string() + ": " + ec.message());
    const auto csv_path = cfg.out_dir / kCsvName;
    write_csv(records, csv_path);
    summary.outputs.push_back(csv_path);
    for (auto& p : write_reports(results, kCsvName, cfg.out_dir)) summary.outputs.push_back(std::move(p));
    if (cfg.group_duplicates) {
        const auto path = cfg.out_dir / kDuplicateGroupsName;
        write_file(path, format_duplicate_groups(records));
        summary.outputs.push_back(path);
    }
    return summary;
}

}  // namespace jdclones
