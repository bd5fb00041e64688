// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

#include "jdclones/analyzer.hpp"

#include <cmath>

namespace jdclones {

std::string_view to_string(Severity s) {
    switch (s) {
        case Severity::Low:  return "low";
        case Severity::Mild: return "mild";
        case Severity::High: return "high";
    }
    return "high";
}

void AnalyzerConfig::validate() const {
    const auto bad = [](double v) { return !std::isfinite(v); };
    if (bad(min_threshold) || bad(high_threshold) || bad(diff_threshold)) {
        throw ConfigError("thresholds must be finite numbers");
    }
    if (!(0.0 <= min_threshold && min_threshold < high_threshold && high_threshold <= 1.0)) {
        throw ConfigError("thresholds must satisfy 0 <= min-threshold < high-threshold <= 1");
    }
    if (!(diff_threshold > 0.0)) throw ConfigError("diff-threshold must be positive");
}

bool is_overloading(const MethodInfo& m1, const MethodInfo& m2) {
    // A constructor's simple_name is its class's simple name.
    return m1.simple_name == m2.simple_name;
}

double element_similarity(const ElementView& e, std::string_view cloned_text, const Lexicon& lexicon) {
    const BagOfWords sig = e.is_method() ? signature_bow(e.method(), lexicon) : signature_bow(e.field(), lexicon);
    return cosine(sig, text_bow(cloned_text, lexicon));
}

namespace {

std::string angle(const std::string& s) { return "<" + s + ">"; }

std::string cloned_line(const CloneRecord& r) {
    return "The comment you cloned:\"(" + std::string(to_string(r.kind)) + ")" + r.cloned_text + "\"";
}

std::string owner_message(const CloneRecord& r, const std::string& owner, const std::string& victim) {
    return cloned_line(r) + "\nseems more related to " + angle(owner) + " than " + angle(victim);
}

std::string advice(const CloneRecord& r, const std::string& victim) {
    const char* noun = r.first.kind == MemberKind::Field ? "field" : "method";
    return std::string("It is strongly advised to document ") + noun + " " + angle(victim) +
           " with a different, appropriate comment.";
}

std::string whole_header(const CloneRecord& r) {
    return "You cloned the whole comment for methods " + angle(r.elem1_sig) + " and " + angle(r.elem2_sig);
}

struct Sims {
    double m1;
    double m2;
};

std::optional<Side> owner_side(Sims s, double diff) {
    if (std::abs(s.m1 - s.m2) > diff) return s.m1 > s.m2 ? Side::First : Side::Second;
    return std::nullopt;
}

// Branches 3 to 6 in order; the first that matches is returned first.
std::vector<Branch> part_branches(Sims s, const AnalyzerConfig& cfg) {
    std::vector<Branch> hits;
    if (s.m1 < cfg.min_threshold && s.m2 < cfg.min_threshold) hits.push_back(Branch::PoorInfo);
    if (s.m1 > cfg.high_threshold && s.m2 > cfg.high_threshold) hits.push_back(Branch::FalsePositive);
    if (std::abs(s.m1 - s.m2) > cfg.diff_threshold) hits.push_back(Branch::OwnerFound);
    if (hits.empty()) hits.push_back(Branch::FixBoth);
    return hits;
}

Severity severity_of(Branch b) {
    switch (b) {
        case Branch::WholeOverloaded:
        case Branch::PoorInfo:
            return Severity::Mild;
        case Branch::FalsePositive:
            return Severity::Low;
        case Branch::WholeNotOverloaded:
        case Branch::OwnerFound:
        case Branch::FixBoth:
            return Severity::High;
    }
    return Severity::High;
}

}  // namespace

AnalysisResult analyze(const CloneRecord& record, const ElementView& e1, const ElementView& e2,
                       const AnalyzerConfig& cfg, const Lexicon& lexicon) {
    AnalysisResult result;
    result.record = record;
    const std::string& a = record.elem1_sig;
    const std::string& b = record.elem2_sig;

    const Sims sims{element_similarity(e1, record.cloned_text, lexicon),
                    element_similarity(e2, record.cloned_text, lexicon)};
    const auto owner = owner_side(sims, cfg.diff_threshold);
    const auto owner_name = [&] { return *owner == Side::First ? a : b; };
    const auto victim_name = [&] { return *owner == Side::First ? b : a; };

    if (record.kind == CloneKind::Whole && e1.is_method() && e2.is_method()) {
        if (is_overloading(e1.method(), e2.method())) {
            result.branch = Branch::WholeOverloaded;
            result.messages.push_back(whole_header(record) +
                                      "\n\nThese methods are overloaded. Document the parameters that "
                                      "distinguish them instead of repeating the comment.");
        } else {
            result.branch = Branch::WholeNotOverloaded;
            result.messages.push_back(whole_header(record) +
                                      "\n\nThis is not an overloading case. Check the differences among the "
                                      "two methods and document them.");
            if (owner) {
                result.m1_sim = sims.m1;
                result.m2_sim = sims.m2;
                result.owner = owner;
                result.messages.push_back(owner_message(record, owner_name(), victim_name()));
            }
        }
        result.severity = severity_of(result.branch);
        return result;
    }

    result.m1_sim = sims.m1;
    result.m2_sim = sims.m2;
    const auto hits = part_branches(sims, cfg);
    result.branch = hits.front();
    result.severity = severity_of(result.branch);
    if (cfg.multi_warn) result.extra_branches.assign(hits.begin() + 1, hits.end());

    switch (result.branch) {
        case Branch::PoorInfo:
            result.messages.push_back(cloned_line(record) + "\nsays little about either " + angle(a) + " or " +
                                      angle(b) + "\n\nPlease replace it with a more informative comment.");
            break;
        case Branch::FalsePositive:
            result.messages.push_back(cloned_line(record) + "\nis closely related to both " + angle(a) + " and " +
                                      angle(b) + "\n\nThis looks like a false positive.");
            break;
        case Branch::OwnerFound:
            result.owner = owner;
            result.messages.push_back(owner_message(record, owner_name(), victim_name()) + "\n\n" +
                                      advice(record, victim_name()));
            break;
        default:
            result.messages.push_back(cloned_line(record) + "\nis equally related to " + angle(a) + " and " +
                                      angle(b) +
                                      "\n\nFix these comments: document each one with a different, "
                                      "appropriate comment.");
            break;
    }
    return result;
}

std::vector<AnalysisResult> analyze_all(const std::vector<CloneRecord>& records, const Corpus& corpus,
                                        const AnalyzerConfig& cfg, const Lexicon& lexicon) {
    std::vector<AnalysisResult> out;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (r.legit) continue;
        auto res = analyze(r, corpus.element(r.first), corpus.element(r.second), cfg, lexicon);
        res.record_number = i + 1;
        out.push_back(std::move(res));
    }
    return out;
}

}  // namespace jdclones
