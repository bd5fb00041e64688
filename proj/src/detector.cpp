// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

#include "jdclones/detector.hpp"

#include "jdclones/text.hpp"
#include "lexicon_defaults.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace jdclones {

std::string_view to_string(CloneKind kind) {
    switch (kind) {
        case CloneKind::Whole:    return "Whole";
        case CloneKind::FreeText: return "Summary";
        case CloneKind::Param:    return "@param";
        case CloneKind::Return:   return "@return";
        case CloneKind::Throws:   return "@throws";
        case CloneKind::Field:    return "Field";
    }
    return "Whole";
}

// ---------------------------------------------------------------------------
// Generic @throws patterns
// ---------------------------------------------------------------------------

GenericPatterns GenericPatterns::parse(std::string_view text) {
    GenericPatterns out;
    std::size_t start = 0;
    std::size_t line_no = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        const auto line = trim(text.substr(start, end - start));
        start = end + 1;
        if (line.empty() || line.front() == '#') continue;
        try {
            out.patterns_.emplace_back(std::string(line),
                                       std::regex::ECMAScript | std::regex::icase | std::regex::optimize);
        } catch (const std::regex_error& e) {
            throw ConfigError("generic throws pattern on line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

GenericPatterns GenericPatterns::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

GenericPatterns GenericPatterns::defaults() {
    static const GenericPatterns patterns = parse(defaults::generic_throws_text());
    return patterns;
}

bool GenericPatterns::matches(const std::string& text) const {
    // std::regex recurses per character; long descriptions are never filler anyway.
    constexpr std::size_t kMaxLength = 512;
    if (text.size() > kMaxLength) return false;
    for (const auto& re : patterns_) {
        if (std::regex_search(text, re)) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Comparison
// ---------------------------------------------------------------------------

std::string comparable_text(std::string_view part_text) {
    std::string key = collapse_whitespace(to_lower_ascii(part_text));
    while (!key.empty() && (key.back() == '.' || key.back() == ' ')) key.pop_back();
    return key;
}

namespace {

std::string clone_key(const std::string& text, const DetectorConfig& cfg) {
    return cfg.strict_case ? collapse_whitespace(text) : comparable_text(text);
}

bool same_clone(const std::string& a, const std::string& b, const DetectorConfig& cfg) {
    if (a.empty() || b.empty()) return false;
    const auto ka = clone_key(a, cfg);
    return !ka.empty() && ka == clone_key(b, cfg);
}

std::string_view simple_type_name(std::string_view name) {
    const auto dot = name.rfind('.');
    return dot == std::string_view::npos ? name : name.substr(dot + 1);
}

std::string without_spaces(std::string_view s) {
    std::string out;
    for (const char c : s) {
        if (!is_space(c)) out.push_back(c);
    }
    return out;
}

bool parameterless_constructor(const ElementView& e) {
    return e.is_method() && e.method().is_constructor && e.method().params.empty();
}

}  // namespace

bool is_primitive_like(std::string_view type_name) {
    static constexpr std::array<std::string_view, 20> kNames = {
        "",        "void",    "boolean", "byte",      "short",  "int",   "long",
        "float",   "double",  "char",    "Void",      "Boolean", "Byte", "Short",
        "Integer", "Long",    "Float",   "Double",    "Character", "String",
    };
    std::string_view t = type_name;
    if (t.starts_with("java.lang.")) t.remove_prefix(10);
    for (const auto n : kNames) {
        if (t == n) return true;
    }
    return false;
}

bool is_legitimate(const CloneRecord& record, const ElementView& e1, const ElementView& e2,
                   const DetectorConfig& cfg) {
    const bool both_methods = e1.is_method() && e2.is_method();
    if (parameterless_constructor(e1) && parameterless_constructor(e2)) return true;
    if (record.kind == CloneKind::Whole) return false;

    if (both_methods && e1.method().simple_name == e2.method().simple_name) return true;

    switch (record.kind) {
        case CloneKind::Throws: {
            const bool same_type = !record.aux.first.empty() &&
                                   simple_type_name(record.aux.first) == simple_type_name(record.aux.second);
            const bool specific =
                static_cast<int>(split_whitespace(record.cloned_text).size()) >= cfg.min_throws_words &&
                !cfg.generic_throws.matches(record.cloned_text);
            return cfg.throws_rule == ThrowsRule::GateSameType ? (same_type && specific)
                                                                : (same_type || !specific);
        }
        case CloneKind::Param:
            return !record.aux.first.empty() && record.aux.first == record.aux.second;
        case CloneKind::Return:
            if (!both_methods) return false;
            {
                const auto r1 = without_spaces(e1.method().return_type);
                return r1 == without_spaces(e2.method().return_type) && !is_primitive_like(r1);
            }
        case CloneKind::Field:
            return !e1.is_method() && !e2.is_method() && record.class1_fqn != record.class2_fqn &&
                   e1.field().name == e2.field().name;
        case CloneKind::Whole:
        case CloneKind::FreeText:
            return false;
    }
    return false;
}

std::vector<CloneRecord> compare_pair(const ElementPair& pair, const Corpus& corpus, Scope scope,
                                      const DetectorConfig& cfg) {
    const ElementView e1 = corpus.element(pair.first);
    const ElementView e2 = corpus.element(pair.second);
    const CommentDoc& d1 = e1.doc();
    const CommentDoc& d2 = e2.doc();

    std::vector<CloneRecord> records;
    const auto emit = [&](CloneKind kind, const std::string& text, std::pair<std::string, std::string> aux = {}) {
        CloneRecord r;
        r.class1_fqn = pair.first.class_fqn;
        r.class2_fqn = pair.second.class_fqn;
        r.elem1_sig = e1.display();
        r.elem2_sig = e2.display();
        r.kind = kind;
        r.cloned_text = text;
        r.scope = scope;
        r.relation = pair.relation;
        r.first = pair.first;
        r.second = pair.second;
        r.aux = std::move(aux);
        r.legit = is_legitimate(r, e1, e2, cfg);
        records.push_back(std::move(r));
    };

    if (pair.kind == MemberKind::Field) {
        if (same_clone(d1.whole_text, d2.whole_text, cfg)) emit(CloneKind::Field, d1.whole_text);
        return records;
    }

    if (same_clone(d1.whole_text, d2.whole_text, cfg)) {
        emit(CloneKind::Whole, d1.whole_text);
        return records;
    }
    if (same_clone(d1.free_text, d2.free_text, cfg)) emit(CloneKind::FreeText, d1.free_text);
    for (const auto& p1 : d1.params) {
        for (const auto& p2 : d2.params) {
            if (same_clone(p1.text, p2.text, cfg)) emit(CloneKind::Param, p1.text, {p1.name, p2.name});
        }
    }
    if (d1.returns && d2.returns && same_clone(*d1.returns, *d2.returns, cfg)) {
        emit(CloneKind::Return, *d1.returns);
    }
    for (const auto& t1 : d1.throws_list) {
        for (const auto& t2 : d2.throws_list) {
            if (same_clone(t1.text, t2.text, cfg)) emit(CloneKind::Throws, t1.text, {t1.type_name, t2.type_name});
        }
    }
    return records;
}

std::vector<CloneRecord> detect_clones(const Corpus& corpus, const std::vector<ElementPair>& pairs, Scope scope,
                                       const DetectorConfig& cfg) {
    std::vector<CloneRecord> records;
    for (const auto& p : pairs) {
        auto found = compare_pair(p, corpus, scope, cfg);
        records.insert(records.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
    }
    return records;
}

}  // namespace jdclones
