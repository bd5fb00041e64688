// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

#include "jdclones/corpus.hpp"

#include "jdclones/text.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>

namespace jdclones {

std::string_view to_string(Scope s) {
    switch (s) {
        case Scope::IntraClass: return "intra";
        case Scope::Hierarchy:  return "hierarchy";
        case Scope::InterClass: return "inter";
    }
    return "intra";
}

std::optional<Scope> parse_scope(std::string_view s) {
    if (s == "intra") return Scope::IntraClass;
    if (s == "hierarchy") return Scope::Hierarchy;
    if (s == "inter") return Scope::InterClass;
    return std::nullopt;
}

std::optional<Target> parse_target(std::string_view s) {
    if (s == "methods") return Target::Methods;
    if (s == "fields") return Target::Fields;
    if (s == "all") return Target::All;
    return std::nullopt;
}

const ClassInfo* Corpus::find(std::string_view fqn) const {
    const auto it = classes.find(std::string(fqn));
    return it == classes.end() ? nullptr : &it->second;
}

ElementView Corpus::element(const MemberRef& ref) const {
    const ClassInfo& cls = classes.at(ref.class_fqn);
    if (ref.kind == MemberKind::Method) return ElementView(cls.methods.at(ref.index));
    return ElementView(cls.fields.at(ref.index));
}

std::vector<std::string> Corpus::ancestors(std::string_view fqn) const {
    std::vector<std::string> chain;
    std::set<std::string, std::less<>> seen{std::string(fqn)};
    auto it = hierarchy.find(std::string(fqn));
    while (it != hierarchy.end() && seen.insert(it->second).second) {
        chain.push_back(it->second);
        it = hierarchy.find(it->second);
    }
    return chain;
}

bool Corpus::is_ancestor(std::string_view ancestor, std::string_view descendant) const {
    const auto chain = ancestors(descendant);
    return std::find(chain.begin(), chain.end(), ancestor) != chain.end();
}

void add_classes(Corpus& corpus, std::vector<ClassInfo> classes, Diagnostics& diag) {
    for (auto& c : classes) {
        const auto existing = corpus.classes.find(c.fqn);
        if (existing != corpus.classes.end()) {
            diag.warn(c.source_path, "duplicate class " + c.fqn + " ignored (first declared in " +
                                         existing->second.source_path + ")");
            continue;
        }
        std::string key = c.fqn;
        corpus.classes.emplace(std::move(key), std::move(c));
    }
}

Corpus build_corpus(const std::vector<std::filesystem::path>& roots, Diagnostics& diag) {
    namespace fs = std::filesystem;
    std::set<std::string> files;
    for (const auto& root : roots) {
        std::error_code ec;
        if (!fs::exists(root, ec)) throw IoError("no such file or directory: " + root.string());
        if (fs::is_regular_file(root, ec)) {
            if (root.extension() == ".java") files.insert(root.generic_string());
            continue;
        }
        fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
        if (ec) throw IoError("cannot read directory " + root.string() + ": " + ec.message());
        for (const auto& entry : it) {
            if (entry.is_regular_file(ec) && entry.path().extension() == ".java") {
                files.insert(entry.path().generic_string());
            }
        }
    }

    Corpus corpus;
    corpus.source_files = files.size();
    for (const auto& file : files) {
        std::ifstream in(file, std::ios::binary);
        if (!in) {
            diag.warn(file, "cannot read file");
            continue;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        std::string source = ss.str();
        if (const auto n = sanitize_utf8(source); n > 0) {
            diag.warn(file, "replaced " + std::to_string(n) + " invalid UTF-8 byte(s)");
        }
        add_classes(corpus, extract_classes(source, file, diag), diag);
    }
    return corpus;
}

namespace {

// "Foo<K, V>.Bar<T>" -> "Foo.Bar"
std::string strip_type_arguments(std::string_view name) {
    std::string out;
    int depth = 0;
    for (const char c : name) {
        if (c == '<') {
            ++depth;
        } else if (c == '>') {
            --depth;
        } else if (depth == 0 && !is_space(c)) {
            out.push_back(c);
        }
    }
    return out;
}

std::optional<std::string> resolve_name(const Corpus& corpus, const ClassInfo& cls, const std::string& name) {
    const auto known = [&](const std::string& fqn) { return fqn != cls.fqn && corpus.classes.count(fqn) > 0; };

    if (known(name)) return name;

    const auto dot = name.find('.');
    const std::string head = name.substr(0, dot);
    const std::string rest = dot == std::string::npos ? "" : name.substr(dot);
    for (const auto& imp : cls.imports) {
        if (imp.ends_with(".*")) continue;
        if (imp == head || imp.ends_with("." + head)) {
            if (known(imp + rest)) return imp + rest;
        }
    }
    for (const auto& imp : cls.imports) {
        if (!imp.ends_with(".*")) continue;
        const std::string candidate = imp.substr(0, imp.size() - 1) + name;
        if (known(candidate)) return candidate;
    }

    // Enclosing classes, innermost first, then the package itself.
    std::string scope = cls.fqn;
    while (true) {
        const auto cut = scope.rfind('.');
        if (cut == std::string::npos || scope.size() <= cls.package.size()) break;
        scope.resize(cut);
        if (scope.size() < cls.package.size()) break;
        const std::string candidate = scope + "." + name;
        if (known(candidate)) return candidate;
    }
    return std::nullopt;
}

}  // namespace

Corpus resolve_supertypes(Corpus corpus, Diagnostics& diag) {
    corpus.hierarchy.clear();
    for (const auto& [fqn, cls] : corpus.classes) {
        if (!cls.supertype_name) continue;
        const auto target = resolve_name(corpus, cls, strip_type_arguments(*cls.supertype_name));
        if (!target) continue;

        // Reject the edge if the target already reaches this class.
        bool cycle = *target == fqn;
        std::unordered_set<std::string> seen;
        for (auto it = corpus.hierarchy.find(*target); !cycle && it != corpus.hierarchy.end();
             it = corpus.hierarchy.find(it->second)) {
            if (it->second == fqn) cycle = true;
            if (!seen.insert(it->second).second) break;
        }
        if (cycle) {
            diag.warn(cls.source_path, "inheritance cycle: ignoring " + fqn + " extends " + *target);
            continue;
        }
        corpus.hierarchy.emplace(fqn, *target);
    }
    return corpus;
}

namespace {

struct Member {
    MemberRef ref;
    std::size_t decl_order;
};

struct ClassMembers {
    const std::string* fqn;
    std::vector<Member> methods;
    std::vector<Member> fields;
};

struct KeyedPair {
    std::tuple<const std::string&, std::size_t, const std::string&, std::size_t> key() const {
        return {pair.first.class_fqn, first_order, pair.second.class_fqn, second_order};
    }
    ElementPair pair;
    std::size_t first_order;
    std::size_t second_order;
};

void emit_cross(const std::vector<Member>& a, const std::vector<Member>& b, MemberKind kind,
                Relation relation, std::vector<KeyedPair>& out) {
    for (const auto& x : a) {
        for (const auto& y : b) {
            out.push_back({ElementPair{kind, x.ref, y.ref, relation}, x.decl_order, y.decl_order});
        }
    }
}

void emit_within(const std::vector<Member>& a, MemberKind kind, std::vector<KeyedPair>& out) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            out.push_back({ElementPair{kind, a[i].ref, a[j].ref, Relation::SameClass},
                           a[i].decl_order, a[j].decl_order});
        }
    }
}

}  // namespace

std::vector<ElementPair> pairs(const Corpus& corpus, Scope scope, Target target) {
    const bool want_methods = target != Target::Fields;
    const bool want_fields = target != Target::Methods;

    std::vector<ClassMembers> classes;
    classes.reserve(corpus.classes.size());
    for (const auto& [fqn, cls] : corpus.classes) {
        ClassMembers cm{&fqn, {}, {}};
        if (want_methods) {
            for (std::size_t i = 0; i < cls.methods.size(); ++i) {
                if (cls.methods[i].documented()) {
                    cm.methods.push_back({MemberRef{fqn, MemberKind::Method, i}, cls.methods[i].decl_order});
                }
            }
        }
        if (want_fields) {
            for (std::size_t i = 0; i < cls.fields.size(); ++i) {
                if (cls.fields[i].documented()) {
                    cm.fields.push_back({MemberRef{fqn, MemberKind::Field, i}, cls.fields[i].decl_order});
                }
            }
        }
        classes.push_back(std::move(cm));
    }

    std::vector<KeyedPair> out;
    if (scope == Scope::IntraClass) {
        for (const auto& cm : classes) {
            emit_within(cm.methods, MemberKind::Method, out);
            emit_within(cm.fields, MemberKind::Field, out);
        }
    } else {
        std::map<std::string_view, std::unordered_set<std::string>> ancestors;
        for (const auto& cm : classes) {
            const auto chain = corpus.ancestors(*cm.fqn);
            ancestors[*cm.fqn] = std::unordered_set<std::string>(chain.begin(), chain.end());
        }
        for (std::size_t i = 0; i < classes.size(); ++i) {
            const auto& a = classes[i];
            if (a.methods.empty() && a.fields.empty()) continue;
            for (std::size_t j = i + 1; j < classes.size(); ++j) {
                const auto& b = classes[j];
                Relation relation = Relation::Unrelated;
                if (ancestors[*b.fqn].count(*a.fqn) > 0) {
                    relation = Relation::FirstIsAncestor;
                } else if (ancestors[*a.fqn].count(*b.fqn) > 0) {
                    relation = Relation::SecondIsAncestor;
                }
                const bool related = relation != Relation::Unrelated;
                if (related != (scope == Scope::Hierarchy)) continue;
                emit_cross(a.methods, b.methods, MemberKind::Method, relation, out);
                emit_cross(a.fields, b.fields, MemberKind::Field, relation, out);
            }
        }
    }

    std::stable_sort(out.begin(), out.end(),
                     [](const KeyedPair& x, const KeyedPair& y) { return x.key() < y.key(); });
    std::vector<ElementPair> result;
    result.reserve(out.size());
    for (auto& kp : out) result.push_back(std::move(kp.pair));
    return result;
}

}  // namespace jdclones
