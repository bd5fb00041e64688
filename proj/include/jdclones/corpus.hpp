// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "jdclones/diagnostics.hpp"
#include "jdclones/extractor.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jdclones {

enum class Scope { IntraClass, Hierarchy, InterClass };
enum class Target { Methods, Fields, All };
enum class MemberKind { Method, Field };

/// How the classes of two paired elements relate.
enum class Relation {
    SameClass,
    FirstIsAncestor,   // first element's class is a superclass of the second's
    SecondIsAncestor,
    Unrelated,
};

[[nodiscard]] std::string_view to_string(Scope s);
[[nodiscard]] std::optional<Scope> parse_scope(std::string_view s);
[[nodiscard]] std::optional<Target> parse_target(std::string_view s);

/// A class member addressed by class fqn and position in methods/fields.
struct MemberRef {
    std::string class_fqn;
    MemberKind kind = MemberKind::Method;
    std::size_t index = 0;

    friend bool operator==(const MemberRef&, const MemberRef&) = default;
};

/// Two documented members of the same kind, `first` canonically before `second`.
struct ElementPair {
    MemberKind kind = MemberKind::Method;
    MemberRef first;
    MemberRef second;
    Relation relation = Relation::SameClass;
};

/// Read-only view of a method or a field.
class ElementView {
public:
    ElementView(const MethodInfo& m) : method_(&m) {}  // NOLINT(google-explicit-constructor)
    ElementView(const FieldInfo& f) : field_(&f) {}    // NOLINT(google-explicit-constructor)

    [[nodiscard]] bool is_method() const { return method_ != nullptr; }
    [[nodiscard]] const MethodInfo& method() const { return *method_; }
    [[nodiscard]] const FieldInfo& field() const { return *field_; }

    /// Method signature or field name, as shown in reports.
    [[nodiscard]] const std::string& display() const { return method_ ? method_->signature : field_->name; }
    [[nodiscard]] const CommentDoc& doc() const { return method_ ? method_->doc : field_->doc; }
    [[nodiscard]] std::size_t decl_order() const { return method_ ? method_->decl_order : field_->decl_order; }

private:
    const MethodInfo* method_ = nullptr;
    const FieldInfo* field_ = nullptr;
};

/**
 * All classes of a project keyed by fully qualified name, plus the
 * resolved `extends` edges between them. Immutable once built.
 */
struct Corpus {
    std::map<std::string, ClassInfo> classes;
    std::map<std::string, std::string> hierarchy;  // class fqn -> superclass fqn
    std::size_t source_files = 0;

    /// True when no `.java` file was found under the roots.
    [[nodiscard]] bool no_sources() const { return source_files == 0; }

    [[nodiscard]] const ClassInfo* find(std::string_view fqn) const;
    [[nodiscard]] ElementView element(const MemberRef& ref) const;

    /// Superclass chain of `fqn`, nearest first.
    [[nodiscard]] std::vector<std::string> ancestors(std::string_view fqn) const;
    [[nodiscard]] bool is_ancestor(std::string_view ancestor, std::string_view descendant) const;
};

/// Adds extracted classes to the corpus; an fqn already present is kept and a warning issued.
void add_classes(Corpus& corpus, std::vector<ClassInfo> classes, Diagnostics& diag);

/**
 * Extracts every `.java` file under the given roots (files or directories,
 * searched recursively) in sorted path order. Throws IoError when a root
 * does not exist.
 */
[[nodiscard]] Corpus build_corpus(const std::vector<std::filesystem::path>& roots, Diagnostics& diag);

/**
 * Resolves each raw `extends` name to a corpus class: exact fqn, then
 * imports, then enclosing classes and the same package. Unresolved names
 * produce no edge; an edge that would close a cycle is dropped with a
 * warning.
 */
[[nodiscard]] Corpus resolve_supertypes(Corpus corpus, Diagnostics& diag);

/**
 * Enumerates documented member pairs for a scope, in canonical order
 * (class fqn, then declaration order). The three scopes are disjoint.
 */
[[nodiscard]] std::vector<ElementPair> pairs(const Corpus& corpus, Scope scope, Target target);

}  // namespace jdclones
