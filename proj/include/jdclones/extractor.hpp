// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "jdclones/diagnostics.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jdclones {

/// Body of a `/** ... */` block with the leading `*` gutter of each line removed.
struct RawJavadoc {
    std::string text;
};

struct ParamDoc {
    std::string name;
    std::string text;
};

struct ThrowsDoc {
    std::string type_name;
    std::string text;
};

/**
 * A Javadoc block split into its labelled parts.
 *
 * Every text is cleaned (see clean_text). `whole_text` joins the free text
 * and the @param/@return/@throws parts in source order with single spaces,
 * each tag part written as "@tag [name] text". Other block tags are left out.
 */
struct CommentDoc {
    std::string free_text;
    std::vector<ParamDoc> params;
    std::optional<std::string> returns;
    std::vector<ThrowsDoc> throws_list;
    std::string whole_text;

    [[nodiscard]] bool empty() const { return whole_text.empty(); }
};

struct Parameter {
    std::string type_name;
    std::string name;
};

struct MethodInfo {
    std::string simple_name;  // class simple name for constructors
    bool is_constructor = false;
    std::vector<Parameter> params;
    std::string return_type;  // "" for constructors
    std::string signature;    // "ReturnType name(Type1 p1, Type2 p2)"
    std::optional<RawJavadoc> raw_doc;
    CommentDoc doc;           // parse_javadoc(*raw_doc); empty when undocumented
    std::size_t decl_order = 0;

    [[nodiscard]] bool documented() const { return raw_doc.has_value(); }
};

struct FieldInfo {
    std::string name;
    std::string type_name;
    std::optional<RawJavadoc> raw_doc;
    CommentDoc doc;
    std::size_t decl_order = 0;

    [[nodiscard]] bool documented() const { return raw_doc.has_value(); }
};

struct ClassInfo {
    std::string fqn;
    std::string simple_name;
    std::string package;
    std::optional<std::string> supertype_name;  // raw text of the extends clause
    std::vector<std::string> imports;           // dotted, wildcard imports end in ".*"
    std::vector<MethodInfo> methods;
    std::vector<FieldInfo> fields;
    std::string source_path;
    std::size_t decl_order = 0;  // position of the declaration within its file
};

/// Builds the display signature from the other fields of `m`.
[[nodiscard]] std::string make_signature(const MethodInfo& m);

/**
 * Parses one Java compilation unit.
 *
 * Returns every top-level and nested class, interface, enum, record and
 * annotation type in declaration order (outer before inner). Anonymous and
 * local classes are skipped. Members carry their preceding Javadoc block
 * when one is present. A file that cannot be parsed yields an empty list and
 * a warning in `diag`.
 */
[[nodiscard]] std::vector<ClassInfo> extract_classes(std::string_view source_text,
                                                     std::string_view file_path,
                                                     Diagnostics& diag);

/**
 * Splits a Javadoc body into free text, `@param`, `@return` and
 * `@throws`/`@exception` parts. Other block tags end the preceding part and
 * are discarded. Warnings (e.g. `@param` without a name) go to `diag` when
 * given.
 */
[[nodiscard]] CommentDoc parse_javadoc(const RawJavadoc& raw, Diagnostics* diag = nullptr,
                                       std::string_view where = {});

/// Removes the leading `*` gutter from each line of a comment body.
[[nodiscard]] RawJavadoc strip_gutter(std::string_view comment_body);

}  // namespace jdclones
