// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

#include "jdclones/extractor.hpp"

#include "java_lexer.hpp"
#include "jdclones/text.hpp"

#include <array>
#include <cctype>
#include <set>

namespace jdclones {

// ---------------------------------------------------------------------------
// Javadoc parts
// ---------------------------------------------------------------------------

RawJavadoc strip_gutter(std::string_view body) {
    std::string out;
    out.reserve(body.size());
    std::size_t start = 0;
    bool first = true;
    while (start <= body.size()) {
        auto end = body.find('\n', start);
        if (end == std::string_view::npos) end = body.size();
        std::string_view line = body.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::size_t i = 0;
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i < line.size() && line[i] == '*') {
            while (i < line.size() && line[i] == '*') ++i;
            line.remove_prefix(i);
        }
        if (!first) out.push_back('\n');
        out += line;
        first = false;
        if (end == body.size()) break;
        start = end + 1;
    }
    return RawJavadoc{std::move(out)};
}

namespace {

enum class PartKind { Free, Param, Return, Throws, Ignored };

struct PendingPart {
    PartKind kind = PartKind::Free;
    std::string label;  // parameter name or exception type
    std::string text;
};

bool is_tag_char(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

// Splits "name rest of text" into its first whitespace-delimited word and the remainder.
std::pair<std::string, std::string> split_first_word(std::string_view s) {
    s = trim(s);
    std::size_t i = 0;
    while (i < s.size() && !is_space(s[i])) ++i;
    return {std::string(s.substr(0, i)), std::string(s.substr(i))};
}

}  // namespace

CommentDoc parse_javadoc(const RawJavadoc& raw, Diagnostics* diag, std::string_view where) {
    std::vector<PendingPart> parts;
    parts.push_back(PendingPart{});

    std::string_view text = raw.text;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(start, end - start);
        const std::string_view body = trim(line);

        if (body.size() > 1 && body[0] == '@' && is_tag_char(body[1])) {
            std::size_t n = 1;
            while (n < body.size() && is_tag_char(body[n])) ++n;
            const std::string_view tag = body.substr(1, n - 1);
            const std::string_view rest = body.substr(n);
            PendingPart part;
            if (tag == "param") {
                part.kind = PartKind::Param;
            } else if (tag == "return") {
                part.kind = PartKind::Return;
            } else if (tag == "throws" || tag == "exception") {
                part.kind = PartKind::Throws;
            } else {
                part.kind = PartKind::Ignored;
            }
            if (part.kind == PartKind::Param || part.kind == PartKind::Throws) {
                auto [label, remainder] = split_first_word(rest);
                if (label.empty() && diag != nullptr) {
                    diag->warn(std::string(where), "@" + std::string(tag) + " tag without a name");
                }
                part.label = std::move(label);
                part.text = std::move(remainder);
            } else {
                part.text = std::string(rest);
            }
            parts.push_back(std::move(part));
        } else {
            auto& current = parts.back();
            current.text.push_back('\n');
            current.text += line;
        }

        if (end == text.size()) break;
        start = end + 1;
    }

    CommentDoc doc;
    std::string whole;
    const auto append_whole = [&whole](std::string_view prefix, const std::string& label, const std::string& t) {
        if (t.empty() && label.empty()) return;
        if (!whole.empty()) whole.push_back(' ');
        whole += prefix;
        if (!label.empty()) whole += label + (t.empty() ? "" : " ");
        whole += t;
    };
    for (const auto& part : parts) {
        if (part.kind == PartKind::Ignored) continue;
        std::string cleaned = clean_text(part.text);
        switch (part.kind) {
            case PartKind::Free:    append_whole("", "", cleaned); break;
            case PartKind::Param:   append_whole("@param ", part.label, cleaned); break;
            case PartKind::Return:  append_whole("@return ", "", cleaned); break;
            case PartKind::Throws:  append_whole("@throws ", part.label, cleaned); break;
            case PartKind::Ignored: break;
        }
        switch (part.kind) {
            case PartKind::Free:
                doc.free_text = std::move(cleaned);
                break;
            case PartKind::Param:
                doc.params.push_back(ParamDoc{part.label, std::move(cleaned)});
                break;
            case PartKind::Return:
                if (doc.returns && diag != nullptr) {
                    diag->warn(std::string(where), "duplicate @return tag, keeping the last one");
                }
                doc.returns = std::move(cleaned);
                break;
            case PartKind::Throws:
                doc.throws_list.push_back(ThrowsDoc{part.label, std::move(cleaned)});
                break;
            case PartKind::Ignored:
                break;
        }
    }
    doc.whole_text = std::move(whole);
    return doc;
}

std::string make_signature(const MethodInfo& m) {
    std::string sig;
    if (!m.is_constructor) {
        sig += m.return_type;
        sig.push_back(' ');
    }
    sig += m.simple_name;
    sig.push_back('(');
    for (std::size_t i = 0; i < m.params.size(); ++i) {
        if (i > 0) sig += ", ";
        sig += m.params[i].type_name;
        sig.push_back(' ');
        sig += m.params[i].name;
    }
    sig.push_back(')');
    return sig;
}

// ---------------------------------------------------------------------------
// Declaration parser
// ---------------------------------------------------------------------------

namespace {

using java::SyntaxError;
using java::Token;
using java::TokenKind;

const std::set<std::string, std::less<>> kModifiers = {
    "public",   "protected", "private",      "static",   "final",
    "abstract", "native",    "synchronized", "transient", "volatile",
    "strictfp", "default",   "sealed",
};

class DeclParser {
public:
    DeclParser(std::vector<Token> tokens, std::string_view path, Diagnostics& diag)
        : toks_(std::move(tokens)), path_(path), diag_(diag) {}

    std::vector<ClassInfo> run() {
        while (!at_end()) {
            std::optional<RawJavadoc> doc = skip_prefix();
            (void)doc;  // type-level docs are not compared
            if (at_end()) break;
            if (is_ident("package")) {
                ++pos_;
                package_ = read_qualified_name();
                expect(";");
            } else if (is_ident("import")) {
                ++pos_;
                const bool is_static = is_ident("static");
                if (is_static) ++pos_;
                std::string name = read_qualified_name(true);
                expect(";");
                if (!is_static) imports_.push_back(std::move(name));
            } else if (is_punct(";")) {
                ++pos_;
            } else if (is_ident("module") || is_ident("open")) {
                // module-info.java declares no classes
                return {};
            } else if (type_keyword_here()) {
                parse_type_decl({});
            } else {
                fail("unexpected token '" + cur().text + "' at top level");
            }
        }
        for (auto& c : classes_) c.imports = imports_;
        return std::move(classes_);
    }

private:
    // -- token helpers ------------------------------------------------------

    const Token& cur() const { return toks_[pos_]; }
    const Token& look(std::size_t ahead) const {
        const std::size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    bool at_end() const { return cur().kind == TokenKind::End; }
    bool is_ident() const { return cur().kind == TokenKind::Identifier; }
    bool is_ident(std::string_view s) const { return is_ident() && cur().text == s; }
    bool is_punct(std::string_view s) const { return cur().kind == TokenKind::Punct && cur().text == s; }
    static bool is_punct(const Token& t, std::string_view s) {
        return t.kind == TokenKind::Punct && t.text == s;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(cur().line, msg); }

    void expect(std::string_view punct) {
        if (!is_punct(punct)) {
            fail("expected '" + std::string(punct) + "' but found '" + cur().text + "'");
        }
        ++pos_;
    }

    std::string expect_ident() {
        if (!is_ident()) fail("expected identifier but found '" + cur().text + "'");
        return toks_[pos_++].text;
    }

    std::string read_qualified_name(bool allow_wildcard = false) {
        std::string name = expect_ident();
        while (is_punct(".")) {
            ++pos_;
            if (allow_wildcard && is_punct("*")) {
                ++pos_;
                name += ".*";
                break;
            }
            name += ".";
            name += expect_ident();
        }
        return name;
    }

    // Skips from an opening bracket to just past its partner, counting only that pair.
    void skip_balanced(std::string_view open, std::string_view close) {
        const std::size_t line = cur().line;
        int depth = 0;
        while (!at_end()) {
            if (is_punct(open)) {
                ++depth;
            } else if (is_punct(close)) {
                if (--depth == 0) {
                    ++pos_;
                    return;
                }
            }
            ++pos_;
        }
        throw SyntaxError(line, "unbalanced '" + std::string(open) + "'");
    }

    void skip_annotation() {
        ++pos_;  // '@'
        read_qualified_name();
        if (is_punct("(")) skip_balanced("(", ")");
    }

    bool annotation_here() const {
        return is_punct("@") && !(look(1).kind == TokenKind::Identifier && look(1).text == "interface");
    }

    // Skips Javadoc blocks, annotations and modifiers ahead of a declaration,
    // returning the last Javadoc block seen.
    std::optional<RawJavadoc> skip_prefix() {
        std::optional<RawJavadoc> doc;
        while (!at_end()) {
            if (cur().kind == TokenKind::Javadoc) {
                doc = strip_gutter(cur().text);
                ++pos_;
            } else if (annotation_here()) {
                skip_annotation();
            } else if (is_ident() && kModifiers.count(cur().text) > 0 &&
                       !is_punct(look(1), "(") && !is_punct(look(1), ".")) {
                ++pos_;
            } else if (is_ident("non") && is_punct(look(1), "-") &&
                       look(2).kind == TokenKind::Identifier && look(2).text == "sealed") {
                pos_ += 3;
            } else {
                break;
            }
        }
        return doc;
    }

    bool type_keyword_here() const {
        if (is_ident("class") || is_ident("interface") || is_ident("enum")) return true;
        if (is_punct("@") && look(1).kind == TokenKind::Identifier && look(1).text == "interface") return true;
        // `record` is a contextual keyword: record Name( or record Name<
        return is_ident("record") && look(1).kind == TokenKind::Identifier &&
               (is_punct(look(2), "(") || is_punct(look(2), "<"));
    }

    // -- types --------------------------------------------------------------

    static bool wordlike(const std::string& t) {
        return !t.empty() && (std::isalnum(static_cast<unsigned char>(t[0])) || t[0] == '_' ||
                              t[0] == '$' || static_cast<unsigned char>(t[0]) >= 0x80);
    }

    // Renders type-argument tokens as "Map<String, List<? extends T>>".
    void append_type_token(std::string& out, const std::string& tok, std::string& prev) {
        const bool space = (wordlike(prev) && wordlike(tok)) || prev == "," || prev == "&" ||
                           tok == "&" || (prev == "?" && wordlike(tok));
        if (space && !out.empty()) out.push_back(' ');
        out += tok;
        prev = tok;
    }

    void read_type_arguments(std::string& out) {
        const std::size_t line = cur().line;
        int depth = 0;
        std::string prev;
        while (!at_end()) {
            if (annotation_here()) {
                skip_annotation();
                continue;
            }
            const std::string tok = cur().text;
            if (cur().kind == TokenKind::Javadoc) {
                ++pos_;
                continue;
            }
            if (tok == "<") ++depth;
            if (tok == ">") --depth;
            append_type_token(out, tok, prev);
            ++pos_;
            if (depth == 0) return;
        }
        throw SyntaxError(line, "unbalanced type arguments");
    }

    std::string parse_type() {
        while (annotation_here()) skip_annotation();
        std::string type = expect_ident();
        if (is_punct("<")) read_type_arguments(type);
        while (is_punct(".") && look(1).kind == TokenKind::Identifier) {
            ++pos_;
            while (annotation_here()) skip_annotation();
            type += ".";
            type += expect_ident();
            if (is_punct("<")) read_type_arguments(type);
        }
        read_dims(type);
        return type;
    }

    void read_dims(std::string& type) {
        for (;;) {
            while (annotation_here()) skip_annotation();
            if (is_punct("[") && is_punct(look(1), "]")) {
                pos_ += 2;
                type += "[]";
            } else {
                return;
            }
        }
    }

    // -- declarations -------------------------------------------------------

    void parse_type_decl(const std::string& outer_fqn) {
        std::string keyword;
        if (is_punct("@")) {
            pos_ += 2;
            keyword = "@interface";
        } else {
            keyword = toks_[pos_++].text;
        }
        const std::string name = expect_ident();

        const std::size_t slot = classes_.size();
        {
            ClassInfo info;
            info.simple_name = name;
            info.package = package_;
            if (!outer_fqn.empty()) {
                info.fqn = outer_fqn + "." + name;
            } else {
                info.fqn = package_.empty() ? name : package_ + "." + name;
            }
            info.source_path = std::string(path_);
            info.decl_order = slot;
            classes_.push_back(std::move(info));
        }

        if (is_punct("<")) skip_balanced("<", ">");
        if (keyword == "record" && is_punct("(")) skip_balanced("(", ")");

        while (!at_end() && !is_punct("{")) {
            if (is_ident("extends")) {
                ++pos_;
                std::string super = parse_type();
                // Interfaces may extend several types; the first one is kept.
                if (!classes_[slot].supertype_name) classes_[slot].supertype_name = std::move(super);
                while (is_punct(",")) {
                    ++pos_;
                    (void)parse_type();
                }
            } else if (is_ident("implements") || is_ident("permits")) {
                ++pos_;
                (void)parse_type();
                while (is_punct(",")) {
                    ++pos_;
                    (void)parse_type();
                }
            } else {
                fail("unexpected '" + cur().text + "' in declaration of " + name);
            }
        }
        expect("{");

        ClassBody body{slot, name, 0};
        if (keyword == "enum") skip_enum_constants();
        parse_members(body);
        expect("}");
    }

    struct ClassBody {
        std::size_t slot;
        std::string simple_name;
        std::size_t next_order;
    };

    void skip_enum_constants() {
        while (!at_end()) {
            (void)skip_prefix();
            if (is_punct(";")) {
                ++pos_;
                return;
            }
            if (is_punct("}")) return;
            (void)expect_ident();
            if (is_punct("(")) skip_balanced("(", ")");
            if (is_punct("{")) skip_balanced("{", "}");
            if (is_punct(",")) {
                ++pos_;
            } else if (!is_punct(";") && !is_punct("}")) {
                fail("unexpected '" + cur().text + "' in enum constants");
            }
        }
    }

    void parse_members(ClassBody& body) {
        while (!at_end() && !is_punct("}")) {
            std::optional<RawJavadoc> doc = skip_prefix();
            if (is_punct("}")) break;
            if (is_punct(";")) {
                ++pos_;
                continue;
            }
            if (is_punct("{")) {
                skip_balanced("{", "}");  // initializer block
                continue;
            }
            if (type_keyword_here()) {
                ++body.next_order;
                parse_type_decl(std::string(classes_[body.slot].fqn));
                continue;
            }
            if (is_punct("<")) skip_balanced("<", ">");  // generic method type parameters

            if (is_ident(body.simple_name) && is_punct(look(1), "{")) {
                // compact record constructor
                ++pos_;
                skip_balanced("{", "}");
                continue;
            }
            if (is_ident(body.simple_name) && is_punct(look(1), "(")) {
                ++pos_;
                MethodInfo m;
                m.simple_name = body.simple_name;
                m.is_constructor = true;
                parse_method_rest(m);
                add_method(body, std::move(m), std::move(doc));
                continue;
            }

            std::string type = parse_type();
            std::string name = expect_ident();
            if (is_punct("(")) {
                MethodInfo m;
                m.simple_name = std::move(name);
                m.return_type = std::move(type);
                parse_method_rest(m);
                add_method(body, std::move(m), std::move(doc));
                continue;
            }
            parse_field_rest(body, std::move(type), std::move(name), std::move(doc));
        }
    }

    void parse_method_rest(MethodInfo& m) {
        expect("(");
        while (!is_punct(")")) {
            if (at_end()) fail("unterminated parameter list");
            (void)skip_prefix();  // final, annotations
            std::string type = parse_type();
            if (is_punct("...")) {
                ++pos_;
                type += "...";
            }
            std::string name;
            if (is_ident("this")) {
                ++pos_;  // receiver parameter
            } else if (is_ident() && is_punct(look(1), ".") && look(2).text == "this") {
                pos_ += 3;  // Outer.this receiver
            } else {
                name = expect_ident();
                read_dims(type);
                m.params.push_back(Parameter{std::move(type), std::move(name)});
            }
            if (is_punct(",")) {
                ++pos_;
            } else if (!is_punct(")")) {
                fail("expected ',' or ')' in parameter list");
            }
        }
        ++pos_;
        read_dims(m.return_type);  // legacy `int f()[]`
        if (is_ident("throws")) {
            ++pos_;
            (void)parse_type();
            while (is_punct(",")) {
                ++pos_;
                (void)parse_type();
            }
        }
        if (is_ident("default")) {
            // annotation element default value
            while (!at_end() && !is_punct(";")) {
                if (is_punct("{")) {
                    skip_balanced("{", "}");
                } else if (is_punct("(")) {
                    skip_balanced("(", ")");
                } else {
                    ++pos_;
                }
            }
        }
        if (is_punct("{")) {
            skip_balanced("{", "}");
        } else {
            expect(";");
        }
    }

    void parse_field_rest(ClassBody& body, std::string type, std::string name,
                          std::optional<RawJavadoc> doc) {
        for (;;) {
            std::string declared_type = type;
            read_dims(declared_type);
            FieldInfo f;
            f.name = std::move(name);
            f.type_name = std::move(declared_type);
            add_field(body, std::move(f), std::move(doc));
            doc.reset();  // the block documents the first declarator only

            if (is_punct("=")) {
                ++pos_;
                skip_initializer();
            }
            if (is_punct(",")) {
                ++pos_;
                name = expect_ident();
                continue;
            }
            expect(";");
            return;
        }
    }

    void skip_initializer() {
        const std::size_t line = cur().line;
        int depth = 0;
        while (!at_end()) {
            if (depth == 0 && (is_punct(",") || is_punct(";"))) return;
            if (is_punct("(") || is_punct("[") || is_punct("{")) {
                ++depth;
            } else if (is_punct(")") || is_punct("]") || is_punct("}")) {
                if (--depth < 0) fail("unbalanced initializer");
            }
            ++pos_;
        }
        throw SyntaxError(line, "unterminated field initializer");
    }

    void add_method(ClassBody& body, MethodInfo m, std::optional<RawJavadoc> doc) {
        m.signature = make_signature(m);
        m.decl_order = body.next_order++;
        if (doc) {
            m.doc = parse_javadoc(*doc, &diag_, location(body, m.signature));
            m.raw_doc = std::move(doc);
        }
        classes_[body.slot].methods.push_back(std::move(m));
    }

    void add_field(ClassBody& body, FieldInfo f, std::optional<RawJavadoc> doc) {
        f.decl_order = body.next_order++;
        if (doc) {
            f.doc = parse_javadoc(*doc, &diag_, location(body, f.name));
            f.raw_doc = std::move(doc);
        }
        classes_[body.slot].fields.push_back(std::move(f));
    }

    std::string location(const ClassBody& body, const std::string& member) const {
        return std::string(path_) + ": " + classes_[body.slot].fqn + "#" + member;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::string_view path_;
    Diagnostics& diag_;
    std::string package_;
    std::vector<std::string> imports_;
    std::vector<ClassInfo> classes_;
};

}  // namespace

std::vector<ClassInfo> extract_classes(std::string_view source_text, std::string_view file_path,
                                       Diagnostics& diag) {
    Diagnostics local;
    try {
        auto classes = DeclParser(java::tokenize(source_text), file_path, local).run();
        diag.merge(local);
        return classes;
    } catch (const SyntaxError& e) {
        diag.warn(std::string(file_path), std::string("skipped unparseable file: ") + e.what());
        return {};
    }
}

}  // namespace jdclones
