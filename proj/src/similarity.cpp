// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

#include "jdclones/similarity.hpp"

#include "jdclones/porter.hpp"
#include "jdclones/text.hpp"
#include "lexicon_defaults.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace jdclones {

// ---------------------------------------------------------------------------
// Word tables
// ---------------------------------------------------------------------------

void BagOfWords::add(const std::string& token, int count) {
    if (token.empty() || count <= 0) return;
    counts_[token] += count;
}

void BagOfWords::add_all(const std::vector<std::string>& tokens) {
    for (const auto& t : tokens) add(t);
}

int BagOfWords::count(const std::string& token) const {
    const auto it = counts_.find(token);
    return it == counts_.end() ? 0 : it->second;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Calls fn(line_number, content) for every non-blank line with `#` comments removed.
template <typename Fn>
void for_each_data_line(std::string_view text, Fn&& fn) {
    std::size_t start = 0;
    std::size_t line_no = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        std::string_view line = text.substr(start, end - start);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (!line.empty()) fn(line_no, line);
        start = end + 1;
    }
}

}  // namespace

void AbbrevTable::add(std::string abbreviation, std::vector<std::string> expansion) {
    if (abbreviation.empty() || expansion.empty()) return;
    entries_[to_lower_ascii(abbreviation)] = std::move(expansion);
}

const std::vector<std::string>* AbbrevTable::find(const std::string& word) const {
    const auto it = entries_.find(word);
    return it == entries_.end() ? nullptr : &it->second;
}

AbbrevTable AbbrevTable::parse(std::string_view text, Diagnostics* diag) {
    AbbrevTable table;
    for_each_data_line(text, [&](std::size_t line_no, std::string_view line) {
        const auto eq = line.find('=');
        std::vector<std::string> words;
        if (eq != std::string_view::npos) {
            for (auto& w : split_whitespace(line.substr(eq + 1))) words.push_back(to_lower_ascii(w));
        }
        const auto key = eq == std::string_view::npos ? std::string_view{} : trim(line.substr(0, eq));
        if (key.empty() || words.empty()) {
            if (diag != nullptr) {
                diag->warn("abbreviations:" + std::to_string(line_no), "expected 'abbr=expansion words'");
            }
            return;
        }
        table.add(std::string(key), std::move(words));
    });
    return table;
}

AbbrevTable AbbrevTable::load(const std::filesystem::path& path, Diagnostics* diag) {
    return parse(read_file(path), diag);
}

AbbrevTable AbbrevTable::defaults() {
    static const AbbrevTable table = parse(defaults::abbreviations_text());
    return table;
}

StopwordSet StopwordSet::parse(std::string_view text) {
    std::set<std::string, std::less<>> words;
    for_each_data_line(text, [&](std::size_t, std::string_view line) {
        words.insert(to_lower_ascii(line));
    });
    return StopwordSet(std::move(words));
}

StopwordSet StopwordSet::load(const std::filesystem::path& path) {
    return parse(read_file(path));
}

StopwordSet StopwordSet::defaults() {
    static const StopwordSet set = parse(defaults::stopwords_text());
    return set;
}

// ---------------------------------------------------------------------------
// Tokens
// ---------------------------------------------------------------------------

namespace {

enum class CharClass { Upper, Lower, Digit, Other };

CharClass classify(char c) {
    const auto u = static_cast<unsigned char>(c);
    if (u >= 0x80) return CharClass::Lower;  // non-ASCII letters have no case here
    if (std::isupper(u)) return CharClass::Upper;
    if (std::islower(u)) return CharClass::Lower;
    if (std::isdigit(u)) return CharClass::Digit;
    return CharClass::Other;
}

bool is_word_char(char c) {
    return classify(c) != CharClass::Other || c == '_' || c == '$';
}

}  // namespace

std::vector<std::string> split_identifier(std::string_view ident) {
    std::vector<std::string> words;
    std::string current;
    std::vector<CharClass> classes;  // classes of the chars in `current`

    const auto flush = [&] {
        if (!current.empty()) words.push_back(to_lower_ascii(current));
        current.clear();
        classes.clear();
    };

    for (const char c : ident) {
        const CharClass cls = classify(c);
        if (cls == CharClass::Other) {
            flush();
            continue;
        }
        if (!current.empty()) {
            const CharClass prev = classes.back();
            const bool digit_change = (prev == CharClass::Digit) != (cls == CharClass::Digit);
            if (digit_change || (prev == CharClass::Lower && cls == CharClass::Upper)) {
                flush();
            } else if (prev == CharClass::Upper && cls == CharClass::Lower && classes.size() >= 2 &&
                       classes[classes.size() - 2] == CharClass::Upper) {
                // "XMLParser": the last capital starts the next word
                const char last = current.back();
                current.pop_back();
                classes.pop_back();
                flush();
                current.push_back(last);
                classes.push_back(CharClass::Upper);
            }
        }
        current.push_back(c);
        classes.push_back(cls);
    }
    flush();
    return words;
}

std::vector<std::string> normalize_tokens(const std::vector<std::string>& words, const Lexicon& lexicon) {
    std::vector<std::string> stems;
    stems.reserve(words.size());
    const auto emit = [&](const std::string& w) {
        if (lexicon.stop.contains(w)) return;
        std::string stem = porter_stem(w);
        if (stem.size() >= 2) stems.push_back(std::move(stem));
    };
    for (const auto& word : words) {
        if (const auto* expansion = lexicon.abbrev.find(word)) {
            for (const auto& w : *expansion) emit(w);
        } else {
            emit(word);
        }
    }
    return stems;
}

std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> sentences;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        const bool terminator = (c == '.' || c == '!' || c == '?') &&
                                (i + 1 == text.size() || is_space(text[i + 1]));
        if (terminator) {
            const auto s = trim(text.substr(start, i + 1 - start));
            if (!s.empty()) sentences.emplace_back(s);
            start = i + 1;
        }
    }
    const auto tail = trim(text.substr(std::min(start, text.size())));
    if (!tail.empty()) sentences.emplace_back(tail);
    return sentences;
}

namespace {

// Words of one sentence: word-character runs (apostrophes allowed inside),
// contractions checked against the stopword list before splitting.
std::vector<std::string> sentence_words(std::string_view sentence, const StopwordSet& stop) {
    std::vector<std::string> words;
    std::size_t i = 0;
    while (i < sentence.size()) {
        if (!is_word_char(sentence[i])) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < sentence.size() &&
               (is_word_char(sentence[i]) ||
                (sentence[i] == '\'' && i + 1 < sentence.size() && is_word_char(sentence[i + 1])))) {
            ++i;
        }
        // Block tag names ("@param") are markup, not content.
        if (start > 0 && sentence[start - 1] == '@') continue;
        std::string token = to_lower_ascii(sentence.substr(start, i - start));
        if (token.find('\'') != std::string::npos) {
            if (stop.contains(token)) continue;
            if (token.size() > 2 && token.ends_with("'s")) token.resize(token.size() - 2);
        }
        // Split with the original casing so camel case inside text is honored.
        const auto original = sentence.substr(start, token.size());
        for (auto& w : split_identifier(original)) words.push_back(std::move(w));
    }
    return words;
}

void add_identifier(BagOfWords& bag, std::string_view ident, const Lexicon& lexicon) {
    bag.add_all(normalize_tokens(split_identifier(ident), lexicon));
}

}  // namespace

BagOfWords text_bow(std::string_view text, const Lexicon& lexicon) {
    BagOfWords bag;
    for (const auto& sentence : split_sentences(text)) {
        bag.add_all(normalize_tokens(sentence_words(sentence, lexicon.stop), lexicon));
    }
    return bag;
}

BagOfWords signature_bow(const MethodInfo& method, const Lexicon& lexicon) {
    BagOfWords bag;
    add_identifier(bag, method.simple_name, lexicon);
    for (const auto& p : method.params) {
        add_identifier(bag, p.type_name, lexicon);
        add_identifier(bag, p.name, lexicon);
    }
    add_identifier(bag, method.return_type, lexicon);
    return bag;
}

BagOfWords signature_bow(const FieldInfo& field, const Lexicon& lexicon) {
    BagOfWords bag;
    add_identifier(bag, field.name, lexicon);
    add_identifier(bag, field.type_name, lexicon);
    return bag;
}

// ---------------------------------------------------------------------------
// Cosine
// ---------------------------------------------------------------------------

namespace {

// Greatest common divisor of all counts. Dividing by it leaves the cosine
// unchanged and makes scaled copies of a bag compute bit-identical results.
long long count_gcd(const BagOfWords& bag) {
    long long g = 0;
    for (const auto& [_, c] : bag.counts()) g = std::gcd(g, static_cast<long long>(c));
    return g == 0 ? 1 : g;
}

}  // namespace

double cosine(const BagOfWords& a, const BagOfWords& b) {
    if (a.empty() || b.empty()) return 0.0;
    const long long ga = count_gcd(a);
    const long long gb = count_gcd(b);

    long long norm_a = 0;
    for (const auto& [_, c] : a.counts()) norm_a += (c / ga) * (c / ga);
    long long norm_b = 0;
    for (const auto& [_, c] : b.counts()) norm_b += (c / gb) * (c / gb);

    const BagOfWords& small = a.distinct() <= b.distinct() ? a : b;
    const BagOfWords& large = &small == &a ? b : a;
    const long long g_small = &small == &a ? ga : gb;
    const long long g_large = &small == &a ? gb : ga;
    long long dot = 0;
    for (const auto& [token, c] : small.counts()) {
        const int other = large.count(token);
        if (other > 0) dot += (c / g_small) * (other / g_large);
    }
    if (dot == 0) return 0.0;
    const double value =
        static_cast<double>(dot) / std::sqrt(static_cast<double>(norm_a) * static_cast<double>(norm_b));
    return std::clamp(value, 0.0, 1.0);
}

}  // namespace jdclones
