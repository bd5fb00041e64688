// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

// Randomized property checks shared by the unit suite and the acceptance
// runner. Each returns how many cases ran and how many failed.

#pragma once

#include "jdclones/analyzer.hpp"
#include "jdclones/corpus.hpp"
#include "jdclones/detector.hpp"
#include "jdclones/report.hpp"
#include "jdclones/similarity.hpp"
#include "random_corpus.hpp"

#include <cmath>
#include <random>
#include <set>
#include <string>
#include <tuple>

namespace testing {

struct PropertyResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    void fail(const std::string& what) {
        if (failures++ == 0) first_failure = what;
    }
    [[nodiscard]] bool ok() const { return failures == 0; }
};

inline jdclones::Corpus model_corpus(const Model& m) {
    jdclones::Diagnostics diag;
    jdclones::Corpus corpus;
    const auto files = render(m);
    for (const auto& [path, src] : files) {
        jdclones::add_classes(corpus, jdclones::extract_classes(src, path, diag), diag);
    }
    corpus.source_files = files.size();
    return jdclones::resolve_supertypes(std::move(corpus), diag);
}

// Words that pass through normalize_tokens unchanged, so a bag can be
// turned into a signature with exactly those counts.
inline const std::vector<std::string>& stable_vocabulary() {
    static const std::vector<std::string> kWords = {"poll", "first", "element", "list", "level", "log",
                                                    "record", "direct", "stream", "xml", "edit", "output",
                                                    "visitor", "keytab", "login", "ticket"};
    return kWords;
}

inline jdclones::BagOfWords random_bag(std::mt19937& rng, int max_distinct, int max_count) {
    const auto& vocab = stable_vocabulary();
    jdclones::BagOfWords bag;
    const int n = std::uniform_int_distribution<int>(0, max_distinct)(rng);
    for (int i = 0; i < n; ++i) {
        const auto& w = vocab[std::uniform_int_distribution<std::size_t>(0, vocab.size() - 1)(rng)];
        bag.add(w, std::uniform_int_distribution<int>(1, max_count)(rng));
    }
    return bag;
}

// A method whose signature bag equals `bag` scaled by `k`.
inline jdclones::MethodInfo method_from_bag(const jdclones::BagOfWords& bag, int k) {
    jdclones::MethodInfo m;
    m.simple_name = "m";  // dropped: shorter than two characters
    for (const auto& [w, c] : bag.counts()) {
        for (int i = 0; i < c * k; ++i) m.params.push_back({w, ""});
    }
    m.signature = jdclones::make_signature(m);
    return m;
}

inline std::string text_from_bag(const jdclones::BagOfWords& bag) {
    std::string s;
    for (const auto& [w, c] : bag.counts()) {
        for (int i = 0; i < c; ++i) s += (s.empty() ? "" : " ") + w;
    }
    return s;
}

inline PropertyResult cosine_symmetry_and_range(int cases, std::uint32_t seed) {
    PropertyResult r{"cosine symmetric and within [0,1]"};
    std::mt19937 rng(seed);
    for (int i = 0; i < cases; ++i, ++r.cases) {
        const auto a = random_bag(rng, 8, 5);
        const auto b = random_bag(rng, 8, 5);
        const double ab = jdclones::cosine(a, b);
        const double ba = jdclones::cosine(b, a);
        if (ab != ba) r.fail("asymmetric at case " + std::to_string(i));
        if (!(ab >= 0.0 && ab <= 1.0)) r.fail("out of range at case " + std::to_string(i));
        if (!a.empty() && jdclones::cosine(a, a) != 1.0) r.fail("self-similarity not 1 at case " + std::to_string(i));
    }
    return r;
}

inline PropertyResult owner_scale_invariance(int cases, std::uint32_t seed) {
    PropertyResult r{"owner choice invariant under bag scaling"};
    std::mt19937 rng(seed);
    const auto lex = jdclones::Lexicon::defaults();
    for (const auto& w : stable_vocabulary()) {
        if (jdclones::normalize_tokens({w}, lex) != std::vector<std::string>{w}) r.fail("unstable word " + w);
    }
    jdclones::CloneRecord rec;
    rec.kind = jdclones::CloneKind::Return;
    for (int i = 0; i < cases; ++i, ++r.cases) {
        const auto s1 = random_bag(rng, 5, 3);
        const auto s2 = random_bag(rng, 5, 3);
        const auto t = random_bag(rng, 5, 3);
        rec.cloned_text = text_from_bag(t);
        const int k = std::uniform_int_distribution<int>(2, 5)(rng);
        const auto m1 = method_from_bag(s1, 1);
        const auto m2 = method_from_bag(s2, 1);
        const auto m1k = method_from_bag(s1, k);
        const auto m2k = method_from_bag(s2, k);
        rec.elem1_sig = m1.signature;
        rec.elem2_sig = m2.signature;
        const auto base = jdclones::analyze(rec, m1, m2, {}, lex);
        const auto scaled = jdclones::analyze(rec, m1k, m2k, {}, lex);
        if (base.owner != scaled.owner || base.severity != scaled.severity || base.m1_sim != scaled.m1_sim) {
            r.fail("scaling by " + std::to_string(k) + " changed the result at case " + std::to_string(i));
        }
    }
    return r;
}

inline PropertyResult analyze_totality(int cases, std::uint32_t seed) {
    PropertyResult r{"analyze assigns exactly one consistent severity"};
    std::mt19937 rng(seed);
    const auto lex = jdclones::Lexicon::defaults();
    const jdclones::CloneKind kinds[] = {jdclones::CloneKind::Whole, jdclones::CloneKind::FreeText,
                                         jdclones::CloneKind::Param, jdclones::CloneKind::Return,
                                         jdclones::CloneKind::Throws};
    for (int i = 0; i < cases; ++i, ++r.cases) {
        jdclones::AnalyzerConfig cfg;
        cfg.min_threshold = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
        cfg.high_threshold = std::uniform_real_distribution<double>(cfg.min_threshold + 0.01, 1.0)(rng);
        cfg.diff_threshold = std::uniform_real_distribution<double>(0.01, 0.5)(rng);
        auto m1 = method_from_bag(random_bag(rng, 4, 2), 1);
        auto m2 = method_from_bag(random_bag(rng, 4, 2), 1);
        if (std::bernoulli_distribution(0.3)(rng)) m2.simple_name = "other";
        jdclones::CloneRecord rec;
        rec.kind = kinds[std::uniform_int_distribution<int>(0, 4)(rng)];
        rec.cloned_text = text_from_bag(random_bag(rng, 5, 2));
        rec.elem1_sig = m1.signature;
        rec.elem2_sig = m2.signature;
        const auto res = jdclones::analyze(rec, m1, m2, cfg, lex);
        const auto where = " at case " + std::to_string(i);
        if (res.messages.empty()) r.fail("no messages" + where);
        if (res.owner) {
            if (res.severity != jdclones::Severity::High) r.fail("owner without high severity" + where);
            if (!(std::abs(*res.m1_sim - *res.m2_sim) > cfg.diff_threshold)) r.fail("owner without a gap" + where);
        }
        if (rec.kind != jdclones::CloneKind::Whole && !(res.m1_sim && res.m2_sim)) r.fail("missing sims" + where);

        // Expected branch from the rules, evaluated independently.
        jdclones::Severity expected;
        if (rec.kind == jdclones::CloneKind::Whole) {
            expected = m1.simple_name == m2.simple_name ? jdclones::Severity::Mild : jdclones::Severity::High;
        } else {
            const double a = *res.m1_sim;
            const double b = *res.m2_sim;
            if (a < cfg.min_threshold && b < cfg.min_threshold) {
                expected = jdclones::Severity::Mild;
            } else if (a > cfg.high_threshold && b > cfg.high_threshold) {
                expected = jdclones::Severity::Low;
            } else {
                expected = jdclones::Severity::High;
            }
        }
        if (res.severity != expected) r.fail("unexpected severity" + where);

        // Swapping the elements mirrors sims and keeps the same owner element.
        jdclones::CloneRecord swapped = rec;
        std::swap(swapped.elem1_sig, swapped.elem2_sig);
        const auto res2 = jdclones::analyze(swapped, m2, m1, cfg, lex);
        if (res2.severity != res.severity || res2.m1_sim != res.m2_sim || res2.m2_sim != res.m1_sim) {
            r.fail("swap asymmetry" + where);
        }
        if (res.owner.has_value() != res2.owner.has_value() || (res.owner && *res.owner == *res2.owner)) {
            r.fail("swap changed the owner element" + where);
        }
    }
    return r;
}

inline PropertyResult threshold_monotonicity(int cases, std::uint32_t seed) {
    PropertyResult r{"raising min-threshold never turns mild into low or high"};
    std::mt19937 rng(seed);
    const auto lex = jdclones::Lexicon::defaults();
    for (int i = 0; i < cases; ++i, ++r.cases) {
        const auto m1 = method_from_bag(random_bag(rng, 4, 2), 1);
        const auto m2 = method_from_bag(random_bag(rng, 4, 2), 1);
        jdclones::CloneRecord rec;
        rec.kind = jdclones::CloneKind::FreeText;
        rec.cloned_text = text_from_bag(random_bag(rng, 5, 2));
        jdclones::AnalyzerConfig lo;
        lo.min_threshold = std::uniform_real_distribution<double>(0.0, 0.4)(rng);
        jdclones::AnalyzerConfig hi = lo;
        hi.min_threshold = std::uniform_real_distribution<double>(lo.min_threshold, 0.49)(rng);
        const auto a = jdclones::analyze(rec, m1, m2, lo, lex);
        const auto b = jdclones::analyze(rec, m1, m2, hi, lex);
        if (a.severity == jdclones::Severity::Mild && b.severity != jdclones::Severity::Mild) {
            r.fail("mild lost at case " + std::to_string(i));
        }
    }
    return r;
}

// Generates corpora until at least `min_cases` whole records have been checked.
inline PropertyResult whole_never_legit(int min_cases, std::uint32_t seed) {
    PropertyResult r{"whole clones are legit only for two parameterless constructors"};
    ModelGenerator gen(seed);
    while (r.cases < min_cases) {
        const auto corpus = model_corpus(gen.generate(10, 8));
        for (const auto scope : {jdclones::Scope::IntraClass, jdclones::Scope::Hierarchy, jdclones::Scope::InterClass}) {
            const auto recs = jdclones::detect_clones(corpus, jdclones::pairs(corpus, scope, jdclones::Target::All),
                                                      scope, {});
            for (const auto& rec : recs) {
                if (rec.kind != jdclones::CloneKind::Whole) continue;
                ++r.cases;
                const auto& a = corpus.element(rec.first).method();
                const auto& b = corpus.element(rec.second).method();
                const bool exempt = a.is_constructor && b.is_constructor && a.params.empty() && b.params.empty();
                if (rec.legit != exempt) r.fail("whole record legit=" + std::to_string(rec.legit) + " for " +
                                                rec.elem1_sig + " / " + rec.elem2_sig);
            }
        }
    }
    return r;
}

inline PropertyResult scope_partition(int corpora, std::uint32_t seed) {
    PropertyResult r{"intra, hierarchy and inter pairs partition all member pairs"};
    ModelGenerator gen(seed);
    using Key = std::tuple<std::string, int, std::size_t, std::string, int, std::size_t>;
    const auto key = [](const jdclones::ElementPair& p) {
        return Key{p.first.class_fqn, static_cast<int>(p.first.kind), p.first.index,
                   p.second.class_fqn, static_cast<int>(p.second.kind), p.second.index};
    };
    for (int i = 0; i < corpora; ++i, ++r.cases) {
        const auto corpus = model_corpus(gen.generate(10, 8));
        std::set<Key> seen;
        std::size_t total = 0;
        for (const auto scope : {jdclones::Scope::IntraClass, jdclones::Scope::Hierarchy, jdclones::Scope::InterClass}) {
            for (const auto& p : jdclones::pairs(corpus, scope, jdclones::Target::All)) {
                ++total;
                if (!seen.insert(key(p)).second) r.fail("pair in two scopes in corpus " + std::to_string(i));
            }
        }
        // Every unordered pair of documented same-kind members.
        std::size_t methods = 0;
        std::size_t fields = 0;
        for (const auto& [_, c] : corpus.classes) {
            for (const auto& m : c.methods) methods += m.documented();
            for (const auto& f : c.fields) fields += f.documented();
        }
        if (total != methods * (methods - (methods > 0)) / 2 + fields * (fields - (fields > 0)) / 2) {
            r.fail("pair count mismatch in corpus " + std::to_string(i));
        }
    }
    return r;
}

inline std::vector<OracleRecord> to_oracle_records(const std::vector<jdclones::CloneRecord>& recs) {
    std::vector<OracleRecord> out;
    for (const auto& rec : recs) {
        out.push_back({rec.class1_fqn, rec.class2_fqn, rec.elem1_sig, rec.elem2_sig,
                       std::string(jdclones::to_string(rec.kind)), rec.cloned_text, rec.legit});
    }
    return out;
}

inline PropertyResult detector_matches_brute_force(int corpora, std::uint32_t seed, int* total_records = nullptr) {
    PropertyResult r{"detector output equals the brute-force comparator"};
    ModelGenerator gen(seed);
    int records = 0;
    for (int i = 0; i < corpora; ++i, ++r.cases) {
        const auto model = gen.generate(10, 8);
        const auto corpus = model_corpus(model);
        const std::pair<jdclones::Scope, oracle::Scope> scopes[] = {
            {jdclones::Scope::IntraClass, oracle::Scope::Intra},
            {jdclones::Scope::Hierarchy, oracle::Scope::Hierarchy},
            {jdclones::Scope::InterClass, oracle::Scope::Inter},
        };
        for (const auto& [lib_scope, oracle_scope] : scopes) {
            const auto got = to_oracle_records(
                jdclones::detect_clones(corpus, jdclones::pairs(corpus, lib_scope, jdclones::Target::All), lib_scope, {}));
            const auto want = oracle::find_clones(model, oracle_scope);
            records += static_cast<int>(want.size());
            if (got != want) {
                std::string msg = "corpus " + std::to_string(i) + " scope " + std::string(jdclones::to_string(lib_scope)) +
                                  ": got " + std::to_string(got.size()) + " records, want " + std::to_string(want.size());
                for (std::size_t k = 0; k < std::min(got.size(), want.size()); ++k) {
                    if (!(got[k] == want[k])) {
                        msg += "; first difference at " + std::to_string(k) + ": " + got[k].elem1 + " / " +
                               got[k].elem2 + " " + got[k].kind + " '" + got[k].text + "' vs " +
                               want[k].elem1 + " / " + want[k].elem2 + " " + want[k].kind + " '" +
                               want[k].text + "'";
                        break;
                    }
                }
                r.fail(msg);
            }
        }
    }
    if (total_records) *total_records = records;
    return r;
}

}  // namespace testing
