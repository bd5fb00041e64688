// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "jdclones/corpus.hpp"
#include "jdclones/diagnostics.hpp"
#include "jdclones/extractor.hpp"

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace testing {

inline std::filesystem::path fixtures() { return std::filesystem::path(JDCLONES_FIXTURES_DIR); }

// Builds a corpus from in-memory sources: {path, source} pairs.
inline jdclones::Corpus corpus_of(const std::vector<std::pair<std::string, std::string>>& files) {
    jdclones::Diagnostics diag;
    jdclones::Corpus corpus;
    for (const auto& [path, src] : files) {
        jdclones::add_classes(corpus, jdclones::extract_classes(src, path, diag), diag);
    }
    corpus.source_files = files.size();
    return jdclones::resolve_supertypes(std::move(corpus), diag);
}

inline jdclones::Corpus corpus_at(const std::filesystem::path& root) {
    jdclones::Diagnostics diag;
    return jdclones::resolve_supertypes(jdclones::build_corpus({root}, diag), diag);
}

// A fresh, empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("jdclones_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace testing
