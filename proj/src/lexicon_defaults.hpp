// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

// Contents of the data/ files, embedded at build time.
namespace jdclones::defaults {

std::string_view stopwords_text();
std::string_view abbreviations_text();
std::string_view generic_throws_text();

}  // namespace jdclones::defaults
