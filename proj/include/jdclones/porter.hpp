// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

namespace jdclones {

/**
 * Porter stemmer, following the reference implementation distributed by
 * Martin Porter (including its small departures from the 1980 paper, such as
 * `-logi` -> `-log` and leaving words of one or two letters untouched).
 *
 * Input must be lowercase ASCII; other bytes are passed through unchanged.
 */
[[nodiscard]] std::string porter_stem(std::string_view word);

}  // namespace jdclones
