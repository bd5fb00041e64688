// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

#include "jdclones/diagnostics.hpp"

namespace jdclones {

void Diagnostics::warn(std::string where, std::string message) {
    warnings_.push_back(Warning{std::move(where), std::move(message)});
}

void Diagnostics::merge(const Diagnostics& other) {
    warnings_.insert(warnings_.end(), other.warnings_.begin(), other.warnings_.end());
}

std::string to_string(const Warning& w) {
    if (w.where.empty()) {
        return "warning: " + w.message;
    }
    return "warning: " + w.where + ": " + w.message;
}

}  // namespace jdclones
