// Copyright 2026 The jdclones Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace jdclones {

/**
 * A recoverable problem found while processing input.
 *
 * Warnings never stop a run; they are collected and printed to stderr by the
 * command-line tool once the pipeline finishes.
 */
struct Warning {
    std::string where;    // file path or element, may be empty
    std::string message;
};

class Diagnostics {
public:
    void warn(std::string where, std::string message);
    void merge(const Diagnostics& other);

    [[nodiscard]] const std::vector<Warning>& warnings() const { return warnings_; }
    [[nodiscard]] bool empty() const { return warnings_.empty(); }
    [[nodiscard]] std::size_t size() const { return warnings_.size(); }

private:
    std::vector<Warning> warnings_;
};

[[nodiscard]] std::string to_string(const Warning& w);

// Unrecoverable input/output failure (unreadable root, unwritable output).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid user-supplied configuration (bad threshold, malformed regex, ...).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace jdclones
