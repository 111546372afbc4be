// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sis-sim contributors

#pragma once

#include <stdexcept>
#include <string>

namespace sis {

// Raised for malformed configuration, files, or argument contracts.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a computation produces non-finite or degenerate values.
class NumericError : public std::runtime_error {
  public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace sis
