// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace frontier {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed scene/depth/config text. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class InvalidPoseError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class GenerationError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace frontier
