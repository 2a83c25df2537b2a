#pragma once

#include <stdexcept>
#include <string>

namespace srlu {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text: unbalanced brackets, ragged columns, bad numbers.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Structurally well-formed data violating a data-model invariant.
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Filesystem failures (missing file, unwritable path).
class IoError : public Error {
public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace srlu
