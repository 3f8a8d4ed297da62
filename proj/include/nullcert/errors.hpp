#pragma once

#include <stdexcept>
#include <string>

namespace nullcert {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text or document; the message names the position
// (line, polynomial index, term index) of the offending element.
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Operation refused because a configured size limit would be exceeded.
// The message carries the computed size and the limit.
struct Refusal : Error {
  explicit Refusal(const std::string& msg) : Error(msg) {}
};

// Arithmetic domain violation, e.g. division by zero.
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Mismatched dimensions between values (variable counts, vector lengths).
struct DimensionError : Error {
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

}  // namespace nullcert
