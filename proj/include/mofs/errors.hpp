#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mofs {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (size mismatch, bad permutation...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configuration value is out of its admissible domain.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A name (criteria set, objective tag, operator) could not be resolved.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Refusal to run an exhaustive computation above its size guard.
class SizeError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; carries the 1-based line number where parsing failed.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mofs
