#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gecstrat {

// Data-level failure: malformed input, violated precondition, count mismatch.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `line` is 1-based; 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message, const std::string& source = {});

  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

  // Same error attributed to a named input, rendered "source:line: detail".
  ParseError in_source(const std::string& source) const { return ParseError(line_, detail_, source); }

 private:
  std::size_t line_;
  std::string detail_;
};

// Missing or unreadable files and directories.
class IoError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration: bad flag values, config keys, endpoint setup.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace gecstrat
