#pragma once

#include <stdexcept>
#include <string>

namespace pqd {

// Input outside the valid domain of an operation (out-of-bounds point, bad shape).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed external text: LLM completions, judge transcripts, files.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::string raw = {})
      : std::runtime_error(what), raw_(std::move(raw)) {}
  const std::string& raw() const noexcept { return raw_; }

 private:
  std::string raw_;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pqd
