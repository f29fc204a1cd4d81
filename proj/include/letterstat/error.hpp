#pragma once

#include <stdexcept>
#include <string>

namespace letterstat {

/// Raised for invalid data: malformed inputs, mismatched alphabets, empty
/// tables where a statistic needs observations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed alphabet document. `line()` is 0 when the problem is not tied
/// to a particular line (e.g. a missing `letters:` entry).
class AlphabetError : public Error {
 public:
  AlphabetError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace letterstat
