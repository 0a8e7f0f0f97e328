#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace operad_gsb {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `line` and `column` are 1-based; line is 0 when the
// input was a single expression rather than a file.
class ParseError : public Error {
 public:
  ParseError(std::string const& what, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// normal_form exceeded its configured number of elementary reductions.
class StepLimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace operad_gsb
