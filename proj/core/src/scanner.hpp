#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "operad_gsb/error.hpp"

namespace operad_gsb::detail {

// Cursor over one line of text that reports errors with 1-based columns.
// `column_offset` shifts reported columns when the text is a slice of a
// longer line.
class Scanner {
 public:
  Scanner(std::string_view text, std::size_t line = 0, std::size_t column_offset = 0)
      : text_(text), line_(line), offset_(column_offset) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string_view identifier() {
    skip_space();
    auto const start = pos_;
    auto const is_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto const is_rest = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (pos_ >= text_.size() || !is_start(text_[pos_])) fail("expected a symbol name");
    ++pos_;
    while (pos_ < text_.size() && is_rest(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::string_view digits() {
    skip_space();
    auto const start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  std::size_t column() const { return offset_ + pos_ + 1; }
  std::size_t position() const { return pos_; }
  void seek(std::size_t pos) { pos_ = pos; }

  [[noreturn]] void fail(std::string const& what) const { throw ParseError(what, line_, column()); }
  [[noreturn]] void fail_at(std::string const& what, std::size_t pos) const {
    throw ParseError(what, line_, offset_ + pos + 1);
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace operad_gsb::detail
