#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "matclose/errors.hpp"

namespace matclose::detail {

/// Whitespace-skipping scanner shared by the ring-spec, element and
/// expression parsers. Positions are byte offsets into the original text.
class Cursor {
 public:
  explicit Cursor(std::string_view text, std::size_t pos = 0) : text_(text), pos_(pos) {}

  std::size_t pos() const { return pos_; }
  void seek(std::size_t pos) { pos_ = pos; }
  std::string_view text() const { return text_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::int64_t parse_unsigned() {
    skip_ws();
    std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      int d = text_[pos_] - '0';
      if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10) fail_at("integer overflow", start);
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }

  std::int64_t parse_signed() {
    bool negative = accept('-');
    std::int64_t v = parse_unsigned();
    return negative ? -v : v;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& message) {
    skip_ws();
    throw ParseError(message, pos_);
  }

  [[noreturn]] static void fail_at(const std::string& message, std::size_t pos) {
    throw ParseError(message, pos);
  }

 private:
  std::string_view text_;
  std::size_t pos_;
};

}  // namespace matclose::detail
