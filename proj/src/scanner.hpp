#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "lvf/errors.hpp"

namespace lvf::detail {

/// Minimal cursor over canonical text forms.
class Scanner {
public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string_view until(char c) {
    const auto end = s_.find(c, pos_);
    if (end == std::string_view::npos) fail(std::string("missing '") + c + "'");
    std::string_view out = s_.substr(pos_, end - pos_);
    pos_ = end + 1;
    return out;
  }
  std::string_view number_literal() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) {
      ++pos_;
    }
    return s_.substr(start, pos_ - start);
  }
  std::uint32_t exponent() {
    std::string_view lit = number_literal();
    if (lit.empty() || lit.find('/') != std::string_view::npos) fail("bad exponent");
    return static_cast<std::uint32_t>(std::stoul(std::string(lit)));
  }
  /// Signed decimal integer.
  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start || !std::isdigit(static_cast<unsigned char>(s_[pos_ - 1]))) fail("expected an integer");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace lvf::detail
