#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "gdecomp/error.hpp"

namespace gdecomp::detail {

/// Line-oriented cursor over a text file, tracking 1-based line numbers.
class TextReader {
 public:
  explicit TextReader(std::string_view text) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      auto line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines_.push_back(line);
      start = end + 1;
    }
    // A trailing newline leaves one empty pseudo-line; trailing blank lines
    // are not content.
    while (!lines_.empty() && trim(lines_.back()).empty()) lines_.pop_back();
  }

  bool done() const noexcept { return next_ >= lines_.size(); }
  int line_number() const noexcept { return static_cast<int>(next_); }

  std::string_view next(const char* expected) {
    if (done())
      throw ParseError(static_cast<int>(lines_.size()) + 1,
                       std::string("unexpected end of input, expected ") + expected);
    return trim(lines_[next_++]);
  }

  std::string_view peek() const { return done() ? std::string_view{} : trim(lines_[next_]); }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_number(), what); }

  /// Whitespace-separated integers of the line most recently returned.
  std::vector<long long> integers(std::string_view line) const {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      long long value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
      if (ec != std::errc{} || ptr != line.data() + j)
        fail("expected an integer, found '" + std::string(line.substr(i, j - i)) + "'");
      out.push_back(value);
      i = j;
    }
    return out;
  }

  std::vector<long long> integers(std::string_view line, std::size_t count) const {
    auto v = integers(line);
    if (v.size() != count)
      fail("expected " + std::to_string(count) + " integers, found " + std::to_string(v.size()));
    return v;
  }

  /// "keyword <int>..." with the given number of integers.
  std::vector<long long> keyword(std::string_view line, std::string_view word,
                                 std::size_t count) const {
    if (line.substr(0, word.size()) != word ||
        (line.size() > word.size() && line[word.size()] != ' ' && line[word.size()] != '\t'))
      fail("expected '" + std::string(word) + "'");
    return integers(line.substr(word.size()), count);
  }

  static std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  }

 private:
  std::vector<std::string_view> lines_;
  std::size_t next_ = 0;
};

}  // namespace gdecomp::detail
