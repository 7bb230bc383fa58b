#pragma once

// Shared pieces of the line-oriented text formats.

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "../error.hpp"

namespace dirkit::io {

/// 17 significant digits: enough for any binary64 to survive a round trip.
inline std::string formatNumber(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(n));
}

inline std::string escapeInfo(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '\\') out += "\\\\";
    else if (c == '\n') out += "\\n";
    else out += c;
  }
  return out;
}

inline std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void writeFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("short write to '" + path + "'");
}

/// Strict reader over LF-terminated lines. Every failure names the source
/// and the 1-based line number.
class LineReader {
 public:
  LineReader(std::string source, std::string text) : source_(std::move(source)) {
    std::size_t start = 0;
    while (start < text.size()) {
      const std::size_t end = text.find('\n', start);
      if (end == std::string::npos) {
        lines_.push_back(text.substr(start));
        missingFinalNewline_ = true;
        break;
      }
      lines_.push_back(text.substr(start, end - start));
      start = end + 1;
    }
  }

  /// Next line, or an error if the input ended early.
  const std::string& next(std::string_view expecting) {
    if (pos_ >= lines_.size()) {
      fail(lines_.size() + 1, "unexpected end of file, expected " + std::string(expecting));
    }
    if (pos_ + 1 == lines_.size() && missingFinalNewline_) {
      fail(pos_ + 1, "last line is not LF-terminated");
    }
    return lines_[pos_++];
  }

  std::size_t line() const noexcept { return pos_; }

  void expectEnd() {
    if (pos_ < lines_.size()) fail(pos_ + 1, "unexpected trailing content");
  }

  [[noreturn]] void fail(std::size_t line, const std::string& what) const {
    throw ParseError(source_, line, what);
  }
  [[noreturn]] void fail(const std::string& what) const { fail(pos_, what); }

  /// Splits the current line on single spaces; empty fields are an error.
  std::vector<std::string_view> fields(const std::string& line) const {
    std::vector<std::string_view> out;
    std::string_view rest = line;
    if (rest.empty()) fail("empty line");
    while (true) {
      const std::size_t sp = rest.find(' ');
      const std::string_view tok = rest.substr(0, sp);
      if (tok.empty()) fail("malformed spacing");
      out.push_back(tok);
      if (sp == std::string_view::npos) break;
      rest.remove_prefix(sp + 1);
    }
    return out;
  }

  /// Fields of a line `<keyword> v1 ... vN`, keyword checked, N enforced.
  std::vector<std::string_view> record(const std::string& line, std::string_view keyword,
                                       std::size_t count) const {
    auto f = fields(line);
    if (f[0] != keyword) {
      fail("expected '" + std::string(keyword) + "' record, found '" + std::string(f[0]) + "'");
    }
    if (f.size() - 1 != count) {
      fail("'" + std::string(keyword) + "' record has " + std::to_string(f.size() - 1) +
           " values, expected " + std::to_string(count));
    }
    f.erase(f.begin());
    return f;
  }

  double number(std::string_view tok) const {
    double v = 0.0;
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
      fail("invalid number '" + std::string(tok) + "'");
    }
    return v;
  }

  std::size_t count(std::string_view tok) const {
    std::size_t v = 0;
    const auto* last = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(tok.data(), last, v);
    if (ec != std::errc() || ptr != last) fail("invalid count '" + std::string(tok) + "'");
    return v;
  }

  std::vector<double> numbers(const std::string& line, std::string_view keyword,
                              std::size_t count) const {
    const auto f = record(line, keyword, count);
    std::vector<double> out;
    out.reserve(f.size());
    for (auto tok : f) out.push_back(number(tok));
    return out;
  }

  std::string info(const std::string& line) const {
    constexpr std::string_view prefix = "info ";
    if (line.compare(0, prefix.size(), prefix) != 0) fail("expected 'info' record");
    std::string out;
    for (std::size_t i = prefix.size(); i < line.size(); ++i) {
      if (line[i] != '\\') {
        out += line[i];
        continue;
      }
      if (i + 1 >= line.size()) fail("dangling escape in info");
      const char e = line[++i];
      if (e == 'n') out += '\n';
      else if (e == '\\') out += '\\';
      else fail(std::string("unknown escape '\\") + e + "' in info");
    }
    return out;
  }

  /// Expects an exact line such as "DIRD 1".
  void magic(std::string_view expected) {
    const auto& l = next(expected);
    if (l != expected) fail("bad magic, expected '" + std::string(expected) + "'");
  }

 private:
  std::string source_;
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
  bool missingFinalNewline_ = false;
};

inline void appendRecord(std::string& out, std::string_view keyword,
                         const std::vector<double>& values) {
  out += keyword;
  for (double v : values) {
    out += ' ';
    out += formatNumber(v);
  }
  out += '\n';
}

}  // namespace dirkit::io
