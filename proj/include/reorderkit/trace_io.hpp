#pragma once

// Plain-text trace format: whitespace-separated non-negative integers,
// '#' starts a comment that runs to end of line, blank lines are ignored.
// Packet-ID files normally hold one ID per line.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "reorderkit/errors.hpp"

namespace reorderkit {

/// Malformed trace text. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}
  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

struct TraceFile {
  std::string path;
  std::vector<std::uint64_t> values;
};

std::vector<std::uint64_t> parse_trace(std::istream& in, const std::string& source = "<input>");

/// Reads a file, or standard input when `path` is "-".
TraceFile read_trace(const std::string& path, std::istream& stdin_stream);

/// Parses an inline argument such as "4 3 2 1" or "4,3,2,1".
std::vector<std::uint64_t> parse_inline(const std::string& text);

/// True when `text` contains only digits, commas and whitespace, and at least one digit.
bool looks_inline(const std::string& text);

}  // namespace reorderkit
