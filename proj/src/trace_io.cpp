#include "reorderkit/trace_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>

namespace reorderkit {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Splits on whitespace (and on commas if `commas`), converting each token.
void parse_tokens(const std::string& text, bool commas, const std::string& source,
                  std::size_t line, std::vector<std::uint64_t>& out) {
  std::size_t pos = 0;
  const auto separator = [commas](char c) { return is_space(c) || (commas && c == ','); };
  while (pos < text.size()) {
    while (pos < text.size() && separator(text[pos])) ++pos;
    if (pos == text.size()) break;
    auto end = pos;
    while (end < text.size() && !separator(text[end])) ++end;
    const auto token = text.substr(pos, end - pos);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) {
      throw ParseError(source, line, "integer out of range: '" + token + "'");
    }
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError(source, line, "expected a non-negative integer, got '" + token + "'");
    }
    out.push_back(value);
    pos = end;
  }
}

}  // namespace

std::vector<std::uint64_t> parse_trace(std::istream& in, const std::string& source) {
  std::vector<std::uint64_t> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    parse_tokens(line, false, source, line_no, values);
  }
  return values;
}

TraceFile read_trace(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") return {path, parse_trace(stdin_stream, "<stdin>")};
  std::ifstream file(path);
  if (!file) throw ParseError(path, 0, "cannot open file");
  return {path, parse_trace(file, path)};
}

std::vector<std::uint64_t> parse_inline(const std::string& text) {
  std::vector<std::uint64_t> values;
  parse_tokens(text, true, "<argument>", 1, values);
  return values;
}

bool looks_inline(const std::string& text) {
  bool digit = false;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if (c != ',' && !is_space(c)) {
      return false;
    }
  }
  return digit;
}

}  // namespace reorderkit
