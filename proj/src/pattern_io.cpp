#include "grand/pattern_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace grand {

PatternParseError::PatternParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::string format_pattern(const ErrorPattern& e) {
  std::string s;
  for (std::size_t i = 0; i < e.support().size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(e.support()[i]);
  }
  return s;
}

ErrorPattern parse_pattern(const std::string& line, int length) {
  std::vector<int> support;
  const char* p = line.data();
  const char* end = p + line.size();
  if (p != end && end[-1] == '\r') --end;
  while (p != end) {
    int value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || next == p)
      throw std::invalid_argument("expected an index in '" + line + "'");
    support.push_back(value);
    p = next;
    if (p != end) {
      if (*p != ' ' || p + 1 == end)
        throw std::invalid_argument("indices must be separated by single spaces");
      ++p;
    }
  }
  return ErrorPattern(length, std::move(support));
}

void write_patterns(std::ostream& out, std::span<const ErrorPattern> patterns) {
  for (const auto& e : patterns) out << format_pattern(e) << '\n';
}

void write_patterns(const std::filesystem::path& path, std::span<const ErrorPattern> patterns) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_patterns(out, patterns);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<ErrorPattern> read_patterns(std::istream& in, int length) {
  std::vector<ErrorPattern> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    try {
      out.push_back(parse_pattern(line, length));
    } catch (const std::invalid_argument& e) {
      throw PatternParseError(line_no, e.what());
    }
  }
  return out;
}

std::vector<ErrorPattern> read_patterns(const std::filesystem::path& path, int length) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_patterns(in, length);
}

}  // namespace grand
