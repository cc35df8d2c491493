#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "grand/pattern.hpp"

namespace grand {

// Pattern text format: one pattern per line, ascending support indices
// separated by single spaces. An empty line is the all-zero pattern.

class PatternParseError : public std::runtime_error {
 public:
  PatternParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

std::string format_pattern(const ErrorPattern& e);
ErrorPattern parse_pattern(const std::string& line, int length);

void write_patterns(std::ostream& out, std::span<const ErrorPattern> patterns);
void write_patterns(const std::filesystem::path& path, std::span<const ErrorPattern> patterns);

std::vector<ErrorPattern> read_patterns(std::istream& in, int length);
std::vector<ErrorPattern> read_patterns(const std::filesystem::path& path, int length);

}  // namespace grand
