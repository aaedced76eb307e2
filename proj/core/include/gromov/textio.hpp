#pragma once

#include <cstdio>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace gromov {

// All real-valued output goes through this: 12 significant digits, %g style.
inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<std::string> split_whitespace(std::string_view text);

// Strict numeric token parsing; throws ParseError on trailing garbage.
double parse_real(const std::string& token);
long long parse_integer(const std::string& token);

std::string read_text_file(const std::filesystem::path& path);

// Write via a sibling temp file and rename, so readers never observe a
// half-written report.
void write_text_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace gromov
