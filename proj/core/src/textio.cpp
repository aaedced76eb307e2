#include "gromov/textio.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gromov/errors.hpp"

namespace gromov {

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

double parse_real(const std::string& token) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(token.c_str(), &end);
  if (end == token.c_str() || *end != '\0' || errno == ERANGE) {
    throw ParseError("ParseError bad real '" + token + "'");
  }
  return v;
}

long long parse_integer(const std::string& token) {
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(token.c_str(), &end, 10);
  if (end == token.c_str() || *end != '\0' || errno == ERANGE) {
    throw ParseError("ParseError bad integer '" + token + "'");
  }
  return v;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FileError(tmp.string(), "cannot open for writing");
    out << content;
    if (!out) throw FileError(tmp.string(), "write failed");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace gromov
