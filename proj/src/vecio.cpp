#include "ortho/vecio.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ortho {

namespace {

Int parse_int(std::string_view token, std::size_t line) {
  Int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw Error(Errc::Parse, "line " + std::to_string(line) + ": integer out of range: '" + std::string(token) + "'",
                line);
  }
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(Errc::Parse, "line " + std::to_string(line) + ": not an integer: '" + std::string(token) + "'", line);
  }
  return value;
}

std::vector<Int> parse_line(std::string_view text, std::size_t line) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != ',') ++end;
    out.push_back(parse_int(text.substr(pos, end - pos), line));
    pos = end;
  }
  return out;
}

}  // namespace

std::vector<IntVector> parse_vectors(std::istream& in) {
  std::vector<IntVector> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    const auto start = text.find_first_not_of(" \t\r");
    if (start == std::string::npos || text[start] == '#') continue;
    auto coords = parse_line(text, line);
    if (!out.empty() && coords.size() != out.front().dim()) {
      throw Error(Errc::Parse, "line " + std::to_string(line) + ": expected " + std::to_string(out.front().dim()) +
                                   " integers, found " + std::to_string(coords.size()), line);
    }
    out.emplace_back(std::move(coords));
  }
  if (out.empty()) throw Error(Errc::EmptyInput, "no vectors in input");
  return out;
}

std::vector<IntVector> parse_vector_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_vectors(in);
}

std::vector<IntVector> parse_vector_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  return parse_vectors(in);
}

IntVector parse_vector_arg(std::string_view text) {
  auto coords = parse_line(text, 1);
  if (coords.empty()) throw Error(Errc::Parse, "empty vector argument", 1);
  return IntVector(std::move(coords));
}

std::string format_vector(const IntVector& v) {
  std::string s;
  for (std::size_t j = 0; j < v.dim(); ++j) {
    if (j) s += ' ';
    s += std::to_string(v[j]);
  }
  return s;
}

std::string format_vectors(const std::vector<IntVector>& vs) {
  std::string s;
  for (const auto& v : vs) s += format_vector(v) + '\n';
  return s;
}

}  // namespace ortho
