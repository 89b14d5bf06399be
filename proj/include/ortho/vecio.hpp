#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "ortho/intvec.hpp"

namespace ortho {

// Text vector sets: one vector per line, whitespace-separated signed decimal
// integers. Blank lines and lines starting with '#' are skipped; every vector
// line must have the same arity. Errors carry the 1-based line number in
// Error::first().
std::vector<IntVector> parse_vectors(std::istream& in);
std::vector<IntVector> parse_vector_text(std::string_view text);
std::vector<IntVector> parse_vector_file(const std::filesystem::path& path);

// A single vector from a string such as "1 -3 5" (commas are accepted too).
IntVector parse_vector_arg(std::string_view text);

std::string format_vector(const IntVector& v);
std::string format_vectors(const std::vector<IntVector>& vs);

}  // namespace ortho
