#include "morrey/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "morrey/error.hpp"

namespace morrey {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

template <typename T>
bool parse_number(std::string_view token, T& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && first != last;
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

SparseSequence parse_sequence(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t dim = 0;
  bool have_header = false;
  SparseSequence::Map entries;
  std::map<LatticePoint, std::size_t> seen_at;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "d") {
        throw ParseError(line_no, "expected header 'd <dim>'");
      }
      if (!parse_number(tokens[1], dim) || dim == 0) {
        throw ParseError(line_no, "dimension must be a positive integer, got '" + std::string(tokens[1]) + "'");
      }
      have_header = true;
    } else {
      if (tokens.size() != dim + 1) {
        throw ParseError(line_no, "expected " + std::to_string(dim) + " coordinates and a value, got " +
                                      std::to_string(tokens.size()) + " tokens");
      }
      std::vector<Coord> coords(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        if (!parse_number(tokens[j], coords[j])) {
          throw ParseError(line_no, "coordinate " + std::to_string(j + 1) + " is not an integer: '" +
                                        std::string(tokens[j]) + "'");
        }
      }
      double value = 0.0;
      if (!parse_number(tokens[dim], value) || !std::isfinite(value)) {
        throw ParseError(line_no, "value is not a finite real: '" + std::string(tokens[dim]) + "'");
      }
      if (value == 0.0) throw ParseError(line_no, "zero values are not allowed (omit the point)");
      LatticePoint k(std::move(coords));
      if (auto it = seen_at.find(k); it != seen_at.end()) {
        throw ParseError(line_no, "duplicate point (first given on line " + std::to_string(it->second) + ")");
      }
      seen_at.emplace(k, line_no);
      entries.emplace(std::move(k), value);
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(0, "missing header 'd <dim>'");
  return SparseSequence(dim, std::move(entries));
}

std::string serialize_sequence(const SparseSequence& x) {
  std::ostringstream out;
  out << "d " << x.dim() << '\n';
  for (const auto& [k, v] : x.entries()) {
    for (Coord c : k.coords()) out << c << ' ';
    out << format_real(v) << '\n';
  }
  return out.str();
}

SparseSequence read_sequence_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open sequence file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_sequence(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(0, path.string() + ": " + e.what());
  }
}

void write_sequence_file(const std::filesystem::path& path, const SparseSequence& x) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write sequence file '" + path.string() + "'");
  out << serialize_sequence(x);
}

}  // namespace morrey
