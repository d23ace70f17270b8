#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "morrey/lattice.hpp"

namespace morrey {

/// Parses the sequence file format:
///
///   # comment lines start with '#', blank lines are skipped
///   d <dim>
///   <k_1> ... <k_dim> <value>     one support point per line
///
/// Coordinates are integers, values nonzero finite reals. Throws ParseError
/// (message prefixed "line <n>: ") on a missing header, wrong arity, a bad
/// token, a zero value or a repeated point.
SparseSequence parse_sequence(std::string_view text);

/// Inverse of parse_sequence; values use the shortest round-trip decimal form.
std::string serialize_sequence(const SparseSequence& x);

SparseSequence read_sequence_file(const std::filesystem::path& path);
void write_sequence_file(const std::filesystem::path& path, const SparseSequence& x);

/// Shortest decimal string that parses back to exactly v.
std::string format_real(double v);

}  // namespace morrey
