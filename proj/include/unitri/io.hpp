#ifndef UNITRI_IO_HPP
#define UNITRI_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unitri/filtration.hpp"

namespace unitri {

// Endomorphism files:
//
//   # comment
//   n = 2
//   level = 1
//   1: -> d1
//   2: -> d2
//   2:1 -> x1 d2
//
// `n` and `level` come first; then exactly one record `j:α -> derivation` per
// basis element of N_level, in any order.

TruncatedLieMap parse_endomorphism(std::string_view text);
std::string format_endomorphism(const TruncatedLieMap& map);

/// Spanner files: optional `n = N` line, then one derivation per line.
/// Without a header, n is the largest index mentioned (at least 2).
SpannedSubalgebra parse_spanners(std::string_view text, std::optional<std::size_t> n = std::nullopt);
std::string format_spanners(const SpannedSubalgebra& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace unitri

#endif  // UNITRI_IO_HPP
