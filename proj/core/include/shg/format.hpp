#ifndef SHG_FORMAT_HPP
#define SHG_FORMAT_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "shg/structure.hpp"

namespace shg {

// SHG v1 structure file format. Canonical form (what emit_structure writes):
//
//   shg 1
//   points <n>
//   names <n whitespace-free labels>      (only when the structure has names)
//   conv <x> <y> : <z>=<p>/<q> ...        (n^2 lines, x-major then y; entries
//                                          sorted by z, zeros omitted,
//                                          rationals in lowest terms)
//
// '#' starts a comment anywhere; blank lines are ignored on parse. UTF-8,
// LF line endings. The parser accepts integer coefficients ("1" for "1/1"),
// entries in any order, and rejects missing or duplicate rows, coefficients
// outside [0, 1], rows not summing to exactly 1, and n = 0.

/// Parses SHG v1 text; throws ParseError with the offending line.
FiniteSemihypergroup parse_structure(std::string_view text);

/// Canonical SHG v1 text; parse_structure(emit_structure(k)) reproduces k
/// and emit is idempotent across the round trip.
std::string emit_structure(const FiniteSemihypergroup& k);

/// 16 hex digits, FNV-1a over the canonical text. Identifies a structure
/// in reports.
std::string structure_digest(const FiniteSemihypergroup& k);

/// Reads and parses a file; throws Error for unreadable paths, ParseError
/// for malformed contents.
FiniteSemihypergroup load_structure_file(const std::filesystem::path& path);

void save_structure_file(const std::filesystem::path& path, const FiniteSemihypergroup& k);

}  // namespace shg

#endif  // SHG_FORMAT_HPP
