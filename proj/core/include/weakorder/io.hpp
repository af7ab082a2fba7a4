#pragma once

// ElementFile: the JSON interchange format for lattice elements.
//
//   {"ambient": 2, "frame": [["0","1"],["-1","0"]]}
//   {"ambient": 3, "frame": [...], "reference": [...]}
//
// Integers are decimal strings (plain JSON integers are accepted on input).
// "reference" defaults to the standard frame (-e_1, ..., -e_d) and is only
// written when it differs from it. Output is always canonical, so equal
// elements serialize to identical bytes.

#include "weakorder/lattice.hpp"

#include <string>
#include <string_view>

namespace weakorder {

/// Throws ParseError for malformed JSON and InvalidFrame (message naming the
/// offending rows) for frames violating their invariants.
LatticeElement parse_element(std::string_view json_text);
std::string serialize_element(const LatticeElement& x);

LatticeElement read_element_file(const std::string& path);

/// Comma-separated decimal integers, e.g. "1,-2,0".
Ray parse_ray(std::string_view text);

/// JSON array of integer strings.
std::string serialize_vector(const IntVector& v);
/// JSON array of "p/q" strings.
std::string serialize_vector(const Vector& v);

}  // namespace weakorder
