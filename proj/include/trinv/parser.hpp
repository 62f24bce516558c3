#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trinv/polymap.hpp"

namespace trinv {

// Which identifiers a polynomial expression may use besides x, y, z, w.
// Decomposition parameters are written in abstract slots: an eta uses
// (x, y, t) with t (or z) at the z position, a gamma uses g1..g4 (or
// x..w) at the four positions.
enum class SlotContext { none, eta, gamma };

// Grammar, binding ^ tighter than * tighter than +:
//   expr   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' integer)?
//   atom   := '(' expr ')' | variable | constant
//   constant := '0' | '1' | 'g' ('^' integer)?   -- g only over GF(2^m), m >= 2
// Whitespace is insignificant; juxtaposition is not multiplication.
Polynomial parse_poly(std::string_view text, const Field& f,
                      SlotContext context = SlotContext::none);

// "gf2" or "gf2^m:bits" with the modulus in binary, most significant bit
// first (the tag FieldSpec::tag prints).
Field parse_field_tag(std::string_view tag);

// Raw map source: assignments "var -> expr" separated by ';' or newlines,
// '#' starts a comment running to the end of the line, and an optional
// "field: <tag>" entry names the coefficient field.
struct MapSource {
    std::string field_tag;  // empty when the source has no field entry
    std::vector<std::pair<std::string, std::string>> assignments;
};
MapSource read_map_source(std::string_view text);

// fallback_field applies when the source has no field entry. All four
// variables must be assigned exactly once.
PolyMap parse_map(const MapSource& source, const Field& fallback_field);
PolyMap parse_map(std::string_view text, const Field& fallback_field);

}  // namespace trinv
