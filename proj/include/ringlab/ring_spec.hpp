#pragma once

// Ring description language (whitespace-insensitive):
//
//   spec := term { "x" term }                      product of the terms
//   term := "Z" | "Zn(" nat ")" | "Mat(" nat "," spec ")"
//         | "Tri(" nat "," spec ")" | "Zi7" | "Qi7"
//         | "SkewS(" nat "," nat ")"                max degree, coefficient height

#include <string>
#include <string_view>

#include "ringlab/ring_descriptor.hpp"

namespace ringlab {

/// Throws ParseError (byte offset + expected tokens) for text outside the
/// grammar and RingError(SemanticError) for well-formed text naming an
/// invalid ring such as Zn(1) or Mat(0, Z).
RingDescriptor parse_ring_spec(std::string_view text);

/// Grammar summary printed by the CLI on usage errors.
const std::string& ring_spec_grammar();

}  // namespace ringlab
