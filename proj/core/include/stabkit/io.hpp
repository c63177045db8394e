#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "stabkit/code.hpp"

namespace stabkit {

// On-disk code format (ASCII, LF line endings, '#' starts a comment):
//
//   p <prime>                     exactly once, first significant line
//   n <count>                     exactly once, second
//   g <2n integers in [0, p)>     one generator, x block then z block
//   P <n letters from I X Z Y>    same, letter form; valid only for p = 2
//
// Qudit indices in set specs are 1-based: "1,3,5", ranges "2-4", or the
// literal "empty".

/// Parse a code file. Goes through StabilizerCode::make, so isotropy is
/// enforced at parse time; a NotIsotropicError from here carries the two
/// offending line numbers.
StabilizerCode parse_code(std::istream& in, Backend backend = Backend::Auto);
StabilizerCode parse_code(std::string_view text, Backend backend = Backend::Auto);

/// Header plus the canonical RREF basis as `g` lines, each annotated with
/// a `# P ...` comment when p = 2. Deterministic; ends with a newline.
/// parse_code(serialize_code(c)) == c exactly.
std::string serialize_code(const StabilizerCode& code);

QubitSet parse_qubit_set(std::string_view text, std::size_t n);

/// 1-based comma list ("1,3,5"), or "empty".
std::string format_qubit_set(const QubitSet& s);

/// Accepts either a `g`-style row of 2n integers or (p = 2) a Pauli
/// string.
PauliVector parse_pauli_vector(std::string_view text, Prime p, std::size_t n);

/// Flat integer row "x... z..." separated by single spaces.
std::string format_flat_row(const PauliVector& v);

}  // namespace stabkit
