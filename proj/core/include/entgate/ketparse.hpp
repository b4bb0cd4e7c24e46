#pragma once

// Bra-ket text front-end.
//
//   document := [ 'qubits' ':' uint ] state
//   state    := [ '-' ] term { ( '+' | '-' ) term }
//   term     := [ coeff [ '*' ] ] ket
//   coeff    := factor { ( '*' | '/' ) factor }
//   factor   := uint | 'sqrt(' uint ')' | 'i' | '(' coeff { ( '+' | '-' ) coeff } ')'
//   ket      := '|' ( '0' | '1' )+ '>'
//
// Whitespace is ignored between tokens and '#' starts a comment that runs to
// the end of the line. Like terms are merged and cancelled terms dropped.

#include <optional>
#include <string>
#include <string_view>

#include "entgate/state.hpp"

namespace entgate {

struct StateDocument {
  std::string source;
  SparseState parsed;
  std::optional<int> declared_qubits;
};

/// Throws ParseError (kSyntaxError, kWidthMismatch, kWidthOverflow,
/// kEmptyState, kDivisionByZero, kDivisionUnsupported, kRadicandOverflow).
StateDocument parse_document(std::string_view text);

SparseState parse_state(std::string_view text);

/// Canonical text; parse_state(render_state(s)) == s.
std::string render_state(const SparseState& state);

}  // namespace entgate
