#pragma once

// JSON and plain-text renderings of verdicts and explanations. The JSON field
// names (kind, method, m, constant_qubits, structures, witness, reason) are a
// stable interface shared by the CLI and any service wrapper.

#include <string>

#include "entgate/criterion.hpp"

namespace entgate {

std::string verdict_to_json(const Verdict& v, int indent = 2);
std::string verdict_to_text(const Verdict& v);

std::string explanation_to_json(const Explanation& e, int indent = 2);
std::string explanation_to_text(const Explanation& e);

/// Packed pattern of `width` bits as a 0/1 string.
std::string bit_string(std::uint64_t packed, int width);

}  // namespace entgate
