#include "entgate/error.hpp"

namespace entgate {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDuplicateBasis: return "DuplicateBasis";
    case ErrorCode::kZeroAmplitude: return "ZeroAmplitude";
    case ErrorCode::kWidthMismatch: return "WidthMismatch";
    case ErrorCode::kWidthOverflow: return "WidthOverflow";
    case ErrorCode::kAllQubitsConstant: return "AllQubitsConstant";
    case ErrorCode::kZeroScale: return "ZeroScale";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kEmptyState: return "EmptyState";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kDivisionUnsupported: return "DivisionUnsupported";
    case ErrorCode::kRadicandOverflow: return "RadicandOverflow";
    case ErrorCode::kOddCount: return "OddCount";
    case ErrorCode::kStructureMismatch: return "StructureMismatch";
    case ErrorCode::kNotRank1: return "NotRank1";
    case ErrorCode::kImproperStructure: return "ImproperStructure";
    case ErrorCode::kWrongTermCount: return "WrongTermCount";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kInfeasibleParams: return "InfeasibleParams";
  }
  return "Unknown";
}

namespace {

std::string describe(const SourcePosition& pos, const std::string& message,
                     const std::vector<std::string>& expected) {
  std::string out = "line " + std::to_string(pos.line) + ", column " +
                    std::to_string(pos.column) + ": " + message;
  if (!expected.empty()) {
    out += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
      out += expected[i];
    }
    out += ")";
  }
  return out;
}

}  // namespace

ParseError::ParseError(ErrorCode code, SourcePosition position, const std::string& message,
                       std::vector<std::string> expected)
    : Error(code, describe(position, message, expected)),
      position_(position),
      expected_(std::move(expected)) {}

}  // namespace entgate
