#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace entgate {

enum class ErrorCode {
  kInvalidArgument,
  kDuplicateBasis,
  kZeroAmplitude,
  kWidthMismatch,
  kWidthOverflow,
  kAllQubitsConstant,
  kZeroScale,
  kSyntaxError,
  kEmptyState,
  kDivisionByZero,
  kDivisionUnsupported,
  kRadicandOverflow,
  kOddCount,
  kStructureMismatch,
  kNotRank1,
  kImproperStructure,
  kWrongTermCount,
  kCapExceeded,
  kInfeasibleParams,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct SourcePosition {
  std::size_t offset = 0;  // byte offset, 0-based
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Raised by the bra-ket front-end. Syntax errors carry the set of tokens
/// that would have been accepted at `position()`.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, SourcePosition position, const std::string& message,
             std::vector<std::string> expected = {});

  const SourcePosition& position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  SourcePosition position_;
  std::vector<std::string> expected_;
};

}  // namespace entgate
