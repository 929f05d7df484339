#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schmidt {

enum class ErrorCode {
  kNotSorted,
  kNegativePart,
  kCellOutOfDiagram,
  kInvalidFrobenius,
  kInvalidDiagram,
  kInvalidColoredPartition,
  kNotDistinct,
  kNotInImage,
  kNotOddParts,
  kInvalidPair,
  kBoxMismatch,
  kNonUnitConstantTerm,
  kDivergentInfiniteProduct,
  kBoxTooSmall,
  kOutOfBox,
  kOverflow,
  kUnboundedBox,
  kDegenerateParams,
  kUnknownTheorem,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported through this type; `code()` lets
// callers (and tests) distinguish the cause without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace schmidt
