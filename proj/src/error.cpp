#include "schmidt/error.hpp"

namespace schmidt {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotSorted: return "NotSorted";
    case ErrorCode::kNegativePart: return "NegativePart";
    case ErrorCode::kCellOutOfDiagram: return "CellOutOfDiagram";
    case ErrorCode::kInvalidFrobenius: return "InvalidFrobenius";
    case ErrorCode::kInvalidDiagram: return "InvalidDiagram";
    case ErrorCode::kInvalidColoredPartition: return "InvalidColoredPartition";
    case ErrorCode::kNotDistinct: return "NotDistinct";
    case ErrorCode::kNotInImage: return "NotInImage";
    case ErrorCode::kNotOddParts: return "NotOddParts";
    case ErrorCode::kInvalidPair: return "InvalidPair";
    case ErrorCode::kBoxMismatch: return "BoxMismatch";
    case ErrorCode::kNonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::kDivergentInfiniteProduct: return "DivergentInfiniteProduct";
    case ErrorCode::kBoxTooSmall: return "BoxTooSmall";
    case ErrorCode::kOutOfBox: return "OutOfBox";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kUnboundedBox: return "UnboundedBox";
    case ErrorCode::kDegenerateParams: return "DegenerateParams";
    case ErrorCode::kUnknownTheorem: return "UnknownTheorem";
  }
  return "Unknown";
}

}  // namespace schmidt
