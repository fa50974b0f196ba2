#include "tpart/error.hpp"

namespace tpart {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::NotTotallyPositive: return "NotTotallyPositive";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::Inert5: return "Inert5";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::OutsideTruncation: return "OutsideTruncation";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::ProductCondition: return "ProductCondition";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

namespace detail {

void throw_overflow(const char* op) {
  throw Error(ErrorCode::Overflow, std::string("64-bit overflow in ") + op);
}

}  // namespace detail
}  // namespace tpart
