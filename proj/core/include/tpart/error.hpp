#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tpart {

enum class ErrorCode {
  InvalidField,
  NotSquarefree,
  NotTotallyPositive,
  FieldMismatch,
  Inert5,
  InvalidParameter,
  OutsideTruncation,
  RingMismatch,
  NotInvertible,
  ProductCondition,
  Parse,
  Overflow,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// drivers can map it to a report row without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {

[[noreturn]] void throw_overflow(const char* op);

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw_overflow("addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw_overflow("subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw_overflow("multiplication");
  return r;
}

}  // namespace detail
}  // namespace tpart
