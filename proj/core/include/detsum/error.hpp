#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace detsum {

enum class Errc {
  NotPrime,
  TooLarge,
  ZeroInverse,
  OutOfRange,
  BadOrder,
  WeightOutOfRange,
  DomainTooLarge,
  Overflow,
  BadWindow,
  InternalInvariantViolation,
};

std::string_view to_string(Errc code) noexcept;

/// Every precondition failure in the library surfaces as this exception;
/// callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace detsum
