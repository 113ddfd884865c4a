#include "detsum/error.hpp"

namespace detsum {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::BadOrder: return "BadOrder";
    case Errc::WeightOutOfRange: return "WeightOutOfRange";
    case Errc::DomainTooLarge: return "DomainTooLarge";
    case Errc::Overflow: return "Overflow";
    case Errc::BadWindow: return "BadWindow";
    case Errc::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "Unknown";
}

}  // namespace detsum
