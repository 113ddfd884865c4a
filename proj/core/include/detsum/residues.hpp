#pragma once

#include <cstdint>

#include "detsum/fp_arith.hpp"

namespace detsum {

/// Least n >= 2 with (n/p) = -1. Needs only the modulus.
std::uint32_t least_nonresidue(std::uint32_t p);
std::uint32_t least_nonresidue(const PrimeField& F);

/// #{1 <= n <= X : (n/p) = -1}; requires 1 <= X < p.
std::uint64_t count_nonresidues(const PrimeField& F, std::uint32_t X);

struct NonResidueReport {
  std::uint32_t p = 0;
  std::uint32_t z_p = 0;
  double kappa_empirical = 0.0;  ///< log z_p / log p
  std::uint32_t X = 0;
  std::uint64_t count = 0;

  [[nodiscard]] double density() const noexcept {
    return X == 0 ? 0.0 : static_cast<double>(count) / X;
  }
};

NonResidueReport nonresidue_report(const PrimeField& F, std::uint32_t X);

/// Positive integers with ad - bc equal to the least non-residue z_p.
struct SmallNonSquareMatrix {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;
  std::uint32_t d = 0;
  std::int64_t det_value = 0;

  friend constexpr bool operator==(const SmallNonSquareMatrix&, const SmallNonSquareMatrix&) = default;
};

/// a = ceil(sqrt z), b = -z mod a taken in [1, a], c = 1, d = (z + b) / a.
/// Every invariant (integrality, entry bounds, determinant, non-residue
/// determinant, no square root mod p) is checked before returning; a
/// failure throws InternalInvariantViolation.
SmallNonSquareMatrix construct_nonsquare(const PrimeField& F);

/// ceil(sqrt(n)) in exact integer arithmetic.
std::uint32_t ceil_sqrt(std::uint64_t n) noexcept;

}  // namespace detsum
