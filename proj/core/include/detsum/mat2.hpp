#pragma once

#include <cstdint>
#include <vector>

#include "detsum/fp_arith.hpp"

namespace detsum {

/// A 2x2 matrix over F_p, row-major: [[a, b], [c, d]].
struct Mat2 {
  Residue a = 0;
  Residue b = 0;
  Residue c = 0;
  Residue d = 0;

  static constexpr Mat2 scalar(Residue u) noexcept { return {u, 0, 0, u}; }
  static constexpr Mat2 identity() noexcept { return scalar(1); }

  [[nodiscard]] constexpr bool is_scalar() const noexcept { return b == 0 && c == 0 && a == d; }

  friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

[[nodiscard]] Mat2 mul(const Mat2& x, const Mat2& y, const PrimeField& F) noexcept;
[[nodiscard]] Residue det(const Mat2& m, const PrimeField& F) noexcept;
[[nodiscard]] Residue trace(const Mat2& m, const PrimeField& F) noexcept;

/// Dense index a p^3 + b p^2 + c p + d of a matrix among all p^4.
[[nodiscard]] constexpr std::uint64_t flat_index(const Mat2& m, std::uint64_t p) noexcept {
  return ((m.a * p + m.b) * p + m.c) * p + m.d;
}

struct SquareWitness {
  bool found = false;
  Mat2 root{};  ///< root * root == A when found.
};

/// Decides whether A = B^2 for some B in M_2(F_p).
///
/// Non-scalar A: any root B has trace t != 0 and determinant e with
/// e^2 = det A, and Cayley-Hamilton gives t B = A + e I, t^2 = Tr A + 2e.
/// So the candidates are B = t^{-1}(A + e I) over the (at most four) pairs
/// (e, t); each one is checked by squaring.
///
/// Scalar A = uI: tries w I with w^2 = u, then the trace-zero matrix
/// [[0, 1], [u, 0]], whose square is uI for every u.
[[nodiscard]] SquareWitness has_square_root(const Mat2& A, const PrimeField& F);

inline constexpr std::uint32_t kDefaultCensusBound = 127;

/// Bit table over all p^4 matrices marking those of the form B^2.
class SquareTable {
 public:
  SquareTable(std::uint32_t p, std::vector<std::uint64_t> bits)
      : p_(p), bits_(std::move(bits)) {}

  [[nodiscard]] std::uint32_t p() const noexcept { return p_; }
  [[nodiscard]] bool contains(const Mat2& m) const noexcept {
    const std::uint64_t i = flat_index(m, p_);
    return (bits_[i >> 6U] >> (i & 63U)) & 1U;
  }
  [[nodiscard]] std::uint64_t popcount() const noexcept;

 private:
  std::uint32_t p_;
  std::vector<std::uint64_t> bits_;
};

/// Squares every B in M_2(F_p) and marks B^2. Workers hold private tables
/// merged by bitwise OR. Throws TooLarge when p > bound.
[[nodiscard]] SquareTable mark_squares(const PrimeField& F, unsigned workers = 1,
                                       std::uint32_t bound = kDefaultCensusBound);

struct Census {
  std::uint32_t p = 0;
  std::uint64_t n_total = 0;
  std::uint64_t n_singular = 0;
  std::uint64_t n_square = 0;
  std::uint64_t n_nonsquare_invertible = 0;
  std::uint64_t n_nonsquare_singular = 0;
  double ratio = 0.0;  ///< n_nonsquare_invertible / p^4
};

[[nodiscard]] Census tally(const SquareTable& table, const PrimeField& F);
[[nodiscard]] Census census(const PrimeField& F, unsigned workers = 1,
                            std::uint32_t bound = kDefaultCensusBound);

/// Classification of the pairs (s, T), s in F_p and T a square (0 included),
/// used to count the systems ad - bc = s^2, a + d = T - 2s.
struct PairImageCensus {
  std::uint64_t type_a = 0;      ///< T - 4s is a nonzero square
  std::uint64_t type_b = 0;      ///< all other pairs
  std::uint64_t image_size = 0;  ///< distinct (s^2, T - 2s)

  /// |image_size - (type_a / 2 + type_b)|, twice over to stay integral.
  [[nodiscard]] std::uint64_t twice_degeneracy() const noexcept {
    const std::uint64_t predicted = type_a + 2 * type_b;
    const std::uint64_t got = 2 * image_size;
    return predicted > got ? predicted - got : got - predicted;
  }
};

/// Throws TooLarge for p > 10^4.
[[nodiscard]] PairImageCensus pair_image_census(const PrimeField& F);

}  // namespace detsum
