#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace detsum {

/// An element of F_p, always kept in [0, p).
using Residue = std::uint32_t;

/// Largest modulus for which a dense discrete-log table is built.
inline constexpr std::uint32_t kDefaultMaxTable = 2'000'000;

/// DETSUM_MAX_TABLE if set to a positive integer, kDefaultMaxTable otherwise.
std::uint32_t max_table_from_env();

// Plain modular helpers, usable without building a field table.

constexpr std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t m) noexcept {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % m);
}

constexpr std::uint32_t pow_mod(std::uint32_t base, std::uint64_t e, std::uint32_t m) noexcept {
  std::uint64_t result = 1 % m;
  std::uint64_t b = base % m;
  while (e > 0) {
    if (e & 1U) result = result * b % m;
    b = b * b % m;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime factors in increasing order, by trial division.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

/// Legendre symbol (x/p) by Euler's criterion; p must be an odd prime.
int legendre(std::int64_t x, std::uint32_t p) noexcept;

/// Jacobi symbol (a/n) via quadratic reciprocity; n odd and positive.
int jacobi(std::int64_t a, std::uint64_t n) noexcept;

/// Arithmetic context for an odd prime p: a verified primitive root g and
/// dense tables of g^k and of discrete logarithms. Immutable once built.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p, std::uint32_t max_table = kDefaultMaxTable);

  [[nodiscard]] std::uint32_t p() const noexcept { return p_; }
  [[nodiscard]] std::uint32_t generator() const noexcept { return g_; }
  /// Order of the multiplicative group, p - 1.
  [[nodiscard]] std::uint32_t group_order() const noexcept { return p_ - 1; }

  /// k in [0, p-2] with g^k = x. x must be nonzero.
  [[nodiscard]] std::uint32_t dlog(Residue x) const noexcept { return dlog_[x]; }
  /// g^k for k in [0, p-2].
  [[nodiscard]] Residue exp(std::uint32_t k) const noexcept { return exp_[k]; }

  [[nodiscard]] Residue reduce(std::int64_t x) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    const std::int64_t r = x % m;
    return static_cast<Residue>(r < 0 ? r + m : r);
  }

  [[nodiscard]] Residue add(Residue x, Residue y) const noexcept {
    const std::uint32_t s = x + y;
    return s >= p_ ? s - p_ : s;
  }
  [[nodiscard]] Residue sub(Residue x, Residue y) const noexcept {
    return x >= y ? x - y : x + p_ - y;
  }
  [[nodiscard]] Residue neg(Residue x) const noexcept { return x == 0 ? 0 : p_ - x; }
  [[nodiscard]] Residue mul(Residue x, Residue y) const noexcept { return mul_mod(x, y, p_); }
  [[nodiscard]] Residue pow(Residue x, std::uint64_t e) const noexcept { return pow_mod(x, e, p_); }

  /// Multiplicative inverse; throws ZeroInverse for x = 0, OutOfRange for x >= p.
  [[nodiscard]] Residue inv(Residue x) const;

  /// Euler criterion: 0 at x = 0, +1 on nonzero squares, -1 otherwise.
  [[nodiscard]] int legendre(Residue x) const;

  /// Same decision from the parity of dlog(x).
  [[nodiscard]] int legendre_by_dlog(Residue x) const noexcept {
    if (x == 0) return 0;
    return (dlog_[x] & 1U) == 0 ? 1 : -1;
  }

  /// One square root of x (the other is its negation), or nullopt for non-squares.
  [[nodiscard]] std::optional<Residue> sqrt(Residue x) const noexcept;

 private:
  std::uint32_t p_;
  std::uint32_t g_ = 0;
  std::vector<std::uint32_t> dlog_;
  std::vector<Residue> exp_;
};

using FieldPtr = std::shared_ptr<const PrimeField>;

/// Builds and verifies a field context. Throws NotPrime or TooLarge.
FieldPtr make_field(std::uint64_t p, std::uint32_t max_table = kDefaultMaxTable);

/// Smallest primitive root of p, found by testing g^((p-1)/q) != 1 for every prime q | p-1.
std::uint32_t find_primitive_root(std::uint32_t p);

}  // namespace detsum
