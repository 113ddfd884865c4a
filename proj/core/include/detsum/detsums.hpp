#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "detsum/characters.hpp"
#include "detsum/fp_arith.hpp"

namespace detsum {

/// Weights attached to a summation variable n = 1, 2, ..., size().
/// Every value is bounded by 1 in absolute value (checked on construction).
class WeightSeq {
 public:
  explicit WeightSeq(std::vector<double> values);
  static WeightSeq ones(std::size_t n) { return WeightSeq(std::vector<double>(n, 1.0)); }

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  /// Weight of the variable value n, 1-based.
  [[nodiscard]] double at(std::size_t n) const noexcept { return values_[n - 1]; }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

/// T_Delta(N) = #{(a,b,c,d) in [1,N]^4 : ad - bc = Delta} over the integer
/// range -(N^2 - 1) <= Delta <= N^2 - 1.
class DeltaProfile {
 public:
  DeltaProfile(std::uint32_t N, std::vector<std::uint64_t> counts);

  [[nodiscard]] std::uint32_t N() const noexcept { return N_; }
  [[nodiscard]] std::int64_t max_delta() const noexcept {
    return static_cast<std::int64_t>(N_) * N_ - 1;
  }
  [[nodiscard]] std::uint64_t count(std::int64_t delta) const noexcept;
  [[nodiscard]] std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  [[nodiscard]] std::uint64_t total() const noexcept;

 private:
  std::uint32_t N_;
  std::vector<std::uint64_t> counts_;  // index delta + max_delta()
};

/// I(lambda) = #{(a,b,c) in [1,A]x[1,B]x[1,C] : ab/c = lambda mod p}, indexed by lambda in [0, p).
struct BinTable {
  std::uint32_t p = 0;
  std::vector<std::uint64_t> counts;

  [[nodiscard]] std::uint64_t total() const noexcept;
  [[nodiscard]] std::uint64_t sum_of_squares() const noexcept;
};

enum class BinStrategy { Auto, Direct, ProductTable };

/// Reference O(N^4) enumeration of S(N, chi) = sum chi(ad - bc) over [1,N]^4.
CharSumAccumulator s_sum_direct(const Character& chi, std::uint32_t N, unsigned workers = 1);

/// Determinant-equation profile from the product counts r(v) = #{xy = v},
/// T_Delta = sum_v r(v) r(v - Delta), correlated by exact NTT convolution.
DeltaProfile delta_profile(std::uint32_t N);

/// sum_Delta T_Delta(N) chi(Delta).
CharSumAccumulator contract(const DeltaProfile& profile, const Character& chi);

/// S(N, chi) through the determinant profile; equal to s_sum_direct.
CharSumAccumulator s_sum_binned(const Character& chi, std::uint32_t N);

/// U(alpha, beta, N) = sum alpha_a beta_b chi(ad - bc), as per-index weight
/// tallies. Weight products are aggregated per product value ad (resp. bc)
/// before the two product lists are paired.
WeightedAccumulator u_sum_tally(const Character& chi, const WeightSeq& alpha,
                                const WeightSeq& beta, std::uint32_t N);
std::complex<double> u_sum(const Character& chi, const WeightSeq& alpha, const WeightSeq& beta,
                           std::uint32_t N);

/// Requires 1 <= A, B, C < p. Auto picks the product table once AB > p.
BinTable ratio_bins(const PrimeField& F, std::uint32_t A, std::uint32_t B, std::uint32_t C,
                    BinStrategy strategy = BinStrategy::Auto);

/// sum_lambda I(lambda) |sum_{d in D} alpha_d chi(lambda - d)|.
double t_abs_from_bins(const Character& chi, const BinTable& bins, std::span<const Residue> D,
                       std::span<const double> alpha);

/// T(A,B,C,D; alpha). Requires ABC < p (DomainTooLarge otherwise), D a set of
/// distinct residues in [1, p-1], |alpha_d| <= 1.
double t_abs_sum(const Character& chi, std::uint32_t A, std::uint32_t B, std::uint32_t C,
                 std::span<const Residue> D, std::span<const double> alpha);

/// T(N) = sum_{a,b,c <= N} |sum_{d <= N} chi(ab - cd)|, always binned. Requires N < p.
double t_n_sum(const Character& chi, std::uint32_t N);

/// The three factors of the Holder bound T^(2 nu) <= Sigma1 Sigma2 Sigma3.
struct HolderChain {
  int nu = 1;
  double t_abs = 0.0;
  double sigma1 = 0.0;  ///< moment of the inner sums over lambda
  double sigma2 = 0.0;  ///< (ABC)^(2 nu - 2)
  double sigma3 = 0.0;  ///< sum_lambda I(lambda)^2

  [[nodiscard]] double lhs() const noexcept;
  [[nodiscard]] double rhs() const noexcept;
  [[nodiscard]] bool holds(double rel_slack = 1e-9) const noexcept {
    return lhs() <= rhs() * (1.0 + rel_slack);
  }
};

HolderChain holder_chain(const Character& chi, std::uint32_t A, std::uint32_t B, std::uint32_t C,
                         std::span<const Residue> D, std::span<const double> alpha, int nu);

}  // namespace detsum
