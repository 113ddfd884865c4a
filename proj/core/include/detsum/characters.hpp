#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "detsum/fp_arith.hpp"

namespace detsum {

/// chi(x) as an exact root-of-unity index: value e(index/order), or zero at x = 0.
struct CharValue {
  bool zero = true;
  std::uint32_t index = 0;

  static constexpr CharValue Zero() noexcept { return {true, 0}; }
  static constexpr CharValue Root(std::uint32_t k) noexcept { return {false, k}; }

  friend constexpr bool operator==(const CharValue&, const CharValue&) = default;
};

/// e(k/d) with the quarter-turn multiples snapped to exact values.
std::complex<double> unit_root(std::uint64_t k, std::uint32_t d) noexcept;

/// A multiplicative character of order d | p-1, normalized so that
/// chi(g) = e(power/d) for the field's primitive root g. power must be
/// coprime to d; power = 1 is the canonical character of that order.
class Character {
 public:
  Character(FieldPtr field, std::uint32_t order, std::uint32_t power = 1);

  [[nodiscard]] const PrimeField& field() const noexcept { return *field_; }
  [[nodiscard]] const FieldPtr& field_ptr() const noexcept { return field_; }
  [[nodiscard]] std::uint32_t p() const noexcept { return field_->p(); }
  [[nodiscard]] std::uint32_t order() const noexcept { return order_; }
  [[nodiscard]] std::uint32_t power() const noexcept { return power_; }

  /// Raw lookup for hot loops: the root index of chi(x), or order() when x = 0.
  [[nodiscard]] std::uint32_t index(Residue x) const noexcept { return (*table_)[x]; }

  [[nodiscard]] CharValue eval(Residue x) const noexcept {
    const std::uint32_t k = index(x);
    return k == order_ ? CharValue::Zero() : CharValue::Root(k);
  }

  /// eval on an arbitrary integer, reduced mod p first.
  [[nodiscard]] CharValue eval_int(std::int64_t n) const noexcept {
    return eval(field_->reduce(n));
  }

  /// chi(-1) = -1.
  [[nodiscard]] bool is_odd() const noexcept;

  /// The complex-conjugate character, chi^(d-1) relative to this one.
  [[nodiscard]] Character conjugate() const;

 private:
  FieldPtr field_;
  std::uint32_t order_;
  std::uint32_t power_;
  std::shared_ptr<const std::vector<std::uint32_t>> table_;
};

/// Throws BadOrder unless 2 <= d, d | p-1, and gcd(power, d) = 1.
Character make_character(FieldPtr field, std::uint32_t order, std::uint32_t power = 1);

/// Exact tally of character values: counts[k] terms equal to e(k/d), plus
/// zero_terms terms equal to chi(0) = 0.
class CharSumAccumulator {
 public:
  explicit CharSumAccumulator(std::uint32_t order) : counts_(order, 0) {}

  [[nodiscard]] std::uint32_t order() const noexcept {
    return static_cast<std::uint32_t>(counts_.size());
  }
  [[nodiscard]] std::span<const std::int64_t> counts() const noexcept { return counts_; }
  [[nodiscard]] std::int64_t zero_terms() const noexcept { return zero_terms_; }
  [[nodiscard]] std::int64_t total_terms() const noexcept;

  /// Adds `times` copies of the value with raw index k (k == order() means zero).
  void add_index(std::uint32_t k, std::int64_t times = 1) noexcept {
    if (k == counts_.size()) {
      zero_terms_ += times;
    } else {
      counts_[k] += times;
    }
  }
  void add(CharValue v, std::int64_t times = 1) noexcept {
    add_index(v.zero ? order() : v.index, times);
  }

  CharSumAccumulator& operator+=(const CharSumAccumulator& other);
  friend bool operator==(const CharSumAccumulator&, const CharSumAccumulator&) = default;

  /// sum_k counts[k] e(k/d).
  [[nodiscard]] std::complex<double> value() const noexcept;

  /// counts[0] - counts[1]; only meaningful for order 2.
  [[nodiscard]] std::int64_t real_integer_value() const;

  /// True iff the value is exactly 0, decided in integer arithmetic by
  /// reducing sum_k counts[k] x^k modulo the d-th cyclotomic polynomial.
  [[nodiscard]] bool is_exact_zero() const;

  /// Index-reversed tally: the accumulator of the conjugate values.
  [[nodiscard]] CharSumAccumulator conjugate() const;

 private:
  std::vector<std::int64_t> counts_;
  std::int64_t zero_terms_ = 0;
};

/// Real-weighted tally per root index; value = sum_k weight[k] e(k/d).
class WeightedAccumulator {
 public:
  explicit WeightedAccumulator(std::uint32_t order) : weights_(order, 0.0) {}

  [[nodiscard]] std::uint32_t order() const noexcept {
    return static_cast<std::uint32_t>(weights_.size());
  }
  [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }

  void add_index(std::uint32_t k, double w) noexcept {
    if (k < weights_.size()) weights_[k] += w;
  }
  void clear() noexcept { std::fill(weights_.begin(), weights_.end(), 0.0); }

  WeightedAccumulator& operator+=(const WeightedAccumulator& other);
  friend bool operator==(const WeightedAccumulator&, const WeightedAccumulator&) = default;

  [[nodiscard]] std::complex<double> value() const noexcept;
  /// |value|^2, with the order-2 case computed as a real square.
  [[nodiscard]] double norm() const noexcept;

 private:
  std::vector<double> weights_;
};

/// Coefficients (lowest degree first) of the d-th cyclotomic polynomial.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t d);

/// Exact tally of chi(n) for n in [M, M+N]; N >= 0.
CharSumAccumulator interval_sum(const Character& chi, std::int64_t M, std::int64_t N);

/// Throws WeightOutOfRange if any |w| > 1 (or is not finite).
void check_weights(std::span<const double> weights);

/// Throws OutOfRange unless D is a nonempty set of distinct residues in [1, p-1].
void check_shift_set(std::span<const Residue> D, std::uint32_t p);

/// sum_{lambda=1}^{p-1} |sum_{d in D} alpha_d chi(lambda + d)|^(2 nu).
/// D must hold distinct residues in [1, p-1]; 1 <= nu <= 6.
double de_moment(const Character& chi, std::span<const Residue> D,
                 std::span<const double> alpha, int nu);

/// The proven upper bound (2 nu D)^nu p + 2 nu D^(2 nu) sqrt(p) for de_moment.
double de_moment_bound(std::uint32_t p, std::size_t D, int nu) noexcept;

}  // namespace detsum
