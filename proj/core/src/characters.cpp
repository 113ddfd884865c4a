#include "detsum/characters.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <string>

#include "detsum/error.hpp"

namespace detsum {

std::complex<double> unit_root(std::uint64_t k, std::uint32_t d) noexcept {
  k %= d;
  if ((4 * k) % d == 0) {
    switch ((4 * k) / d) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d);
  return {std::cos(angle), std::sin(angle)};
}

Character::Character(FieldPtr field, std::uint32_t order, std::uint32_t power)
    : field_(std::move(field)), order_(order), power_(order == 0 ? 0 : power % order) {
  if (!field_) throw Error(Errc::OutOfRange, "null field");
  const std::uint32_t n = field_->group_order();
  if (order_ < 2 || n % order_ != 0) {
    throw Error(Errc::BadOrder, "order " + std::to_string(order) + " does not divide p-1 = " +
                                    std::to_string(n));
  }
  if (std::gcd(power_, order_) != 1) {
    throw Error(Errc::BadOrder, "power " + std::to_string(power) + " not coprime to order " +
                                    std::to_string(order));
  }
  const std::uint32_t p = field_->p();
  auto table = std::make_shared<std::vector<std::uint32_t>>(p);
  (*table)[0] = order_;
  for (std::uint32_t k = 0; k < n; ++k) {
    const auto idx = static_cast<std::uint64_t>(k % order_) * power_ % order_;
    (*table)[field_->exp(k)] = static_cast<std::uint32_t>(idx);
  }
  table_ = std::move(table);
}

bool Character::is_odd() const noexcept { return index(p() - 1) != 0; }

Character Character::conjugate() const { return Character(field_, order_, order_ - power_); }

Character make_character(FieldPtr field, std::uint32_t order, std::uint32_t power) {
  return Character(std::move(field), order, power);
}

std::int64_t CharSumAccumulator::total_terms() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), zero_terms_);
}

CharSumAccumulator& CharSumAccumulator::operator+=(const CharSumAccumulator& other) {
  if (other.order() != order()) throw Error(Errc::BadOrder, "merging accumulators of different order");
  for (std::size_t k = 0; k < counts_.size(); ++k) counts_[k] += other.counts_[k];
  zero_terms_ += other.zero_terms_;
  return *this;
}

std::complex<double> CharSumAccumulator::value() const noexcept {
  const std::uint32_t d = order();
  if (d == 2) return {static_cast<double>(counts_[0] - counts_[1]), 0.0};
  std::complex<double> v{0.0, 0.0};
  for (std::uint32_t k = 0; k < d; ++k) {
    if (counts_[k] != 0) v += static_cast<double>(counts_[k]) * unit_root(k, d);
  }
  return v;
}

std::int64_t CharSumAccumulator::real_integer_value() const {
  if (order() != 2) throw Error(Errc::BadOrder, "integer value requires order 2");
  return counts_[0] - counts_[1];
}

namespace {

using Poly = std::vector<std::int64_t>;

// Exact quotient num / den for monic den.
Poly divide_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

const Poly& cyclotomic_cached(std::uint32_t d, std::map<std::uint32_t, Poly>& memo) {
  if (auto it = memo.find(d); it != memo.end()) return it->second;
  Poly p(d + 1, 0);
  p[0] = -1;
  p[d] = 1;
  for (std::uint32_t e = 1; e < d; ++e) {
    if (d % e == 0) p = divide_exact(std::move(p), cyclotomic_cached(e, memo));
  }
  return memo.emplace(d, std::move(p)).first->second;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t d) {
  if (d == 0) throw Error(Errc::BadOrder, "cyclotomic polynomial of order 0");
  std::map<std::uint32_t, Poly> memo;
  return cyclotomic_cached(d, memo);
}

bool CharSumAccumulator::is_exact_zero() const {
  const std::uint32_t d = order();
  if (std::all_of(counts_.begin(), counts_.end(), [](std::int64_t c) { return c == 0; })) {
    return true;
  }
  if (d == 2) return counts_[0] == counts_[1];
  const Poly phi = cyclotomic_polynomial(d);
  const std::size_t deg = phi.size() - 1;
  std::vector<__int128> rem(counts_.begin(), counts_.end());
  for (std::size_t i = rem.size(); i-- > deg;) {
    const __int128 c = rem[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) rem[i - deg + j] -= c * phi[j];
  }
  return std::all_of(rem.begin(), rem.end(), [](__int128 c) { return c == 0; });
}

CharSumAccumulator CharSumAccumulator::conjugate() const {
  CharSumAccumulator out(order());
  const std::uint32_t d = order();
  for (std::uint32_t k = 0; k < d; ++k) out.counts_[(d - k) % d] = counts_[k];
  out.zero_terms_ = zero_terms_;
  return out;
}

WeightedAccumulator& WeightedAccumulator::operator+=(const WeightedAccumulator& other) {
  if (other.order() != order()) throw Error(Errc::BadOrder, "merging accumulators of different order");
  for (std::size_t k = 0; k < weights_.size(); ++k) weights_[k] += other.weights_[k];
  return *this;
}

std::complex<double> WeightedAccumulator::value() const noexcept {
  const std::uint32_t d = order();
  if (d == 2) return {weights_[0] - weights_[1], 0.0};
  std::complex<double> v{0.0, 0.0};
  for (std::uint32_t k = 0; k < d; ++k) {
    if (weights_[k] != 0.0) v += weights_[k] * unit_root(k, d);
  }
  return v;
}

double WeightedAccumulator::norm() const noexcept {
  if (order() == 2) {
    const double r = weights_[0] - weights_[1];
    return r * r;
  }
  return std::norm(value());
}

CharSumAccumulator interval_sum(const Character& chi, std::int64_t M, std::int64_t N) {
  if (N < 0) throw Error(Errc::OutOfRange, "interval length must be >= 0");
  CharSumAccumulator acc(chi.order());
  const std::uint32_t p = chi.p();
  Residue x = chi.field().reduce(M);
  // Whole periods contribute (p-1)/d copies of every root and one zero each.
  const std::int64_t terms = N + 1;
  const std::int64_t periods = terms / p;
  if (periods > 0) {
    const std::int64_t per_root = static_cast<std::int64_t>((p - 1) / chi.order()) * periods;
    for (std::uint32_t k = 0; k < chi.order(); ++k) acc.add_index(k, per_root);
    acc.add_index(chi.order(), periods);
  }
  for (std::int64_t i = 0; i < terms % p; ++i) {
    acc.add_index(chi.index(x));
    x = (x + 1 == p) ? 0 : x + 1;
  }
  return acc;
}

void check_weights(std::span<const double> weights) {
  for (double w : weights) {
    if (!std::isfinite(w) || std::abs(w) > 1.0) {
      throw Error(Errc::WeightOutOfRange, "weight " + std::to_string(w) + " has magnitude > 1");
    }
  }
}

void check_shift_set(std::span<const Residue> D, std::uint32_t p) {
  if (D.empty()) throw Error(Errc::OutOfRange, "shift set must be nonempty");
  std::vector<Residue> sorted(D.begin(), D.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() == 0 || sorted.back() >= p ||
      std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::OutOfRange, "shift set must hold distinct residues in [1, p-1]");
  }
}

double de_moment(const Character& chi, std::span<const Residue> D,
                 std::span<const double> alpha, int nu) {
  if (nu < 1 || nu > 6) throw Error(Errc::OutOfRange, "nu must lie in [1, 6]");
  if (D.size() != alpha.size()) throw Error(Errc::OutOfRange, "shift set and weights differ in size");
  check_shift_set(D, chi.p());
  check_weights(alpha);
  const std::uint32_t p = chi.p();

  WeightedAccumulator inner(chi.order());
  double total = 0.0;
  for (std::uint32_t lambda = 1; lambda < p; ++lambda) {
    inner.clear();
    for (std::size_t j = 0; j < D.size(); ++j) {
      inner.add_index(chi.index(chi.field().add(lambda, D[j])), alpha[j]);
    }
    total += std::pow(inner.norm(), nu);
  }
  return total;
}

double de_moment_bound(std::uint32_t p, std::size_t D, int nu) noexcept {
  const double dd = static_cast<double>(D);
  const double pp = static_cast<double>(p);
  return std::pow(2.0 * nu * dd, nu) * pp + 2.0 * nu * std::pow(dd, 2 * nu) * std::sqrt(pp);
}

}  // namespace detsum
