#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace detsum {

/// Smallest-prime-factor sieve on [0, limit].
class Sieve {
 public:
  explicit Sieve(std::uint32_t limit);

  [[nodiscard]] std::uint32_t limit() const noexcept { return limit_; }
  [[nodiscard]] std::uint32_t spf(std::uint32_t n) const noexcept { return spf_[n]; }
  [[nodiscard]] bool is_prime(std::uint32_t n) const noexcept { return n >= 2 && spf_[n] == n; }
  [[nodiscard]] const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }

  /// (prime, exponent) pairs in increasing prime order; n in [1, limit].
  [[nodiscard]] std::vector<std::pair<std::uint32_t, std::uint32_t>> factor(std::uint32_t n) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

enum class Multiplicity {
  Counted,   ///< A_r: prime divisors in the window counted with multiplicity
  Distinct,  ///< A_r*: distinct prime divisors in the window
};

/// Sizes of A_r(N; x, y), the integers n <= N with exactly r prime divisors
/// in the half-open window (x, y].
struct SiftProfile {
  std::uint32_t N = 0;
  double x = 0.0;
  double y = 0.0;
  Multiplicity mode = Multiplicity::Counted;
  std::vector<std::uint64_t> sizes;  ///< sizes[r] for r = 0..max_sift_index()

  [[nodiscard]] std::uint32_t max_sift_index() const noexcept {
    return sizes.empty() ? 0 : static_cast<std::uint32_t>(sizes.size() - 1);
  }
  [[nodiscard]] std::uint64_t total() const noexcept;
};

/// Number of prime divisors of n lying in (x, y].
std::uint32_t window_divisors(std::uint32_t n, double x, double y, const Sieve& sieve,
                              Multiplicity mode = Multiplicity::Counted);

/// Throws BadWindow unless N >= y >= x >= 2.
SiftProfile sift(std::uint32_t N, double x, double y, Multiplicity mode = Multiplicity::Counted);
SiftProfile sift(const Sieve& sieve, std::uint32_t N, double x, double y,
                 Multiplicity mode = Multiplicity::Counted);

/// #A_0 / (N log 2x / log 2y).
double a0_ratio(std::uint32_t N, double x, double y);
/// #A_0(N; x, y) <= C N log(2x) / log(2y).
bool a0_bound_check(std::uint32_t N, double x, double y, double C);

/// s-fold divisor function, prod_i binom(e_i + s - 1, s - 1); 1 <= s <= 4.
std::uint64_t tau(std::uint64_t m, int s);

/// sum_{m <= M} tau_s(m)^2.
std::uint64_t tau_square_average(std::uint32_t M, int s);
/// tau_square_average / (M (log 2M)^(s^2 - 1)).
double tau_square_ratio(std::uint32_t M, int s);

/// sum over primes x <= q <= P of 1/q^2; zero when x > P.
double prime_tail(double x, std::uint32_t P);
double prime_tail(double x, const Sieve& sieve);

/// Constants hidden by the "<<" bounds, measured on a fixed grid.
/// File format: one "name value" pair per line, '#' starts a comment.
struct Calibration {
  std::map<std::string, double> constants;

  static Calibration parse(std::istream& in);
  static Calibration load(const std::string& path);
  void write(std::ostream& out) const;
  [[nodiscard]] double at(const std::string& name) const;
};

/// Runs the calibration grid: a0_bound, tau{2,3,4}_square, prime_tail.
Calibration run_calibration_grid();

}  // namespace detsum
