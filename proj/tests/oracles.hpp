#pragma once

// Brute-force reference computations. Nothing here calls into detsum: the
// character table is rebuilt from a primitive root found by order counting,
// inverses are found by search, and every sum is the literal definition.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

inline std::uint32_t order_of(std::uint32_t g, std::uint32_t p) {
  std::uint64_t x = g % p;
  std::uint32_t k = 1;
  while (x != 1) {
    x = x * g % p;
    ++k;
  }
  return k;
}

inline std::uint32_t smallest_primitive_root(std::uint32_t p) {
  for (std::uint32_t g = 2; g < p; ++g) {
    if (order_of(g, p) == p - 1) return g;
  }
  return 1;
}

inline std::int64_t mod(std::int64_t x, std::int64_t p) {
  const std::int64_t r = x % p;
  return r < 0 ? r + p : r;
}

/// Legendre symbol from the set of squares.
inline int legendre(std::int64_t x, std::uint32_t p) {
  const std::int64_t r = mod(x, p);
  if (r == 0) return 0;
  for (std::int64_t y = 1; y < p; ++y) {
    if (y * y % p == r) return 1;
  }
  return -1;
}

inline std::uint32_t inverse(std::uint32_t x, std::uint32_t p) {
  for (std::uint32_t y = 1; y < p; ++y) {
    if (static_cast<std::uint64_t>(x) * y % p == 1) return y;
  }
  return 0;
}

/// chi(x) index table for the order-d character with chi(g) = e(1/d), g the
/// smallest primitive root; entry d marks x = 0.
struct CharTable {
  std::uint32_t p;
  std::uint32_t d;
  std::vector<std::uint32_t> index;

  CharTable(std::uint32_t p_, std::uint32_t d_) : p(p_), d(d_), index(p_, d_) {
    const std::uint32_t g = smallest_primitive_root(p);
    std::uint64_t x = 1;
    for (std::uint32_t k = 0; k + 1 < p; ++k) {
      index[x] = k % d;
      x = x * g % p;
    }
  }

  [[nodiscard]] std::uint32_t at(std::int64_t n) const { return index[mod(n, p)]; }

  [[nodiscard]] std::complex<double> value(std::int64_t n) const {
    const std::uint32_t k = at(n);
    if (k == d) return {0.0, 0.0};
    const double a = 2.0 * std::numbers::pi * k / d;
    return {std::cos(a), std::sin(a)};
  }
};

/// counts[k] for k < d, counts[d] = number of chi(0) terms.
inline std::vector<std::int64_t> s_sum(const CharTable& chi, std::int64_t N) {
  std::vector<std::int64_t> counts(chi.d + 1, 0);
  for (std::int64_t a = 1; a <= N; ++a)
    for (std::int64_t b = 1; b <= N; ++b)
      for (std::int64_t c = 1; c <= N; ++c)
        for (std::int64_t d = 1; d <= N; ++d) ++counts[chi.at(a * d - b * c)];
  return counts;
}

/// Weighted tallies of sum alpha_a beta_b chi(ad - bc), per root index.
inline std::vector<double> u_sum(const CharTable& chi, const std::vector<double>& alpha,
                                 const std::vector<double>& beta, std::int64_t N) {
  std::vector<double> w(chi.d, 0.0);
  for (std::int64_t a = 1; a <= N; ++a)
    for (std::int64_t b = 1; b <= N; ++b)
      for (std::int64_t c = 1; c <= N; ++c)
        for (std::int64_t d = 1; d <= N; ++d) {
          const std::uint32_t k = chi.at(a * d - b * c);
          if (k < chi.d) w[k] += alpha[a - 1] * beta[b - 1];
        }
  return w;
}

inline std::map<std::int64_t, std::uint64_t> delta_profile(std::int64_t N) {
  std::map<std::int64_t, std::uint64_t> out;
  for (std::int64_t a = 1; a <= N; ++a)
    for (std::int64_t b = 1; b <= N; ++b)
      for (std::int64_t c = 1; c <= N; ++c)
        for (std::int64_t d = 1; d <= N; ++d) ++out[a * d - b * c];
  return out;
}

inline std::vector<std::uint64_t> ratio_bins(std::uint32_t p, std::uint32_t A, std::uint32_t B,
                                             std::uint32_t C) {
  std::vector<std::uint64_t> bins(p, 0);
  for (std::uint64_t a = 1; a <= A; ++a)
    for (std::uint64_t b = 1; b <= B; ++b)
      for (std::uint32_t c = 1; c <= C; ++c) ++bins[a * b % p * inverse(c, p) % p];
  return bins;
}

/// Literal sum_{a,b,c} |sum_d alpha_d chi(ab - cd)|.
inline double t_abs(const CharTable& chi, std::uint32_t A, std::uint32_t B, std::uint32_t C,
                    const std::vector<std::uint32_t>& D, const std::vector<double>& alpha) {
  double total = 0.0;
  for (std::int64_t a = 1; a <= A; ++a)
    for (std::int64_t b = 1; b <= B; ++b)
      for (std::int64_t c = 1; c <= C; ++c) {
        std::complex<double> inner{0.0, 0.0};
        for (std::size_t j = 0; j < D.size(); ++j) inner += alpha[j] * chi.value(a * b - c * D[j]);
        total += std::abs(inner);
      }
  return total;
}

inline double de_moment(const CharTable& chi, const std::vector<std::uint32_t>& D,
                        const std::vector<double>& alpha, int nu) {
  double total = 0.0;
  for (std::int64_t lambda = 1; lambda < chi.p; ++lambda) {
    std::complex<double> inner{0.0, 0.0};
    for (std::size_t j = 0; j < D.size(); ++j) inner += alpha[j] * chi.value(lambda + D[j]);
    total += std::pow(std::abs(inner), 2 * nu);
  }
  return total;
}

using Quad = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>;

/// Every B^2 for B in M_2(F_p), as a set.
inline std::set<Quad> squares(std::uint32_t p) {
  std::set<Quad> out;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c)
        for (std::uint32_t d = 0; d < p; ++d)
          out.emplace((a * a + b * c) % p, (a * b + b * d) % p, (c * a + d * c) % p,
                      (c * b + d * d) % p);
  return out;
}

inline std::uint32_t least_nonresidue(std::uint32_t p) {
  for (std::uint32_t n = 2; n < p; ++n) {
    if (legendre(n, p) == -1) return n;
  }
  return 0;
}

/// Ordered factorizations of m into s positive factors, by recursion over divisors.
inline std::uint64_t tau(std::uint64_t m, int s) {
  if (s == 1) return 1;
  std::uint64_t total = 0;
  for (std::uint64_t k = 1; k <= m; ++k) {
    if (m % k == 0) total += tau(m / k, s - 1);
  }
  return total;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

/// Prime divisors of n in (x, y], with multiplicity, by trial division.
inline std::uint32_t window_divisors(std::uint64_t n, double x, double y, bool distinct = false) {
  std::uint32_t r = 0;
  for (std::uint64_t q = 2; q <= n; ++q) {
    if (n % q != 0) continue;
    std::uint32_t e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (q > x && q <= y) r += distinct ? 1 : e;
  }
  return r;
}

}  // namespace oracle
