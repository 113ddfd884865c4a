#include "detsum/fp_arith.hpp"

#include <array>
#include <cstdlib>
#include <limits>
#include <string>
#include <tuple>
#include <utility>

#include "detsum/error.hpp"

namespace detsum {

namespace {

std::uint64_t mul_mod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) noexcept {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1U) r = mul_mod64(r, b, m);
    b = mul_mod64(b, b, m);
    e >>= 1U;
  }
  return r;
}

}  // namespace

std::uint32_t max_table_from_env() {
  const char* raw = std::getenv("DETSUM_MAX_TABLE");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxTable;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0 || v > std::numeric_limits<std::uint32_t>::max()) {
    return kDefaultMaxTable;
  }
  return static_cast<std::uint32_t>(v);
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : kBases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

int legendre(std::int64_t x, std::uint32_t p) noexcept {
  const auto m = static_cast<std::int64_t>(p);
  std::int64_t r = x % m;
  if (r < 0) r += m;
  if (r == 0) return 0;
  return pow_mod(static_cast<std::uint32_t>(r), (p - 1) / 2, p) == 1 ? 1 : -1;
}

int jacobi(std::int64_t a, std::uint64_t n) noexcept {
  const auto nn = static_cast<std::int64_t>(n);
  std::int64_t r = a % nn;
  if (r < 0) r += nn;
  auto x = static_cast<std::uint64_t>(r);
  int sign = 1;
  while (x != 0) {
    while ((x & 1U) == 0) {
      x >>= 1U;
      const std::uint64_t m8 = n & 7U;
      if (m8 == 3 || m8 == 5) sign = -sign;
    }
    std::swap(x, n);
    if ((x & 3U) == 3 && (n & 3U) == 3) sign = -sign;
    x %= n;
  }
  return n == 1 ? sign : 0;
}

std::uint32_t find_primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  const auto factors = distinct_prime_factors(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool generates = true;
    for (std::uint64_t q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  throw Error(Errc::InternalInvariantViolation, "no primitive root for " + std::to_string(p));
}

PrimeField::PrimeField(std::uint64_t p, std::uint32_t max_table) {
  if (p < 3 || !is_prime(p)) {
    throw Error(Errc::NotPrime, std::to_string(p) + " is not an odd prime");
  }
  if (p > max_table || p > (std::uint64_t{1} << 31)) {
    throw Error(Errc::TooLarge,
                std::to_string(p) + " exceeds the table bound " + std::to_string(max_table));
  }
  p_ = static_cast<std::uint32_t>(p);
  g_ = find_primitive_root(p_);

  dlog_.assign(p_, 0);
  exp_.assign(p_ - 1, 0);
  std::uint32_t x = 1;
  for (std::uint32_t k = 0; k + 1 < p_; ++k) {
    if (k > 0 && x == 1) {
      throw Error(Errc::InternalInvariantViolation, "generator order too small");
    }
    exp_[k] = x;
    dlog_[x] = k;
    x = mul_mod(x, g_, p_);
  }
  if (x != 1) throw Error(Errc::InternalInvariantViolation, "g^(p-1) != 1");
}

Residue PrimeField::inv(Residue x) const {
  if (x >= p_) throw Error(Errc::OutOfRange, std::to_string(x) + " not reduced mod p");
  if (x == 0) throw Error(Errc::ZeroInverse, "0 has no inverse");
  std::int64_t r0 = p_, r1 = x, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  return reduce(s0);
}

int PrimeField::legendre(Residue x) const {
  if (x >= p_) throw Error(Errc::OutOfRange, std::to_string(x) + " not reduced mod p");
  if (x == 0) return 0;
  return pow_mod(x, (p_ - 1) / 2, p_) == 1 ? 1 : -1;
}

std::optional<Residue> PrimeField::sqrt(Residue x) const noexcept {
  if (x == 0) return Residue{0};
  const std::uint32_t k = dlog_[x];
  if ((k & 1U) != 0) return std::nullopt;
  return exp_[k / 2];
}

FieldPtr make_field(std::uint64_t p, std::uint32_t max_table) {
  return std::make_shared<const PrimeField>(p, max_table);
}

}  // namespace detsum
