#include "detsum/ntt.hpp"

#include <bit>
#include <utility>

#include "detsum/fp_arith.hpp"

namespace detsum::ntt {

namespace {

void transform(std::vector<std::uint32_t>& a, bool invert, std::uint32_t mod) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1U;
    for (; j & bit; bit >>= 1U) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1U) {
    std::uint32_t w = pow_mod(3, (mod - 1) / len, mod);
    if (invert) w = pow_mod(w, mod - 2, mod);
    for (std::size_t i = 0; i < n; i += len) {
      std::uint64_t wn = 1;
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::uint32_t u = a[i + k];
        const auto v = static_cast<std::uint32_t>(a[i + k + len / 2] * wn % mod);
        a[i + k] = u + v >= mod ? u + v - mod : u + v;
        a[i + k + len / 2] = u >= v ? u - v : u + mod - v;
        wn = wn * w % mod;
      }
    }
  }
  if (invert) {
    const std::uint64_t n_inv = pow_mod(static_cast<std::uint32_t>(n % mod), mod - 2, mod);
    for (auto& x : a) x = static_cast<std::uint32_t>(x * n_inv % mod);
  }
}

}  // namespace

std::vector<std::uint32_t> convolve_mod(std::span<const std::uint32_t> a,
                                        std::span<const std::uint32_t> b, std::uint32_t mod) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = a.size() + b.size() - 1;
  const std::size_t n = std::bit_ceil(out_len);
  std::vector<std::uint32_t> fa(n, 0), fb(n, 0);
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i] % mod;
  for (std::size_t i = 0; i < b.size(); ++i) fb[i] = b[i] % mod;
  transform(fa, false, mod);
  transform(fb, false, mod);
  for (std::size_t i = 0; i < n; ++i) fa[i] = static_cast<std::uint32_t>(std::uint64_t{fa[i]} * fb[i] % mod);
  transform(fa, true, mod);
  fa.resize(out_len);
  return fa;
}

std::vector<std::uint64_t> convolve_exact(std::span<const std::uint32_t> a,
                                          std::span<const std::uint32_t> b) {
  const auto r1 = convolve_mod(a, b, kPrime1);
  const auto r2 = convolve_mod(a, b, kPrime2);
  const std::uint64_t m1_inv_mod_m2 = pow_mod(kPrime1 % kPrime2, kPrime2 - 2, kPrime2);
  std::vector<std::uint64_t> out(r1.size());
  for (std::size_t i = 0; i < r1.size(); ++i) {
    const std::uint64_t diff = (r2[i] + kPrime2 - r1[i] % kPrime2) % kPrime2;
    const std::uint64_t k = diff * m1_inv_mod_m2 % kPrime2;
    out[i] = r1[i] + k * kPrime1;
  }
  return out;
}

}  // namespace detsum::ntt
