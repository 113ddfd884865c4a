#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace detsum::ntt {

inline constexpr std::uint32_t kPrime1 = 998'244'353;  // 119 * 2^23 + 1
inline constexpr std::uint32_t kPrime2 = 469'762'049;  // 7 * 2^26 + 1

/// Cyclic-free (linear) convolution modulo one NTT prime with primitive root 3.
std::vector<std::uint32_t> convolve_mod(std::span<const std::uint32_t> a,
                                        std::span<const std::uint32_t> b, std::uint32_t mod);

/// Exact linear convolution of nonnegative integer sequences, recovered by
/// CRT over two NTT primes. Correct whenever every output coefficient is
/// below kPrime1 * kPrime2 (about 4.7e17).
std::vector<std::uint64_t> convolve_exact(std::span<const std::uint32_t> a,
                                          std::span<const std::uint32_t> b);

}  // namespace detsum::ntt
