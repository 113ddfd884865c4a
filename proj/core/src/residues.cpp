#include "detsum/residues.hpp"

#include <cmath>
#include <string>

#include "detsum/error.hpp"
#include "detsum/mat2.hpp"

namespace detsum {

std::uint32_t least_nonresidue(std::uint32_t p) {
  if (p < 3 || !is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not an odd prime");
  for (std::uint32_t n = 2;; ++n) {
    if (legendre(n, p) == -1) return n;
  }
}

std::uint32_t least_nonresidue(const PrimeField& F) {
  for (std::uint32_t n = 2; n < F.p(); ++n) {
    if (F.legendre(n) == -1) return n;
  }
  throw Error(Errc::InternalInvariantViolation, "no non-residue below p");
}

std::uint64_t count_nonresidues(const PrimeField& F, std::uint32_t X) {
  if (X < 1 || X >= F.p()) throw Error(Errc::OutOfRange, "need 1 <= X < p");
  std::uint64_t count = 0;
  for (std::uint32_t n = 1; n <= X; ++n) count += F.legendre_by_dlog(n) == -1 ? 1 : 0;
  return count;
}

NonResidueReport nonresidue_report(const PrimeField& F, std::uint32_t X) {
  NonResidueReport r;
  r.p = F.p();
  r.z_p = least_nonresidue(F);
  r.kappa_empirical = std::log(static_cast<double>(r.z_p)) / std::log(static_cast<double>(r.p));
  r.X = X;
  r.count = count_nonresidues(F, X);
  return r;
}

std::uint32_t ceil_sqrt(std::uint64_t n) noexcept {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return static_cast<std::uint32_t>(r * r == n ? r : r + 1);
}

SmallNonSquareMatrix construct_nonsquare(const PrimeField& F) {
  const std::uint32_t z = least_nonresidue(F);
  auto fail = [&](const char* what) {
    throw Error(Errc::InternalInvariantViolation,
                std::string(what) + " (p = " + std::to_string(F.p()) + ", z = " + std::to_string(z) + ")");
  };

  SmallNonSquareMatrix m;
  m.a = ceil_sqrt(z);
  const std::uint32_t r = (m.a - z % m.a) % m.a;
  m.b = r == 0 ? m.a : r;
  m.c = 1;
  if ((z + m.b * m.c) % m.a != 0) fail("z + bc not divisible by a");
  m.d = (z + m.b * m.c) / m.a;
  m.det_value = static_cast<std::int64_t>(m.a) * m.d - static_cast<std::int64_t>(m.b) * m.c;

  const std::uint32_t bound = ceil_sqrt(z) + 1;
  if (m.det_value != z) fail("determinant differs from z_p");
  for (std::uint32_t e : {m.a, m.b, m.c, m.d}) {
    if (e < 1 || e > bound) fail("entry outside [1, ceil(sqrt z) + 1]");
  }
  if (F.legendre(F.reduce(m.det_value)) != -1) fail("determinant is a residue");
  const Mat2 reduced{F.reduce(m.a), F.reduce(m.b), F.reduce(m.c), F.reduce(m.d)};
  if (has_square_root(reduced, F).found) fail("constructed matrix has a square root");
  return m;
}

}  // namespace detsum
