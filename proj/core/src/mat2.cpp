#include "detsum/mat2.hpp"

#include <bit>
#include <string>

#include "detsum/error.hpp"
#include "detsum/parallel.hpp"

namespace detsum {

Mat2 mul(const Mat2& x, const Mat2& y, const PrimeField& F) noexcept {
  return {F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)), F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
          F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)), F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

Residue det(const Mat2& m, const PrimeField& F) noexcept {
  return F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c));
}

Residue trace(const Mat2& m, const PrimeField& F) noexcept { return F.add(m.a, m.d); }

namespace {

bool verify(const Mat2& B, const Mat2& A, const PrimeField& F) { return mul(B, B, F) == A; }

SquareWitness scalar_root(const Mat2& A, const PrimeField& F) {
  const Residue u = A.a;
  if (auto w = F.sqrt(u)) {
    const Mat2 B = Mat2::scalar(*w);
    if (verify(B, A, F)) return {true, B};
  }
  const Mat2 B{0, 1, u, 0};
  if (verify(B, A, F)) return {true, B};
  return {};
}

}  // namespace

SquareWitness has_square_root(const Mat2& A, const PrimeField& F) {
  if (A.is_scalar()) return scalar_root(A, F);

  const auto s = F.sqrt(det(A, F));
  if (!s) return {};
  const Residue tr = trace(A, F);
  const Residue dets[2] = {*s, F.neg(*s)};
  const int n_dets = (*s == 0) ? 1 : 2;
  for (int i = 0; i < n_dets; ++i) {
    const Residue e = dets[i];
    const auto t = F.sqrt(F.add(tr, F.add(e, e)));
    if (!t || *t == 0) continue;
    for (Residue tt : {*t, F.neg(*t)}) {
      const Residue t_inv = F.inv(tt);
      const Mat2 B{F.mul(t_inv, F.add(A.a, e)), F.mul(t_inv, A.b), F.mul(t_inv, A.c),
                   F.mul(t_inv, F.add(A.d, e))};
      if (verify(B, A, F)) return {true, B};
    }
  }
  return {};
}

std::uint64_t SquareTable::popcount() const noexcept {
  std::uint64_t n = 0;
  for (std::uint64_t w : bits_) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

SquareTable mark_squares(const PrimeField& F, unsigned workers, std::uint32_t bound) {
  const std::uint32_t p = F.p();
  if (p > bound) {
    throw Error(Errc::TooLarge,
                "census needs p <= " + std::to_string(bound) + ", got " + std::to_string(p));
  }
  const std::uint64_t pp = p;
  const std::uint64_t n_words = (pp * pp * pp * pp + 63) / 64;

  workers = std::min(resolve_workers(workers), p);
  std::vector<std::vector<std::uint64_t>> partial(workers);
  parallel_chunks(p, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    auto& bits = partial[w];
    bits.assign(n_words, 0);
    for (std::uint32_t a = static_cast<std::uint32_t>(begin); a < end; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        for (std::uint32_t c = 0; c < p; ++c) {
          const std::uint64_t bc = static_cast<std::uint64_t>(b) * c;
          const std::uint64_t a2 = (static_cast<std::uint64_t>(a) * a + bc) % p;
          for (std::uint32_t d = 0; d < p; ++d) {
            const std::uint64_t s = a + d;
            const std::uint64_t b2 = b * s % p;
            const std::uint64_t c2 = c * s % p;
            const std::uint64_t d2 = (static_cast<std::uint64_t>(d) * d + bc) % p;
            const std::uint64_t i = ((a2 * pp + b2) * pp + c2) * pp + d2;
            bits[i >> 6U] |= std::uint64_t{1} << (i & 63U);
          }
        }
      }
    }
  });

  std::vector<std::uint64_t> merged = std::move(partial[0]);
  for (unsigned w = 1; w < workers; ++w) {
    for (std::uint64_t i = 0; i < n_words; ++i) merged[i] |= partial[w][i];
  }
  return SquareTable(p, std::move(merged));
}

Census tally(const SquareTable& table, const PrimeField& F) {
  const std::uint32_t p = F.p();
  if (table.p() != p) throw Error(Errc::OutOfRange, "square table built for a different field");
  Census out;
  out.p = p;
  const std::uint64_t pp = p;
  out.n_total = pp * pp * pp * pp;
  out.n_square = table.popcount();
  for (Residue a = 0; a < p; ++a) {
    for (Residue b = 0; b < p; ++b) {
      for (Residue c = 0; c < p; ++c) {
        const std::uint64_t bc = static_cast<std::uint64_t>(b) * c % p;
        for (Residue d = 0; d < p; ++d) {
          const bool singular = static_cast<std::uint64_t>(a) * d % p == bc;
          const bool square = table.contains({a, b, c, d});
          if (singular) {
            ++out.n_singular;
            if (!square) ++out.n_nonsquare_singular;
          } else if (!square) {
            ++out.n_nonsquare_invertible;
          }
        }
      }
    }
  }
  out.ratio = static_cast<double>(out.n_nonsquare_invertible) / static_cast<double>(out.n_total);
  return out;
}

Census census(const PrimeField& F, unsigned workers, std::uint32_t bound) {
  return tally(mark_squares(F, workers, bound), F);
}

PairImageCensus pair_image_census(const PrimeField& F) {
  const std::uint32_t p = F.p();
  if (p > 10'000) throw Error(Errc::TooLarge, "pair image census needs p <= 10^4");
  std::vector<bool> is_square(p, false);
  std::vector<bool> is_nonzero_square(p, false);
  std::vector<Residue> squares;
  for (Residue x = 0; x < p; ++x) {
    const Residue sq = F.mul(x, x);
    if (!is_square[sq]) squares.push_back(sq);
    is_square[sq] = true;
    if (x != 0) is_nonzero_square[sq] = true;
  }

  PairImageCensus out;
  std::vector<bool> seen(static_cast<std::size_t>(p) * p, false);
  for (Residue s = 0; s < p; ++s) {
    const Residue four_s = F.mul(4 % p, s);
    const Residue u = F.mul(s, s);
    for (Residue T : squares) {
      if (is_nonzero_square[F.sub(T, four_s)]) {
        ++out.type_a;
      } else {
        ++out.type_b;
      }
      const Residue v = F.sub(T, F.add(s, s));
      const std::size_t key = static_cast<std::size_t>(u) * p + v;
      if (!seen[key]) {
        seen[key] = true;
        ++out.image_size;
      }
    }
  }
  return out;
}

}  // namespace detsum
