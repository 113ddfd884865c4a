#include "detsum/detsums.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "detsum/error.hpp"
#include "detsum/ntt.hpp"
#include "detsum/parallel.hpp"

namespace detsum {

namespace {

void require_box(std::uint32_t N, std::uint32_t p) {
  if (N < 1 || N >= p) {
    throw Error(Errc::OutOfRange,
                "need 1 <= N < p, got N = " + std::to_string(N) + ", p = " + std::to_string(p));
  }
}

}  // namespace

WeightSeq::WeightSeq(std::vector<double> values) : values_(std::move(values)) {
  check_weights(values_);
}

DeltaProfile::DeltaProfile(std::uint32_t N, std::vector<std::uint64_t> counts)
    : N_(N), counts_(std::move(counts)) {
  if (counts_.size() != static_cast<std::size_t>(2 * max_delta() + 1)) {
    throw Error(Errc::OutOfRange, "delta profile has the wrong length");
  }
}

std::uint64_t DeltaProfile::count(std::int64_t delta) const noexcept {
  if (delta < -max_delta() || delta > max_delta()) return 0;
  return counts_[static_cast<std::size_t>(delta + max_delta())];
}

std::uint64_t DeltaProfile::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::uint64_t BinTable::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::uint64_t BinTable::sum_of_squares() const noexcept {
  std::uint64_t s = 0;
  for (std::uint64_t c : counts) s += c * c;
  return s;
}

CharSumAccumulator s_sum_direct(const Character& chi, std::uint32_t N, unsigned workers) {
  const PrimeField& F = chi.field();
  require_box(N, F.p());
  // bc mod p for every (b, c), row-major.
  std::vector<Residue> bc(static_cast<std::size_t>(N) * N);
  for (std::uint32_t b = 1; b <= N; ++b) {
    for (std::uint32_t c = 1; c <= N; ++c) bc[(b - 1) * N + (c - 1)] = F.mul(b, c);
  }
  workers = std::min(resolve_workers(workers), N);
  std::vector<CharSumAccumulator> partial(workers, CharSumAccumulator(chi.order()));
  parallel_chunks(N, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    std::vector<std::int64_t> local(chi.order() + 1, 0);
    for (auto a = static_cast<std::uint32_t>(begin + 1); a <= end; ++a) {
      for (std::uint32_t d = 1; d <= N; ++d) {
        const Residue ad = F.mul(a, d);
        for (Residue v : bc) ++local[chi.index(F.sub(ad, v))];
      }
    }
    for (std::uint32_t k = 0; k <= chi.order(); ++k) partial[w].add_index(k, local[k]);
  });
  CharSumAccumulator acc(chi.order());
  for (const auto& part : partial) acc += part;
  return acc;
}

DeltaProfile delta_profile(std::uint32_t N) {
  if (N < 1) throw Error(Errc::OutOfRange, "N must be >= 1");
  const std::uint64_t n2 = static_cast<std::uint64_t>(N) * N;
  if (n2 >= (std::uint64_t{1} << 31)) throw Error(Errc::Overflow, "N^2 must stay below 2^31");
  const auto L = static_cast<std::size_t>(n2);
  // r[v] = #{(x, y) in [1,N]^2 : xy = v}, v in [0, L].
  std::vector<std::uint32_t> r(L + 1, 0);
  for (std::uint32_t x = 1; x <= N; ++x) {
    for (std::uint32_t y = 1; y <= N; ++y) ++r[static_cast<std::size_t>(x) * y];
  }
  std::vector<std::uint32_t> reversed(r.rbegin(), r.rend());
  // conv[k] = sum_i r[i] r[L - k + i]; Delta = k - L.
  const auto conv = ntt::convolve_exact(r, reversed);
  const std::size_t max_delta = L - 1;
  std::vector<std::uint64_t> counts(2 * max_delta + 1);
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] = conv[i + 1];
  return DeltaProfile(N, std::move(counts));
}

CharSumAccumulator contract(const DeltaProfile& profile, const Character& chi) {
  CharSumAccumulator acc(chi.order());
  const std::int64_t m = profile.max_delta();
  const auto counts = profile.counts();
  for (std::int64_t delta = -m; delta <= m; ++delta) {
    const std::uint64_t c = counts[static_cast<std::size_t>(delta + m)];
    if (c == 0) continue;
    acc.add_index(chi.index(chi.field().reduce(delta)), static_cast<std::int64_t>(c));
  }
  return acc;
}

CharSumAccumulator s_sum_binned(const Character& chi, std::uint32_t N) {
  require_box(N, chi.p());
  const auto n4 = static_cast<unsigned __int128>(N) * N * N * N;
  if (n4 > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max())) {
    throw Error(Errc::Overflow, "N^4 exceeds the tally capacity");
  }
  return contract(delta_profile(N), chi);
}

WeightedAccumulator u_sum_tally(const Character& chi, const WeightSeq& alpha,
                                const WeightSeq& beta, std::uint32_t N) {
  require_box(N, chi.p());
  if (alpha.size() < N || beta.size() < N) {
    throw Error(Errc::OutOfRange, "weight sequences shorter than N");
  }
  const std::size_t L = static_cast<std::size_t>(N) * N;
  // P_alpha[v] = sum_{ad = v} alpha_a, P_beta[v] = sum_{bc = v} beta_b.
  std::vector<double> pa(L + 1, 0.0), pb(L + 1, 0.0);
  for (std::uint32_t x = 1; x <= N; ++x) {
    for (std::uint32_t y = 1; y <= N; ++y) {
      pa[static_cast<std::size_t>(x) * y] += alpha.at(x);
      pb[static_cast<std::size_t>(x) * y] += beta.at(x);
    }
  }
  std::vector<std::pair<std::int64_t, double>> la, lb;
  for (std::size_t v = 1; v <= L; ++v) {
    if (pa[v] != 0.0) la.emplace_back(static_cast<std::int64_t>(v), pa[v]);
    if (pb[v] != 0.0) lb.emplace_back(static_cast<std::int64_t>(v), pb[v]);
  }
  const PrimeField& F = chi.field();
  WeightedAccumulator acc(chi.order());
  for (const auto& [v1, w1] : la) {
    for (const auto& [v2, w2] : lb) acc.add_index(chi.index(F.reduce(v1 - v2)), w1 * w2);
  }
  return acc;
}

std::complex<double> u_sum(const Character& chi, const WeightSeq& alpha, const WeightSeq& beta,
                           std::uint32_t N) {
  return u_sum_tally(chi, alpha, beta, N).value();
}

BinTable ratio_bins(const PrimeField& F, std::uint32_t A, std::uint32_t B, std::uint32_t C,
                    BinStrategy strategy) {
  const std::uint32_t p = F.p();
  if (A < 1 || B < 1 || C < 1 || A >= p || B >= p || C >= p) {
    throw Error(Errc::OutOfRange, "need 1 <= A, B, C < p");
  }
  if (strategy == BinStrategy::Auto) {
    strategy = static_cast<std::uint64_t>(A) * B > p ? BinStrategy::ProductTable
                                                     : BinStrategy::Direct;
  }
  std::vector<Residue> c_inv(C + 1, 0);
  for (std::uint32_t c = 1; c <= C; ++c) c_inv[c] = F.inv(c);

  BinTable bins{p, std::vector<std::uint64_t>(p, 0)};
  if (strategy == BinStrategy::Direct) {
    for (std::uint32_t a = 1; a <= A; ++a) {
      for (std::uint32_t b = 1; b <= B; ++b) {
        const Residue ab = F.mul(a, b);
        for (std::uint32_t c = 1; c <= C; ++c) ++bins.counts[F.mul(ab, c_inv[c])];
      }
    }
    return bins;
  }

  std::vector<std::uint64_t> products(p, 0);
  for (std::uint32_t a = 1; a <= A; ++a) {
    for (std::uint32_t b = 1; b <= B; ++b) ++products[F.mul(a, b)];
  }
  std::vector<std::pair<Residue, std::uint64_t>> support;
  for (Residue mu = 1; mu < p; ++mu) {
    if (products[mu] != 0) support.emplace_back(mu, products[mu]);
  }
  for (std::uint32_t c = 1; c <= C; ++c) {
    for (const auto& [mu, n] : support) bins.counts[F.mul(mu, c_inv[c])] += n;
  }
  return bins;
}

double t_abs_from_bins(const Character& chi, const BinTable& bins, std::span<const Residue> D,
                       std::span<const double> alpha) {
  if (D.size() != alpha.size()) throw Error(Errc::OutOfRange, "shift set and weights differ in size");
  check_shift_set(D, chi.p());
  check_weights(alpha);
  if (bins.p != chi.p()) throw Error(Errc::OutOfRange, "bin table built for a different field");
  const PrimeField& F = chi.field();
  WeightedAccumulator inner(chi.order());
  double total = 0.0;
  for (Residue lambda = 1; lambda < bins.p; ++lambda) {
    const std::uint64_t I = bins.counts[lambda];
    if (I == 0) continue;
    inner.clear();
    for (std::size_t j = 0; j < D.size(); ++j) {
      inner.add_index(chi.index(F.sub(lambda, D[j])), alpha[j]);
    }
    total += static_cast<double>(I) * std::sqrt(inner.norm());
  }
  return total;
}

double t_abs_sum(const Character& chi, std::uint32_t A, std::uint32_t B, std::uint32_t C,
                 std::span<const Residue> D, std::span<const double> alpha) {
  const auto abc = static_cast<std::uint64_t>(A) * B * C;
  if (abc >= chi.p()) {
    throw Error(Errc::DomainTooLarge, "ABC = " + std::to_string(abc) + " must be below p");
  }
  return t_abs_from_bins(chi, ratio_bins(chi.field(), A, B, C), D, alpha);
}

double t_n_sum(const Character& chi, std::uint32_t N) {
  require_box(N, chi.p());
  std::vector<Residue> D(N);
  std::iota(D.begin(), D.end(), Residue{1});
  const std::vector<double> ones(N, 1.0);
  return t_abs_from_bins(chi, ratio_bins(chi.field(), N, N, N), D, ones);
}

double HolderChain::lhs() const noexcept { return std::pow(t_abs, 2 * nu); }
double HolderChain::rhs() const noexcept { return sigma1 * sigma2 * sigma3; }

HolderChain holder_chain(const Character& chi, std::uint32_t A, std::uint32_t B, std::uint32_t C,
                         std::span<const Residue> D, std::span<const double> alpha, int nu) {
  HolderChain out;
  out.nu = nu;
  const BinTable bins = ratio_bins(chi.field(), A, B, C);
  out.t_abs = t_abs_from_bins(chi, bins, D, alpha);
  // chi(lambda - d) = chi(lambda + (p - d)).
  std::vector<Residue> negated(D.size());
  for (std::size_t j = 0; j < D.size(); ++j) negated[j] = chi.field().neg(D[j]);
  out.sigma1 = de_moment(chi, negated, alpha, nu);
  out.sigma2 = std::pow(static_cast<double>(bins.total()), 2 * nu - 2);
  out.sigma3 = static_cast<double>(bins.sum_of_squares());
  return out;
}

}  // namespace detsum
