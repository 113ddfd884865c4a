#include <gtest/gtest.h>

#include <random>

#include "detsum/detsums.hpp"
#include "detsum/error.hpp"
#include "oracles.hpp"

namespace detsum {
namespace {

CharSumAccumulator from_oracle(const std::vector<std::int64_t>& counts) {
  CharSumAccumulator acc(static_cast<std::uint32_t>(counts.size() - 1));
  for (std::uint32_t k = 0; k < counts.size(); ++k) acc.add_index(k, counts[k]);
  return acc;
}

TEST(DetSums, SingleTermBoxIsZero) {
  const Character chi = make_character(make_field(13), 2);
  const auto acc = s_sum_direct(chi, 1);
  EXPECT_EQ(acc.zero_terms(), 1);
  EXPECT_EQ(acc.real_integer_value(), 0);
  EXPECT_EQ(s_sum_binned(chi, 1), acc);
}

TEST(DetSums, SmallLegendreFixture) {
  const Character chi = make_character(make_field(5), 2);
  const oracle::CharTable table(5, 2);
  const auto expect = from_oracle(oracle::s_sum(table, 2));
  ASSERT_EQ(expect.real_integer_value(), -2);
  EXPECT_EQ(s_sum_direct(chi, 2), expect);
  EXPECT_EQ(s_sum_binned(chi, 2), expect);
}

TEST(DetSums, OddCharactersCancel) {
  for (std::uint32_t p : {7U, 11U, 19U, 43U, 103U}) {
    const Character chi = make_character(make_field(p), 2);
    ASSERT_TRUE(chi.is_odd());
    for (std::uint32_t N : {2U, 3U, 5U, 6U}) {
      const auto direct = s_sum_direct(chi, N);
      EXPECT_EQ(direct.counts()[0], direct.counts()[1]);
      EXPECT_TRUE(direct.is_exact_zero());
      EXPECT_TRUE(s_sum_binned(chi, N).is_exact_zero());
    }
  }
  const Character quartic = make_character(make_field(13), 4);
  ASSERT_TRUE(quartic.is_odd());
  EXPECT_TRUE(s_sum_binned(quartic, 9).is_exact_zero());
}

TEST(DetSums, DirectAndBinnedAgreeWithOracle) {
  for (auto [p, d] : {std::pair{13U, 2U}, {13U, 3U}, {31U, 5U}, {61U, 4U}, {97U, 3U}, {97U, 2U}}) {
    const Character chi = make_character(make_field(p), d);
    const oracle::CharTable table(p, d);
    for (std::uint32_t N : {1U, 2U, 5U, 8U, 12U}) {
      const auto expect = from_oracle(oracle::s_sum(table, N));
      EXPECT_EQ(s_sum_direct(chi, N), expect) << p << "," << d << "," << N;
      EXPECT_EQ(s_sum_binned(chi, N), expect) << p << "," << d << "," << N;
    }
  }
}

TEST(DetSums, DirectSumIsWorkerCountIndependent) {
  const Character chi = make_character(make_field(101), 5);
  EXPECT_EQ(s_sum_direct(chi, 20, 1), s_sum_direct(chi, 20, 3));
}

TEST(DetSums, DeltaProfileOfTwo) {
  const DeltaProfile prof = delta_profile(2);
  const auto brute = oracle::delta_profile(2);
  ASSERT_EQ(brute.at(0), 6U);
  ASSERT_EQ(brute.at(3), 1U);
  ASSERT_EQ(brute.at(-3), 1U);
  EXPECT_EQ(prof.count(0), 6U);
  EXPECT_EQ(prof.count(3), 1U);
  EXPECT_EQ(prof.count(-3), 1U);
  EXPECT_EQ(prof.max_delta(), 3);
  EXPECT_EQ(prof.total(), 16U);
}

TEST(DetSums, DeltaProfileMatchesEnumeration) {
  for (std::uint32_t N = 1; N <= 9; ++N) {
    const DeltaProfile prof = delta_profile(N);
    const auto brute = oracle::delta_profile(N);
    for (std::int64_t delta = -prof.max_delta(); delta <= prof.max_delta(); ++delta) {
      const auto it = brute.find(delta);
      ASSERT_EQ(prof.count(delta), it == brute.end() ? 0U : it->second) << N << " " << delta;
    }
  }
}

TEST(DetSums, DeltaProfileIsSymmetricAndComplete) {
  for (std::uint32_t N : {10U, 33U, 64U, 100U}) {
    const DeltaProfile prof = delta_profile(N);
    const std::uint64_t n4 = static_cast<std::uint64_t>(N) * N * N * N;
    EXPECT_EQ(prof.total(), n4);
    for (std::int64_t delta = 0; delta <= prof.max_delta(); ++delta) {
      ASSERT_EQ(prof.count(delta), prof.count(-delta));
    }
  }
}

TEST(DetSums, USumSpecializations) {
  const Character chi = make_character(make_field(31), 3);
  const std::uint32_t N = 6;
  EXPECT_EQ(std::abs(u_sum(chi, WeightSeq(std::vector<double>(N, 0.0)), WeightSeq::ones(N), N)), 0.0);

  const auto tally = u_sum_tally(chi, WeightSeq::ones(N), WeightSeq::ones(N), N);
  const auto s = s_sum_direct(chi, N);
  for (std::uint32_t k = 0; k < 3; ++k) EXPECT_EQ(tally.weights()[k], static_cast<double>(s.counts()[k]));
}

TEST(DetSums, USumSmallWeightedFixture) {
  const Character chi = make_character(make_field(5), 2);
  const std::vector<double> alpha{1.0, -1.0};
  const std::vector<double> beta{1.0, 1.0};
  const auto want = oracle::u_sum(oracle::CharTable(5, 2), alpha, beta, 2);
  const auto got = u_sum_tally(chi, WeightSeq(alpha), WeightSeq(beta), 2);
  EXPECT_EQ(got.weights()[0], want[0]);
  EXPECT_EQ(got.weights()[1], want[1]);
  EXPECT_EQ(u_sum(chi, WeightSeq(alpha), WeightSeq(beta), 2).real(), want[0] - want[1]);
}

TEST(DetSums, USumConjugateSymmetry) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const Character chi = make_character(make_field(37), 4);
  const std::uint32_t N = 9;
  std::vector<double> a(N), b(N);
  for (auto& v : a) v = unit(rng);
  for (auto& v : b) v = unit(rng);
  const auto u = u_sum(chi, WeightSeq(a), WeightSeq(b), N);
  const auto ubar = u_sum(chi.conjugate(), WeightSeq(a), WeightSeq(b), N);
  EXPECT_NEAR(u.real(), ubar.real(), 1e-9);
  EXPECT_NEAR(u.imag(), -ubar.imag(), 1e-9);
}

TEST(DetSums, WeightsAreBounded) {
  EXPECT_THROW(WeightSeq(std::vector<double>{0.5, 1.01}), Error);
  try {
    WeightSeq(std::vector<double>{-2.0});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::WeightOutOfRange);
  }
}

TEST(DetSums, RatioBinsExamples) {
  const PrimeField F7(7);
  const BinTable unit = ratio_bins(F7, 1, 1, 1);
  EXPECT_EQ(unit.counts[1], 1U);
  EXPECT_EQ(unit.total(), 1U);

  const BinTable two = ratio_bins(F7, 2, 2, 2);
  EXPECT_EQ(two.counts[1], 3U);
  EXPECT_EQ(two.total(), 8U);
  EXPECT_EQ(two.counts, oracle::ratio_bins(7, 2, 2, 2));
}

TEST(DetSums, RatioBinStrategiesAgree) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t p = std::array{97U, 101U, 211U, 1009U}[trial % 4];
    std::uniform_int_distribution<std::uint32_t> side(1, 30);
    const std::uint32_t A = side(rng), B = side(rng), C = side(rng);
    const PrimeField F(p);
    const BinTable direct = ratio_bins(F, A, B, C, BinStrategy::Direct);
    const BinTable table = ratio_bins(F, A, B, C, BinStrategy::ProductTable);
    EXPECT_EQ(direct.counts, table.counts);
    EXPECT_EQ(direct.total(), static_cast<std::uint64_t>(A) * B * C);
    EXPECT_EQ(direct.counts, oracle::ratio_bins(p, A, B, C));
  }
}

TEST(DetSums, TAbsExamples) {
  const auto F = make_field(11);
  const Character chi = make_character(F, 2);
  const std::vector<Residue> D{1, 2};
  EXPECT_EQ(t_abs_sum(chi, 2, 2, 2, D, std::vector<double>{0.0, 0.0}), 0.0);

  const std::vector<double> ones{1.0, 1.0};
  const double want = oracle::t_abs(oracle::CharTable(11, 2), 2, 2, 2, {1, 2}, ones);
  EXPECT_NEAR(t_abs_sum(chi, 2, 2, 2, D, ones), want, 1e-12);

  // A single shift d0 only loses the triples landing on lambda = d0.
  const BinTable bins = ratio_bins(*F, 2, 2, 2);
  for (Residue d0 : {1U, 2U, 4U}) {
    const double t = t_abs_sum(chi, 2, 2, 2, std::vector<Residue>{d0}, std::vector<double>{1.0});
    EXPECT_EQ(t, static_cast<double>(8 - bins.counts[d0]));
  }
}

TEST(DetSums, TAbsRequiresSmallBox) {
  const Character chi = make_character(make_field(11), 2);
  try {
    (void)t_abs_sum(chi, 3, 2, 2, std::vector<Residue>{1}, std::vector<double>{1.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DomainTooLarge);
  }
  EXPECT_THROW((void)t_abs_sum(chi, 2, 2, 2, std::vector<Residue>{1}, std::vector<double>{-1.5}),
               Error);
}

TEST(DetSums, TNSumMatchesLiteralSum) {
  const Character chi = make_character(make_field(13), 2);
  EXPECT_EQ(t_n_sum(chi, 1), 0.0);
  for (auto [p, d] : {std::pair{13U, 2U}, {37U, 3U}, {61U, 6U}, {97U, 2U}}) {
    const Character c = make_character(make_field(p), d);
    const oracle::CharTable table(p, d);
    for (std::uint32_t N = 1; N <= 8; ++N) {
      std::vector<std::uint32_t> D(N);
      for (std::uint32_t i = 0; i < N; ++i) D[i] = i + 1;
      const double want = oracle::t_abs(table, N, N, N, D, std::vector<double>(N, 1.0));
      const double got = t_n_sum(c, N);
      EXPECT_NEAR(got, want, 1e-9 * std::max(1.0, want)) << p << "," << d << "," << N;
      EXPECT_LE(got, std::pow(N, 4) * (1 + 1e-12));
    }
  }
}

TEST(DetSums, HolderChainHolds) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint32_t p = std::array{61U, 79U, 97U}[trial % 3];
    const Character chi = make_character(make_field(p), 3);
    const std::uint32_t A = 1 + trial % 4, B = 1 + trial % 3, C = 2;
    std::vector<Residue> D{1, 3, 7};
    std::vector<double> alpha{1.0, -1.0, 1.0};
    for (int nu : {1, 2}) {
      const HolderChain h = holder_chain(chi, A, B, C, D, alpha, nu);
      EXPECT_TRUE(h.holds()) << h.lhs() << " > " << h.rhs();
      EXPECT_EQ(h.sigma2, std::pow(A * B * C, 2 * nu - 2));
    }
  }
}

}  // namespace
}  // namespace detsum
