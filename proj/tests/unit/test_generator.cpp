#include <gtest/gtest.h>

#include <cmath>

#include "ira/error.hpp"
#include "ira/generator.hpp"
#include "ira/truth.hpp"

using namespace ira;

namespace {

std::array<std::int64_t, 4> cell_counts(const Scenario& s, std::int64_t n, std::uint64_t setting) {
  RngStream rng(2024, setting, 0);
  const auto t = simulate_study(s, n, rng);
  return {t.n11, t.n10, t.n01, t.n00};
}

}  // namespace

TEST(Generator, CertainRatersCopyTruth) {
  Scenario s;
  s.p1 = s.p2 = 0.0;
  s.theta = 0.3;
  RngStream rng(1, 0, 0);
  ScenarioSampler sampler(s);
  for (int i = 0; i < 10000; ++i) {
    const auto o = sampler.subject(rng);
    ASSERT_FALSE(o.uncertain1);
    ASSERT_FALSE(o.uncertain2);
    ASSERT_EQ(o.vote1_positive, o.truth_positive);
    ASSERT_EQ(o.vote2_positive, o.truth_positive);
  }
  RngStream rng2(1, 1, 0);
  const auto t = simulate_study(s, 100, rng2);
  EXPECT_EQ(t.n10, 0);
  EXPECT_EQ(t.n01, 0);
  EXPECT_EQ(t.n11 + t.n00, 100);
}

TEST(Generator, AlwaysUncertainFrequencies) {
  Scenario s;
  s.p1 = s.p2 = 1.0;
  s.rho_c = 0.5;
  const auto c = cell_counts(s, 1000000, 1);
  const double expected[] = {1.0 / 3, 1.0 / 6, 1.0 / 6, 1.0 / 3};
  for (std::size_t i = 0; i < 4; ++i) {
    const double sigma = std::sqrt(expected[i] * (1 - expected[i]) / 1e6);
    EXPECT_NEAR(c[i] / 1e6, expected[i], 4 * sigma) << i;
  }
}

TEST(Generator, MixedCertaintyMarginal) {
  Scenario s;
  s.p1 = 0.0;
  s.p2 = 1.0;
  s.m2 = 0.3;
  s.rho_c = 0.0;
  RngStream rng(5, 0, 0);
  ScenarioSampler sampler(s);
  constexpr int n = 1000000;
  int right = 0;
  for (int i = 0; i < n; ++i) {
    const auto o = sampler.subject(rng);
    right += o.vote2_positive == o.truth_positive ? 1 : 0;
  }
  EXPECT_NEAR(static_cast<double>(right) / n, 0.7, 4 * std::sqrt(0.21 / n));
}

TEST(Generator, DeterministicForFixedTriple) {
  const Scenario s{0.4, 0.5, 0.3, 0.2, 0.4, 0.5, 0.7};
  RngStream a(77, 3, 9), b(77, 3, 9);
  EXPECT_EQ(simulate_study(s, 500, a), simulate_study(s, 500, b));
}

TEST(Generator, RejectsEmptyStudyAndInvalidScenario) {
  RngStream rng(1, 0, 0);
  EXPECT_THROW(simulate_study(Scenario{}, 0, rng), InvalidInput);
  Scenario bad;
  bad.m2 = 0.7;
  EXPECT_THROW(ScenarioSampler{bad}, InvalidInput);
}

TEST(Generator, MeanCellProportionOverStudies) {
  const Scenario s{0.3, 0.5, 0.7, 0.2, 0.4, 0.5, 0.5};
  const double p11 = theoretical_cell_probs(s).p11;
  ScenarioSampler sampler(s);
  constexpr int studies = 10000;
  constexpr int n = 200;
  double sum = 0.0;
  for (int r = 0; r < studies; ++r) {
    RngStream rng(8, 0, static_cast<std::uint64_t>(r));
    sum += static_cast<double>(sampler.study(n, rng).n11) / n;
  }
  const double sigma = std::sqrt(p11 * (1 - p11) / (static_cast<double>(studies) * n));
  EXPECT_NEAR(sum / studies, p11, 4 * sigma);
}

TEST(Generator, PrevalenceSymmetry) {
  const Scenario s{0.2, 0.5, 0.3, 0.3, 0.2, 0.5, 0.4};
  Scenario r = s;
  r.theta = 0.8;
  const auto a = cell_counts(s, 1000000, 10);
  const auto b = cell_counts(r, 1000000, 11);
  // Chi-square homogeneity of a against b with cells swapped (3 df, 0.999 quantile 16.27)
  const std::array<std::int64_t, 4> swapped{b[3], b[2], b[1], b[0]};
  double chi = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const double pooled = (a[i] + swapped[i]) / 2.0;
    if (pooled == 0) continue;
    chi += (a[i] - pooled) * (a[i] - pooled) / pooled + (swapped[i] - pooled) * (swapped[i] - pooled) / pooled;
  }
  EXPECT_LT(chi, 16.27);
}

TEST(Generator, IndependentGuessingAgreementRate) {
  const Scenario s{0.6, 0.4, 0.7, 0.5, 0.5, 0.0, 0.0};
  const auto c = cell_counts(s, 1000000, 12);
  const auto u = uncertainty_probs(s.p1, s.p2, s.rho_u);
  const double pa = u.u00 + 0.5 * (u.u11 + u.u10 + u.u01);
  const double agree = (c[0] + c[3]) / 1e6;
  EXPECT_NEAR(agree, pa, 4 * std::sqrt(pa * (1 - pa) / 1e6));
}
