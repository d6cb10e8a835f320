#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ira/error.hpp"
#include "ira/estimators.hpp"
#include "oracles.hpp"

using namespace ira;

namespace {

double value(MethodId m, const ContingencyTable& t, ContinuityPolicy policy = ContinuityPolicy::add_half) {
  const auto e = estimate(m, t, policy);
  EXPECT_TRUE(e.defined()) << method_label(m);
  return e.value.value_or(NAN);
}

const ContingencyTable kTypical{40, 5, 15, 40};

}  // namespace

TEST(Estimators, TypicalTableValues) {
  EXPECT_NEAR(value(MethodId::PercentAgreement, kTypical), 0.8, 1e-15);
  EXPECT_NEAR(value(MethodId::CohenKappa, kTypical), 3050.0 / 5050.0, 1e-15);
  EXPECT_NEAR(value(MethodId::ScottPi, kTypical), 0.6, 1e-15);
  EXPECT_NEAR(value(MethodId::BennettS, kTypical), 0.6, 1e-15);
  EXPECT_NEAR(value(MethodId::GwetAC1, kTypical), 0.6, 1e-15);
  EXPECT_NEAR(value(MethodId::KrippendorffAlpha, kTypical), 0.602, 1e-15);
  EXPECT_NEAR(value(MethodId::MakRho, kTypical), 6020.0 / 9980.0, 1e-15);
  EXPECT_NEAR(value(MethodId::MaxwellPillinerR11, kTypical), 3050.0 / 4950.0, 1e-15);
  EXPECT_NEAR(value(MethodId::VanOestIr2, kTypical), 0.6, 1e-15);
  EXPECT_NEAR(value(MethodId::YuleY, kTypical), (40.0 - std::sqrt(75.0)) / (40.0 + std::sqrt(75.0)), 1e-15);
}

TEST(Estimators, PublishedRoundedValues) {
  EXPECT_NEAR(value(MethodId::CohenKappa, kTypical), 0.603960, 5e-7);
  EXPECT_NEAR(value(MethodId::MakRho, kTypical), 0.603206, 5e-7);
  EXPECT_NEAR(value(MethodId::MaxwellPillinerR11, kTypical), 0.616162, 5e-7);
  // The published value 0.644050 is rounded loosely; the exact value is 0.6440522...
  EXPECT_NEAR(value(MethodId::YuleY, kTypical), 0.644050, 1e-5);
}

TEST(Estimators, PerfectAgreement) {
  const ContingencyTable t{12, 0, 0, 12};
  for (auto m : kAllMethods) {
    if (m == MethodId::YuleY) continue;
    EXPECT_DOUBLE_EQ(value(m, t), 1.0) << method_label(m);
  }
  // Y needs a nonzero off-diagonal cell; the default 0.5 correction gives k/(k+1)
  const auto y = estimate(MethodId::YuleY, t);
  EXPECT_DOUBLE_EQ(*y.value, 12.0 / 13.0);
  EXPECT_EQ(y.applied_correction, 0.5);
  EXPECT_FALSE(estimate(MethodId::YuleY, t, ContinuityPolicy::none).defined());
}

TEST(Estimators, ChanceAndPureDisagreement) {
  EXPECT_DOUBLE_EQ(value(MethodId::CohenKappa, {25, 25, 25, 25}), 0.0);
  const ContingencyTable t{0, 10, 10, 0};
  EXPECT_DOUBLE_EQ(value(MethodId::BennettS, t), -1.0);
  EXPECT_DOUBLE_EQ(value(MethodId::ScottPi, t), -1.0);
  EXPECT_DOUBLE_EQ(value(MethodId::CohenKappa, t), -1.0);
  EXPECT_DOUBLE_EQ(value(MethodId::GwetAC1, t), -1.0);
}

TEST(Estimators, EstimateAllOrderAndUndefinedFlags) {
  const auto all = estimate_all(kTypical);
  for (std::size_t i = 0; i < kMethodCount; ++i) EXPECT_EQ(all[i].method, kAllMethods[i]);
  EXPECT_NEAR(*all[index_of(MethodId::CohenKappa)].value, 0.603960, 5e-7);
  EXPECT_DOUBLE_EQ(*all[index_of(MethodId::BennettS)].value, 0.6);

  const auto single = estimate_all(ContingencyTable{10, 0, 0, 0}, ContinuityPolicy::none);
  EXPECT_FALSE(single[index_of(MethodId::ScottPi)].defined());
  EXPECT_FALSE(single[index_of(MethodId::CohenKappa)].defined());
  EXPECT_FALSE(single[index_of(MethodId::KrippendorffAlpha)].defined());
  // AC1 has chance agreement 2w(1-w) = 0 here, so it stays defined
  EXPECT_DOUBLE_EQ(*single[index_of(MethodId::GwetAC1)].value, 1.0);
  EXPECT_DOUBLE_EQ(*single[index_of(MethodId::PercentAgreement)].value, 1.0);
  EXPECT_DOUBLE_EQ(*single[index_of(MethodId::BennettS)].value, 1.0);
  EXPECT_FALSE(single[index_of(MethodId::YuleY)].applied_correction.has_value());
}

TEST(Estimators, YuleCorrectionOnlyWhenACellIsZero) {
  EXPECT_FALSE(estimate(MethodId::YuleY, kTypical).applied_correction.has_value());
  const auto y = estimate(MethodId::YuleY, ContingencyTable{10, 0, 3, 7});
  ASSERT_TRUE(y.defined());
  EXPECT_EQ(*y.applied_correction, 0.5);
  EXPECT_NEAR(*y.value, static_cast<double>(oracle::yule_y_real(10.5, 0.5, 3.5, 7.5)), 1e-15);
}

TEST(Estimators, EmptyTableThrows) {
  EXPECT_THROW(estimate(MethodId::CohenKappa, RealTable{}), InvalidInput);
  EXPECT_THROW(estimate_all(RealTable{0, -1, 0, 2}), InvalidInput);
}

TEST(Estimators, LabelsRoundTrip) {
  for (auto m : kAllMethods) {
    EXPECT_EQ(method_from_label(method_label(m)), m);
    EXPECT_FALSE(method_name(m).empty());
  }
  EXPECT_FALSE(method_from_label("nonsense").has_value());
}

TEST(Estimators, IccAnovaIdentities) {
  EXPECT_NEAR(*icc_anova(IccModel::no_rater_effect, kTypical), 6020.0 / 9980.0, 1e-14);
  EXPECT_NEAR(*icc_anova(IccModel::fixed_rater, kTypical), 3050.0 / 4950.0, 1e-14);
  EXPECT_LE(std::fabs(*icc_anova(IccModel::random_rater, kTypical) - 3050.0 / 5050.0), 5.0 / 100.0);
  EXPECT_THROW(icc_anova(IccModel::fixed_rater, ContingencyTable{1, 0, 0, 0}), InvalidInput);
}

TEST(Estimators, IccAnovaMatchesSubjectLevelAnova) {
  std::mt19937_64 gen(5);
  for (int i = 0; i < 300; ++i) {
    const auto t = oracle::random_table(gen, 2, 120);
    const auto a = oracle::anova(t);
    const auto q1 = icc_anova(IccModel::no_rater_effect, t);
    const auto q2 = icc_anova(IccModel::random_rater, t);
    const auto q3 = icc_anova(IccModel::fixed_rater, t);
    if (a.ms_subject + a.ms_error_oneway > 1e-12 && q1) {
      EXPECT_NEAR(*q1, static_cast<double>(oracle::q1(a)), 1e-12);
    }
    if (a.ms_subject + a.ms_error_twoway > 1e-12 && q3) {
      EXPECT_NEAR(*q3, static_cast<double>(oracle::q3(a)), 1e-12);
    }
    if (q2) EXPECT_NEAR(*q2, static_cast<double>(oracle::q2(a)), 1e-12);
  }
}

// Textbook chance-agreement forms versus the count-based closed forms.
TEST(EstimatorsProperty, ClosedFormsMatchChanceAgreementDefinitions) {
  std::mt19937_64 gen(17);
  int checked = 0;
  for (int i = 0; i < 5000; ++i) {
    const auto t = oracle::random_table(gen, 4, 400);
    const auto all = estimate_all(t, ContinuityPolicy::none);
    auto check = [&](MethodId m, oracle::ld expected) {
      const auto& e = all[index_of(m)];
      if (!e.defined() || !std::isfinite(static_cast<double>(expected))) return;
      EXPECT_NEAR(*e.value, static_cast<double>(expected), 1e-12) << method_label(m);
      ++checked;
    };
    check(MethodId::CohenKappa, oracle::kappa(t));
    check(MethodId::ScottPi, oracle::scott_pi(t));
    check(MethodId::GwetAC1, oracle::gwet_ac1(t));
    check(MethodId::BennettS, oracle::bennett_s(t));
    check(MethodId::KrippendorffAlpha, oracle::krippendorff_alpha(t));
    check(MethodId::VanOestIr2, oracle::van_oest(t));
    if (t.n10 > 0 && t.n01 > 0 && t.n11 > 0 && t.n00 > 0) check(MethodId::YuleY, oracle::yule_y(t));
    const auto a = oracle::anova(t);
    if (a.ms_subject + a.ms_error_oneway > 0) check(MethodId::MakRho, oracle::q1(a));
    if (a.ms_subject + a.ms_error_twoway > 0) check(MethodId::MaxwellPillinerR11, oracle::q3(a));
  }
  EXPECT_GT(checked, 40000);
}

TEST(EstimatorsProperty, ChanceAgreementDecomposition) {
  std::mt19937_64 gen(19);
  for (int i = 0; i < 2000; ++i) {
    const auto t = to_real(oracle::random_table(gen, 4, 300));
    const auto all = estimate_all(t, ContinuityPolicy::none);
    const double pa = proportions(t).pa;
    for (auto m : {MethodId::CohenKappa, MethodId::ScottPi, MethodId::GwetAC1, MethodId::BennettS,
                   MethodId::VanOestIr2, MethodId::KrippendorffAlpha, MethodId::MakRho}) {
      const auto pe = chance_agreement(m, t);
      const auto& e = all[index_of(m)];
      if (!pe || !e.defined() || std::fabs(1.0 - *pe) < 1e-9) continue;
      EXPECT_NEAR(*e.value, (pa - *pe) / (1.0 - *pe), 1e-10) << method_label(m);
    }
    EXPECT_FALSE(chance_agreement(MethodId::YuleY, t).has_value());
    EXPECT_FALSE(chance_agreement(MethodId::MaxwellPillinerR11, t).has_value());
  }
}

TEST(EstimatorsProperty, OrderingRelations) {
  std::mt19937_64 gen(23);
  int below_half = 0;
  for (int i = 0; i < 10000; ++i) {
    auto t = oracle::random_table(gen, 4, 400);
    if (i % 5 == 0) t.n01 = t.n10;
    if (t.total() == 0) continue;
    const auto all = estimate_all(t, ContinuityPolicy::none);
    const auto k = all[index_of(MethodId::CohenKappa)].value;
    const auto p = all[index_of(MethodId::ScottPi)].value;
    const auto s = all[index_of(MethodId::BennettS)].value;
    const auto r = all[index_of(MethodId::MakRho)].value;
    const auto r11 = all[index_of(MethodId::MaxwellPillinerR11)].value;
    if (!k || !p || !s || !r || !r11) continue;
    constexpr double eps = 1e-12;
    // S - kappa = (1 - pa)(2 pe - 1) / (1 - pe): S >= kappa exactly when pe >= 1/2
    const auto q = oracle::props(t);
    const double pe = static_cast<double>((q.p11 + q.p10) * (q.p11 + q.p01) + (q.p00 + q.p01) * (q.p00 + q.p10));
    if (pe >= 0.5) {
      EXPECT_GE(*s, *k - eps);
    } else {
      ++below_half;
      EXPECT_LE(*s, *k + eps);
    }
    EXPECT_GE(std::fabs(*r11), std::fabs(*k) - eps);
    EXPECT_GE(*k, *p - eps);
    EXPECT_GE(*r, *p - eps);
    EXPECT_GE(*r11, *p - eps);
    if (t.n10 == t.n01) {
      EXPECT_NEAR(*k, *p, eps);
      EXPECT_NEAR(*r11, *p, eps);
      EXPECT_NEAR(std::fabs(*r11), std::fabs(*k), eps);
      // rho and pi differ by O(1/N) unless there is no disagreement at all
      if (t.n10 == 0 || t.n11 + t.n00 == 0) EXPECT_NEAR(*r, *p, eps);
      else EXPECT_GT(*r, *p);
      EXPECT_LE((*r - *p) * static_cast<double>(t.total()), 2.0);
    }
  }
  EXPECT_GT(below_half, 100);
}

TEST(EstimatorsProperty, SymmetricStructureEqualities) {
  std::mt19937_64 gen(29);
  std::uniform_int_distribution<std::int64_t> cell(0, 80);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t a = cell(gen), b = cell(gen), c = cell(gen);
    if (a + b + c == 0) continue;
    const ContingencyTable diag{a, b, c, a};
    const auto e = estimate_all(diag, ContinuityPolicy::none);
    if (e[index_of(MethodId::ScottPi)].defined() && e[index_of(MethodId::GwetAC1)].defined()) {
      EXPECT_NEAR(*e[index_of(MethodId::GwetAC1)].value, *e[index_of(MethodId::ScottPi)].value, 1e-12);
    }
    const ContingencyTable full{a, b, b, a};
    if (full.total() == 0) continue;
    const auto f = estimate_all(full, ContinuityPolicy::none);
    if (f[index_of(MethodId::CohenKappa)].defined()) {
      EXPECT_NEAR(*f[index_of(MethodId::CohenKappa)].value, *f[index_of(MethodId::ScottPi)].value, 1e-12);
      EXPECT_NEAR(*f[index_of(MethodId::CohenKappa)].value, *f[index_of(MethodId::BennettS)].value, 1e-12);
    }
  }
}

TEST(EstimatorsProperty, PabakAndHoehlerEquivalences) {
  std::mt19937_64 gen(31);
  for (int i = 0; i < 3000; ++i) {
    const auto t = oracle::random_table(gen, 4, 400);
    const auto s = estimate(MethodId::BennettS, t);
    const auto pabak = estimate(MethodId::CohenKappa, byrt_adjust(t));
    if (pabak.defined()) EXPECT_NEAR(*pabak.value, *s.value, 1e-10);
    if (t.n11 > 0 && t.n10 > 0 && t.n01 > 0 && t.n00 > 0) {
      const auto hk = estimate(MethodId::CohenKappa, hoehler_adjust(t));
      EXPECT_NEAR(*hk.value, *estimate(MethodId::YuleY, t).value, 1e-10);
    }
  }
}

TEST(EstimatorsProperty, RelabelAndTransposeInvariance) {
  std::mt19937_64 gen(37);
  for (int i = 0; i < 3000; ++i) {
    const auto t = to_real(oracle::random_table(gen, 1, 300));
    const auto base = estimate_all(t);
    const auto rel = estimate_all(relabel(t));
    const auto tr = estimate_all(transpose(t));
    for (std::size_t m = 0; m < kMethodCount; ++m) {
      ASSERT_EQ(base[m].defined(), rel[m].defined());
      ASSERT_EQ(base[m].defined(), tr[m].defined());
      if (!base[m].defined()) continue;
      EXPECT_NEAR(*rel[m].value, *base[m].value, 1e-12);
      EXPECT_NEAR(*tr[m].value, *base[m].value, 1e-12);
      EXPECT_LE(*base[m].value, 1.0 + 1e-12);
    }
  }
}

TEST(EstimatorsProperty, AsymptoticFamilyConvergesToPi) {
  std::mt19937_64 gen(41);
  for (int i = 0; i < 200; ++i) {
    const auto t = oracle::random_table(gen, 20, 60);
    for (auto m : {MethodId::KrippendorffAlpha, MethodId::MakRho, MethodId::VanOestIr2}) {
      std::vector<double> scaled_gap;
      for (std::int64_t c : {1, 10, 100, 1000, 10000}) {
        const ContingencyTable s{t.n11 * c, t.n10 * c, t.n01 * c, t.n00 * c};
        const auto all = estimate_all(s, ContinuityPolicy::none);
        const auto pi = all[index_of(MethodId::ScottPi)].value;
        if (!pi) break;
        scaled_gap.push_back(std::fabs(*all[index_of(m)].value - *pi) * static_cast<double>(s.total()));
      }
      if (scaled_gap.size() < 5) continue;
      // N |m - pi| settles to a finite constant
      EXPECT_LE(scaled_gap.back(), 20.0) << method_label(m);
      EXPECT_NEAR(scaled_gap[4], scaled_gap[3], 0.01 * scaled_gap[3] + 1e-6) << method_label(m);
    }
  }
}
