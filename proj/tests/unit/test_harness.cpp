#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ira/error.hpp"
#include "ira/harness.hpp"
#include "ira/results_io.hpp"

using namespace ira;
namespace fs = std::filesystem;

namespace {

GridSpec small_grid() {
  GridSpec g;
  g.theta = {0.2, 0.8};
  g.p1 = {0.1, 0.9};
  g.p2 = {0.5};
  g.m1 = {0.1, 0.4};
  g.m2 = {0.3};
  g.rho_u = {0.5};
  g.rho_c = {0.1, 0.9};
  g.n = {20, 60};
  g.reps = 25;
  return g;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("ira_harness_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  [[nodiscard]] std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

}  // namespace

TEST(Harness, PerfectRatersHaveZeroBiasAndFullCoverage) {
  Scenario s;
  s.p1 = s.p2 = 0.0;
  const auto r = run_setting(s, 50, 40, 1, 0);
  ASSERT_TRUE(r.k.has_value());
  EXPECT_EQ(*r.k, 1.0);
  for (auto m : kAllMethods) {
    const auto& ms = r.methods[index_of(m)];
    EXPECT_EQ(ms.used + ms.undefined, 40);
    if (m == MethodId::YuleY) {
      EXPECT_EQ(ms.corrected, 40);
      EXPECT_LT(*ms.bias, 0.0);
      continue;
    }
    ASSERT_GT(ms.used, 0) << method_label(m);
    EXPECT_EQ(*ms.bias, 0.0) << method_label(m);
    EXPECT_EQ(*ms.coverage, 1.0) << method_label(m);
  }
}

TEST(Harness, PercentAgreementOverestimates) {
  const Scenario s{0.5, 0.5, 0.5, 0.3, 0.3, 0.5, 0.5};
  const auto r = run_setting(s, 100, 1000, 7, 0);
  EXPECT_GT(*r.methods[index_of(MethodId::PercentAgreement)].bias, 0.0);
}

TEST(Harness, CountsAndRangesAreConsistent) {
  const auto g = small_grid();
  const auto res = run_grid(g, 5);
  ASSERT_TRUE(res.completed);
  ASSERT_EQ(res.settings.size(), setting_count(g));
  for (const auto& s : res.settings) {
    for (const auto& m : s.methods) {
      EXPECT_EQ(m.used + m.undefined, g.reps);
      if (m.coverage) {
        EXPECT_GE(*m.coverage, 0.0);
        EXPECT_LE(*m.coverage, 1.0);
      }
      EXPECT_EQ(m.mean.has_value(), m.used > 0);
    }
  }
}

TEST(Harness, RunSettingIsDeterministic) {
  const Scenario s{0.3, 0.5, 0.7, 0.2, 0.4, 0.3, 0.6};
  EXPECT_EQ(run_setting(s, 50, 30, 9, 4), run_setting(s, 50, 30, 9, 4));
  EXPECT_NE(run_setting(s, 50, 30, 9, 4), run_setting(s, 50, 30, 9, 5));
}

TEST(Harness, ToyGridGivesTwoSummaries) {
  GridSpec g = small_grid();
  g.p1 = {0.5};
  g.m1 = {0.2};
  g.rho_c = {0.5};
  g.n = {30};
  EXPECT_EQ(setting_count(g), 2u);
  const auto res = run_grid(g, 3);
  ASSERT_EQ(res.settings.size(), 2u);
  EXPECT_EQ(res.settings[0].scenario.theta, 0.2);
  EXPECT_EQ(res.settings[1].scenario.theta, 0.8);
}

TEST(Harness, OutputIndependentOfThreadCount) {
  TempDir dir;
  const auto g = small_grid();
  GridRunOptions one;
  one.checkpoint_path = dir.file("one.csv");
  GridRunOptions four = one;
  four.checkpoint_path = dir.file("four.csv");
  four.threads = 4;
  const auto a = run_grid(g, 11, one);
  const auto b = run_grid(g, 11, four);
  EXPECT_EQ(a.settings, b.settings);
  EXPECT_EQ(slurp(one.checkpoint_path), slurp(four.checkpoint_path));
  EXPECT_EQ(read_results_file(one.checkpoint_path), a.settings);
}

TEST(Harness, StopThenResumeMatchesUninterruptedRun) {
  TempDir dir;
  const auto g = small_grid();
  GridRunOptions full;
  full.checkpoint_path = dir.file("full.csv");
  run_grid(g, 21, full);

  std::atomic<bool> stop{false};
  GridRunOptions part;
  part.checkpoint_path = dir.file("part.csv");
  part.threads = 3;
  part.stop = &stop;
  part.progress = [&stop](std::uint64_t done, std::uint64_t) {
    if (done >= 10) stop = true;
  };
  const auto first = run_grid(g, 21, part);
  EXPECT_FALSE(first.completed);
  EXPECT_GE(first.completed_settings, 10u);
  EXPECT_LT(first.completed_settings, setting_count(g));
  EXPECT_EQ(read_results_file(part.checkpoint_path).size(), first.completed_settings);

  // a torn final line is discarded on resume
  {
    std::ofstream torn(part.checkpoint_path, std::ios::app | std::ios::binary);
    torn << "999,0.5,0.";
  }
  GridRunOptions resume;
  resume.checkpoint_path = part.checkpoint_path;
  resume.resume = true;
  resume.threads = 2;
  const auto second = run_grid(g, 21, resume);
  EXPECT_TRUE(second.completed);
  EXPECT_EQ(second.resumed_settings, first.completed_settings);
  EXPECT_EQ(second.settings.size(), setting_count(g));
  EXPECT_EQ(slurp(part.checkpoint_path), slurp(full.checkpoint_path));
}

TEST(Harness, ResumeRejectsDifferentSeedOrGrid) {
  TempDir dir;
  auto g = small_grid();
  GridRunOptions opt;
  opt.checkpoint_path = dir.file("r.csv");
  run_grid(g, 1, opt);
  opt.resume = true;
  EXPECT_THROW(run_grid(g, 2, opt), InvalidInput);
  g.reps = 26;
  EXPECT_THROW(run_grid(g, 1, opt), InvalidInput);
  g.reps = 25;
  const auto again = run_grid(g, 1, opt);
  EXPECT_EQ(again.resumed_settings, setting_count(g));
  EXPECT_EQ(again.completed_settings, setting_count(g));
}

TEST(Harness, ThreadCountResolution) {
  ::unsetenv("IRA_THREADS");
  EXPECT_EQ(resolve_thread_count(3), 3u);
  EXPECT_GE(resolve_thread_count(0), 1u);
  ::setenv("IRA_THREADS", "5", 1);
  EXPECT_EQ(resolve_thread_count(3), 5u);
  ::setenv("IRA_THREADS", "zero", 1);
  EXPECT_THROW(resolve_thread_count(3), InvalidInput);
  ::unsetenv("IRA_THREADS");
}

TEST(Harness, PercentileType7) {
  EXPECT_DOUBLE_EQ(percentile_sorted({1, 2, 3, 4}, 0.25), 1.75);
  EXPECT_DOUBLE_EQ(percentile_sorted({1, 2, 3, 4}, 0.5), 2.5);
  EXPECT_DOUBLE_EQ(percentile_sorted({1, 2, 3, 4}, 1.0), 4.0);
  EXPECT_DOUBLE_EQ(percentile_sorted({7}, 0.975), 7.0);
  const auto f = five_number({5, 1, 4, 2, 3});
  EXPECT_DOUBLE_EQ(f.p2_5, 1.1);
  EXPECT_DOUBLE_EQ(f.p50, 3.0);
  EXPECT_DOUBLE_EQ(f.p97_5, 4.9);
  EXPECT_EQ(f.count, 5u);
  EXPECT_THROW(percentile_sorted({}, 0.5), InvalidInput);
}

TEST(Harness, FilterParsing) {
  const auto f = parse_filter("theta=0.1,0.9; n=50");
  Scenario s;
  s.theta = 0.1;
  EXPECT_TRUE(f.matches(s, 50));
  EXPECT_FALSE(f.matches(s, 25));
  s.theta = 0.5;
  EXPECT_FALSE(f.matches(s, 50));
  EXPECT_TRUE(parse_filter("").matches(s, 3));

  const auto joint = parse_filter("rho=0.5");
  s.rho_u = s.rho_c = 0.5;
  EXPECT_TRUE(joint.matches(s, 1));
  s.rho_c = 0.1;
  EXPECT_FALSE(joint.matches(s, 1));

  for (const char* bad : {"theta", "bogus=1", "theta=x", "strata=XX"}) {
    EXPECT_THROW(parse_filter(bad), InvalidInput) << bad;
  }
}

TEST(Harness, ProfessionalismStrata) {
  const Scenario hh{0.5, 0.1, 0.3, 0.2, 0.1, 0.1, 0.1};
  const Scenario ll{0.5, 0.7, 0.9, 0.4, 0.5, 0.1, 0.1};
  const Scenario hl{0.5, 0.1, 0.9, 0.1, 0.5, 0.1, 0.1};
  const Scenario lh{0.5, 0.9, 0.3, 0.5, 0.2, 0.1, 0.1};
  const Scenario mixed{0.5, 0.5, 0.9, 0.3, 0.5, 0.1, 0.1};
  const auto fhh = parse_filter("strata=HH");
  const auto fhl = parse_filter("strata=HL");
  const auto fll = parse_filter("strata=LL");
  EXPECT_TRUE(fhh.matches(hh, 1));
  EXPECT_FALSE(fhh.matches(hl, 1));
  EXPECT_TRUE(fll.matches(ll, 1));
  EXPECT_TRUE(fhl.matches(hl, 1));
  EXPECT_TRUE(fhl.matches(lh, 1));
  EXPECT_FALSE(fhl.matches(hh, 1));
  for (const auto* f : {&fhh, &fhl, &fll}) EXPECT_FALSE(f->matches(mixed, 1));
  EXPECT_TRUE(parse_filter("strata=HH,LL").matches(ll, 1));
}

TEST(Harness, SummarizeSingleSettingAndEmptyFilter) {
  const auto res = run_grid(small_grid(), 4);
  const auto one = summarize(res.settings, parse_filter("theta=0.2; p1=0.1; m1=0.1; rho_c=0.1; n=20"), Metric::bias);
  EXPECT_EQ(one.settings, 1u);
  for (const auto& m : one.methods) {
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->p2_5, m->p97_5);
    EXPECT_EQ(m->p25, m->p50);
    EXPECT_EQ(m->p50, m->p75);
  }
  EXPECT_THROW(summarize(res.settings, parse_filter("theta=0.5"), Metric::bias), InvalidInput);

  const auto all = summarize(res.settings, {}, Metric::coverage);
  for (const auto& m : all.methods) {
    ASSERT_TRUE(m.has_value());
    EXPECT_LE(m->p2_5, m->p25);
    EXPECT_LE(m->p25, m->p50);
    EXPECT_LE(m->p50, m->p75);
    EXPECT_LE(m->p75, m->p97_5);
  }
  EXPECT_EQ(parse_metric("coverage"), Metric::coverage);
  EXPECT_THROW(parse_metric("median"), InvalidInput);
}

TEST(HarnessProperty, PercentAgreementBiasPositiveWhenKBelowOne) {
  GridSpec g = small_grid();
  g.reps = 200;
  g.n = {50};
  for (const auto& s : run_grid(g, 31).settings) {
    ASSERT_TRUE(s.k.has_value());
    if (*s.k < 1.0) EXPECT_GT(*s.methods[index_of(MethodId::PercentAgreement)].bias, 0.0);
  }
}

TEST(HarnessProperty, ChanceCorrectedFamilyMeansAgree) {
  GridSpec g;
  g.theta = {0.3, 0.5};
  g.p1 = {0.3, 0.7};
  g.p2 = {0.3, 0.7};
  g.m1 = {0.2, 0.4};
  g.m2 = {0.2, 0.4};
  g.rho_u = {0.5};
  g.rho_c = {0.5};
  g.n = {50, 200};
  g.reps = 100;
  for (const auto& s : run_grid(g, 41).settings) {
    const double n = static_cast<double>(s.n);
    const double pi = *s.methods[index_of(MethodId::ScottPi)].mean;
    for (auto m : {MethodId::KrippendorffAlpha, MethodId::MakRho, MethodId::VanOestIr2}) {
      EXPECT_LE(std::fabs(*s.methods[index_of(m)].mean - pi) * n, 4.0) << method_label(m);
    }
    // with exchangeable raters kappa and r11 join the same family
    if (s.scenario.p1 == s.scenario.p2 && s.scenario.m1 == s.scenario.m2) {
      for (auto m : {MethodId::CohenKappa, MethodId::MaxwellPillinerR11}) {
        EXPECT_LE(std::fabs(*s.methods[index_of(m)].mean - pi) * n, 4.0) << method_label(m);
      }
    }
  }
}

TEST(HarnessProperty, PrevalenceSymmetryOfBias) {
  const Scenario lo{0.2, 0.5, 0.3, 0.3, 0.2, 0.5, 0.5};
  Scenario hi = lo;
  hi.theta = 0.8;
  const auto a = run_setting(lo, 100, 3000, 51, 0);
  const auto b = run_setting(hi, 100, 3000, 51, 1);
  for (auto m : kAllMethods) {
    const double da = *a.methods[index_of(m)].bias;
    const double db = *b.methods[index_of(m)].bias;
    // per-replicate SD of these estimates is below 0.15 at N=100
    EXPECT_NEAR(da, db, 4 * 0.15 * std::sqrt(2.0 / 3000)) << method_label(m);
  }
}
