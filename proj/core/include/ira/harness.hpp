#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ira/estimators.hpp"
#include "ira/grid_config.hpp"
#include "ira/truth.hpp"

namespace ira {

struct MethodSummary {
  std::optional<double> mean;      ///< over replicates with a defined estimate and interval
  std::optional<double> bias;      ///< mean - K
  std::optional<double> coverage;  ///< share of those intervals that cover K
  std::int64_t used = 0;
  std::int64_t undefined = 0;  ///< used + undefined == reps
  std::int64_t corrected = 0;  ///< replicates where a continuity correction was applied

  friend bool operator==(const MethodSummary&, const MethodSummary&) = default;
};

struct SettingSummary {
  std::uint64_t index = 0;
  Scenario scenario;
  std::int64_t n = 0;
  std::int64_t reps = 0;
  std::optional<double> k;
  std::array<MethodSummary, kMethodCount> methods;

  friend bool operator==(const SettingSummary&, const SettingSummary&) = default;
};

struct HarnessOptions {
  ContinuityPolicy policy = ContinuityPolicy::add_half;
  double level = 0.95;
};

/// Replicate r of setting i draws from RngStream(seed, i, r), so the result
/// depends only on (seed, setting index, scenario, n, reps).
SettingSummary run_setting(const Scenario& scenario, std::int64_t n, std::int64_t reps, std::uint64_t seed,
                           std::uint64_t setting_index, const HarnessOptions& options = {});
inline SettingSummary run_setting(const Setting& s, std::int64_t reps, std::uint64_t seed,
                                  const HarnessOptions& options = {}) {
  return run_setting(s.scenario, s.n, reps, seed, s.index, options);
}

struct GridRunOptions {
  unsigned threads = 1;
  /// Results are appended here row by row in setting order; empty disables it.
  std::string checkpoint_path;
  /// Continue an existing checkpoint written with the same grid and seed.
  bool resume = false;
  /// Keep every summary in memory (off for very large grids written to disk).
  bool collect = true;
  /// Polled between settings; when set, finished rows are flushed and the run
  /// returns with completed = false.
  const std::atomic<bool>* stop = nullptr;
  std::function<void(std::uint64_t done, std::uint64_t total)> progress;
  HarnessOptions harness;
};

struct GridRunResult {
  std::vector<SettingSummary> settings;
  std::uint64_t completed_settings = 0;
  std::uint64_t resumed_settings = 0;  ///< rows found in the checkpoint at start
  bool completed = false;
};

/// Runs every setting of the grid. Output bytes are independent of the thread
/// count. I/O errors throw RuntimeFailure; rows already written stay valid.
GridRunResult run_grid(const GridSpec& grid, std::uint64_t seed, const GridRunOptions& options = {});

/// Threads to use: IRA_THREADS if set to a positive integer, else `requested`
/// if nonzero, else the hardware concurrency.
unsigned resolve_thread_count(unsigned requested);

// ---------------------------------------------------------------------------
// Summaries across settings

enum class Metric : std::uint8_t { bias, coverage, mean };

std::string_view metric_label(Metric m) noexcept;
Metric parse_metric(std::string_view text);

enum class Stratum : std::uint8_t { HH, HL, LL };

/// Conjunction of clauses over the scenario fields.
struct SettingFilter {
  enum class Field : std::uint8_t { theta, p1, p2, m1, m2, rho_u, rho_c, n };
  struct Clause {
    Field field;
    std::vector<double> values;
  };
  std::vector<Clause> clauses;
  /// rho_u == rho_c and both in this list.
  std::optional<std::vector<double>> joint_rho;
  /// Professionalism: H means p in {0.1, 0.3} and m in {0.1, 0.2}; L means
  /// p in {0.7, 0.9} and m in {0.4, 0.5}. HL accepts either rater order.
  std::vector<Stratum> strata;

  [[nodiscard]] bool matches(const Scenario& s, std::int64_t n) const;
};

/// Parses "theta=0.1,0.9; strata=HH; rho=0.5". Keys: theta p1 p2 m1 m2 rho_u
/// rho_c n rho strata. Empty text matches everything.
SettingFilter parse_filter(std::string_view text);

struct FiveNumber {
  double p2_5 = 0.0;
  double p25 = 0.0;
  double p50 = 0.0;
  double p75 = 0.0;
  double p97_5 = 0.0;
  std::size_t count = 0;
};

struct PercentileSummary {
  Metric metric = Metric::bias;
  std::size_t settings = 0;
  std::array<std::optional<FiveNumber>, kMethodCount> methods;
};

/// Linear interpolation between order statistics (type 7). `sorted` must be
/// nonempty and ascending; q in [0, 1].
double percentile_sorted(const std::vector<double>& sorted, double q);

FiveNumber five_number(std::vector<double> values);

/// Throws InvalidInput when no setting passes the filter.
PercentileSummary summarize(const std::vector<SettingSummary>& results, const SettingFilter& filter, Metric metric);

}  // namespace ira
