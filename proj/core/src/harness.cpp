#include "ira/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "ira/error.hpp"
#include "ira/generator.hpp"
#include "ira/inference.hpp"
#include "ira/number_format.hpp"
#include "ira/results_io.hpp"

namespace ira {

SettingSummary run_setting(const Scenario& scenario, std::int64_t n, std::int64_t reps, std::uint64_t seed,
                           std::uint64_t setting_index, const HarnessOptions& options) {
  if (reps < 1) throw InvalidInput("reps must be >= 1");
  if (n < 1) throw InvalidInput("n must be >= 1");
  two_sided_z(options.level);
  const ScenarioSampler sampler(scenario);

  SettingSummary s;
  s.index = setting_index;
  s.scenario = scenario;
  s.n = n;
  s.reps = reps;
  s.k = true_k(scenario);

  std::array<double, kMethodCount> sum{};
  std::array<std::int64_t, kMethodCount> covered{};
  for (std::int64_t r = 0; r < reps; ++r) {
    RngStream rng(seed, setting_index, static_cast<std::uint64_t>(r));
    const auto table = sampler.study(n, rng);
    const auto reports = report_all(table, options.level, options.policy);
    for (std::size_t i = 0; i < kMethodCount; ++i) {
      const auto& rep = reports[i];
      auto& m = s.methods[i];
      if (rep.estimate.applied_correction) ++m.corrected;
      if (!rep.estimate.defined() || !rep.interval) {
        ++m.undefined;
        continue;
      }
      ++m.used;
      sum[i] += *rep.estimate.value;
      if (s.k && covers(*rep.interval, *s.k)) ++covered[i];
    }
  }

  for (std::size_t i = 0; i < kMethodCount; ++i) {
    auto& m = s.methods[i];
    if (m.used == 0) continue;
    m.mean = sum[i] / static_cast<double>(m.used);
    if (s.k) {
      m.bias = *m.mean - *s.k;
      m.coverage = static_cast<double>(covered[i]) / static_cast<double>(m.used);
    }
  }
  return s;
}

unsigned resolve_thread_count(unsigned requested) {
  if (const char* env = std::getenv("IRA_THREADS"); env != nullptr && *env != '\0') {
    const std::string_view text = trim(env);
    unsigned v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size() || v == 0) {
      throw InvalidInput("IRA_THREADS must be a positive integer");
    }
    return v;
  }
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

std::string checkpoint_metadata(const GridSpec& grid, std::uint64_t seed, const HarnessOptions& h) {
  GridSpec g = grid;
  g.seed = seed;
  return format_grid_config(g) + "# continuity = " +
         (h.policy == ContinuityPolicy::add_half ? "add_half" : "none") + "\n# level = " +
         format_roundtrip(h.level) + "\n";
}

std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ResumeState {
  std::uint64_t rows = 0;
  std::uintmax_t valid_bytes = 0;
  std::vector<SettingSummary> settings;
  bool has_header = false;
};

// Keeps the longest prefix of complete rows that continue the grid in order.
ResumeState scan_checkpoint(const std::string& text, const GridSpec& grid, bool collect) {
  ResumeState st;
  const std::string header = results_header() + "\n";
  if (text.compare(0, header.size(), header) != 0) return st;
  st.has_header = true;
  std::size_t pos = header.size();
  st.valid_bytes = pos;
  const std::uint64_t total = setting_count(grid);
  while (pos < text.size() && st.rows < total) {
    const auto nl = text.find('\n', pos);
    if (nl == std::string::npos) break;
    SettingSummary row;
    try {
      row = parse_results_row(std::string_view(text).substr(pos, nl - pos));
    } catch (const InvalidInput&) {
      break;
    }
    const auto expect = setting_at(grid, st.rows);
    if (row.index != st.rows || !(row.scenario == expect.scenario) || row.n != expect.n || row.reps != grid.reps) {
      break;
    }
    if (collect) st.settings.push_back(std::move(row));
    ++st.rows;
    pos = nl + 1;
    st.valid_bytes = pos;
  }
  return st;
}

}  // namespace

GridRunResult run_grid(const GridSpec& grid, std::uint64_t seed, const GridRunOptions& options) {
  validate(grid);
  two_sided_z(options.harness.level);
  const std::uint64_t total = setting_count(grid);
  GridRunResult result;

  std::ofstream out;
  std::uint64_t start = 0;
  if (!options.checkpoint_path.empty()) {
    const std::filesystem::path path(options.checkpoint_path);
    const std::filesystem::path meta_path(options.checkpoint_path + ".meta");
    const std::string meta = checkpoint_metadata(grid, seed, options.harness);
    std::error_code ec;
    bool fresh = true;
    if (options.resume && std::filesystem::exists(path, ec)) {
      if (!std::filesystem::exists(meta_path, ec) || read_text(meta_path) != meta) {
        throw InvalidInput("checkpoint '" + options.checkpoint_path +
                           "' was written with a different grid, seed or harness options");
      }
      auto st = scan_checkpoint(read_text(path), grid, options.collect);
      if (st.has_header) {
        fresh = false;
        std::filesystem::resize_file(path, st.valid_bytes, ec);
        if (ec) throw RuntimeFailure("cannot truncate checkpoint: " + ec.message());
        start = st.rows;
        result.settings = std::move(st.settings);
        out.open(path, std::ios::binary | std::ios::app);
      }
    }
    if (fresh) {
      {
        std::ofstream m(meta_path, std::ios::binary | std::ios::trunc);
        m << meta;
        if (!m.flush()) throw RuntimeFailure("cannot write '" + meta_path.string() + "'");
      }
      out.open(path, std::ios::binary | std::ios::trunc);
      out << results_header() << '\n';
    }
    if (!out.flush()) throw RuntimeFailure("cannot write checkpoint '" + options.checkpoint_path + "'");
  }
  result.resumed_settings = start;

  const unsigned threads = std::max(1u, options.threads);
  const std::uint64_t window = 4ULL * threads + 4;
  std::atomic<std::uint64_t> next{start};
  std::mutex mu;
  std::condition_variable ready;
  std::condition_variable space;
  std::map<std::uint64_t, SettingSummary> pending;
  std::uint64_t written = start;
  unsigned finished = 0;
  bool abort = false;
  std::exception_ptr error;

  auto stop_requested = [&options] { return options.stop != nullptr && options.stop->load(); };

  auto worker = [&] {
    while (!stop_requested()) {
      const std::uint64_t idx = next.fetch_add(1);
      if (idx >= total) break;
      {
        std::unique_lock lk(mu);
        space.wait(lk, [&] { return abort || idx < written + window; });
        if (abort) break;
      }
      try {
        auto summary = run_setting(setting_at(grid, idx), grid.reps, seed, options.harness);
        std::lock_guard lk(mu);
        pending.emplace(idx, std::move(summary));
      } catch (...) {
        std::lock_guard lk(mu);
        if (!error) error = std::current_exception();
        abort = true;
        space.notify_all();
        break;
      }
      ready.notify_one();
    }
    {
      std::lock_guard lk(mu);
      ++finished;
    }
    ready.notify_all();
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);

  while (true) {
    std::unique_lock lk(mu);
    ready.wait(lk, [&] { return abort || pending.count(written) > 0 || finished == threads; });
    if (abort) break;
    const auto it = pending.find(written);
    if (it == pending.end()) break;
    SettingSummary s = std::move(it->second);
    pending.erase(it);
    lk.unlock();

    if (out.is_open()) {
      out << format_results_row(s) << '\n';
      if (!out.flush()) {
        std::lock_guard g(mu);
        if (!error) {
          error = std::make_exception_ptr(RuntimeFailure("write to checkpoint '" + options.checkpoint_path +
                                                         "' failed"));
        }
        abort = true;
        space.notify_all();
        break;
      }
    }
    if (options.collect) result.settings.push_back(std::move(s));
    {
      std::lock_guard g(mu);
      ++written;
    }
    space.notify_all();
    if (options.progress) options.progress(written, total);
  }

  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  result.completed_settings = written;
  result.completed = written == total;
  return result;
}

// ---------------------------------------------------------------------------

std::string_view metric_label(Metric m) noexcept {
  switch (m) {
    case Metric::bias:
      return "bias";
    case Metric::coverage:
      return "coverage";
    case Metric::mean:
      return "mean";
  }
  return "bias";
}

Metric parse_metric(std::string_view text) {
  if (text == "bias") return Metric::bias;
  if (text == "coverage") return Metric::coverage;
  if (text == "mean") return Metric::mean;
  throw InvalidInput("unknown metric '" + std::string(text) + "' (expected bias, coverage or mean)");
}

namespace {

bool in_list(double v, const std::vector<double>& list) {
  return std::any_of(list.begin(), list.end(), [v](double x) { return std::abs(x - v) <= 1e-9; });
}

bool high(double p, double m) { return in_list(p, {0.1, 0.3}) && in_list(m, {0.1, 0.2}); }
bool low(double p, double m) { return in_list(p, {0.7, 0.9}) && in_list(m, {0.4, 0.5}); }

double field_value(SettingFilter::Field f, const Scenario& s, std::int64_t n) {
  switch (f) {
    case SettingFilter::Field::theta:
      return s.theta;
    case SettingFilter::Field::p1:
      return s.p1;
    case SettingFilter::Field::p2:
      return s.p2;
    case SettingFilter::Field::m1:
      return s.m1;
    case SettingFilter::Field::m2:
      return s.m2;
    case SettingFilter::Field::rho_u:
      return s.rho_u;
    case SettingFilter::Field::rho_c:
      return s.rho_c;
    case SettingFilter::Field::n:
      return static_cast<double>(n);
  }
  return 0.0;
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

bool SettingFilter::matches(const Scenario& s, std::int64_t n) const {
  for (const auto& c : clauses) {
    if (!in_list(field_value(c.field, s, n), c.values)) return false;
  }
  if (joint_rho && !(std::abs(s.rho_u - s.rho_c) <= 1e-9 && in_list(s.rho_u, *joint_rho))) return false;
  if (!strata.empty()) {
    const bool h1 = high(s.p1, s.m1), h2 = high(s.p2, s.m2);
    const bool l1 = low(s.p1, s.m1), l2 = low(s.p2, s.m2);
    const bool any = std::any_of(strata.begin(), strata.end(), [&](Stratum st) {
      switch (st) {
        case Stratum::HH:
          return h1 && h2;
        case Stratum::HL:
          return (h1 && l2) || (l1 && h2);
        case Stratum::LL:
          return l1 && l2;
      }
      return false;
    });
    if (!any) return false;
  }
  return true;
}

SettingFilter parse_filter(std::string_view text) {
  SettingFilter f;
  if (trim(text).empty()) return f;
  for (const auto clause : split_on(text, ';')) {
    if (clause.empty()) continue;
    const auto eq = clause.find('=');
    if (eq == std::string_view::npos) throw InvalidInput("filter clause '" + std::string(clause) + "' lacks '='");
    const auto key = trim(clause.substr(0, eq));
    const auto values = split_on(clause.substr(eq + 1), ',');
    if (key == "strata") {
      for (const auto v : values) {
        if (v == "HH") f.strata.push_back(Stratum::HH);
        else if (v == "HL" || v == "LH") f.strata.push_back(Stratum::HL);
        else if (v == "LL") f.strata.push_back(Stratum::LL);
        else throw InvalidInput("unknown stratum '" + std::string(v) + "' (expected HH, HL or LL)");
      }
      continue;
    }
    std::vector<double> nums;
    for (const auto v : values) nums.push_back(parse_double(v));
    using F = SettingFilter::Field;
    if (key == "rho") {
      f.joint_rho = nums;
      continue;
    }
    F field;
    if (key == "theta") field = F::theta;
    else if (key == "p1") field = F::p1;
    else if (key == "p2") field = F::p2;
    else if (key == "m1") field = F::m1;
    else if (key == "m2") field = F::m2;
    else if (key == "rho_u") field = F::rho_u;
    else if (key == "rho_c") field = F::rho_c;
    else if (key == "n") field = F::n;
    else throw InvalidInput("unknown filter key '" + std::string(key) + "'");
    f.clauses.push_back({field, std::move(nums)});
  }
  return f;
}

double percentile_sorted(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) throw InvalidInput("percentile of an empty sample");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

FiveNumber five_number(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  FiveNumber f;
  f.count = values.size();
  f.p2_5 = percentile_sorted(values, 0.025);
  f.p25 = percentile_sorted(values, 0.25);
  f.p50 = percentile_sorted(values, 0.5);
  f.p75 = percentile_sorted(values, 0.75);
  f.p97_5 = percentile_sorted(values, 0.975);
  return f;
}

PercentileSummary summarize(const std::vector<SettingSummary>& results, const SettingFilter& filter, Metric metric) {
  PercentileSummary out;
  out.metric = metric;
  std::array<std::vector<double>, kMethodCount> values;
  for (const auto& s : results) {
    if (!filter.matches(s.scenario, s.n)) continue;
    ++out.settings;
    for (std::size_t i = 0; i < kMethodCount; ++i) {
      const auto& m = s.methods[i];
      const auto& v = metric == Metric::bias ? m.bias : metric == Metric::coverage ? m.coverage : m.mean;
      if (v) values[i].push_back(*v);
    }
  }
  if (out.settings == 0) throw InvalidInput("no settings match the filter");
  for (std::size_t i = 0; i < kMethodCount; ++i) {
    if (!values[i].empty()) out.methods[i] = five_number(std::move(values[i]));
  }
  return out;
}

}  // namespace ira
