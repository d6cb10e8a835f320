#include "ira_cli/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ira/clustering.hpp"
#include "ira/error.hpp"
#include "ira/generator.hpp"
#include "ira/grid_config.hpp"
#include "ira/harness.hpp"
#include "ira/inference.hpp"
#include "ira/number_format.hpp"
#include "ira/results_io.hpp"
#include "ira/truth.hpp"

namespace ira::cli {

std::atomic<bool>& interrupt_flag() noexcept {
  static std::atomic<bool> flag{false};
  return flag;
}

namespace {

enum class Format { human, csv };

Format parse_format(const std::string& s) {
  if (s == "human") return Format::human;
  if (s == "csv") return Format::csv;
  throw InvalidInput("--format must be csv or human");
}

ContinuityPolicy parse_policy(const std::string& s) {
  if (s == "add_half" || s == "0.5") return ContinuityPolicy::add_half;
  if (s == "none") return ContinuityPolicy::none;
  throw InvalidInput("--yule-correction must be add_half or none");
}

std::uint64_t parse_seed(const std::string& s) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw InvalidInput("--seed must be an unsigned 64-bit integer, got '" + s + "'");
  }
  return v;
}

std::string fixed_or_na(const std::optional<double>& v) { return v ? format_fixed6(*v) : "NA"; }

// Columns 1..numeric are right-aligned; the label column and any trailing text
// columns are left-aligned.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows, std::size_t numeric) {
  if (rows.empty()) return;
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const std::string pad(width[i] - r[i].size(), ' ');
      if (i > 0) line += "  ";
      line += (i >= 1 && i <= numeric) ? pad + r[i] : r[i] + pad;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

struct ScenarioFlags {
  Scenario s;
  void add(CLI::App* app) {
    app->add_option("--theta", s.theta, "prevalence of '+' subjects, (0, 1)")->capture_default_str();
    app->add_option("--p1", s.p1, "rater 1 probability of uncertainty, [0, 1]")->capture_default_str();
    app->add_option("--p2", s.p2, "rater 2 probability of uncertainty, [0, 1]")->capture_default_str();
    app->add_option("--m1", s.m1, "rater 1 misclassification when uncertain, [0, 0.5]")->capture_default_str();
    app->add_option("--m2", s.m2, "rater 2 misclassification when uncertain, [0, 0.5]")->capture_default_str();
    app->add_option("--rhou,--rho-u", s.rho_u, "latent uncertainty correlation, [0, 1)")->capture_default_str();
    app->add_option("--rhoc,--rho-c", s.rho_c, "latent correctness correlation, [0, 1)")->capture_default_str();
  }
};

// ---------------------------------------------------------------------------
// estimate

std::vector<ContingencyTable> read_batch(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidInput("batch input is empty");
  std::vector<std::string> names;
  {
    std::stringstream ss(std::string(trim(line)));
    std::string f;
    while (std::getline(ss, f, ',')) names.emplace_back(trim(f));
  }
  auto col = [&names](const char* name) -> std::size_t {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return i;
    }
    throw InvalidInput(std::string("batch header lacks column '") + name + "'");
  };
  const std::size_t c11 = col("n11"), c10 = col("n10"), c01 = col("n01"), c00 = col("n00");
  std::vector<ContingencyTable> tables;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string x;
    while (std::getline(ss, x, ',')) f.emplace_back(trim(x));
    if (f.size() != names.size()) {
      throw InvalidInput("batch line " + std::to_string(line_no) + " has " + std::to_string(f.size()) + " fields");
    }
    try {
      tables.push_back(parse_table(f[c11] + "," + f[c10] + "," + f[c01] + "," + f[c00]));
    } catch (const InvalidInput& e) {
      throw InvalidInput("batch line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return tables;
}

std::string kind_label(IntervalKind k) { return k == IntervalKind::wald ? "wald" : "bonett-tanh"; }

void print_estimates_csv(std::ostream& out, std::size_t row, const ContingencyTable& t, const ReportSet& reports,
                         double level) {
  for (const auto m : kAllMethods) {
    const auto& r = reports[index_of(m)];
    out << row << ',' << t.n11 << ',' << t.n10 << ',' << t.n01 << ',' << t.n00 << ',' << method_label(m) << ','
        << format_optional(r.estimate.value);
    if (r.interval) {
      out << ',' << format_roundtrip(r.interval->variance) << ',' << format_roundtrip(std::sqrt(r.interval->variance))
          << ',' << format_roundtrip(r.interval->lower) << ',' << format_roundtrip(r.interval->upper) << ','
          << format_roundtrip(level) << ',' << kind_label(r.interval->kind) << ',' << (r.interval->clamped ? 1 : 0);
    } else {
      out << ",NA,NA,NA,NA," << format_roundtrip(level) << ",NA,0";
    }
    out << ',' << format_optional(r.estimate.applied_correction) << '\n';
  }
}

void print_estimates_human(std::ostream& out, const ContingencyTable& t, const ReportSet& reports, double level) {
  out << "table n11=" << t.n11 << " n10=" << t.n10 << " n01=" << t.n01 << " n00=" << t.n00 << " (N=" << t.total()
      << ")\n";
  const auto pn = pos_neg_agreement(t);
  out << "p_pos " << fixed_or_na(pn.p_pos) << "  p_neg " << fixed_or_na(pn.p_neg) << "\n";
  out << "confidence level " << format_fixed6(level) << "\n\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"method", "estimate", "se", "lower", "upper", "interval", "note"});
  for (const auto m : kAllMethods) {
    const auto& r = reports[index_of(m)];
    std::string note;
    if (r.estimate.applied_correction) note = format_roundtrip(*r.estimate.applied_correction) + " added to cells";
    if (!r.estimate.defined()) note = "undefined";
    else if (!r.interval) note += note.empty() ? "variance undefined" : "; variance undefined";
    else if (r.interval->clamped) note += note.empty() ? "clamped" : "; clamped";
    if (r.interval) {
      rows.push_back({std::string(method_label(m)), fixed_or_na(r.estimate.value),
                      format_fixed6(std::sqrt(r.interval->variance)), format_fixed6(r.interval->lower),
                      format_fixed6(r.interval->upper), kind_label(r.interval->kind), note});
    } else {
      rows.push_back({std::string(method_label(m)), fixed_or_na(r.estimate.value), "NA", "NA", "NA", "-", note});
    }
  }
  print_table(out, rows, 4);
}

int cmd_estimate(const std::string& table_text, const std::string& batch, double level, const std::string& policy_text,
                 Format fmt, std::ostream& out) {
  const auto policy = parse_policy(policy_text);
  two_sided_z(level);
  std::vector<ContingencyTable> tables;
  if (!table_text.empty() && !batch.empty()) throw InvalidInput("use either --table or --batch, not both");
  if (!table_text.empty()) {
    tables.push_back(parse_table(table_text));
  } else if (!batch.empty()) {
    if (batch == "-") {
      tables = read_batch(std::cin);
    } else {
      std::ifstream in(batch);
      if (!in) throw InvalidInput("cannot read batch file '" + batch + "'");
      tables = read_batch(in);
    }
  } else {
    throw InvalidInput("estimate needs --table or --batch");
  }

  if (fmt == Format::csv) {
    out << "row,n11,n10,n01,n00,method,estimate,variance,se,lower,upper,level,interval,clamped,correction\n";
  }
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const auto reports = report_all(tables[i], level, policy);
    if (fmt == Format::csv) {
      print_estimates_csv(out, i, tables[i], reports, level);
    } else {
      if (i > 0) out << '\n';
      print_estimates_human(out, tables[i], reports, level);
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// truth

int cmd_truth(const Scenario& s, Format fmt, std::ostream& out) {
  const auto t = truth_table(s);
  const auto cells = theoretical_cell_probs(s);
  const auto k = true_k(s);
  const auto kr = true_k_reduced(s.m1, s.m2, s.rho_c);
  const auto ks = k_star(s);
  const double pe_star = chance_agreement_star(s);
  const auto& u = t.uncertainty;
  const auto& c = t.correctness;

  if (fmt == Format::csv) {
    out << "quantity,value\n";
    auto row = [&out](const std::string& name, const std::optional<double>& v) {
      out << name << ',' << format_optional(v) << '\n';
    };
    row("U11", u.u11);
    row("U10", u.u10);
    row("U01", u.u01);
    row("U00", u.u00);
    row("C11", c.c11);
    row("C10", c.c10);
    row("C01", c.c01);
    row("C00", c.c00);
    row("C1_given_2", c.c1_given_2);
    row("C2_given_1", c.c2_given_1);
    row("gamma", c.gamma);
    const char* names[4] = {"Upos", "Uneg", "Cpos", "Cneg"};
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t col = 0; col < 4; ++col) row(std::string("T_") + names[r] + "_" + names[col], t.cells[r][col]);
    }
    row("p11", cells.p11);
    row("p10", cells.p10);
    row("p01", cells.p01);
    row("p00", cells.p00);
    row("pa", cells.pa);
    row("K", k);
    row("K_reduced", kr);
    row("pe_star", pe_star);
    row("K_star", ks);
    return kExitOk;
  }

  out << "scenario theta=" << format_roundtrip(s.theta) << " p1=" << format_roundtrip(s.p1)
      << " p2=" << format_roundtrip(s.p2) << " m1=" << format_roundtrip(s.m1) << " m2=" << format_roundtrip(s.m2)
      << " rho_u=" << format_roundtrip(s.rho_u) << " rho_c=" << format_roundtrip(s.rho_c) << "\n\n";
  out << "uncertainty  U11 " << format_fixed6(u.u11) << "  U10 " << format_fixed6(u.u10) << "  U01 "
      << format_fixed6(u.u01) << "  U00 " << format_fixed6(u.u00) << "\n";
  out << "correctness  C11 " << format_fixed6(c.c11) << "  C10 " << format_fixed6(c.c10) << "  C01 "
      << format_fixed6(c.c01) << "  C00 " << format_fixed6(c.c00) << "\n";
  out << "conditional  C1|2 " << format_fixed6(c.c1_given_2) << "  C2|1 " << format_fixed6(c.c2_given_1) << "\n";
  out << "gamma        " << fixed_or_na(c.gamma) << "\n\n";

  out << "truth table (rows rater 1, columns rater 2)\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"", "U+", "U-", "C+", "C-"});
  const char* names[4] = {"U+", "U-", "C+", "C-"};
  for (std::size_t r = 0; r < 4; ++r) {
    std::vector<std::string> line{names[r]};
    for (std::size_t col = 0; col < 4; ++col) line.push_back(format_fixed6(t.cells[r][col]));
    rows.push_back(line);
  }
  print_table(out, rows, 4);
  out << "\ncells        p11 " << format_fixed6(cells.p11) << "  p10 " << format_fixed6(cells.p10) << "  p01 "
      << format_fixed6(cells.p01) << "  p00 " << format_fixed6(cells.p00) << "\n";
  out << "pa           " << format_fixed6(cells.pa) << "\n";
  out << "K            " << fixed_or_na(k) << "\n";
  out << "K reduced    " << fixed_or_na(kr) << "  (p1 = p2 = 1)\n";
  out << "pe*          " << format_fixed6(pe_star) << "\n";
  out << "K*           " << fixed_or_na(ks) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// simulate

int cmd_simulate(const Scenario& s, std::int64_t n, std::int64_t reps, std::uint64_t seed, std::uint64_t setting,
                 Format fmt, std::ostream& out) {
  if (n < 1) throw InvalidInput("--n must be >= 1");
  if (reps < 1) throw InvalidInput("--reps must be >= 1");
  const ScenarioSampler sampler(s);
  std::vector<std::vector<std::string>> rows;
  if (fmt == Format::csv) {
    out << "rep,n11,n10,n01,n00\n";
  } else {
    rows.push_back({"rep", "n11", "n10", "n01", "n00"});
  }
  for (std::int64_t r = 0; r < reps; ++r) {
    RngStream rng(seed, setting, static_cast<std::uint64_t>(r));
    const auto t = sampler.study(n, rng);
    if (fmt == Format::csv) {
      out << r << ',' << t.n11 << ',' << t.n10 << ',' << t.n01 << ',' << t.n00 << '\n';
    } else {
      rows.push_back({std::to_string(r), std::to_string(t.n11), std::to_string(t.n10), std::to_string(t.n01),
                      std::to_string(t.n00)});
    }
  }
  if (fmt == Format::human) print_table(out, rows, 4);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  std::string grid_path;
  std::string out_path;
  std::string seed_text;
  unsigned threads = 0;
  bool dry_run = false;
  bool resume = false;
  bool progress = false;
  double level = 0.95;
  std::string policy = "add_half";
};

int cmd_sweep(const SweepArgs& a, Format fmt, std::ostream& out, std::ostream& err) {
  const GridSpec grid = a.grid_path.empty() ? paper_grid() : load_grid_config(a.grid_path);
  validate(grid);
  const auto count = setting_count(grid);
  if (a.dry_run) {
    out << count << '\n';
    return kExitOk;
  }
  if (a.seed_text.empty()) throw InvalidInput("sweep requires --seed");
  const std::uint64_t seed = parse_seed(a.seed_text);
  if (grid.seed && *grid.seed != seed) throw InvalidInput("--seed disagrees with the seed in the grid config");
  if (a.out_path.empty()) throw InvalidInput("sweep requires --out");

  GridRunOptions opt;
  opt.threads = resolve_thread_count(a.threads);
  opt.checkpoint_path = a.out_path;
  opt.resume = a.resume;
  opt.collect = false;
  opt.stop = &interrupt_flag();
  opt.harness.level = a.level;
  opt.harness.policy = parse_policy(a.policy);
  if (a.progress) {
    const std::uint64_t step = std::max<std::uint64_t>(1, count / 100);
    opt.progress = [&err, step](std::uint64_t done, std::uint64_t total) {
      if (done % step == 0 || done == total) err << "\r" << done << "/" << total << std::flush;
    };
  }
  const auto res = run_grid(grid, seed, opt);
  if (a.progress) err << "\n";

  if (fmt == Format::csv) {
    out << "settings,completed,resumed,threads,complete\n"
        << count << ',' << res.completed_settings << ',' << res.resumed_settings << ',' << opt.threads << ','
        << (res.completed ? 1 : 0) << '\n';
  } else {
    out << "settings  " << count << "\ncompleted " << res.completed_settings << "\nresumed   "
        << res.resumed_settings << "\nthreads   " << opt.threads << "\noutput    " << a.out_path << "\n";
  }
  if (!res.completed) {
    err << "interrupted: checkpoint holds " << res.completed_settings << " of " << count
        << " settings; rerun with --resume to continue\n";
    return kExitRuntimeFailure;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// summarize

int cmd_summarize(const std::string& in_path, const std::string& filter_text, const std::string& metric_text,
                  Format fmt, std::ostream& out) {
  const auto metric = parse_metric(metric_text);
  const auto filter = parse_filter(filter_text);
  const auto rows = read_results_file(in_path);
  const auto sum = summarize(rows, filter, metric);
  if (fmt == Format::csv) {
    out << "method,metric,p2_5,p25,p50,p75,p97_5,count,settings\n";
    for (const auto m : kAllMethods) {
      const auto& f = sum.methods[index_of(m)];
      out << method_label(m) << ',' << metric_label(metric) << ',';
      if (f) {
        out << format_roundtrip(f->p2_5) << ',' << format_roundtrip(f->p25) << ',' << format_roundtrip(f->p50) << ','
            << format_roundtrip(f->p75) << ',' << format_roundtrip(f->p97_5) << ',' << f->count;
      } else {
        out << "NA,NA,NA,NA,NA,0";
      }
      out << ',' << sum.settings << '\n';
    }
    return kExitOk;
  }
  out << metric_label(metric) << " over " << sum.settings << " settings\n\n";
  std::vector<std::vector<std::string>> table;
  table.push_back({"method", "p2.5", "p25", "median", "p75", "p97.5", "n"});
  for (const auto m : kAllMethods) {
    const auto& f = sum.methods[index_of(m)];
    if (f) {
      table.push_back({std::string(method_label(m)), format_fixed6(f->p2_5), format_fixed6(f->p25),
                       format_fixed6(f->p50), format_fixed6(f->p75), format_fixed6(f->p97_5),
                       std::to_string(f->count)});
    } else {
      table.push_back({std::string(method_label(m)), "NA", "NA", "NA", "NA", "NA", "0"});
    }
  }
  print_table(out, table, 6);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// cluster

int cmd_cluster(const std::string& in_path, std::size_t k, const std::string& merges_path, bool newick, Format fmt,
                std::ostream& out) {
  const auto rows = read_results_file(in_path);
  const auto profiles = build_profiles(rows);
  if (profiles.profiles.front().values.empty()) throw InvalidInput("no setting has every mean and K defined");
  std::vector<std::string> labels;
  for (const auto& p : profiles.profiles) labels.push_back(p.label);
  const auto tree = agglomerate(distance_matrix(profiles.profiles), labels);
  const auto groups = cut(tree, k);

  if (!merges_path.empty()) {
    std::ofstream m(merges_path);
    if (!m) throw RuntimeFailure("cannot write merges file '" + merges_path + "'");
    m << "left,right,height\n";
    for (const auto& mg : tree.merges) m << mg.left << ',' << mg.right << ',' << format_roundtrip(mg.height) << '\n';
    if (!m.flush()) throw RuntimeFailure("cannot write merges file '" + merges_path + "'");
  }

  if (fmt == Format::csv) {
    out << "label,cluster\n";
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (const auto& l : groups[g]) out << l << ',' << g + 1 << '\n';
    }
    if (newick) out << "# " << to_newick(tree) << '\n';
    return kExitOk;
  }
  out << "profiles " << labels.size() << " over " << profiles.profiles.front().values.size() << " settings ("
      << profiles.dropped_settings << " dropped)\n\n";
  for (std::size_t g = 0; g < groups.size(); ++g) {
    out << "cluster " << g + 1 << ":";
    for (const auto& l : groups[g]) out << ' ' << l;
    out << '\n';
  }
  out << "\nmerges\n";
  std::vector<std::vector<std::string>> table;
  table.push_back({"node", "left", "right", "height"});
  for (const auto& mg : tree.merges) {
    auto name = [&](std::size_t id) { return id < labels.size() ? labels[id] : std::to_string(id); };
    table.push_back({std::to_string(mg.node), name(mg.left), name(mg.right), format_fixed6(mg.height)});
  }
  print_table(out, table, 0);
  if (newick) out << "\n" << to_newick(tree) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-rater agreement statistics, rating simulator and Monte Carlo harness", "ira"};
  app.require_subcommand(1);
  std::string format_text = "human";
  app.add_option("--format", format_text, "csv or human")->check(CLI::IsMember({"csv", "human"}));

  auto* est = app.add_subcommand("estimate", "agreement estimates and confidence intervals for 2x2 tables");
  std::string table_text, batch_path, policy_text = "add_half";
  double level = 0.95;
  est->add_option("--table", table_text, "n11,n10,n01,n00");
  est->add_option("--batch", batch_path, "CSV file with n11,n10,n01,n00 columns ('-' for stdin)");
  est->add_option("--ci", level, "confidence level")->capture_default_str();
  est->add_option("--yule-correction", policy_text, "add_half or none")->capture_default_str();
  est->add_option("--format", format_text, "csv or human");

  auto* tr = app.add_subcommand("truth", "truth table, K, reduced K and K* for a scenario");
  ScenarioFlags truth_flags;
  truth_flags.add(tr);
  tr->add_option("--format", format_text, "csv or human");

  auto* sim = app.add_subcommand("simulate", "simulate 2x2 tables from the rating model");
  ScenarioFlags sim_flags;
  sim_flags.add(sim);
  std::int64_t sim_n = 100, sim_reps = 1;
  std::string sim_seed;
  std::uint64_t sim_setting = 0;
  std::string sim_format = "csv";
  sim->add_option("--n", sim_n, "subjects per table")->capture_default_str();
  sim->add_option("--reps", sim_reps, "number of tables")->capture_default_str();
  sim->add_option("--seed", sim_seed, "master seed (unsigned 64-bit)")->required();
  sim->add_option("--setting-index", sim_setting, "stream index of the setting")->capture_default_str();
  sim->add_option("--format", sim_format, "csv (default) or human");

  auto* sw = app.add_subcommand("sweep", "run a simulation grid, writing one CSV row per setting");
  SweepArgs sweep;
  sw->add_option("--grid", sweep.grid_path, "grid config file (defaults to the full paper grid)");
  sw->add_option("--out", sweep.out_path, "results/checkpoint CSV");
  sw->add_option("--seed", sweep.seed_text, "master seed (unsigned 64-bit)");
  sw->add_option("--threads", sweep.threads, "worker threads (0 = all cores; IRA_THREADS overrides)");
  sw->add_option("--ci", sweep.level, "confidence level")->capture_default_str();
  sw->add_option("--yule-correction", sweep.policy, "add_half or none")->capture_default_str();
  sw->add_flag("--dry-run", sweep.dry_run, "print the number of settings and exit");
  sw->add_flag("--resume", sweep.resume, "continue an existing checkpoint");
  sw->add_flag("--progress", sweep.progress, "report progress on stderr");
  sw->add_option("--format", format_text, "csv or human");

  auto* sm = app.add_subcommand("summarize", "percentiles of per-setting bias, coverage or mean");
  std::string sum_in, sum_filter, sum_metric = "bias";
  sm->add_option("--in", sum_in, "results CSV")->required();
  sm->add_option("--filter", sum_filter, "e.g. \"theta=0.1,0.9; strata=HH; rho=0.5\"");
  sm->add_option("--metric", sum_metric, "bias, coverage or mean")->capture_default_str();
  sm->add_option("--format", format_text, "csv or human");

  auto* cl = app.add_subcommand("cluster", "average-linkage clustering of methods and K");
  std::string cl_in, cl_merges;
  std::size_t cl_k = 3;
  bool cl_newick = false;
  cl->add_option("--in", cl_in, "results CSV")->required();
  cl->add_option("--k", cl_k, "number of clusters")->capture_default_str();
  cl->add_option("--merges", cl_merges, "write the merge list (left,right,height) here");
  cl->add_flag("--newick", cl_newick, "also print the tree in Newick format");
  cl->add_option("--format", format_text, "csv or human");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*sim) {
      Format fmt = parse_format(sim_format);
      if (app.get_option("--format")->count() > 0) fmt = parse_format(format_text);
      return cmd_simulate(sim_flags.s, sim_n, sim_reps, parse_seed(sim_seed), sim_setting, fmt, out);
    }
    const Format fmt = parse_format(format_text);
    if (*est) return cmd_estimate(table_text, batch_path, level, policy_text, fmt, out);
    if (*tr) return cmd_truth(truth_flags.s, fmt, out);
    if (*sw) return cmd_sweep(sweep, fmt, out, err);
    if (*sm) return cmd_summarize(sum_in, sum_filter, sum_metric, fmt, out);
    if (*cl) return cmd_cluster(cl_in, cl_k, cl_merges, cl_newick, fmt, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntimeFailure;
  }
  return kExitInvalidInput;
}

}  // namespace ira::cli
