#include "ira/grid_config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <type_traits>
#include <sstream>

#include "ira/error.hpp"
#include "ira/number_format.hpp"

namespace ira {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
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

template <typename Int>
Int parse_integer(std::string_view field, std::string_view key) {
  const auto t = trim(field);
  Int v{};
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size()) {
    throw InvalidInput("bad integer '" + std::string(field) + "' for key " + std::string(key));
  }
  return v;
}

std::vector<double> parse_doubles(std::string_view value, std::string_view key) {
  std::vector<double> out;
  for (const auto f : split(value, ',')) {
    try {
      out.push_back(parse_double(f));
    } catch (const InvalidInput&) {
      throw InvalidInput("bad number '" + std::string(f) + "' for key " + std::string(key));
    }
  }
  return out;
}

void check_list(const std::vector<double>& v, const char* name, double lo, double hi, bool open_lo, bool open_hi) {
  if (v.empty()) throw InvalidInput(std::string("grid list '") + name + "' is empty");
  for (const double x : v) {
    const bool ok = (open_lo ? x > lo : x >= lo) && (open_hi ? x < hi : x <= hi);
    if (!ok) throw InvalidInput(std::string("grid value ") + name + " = " + format_roundtrip(x) + " out of range");
  }
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    if constexpr (std::is_floating_point_v<T>) {
      out += format_roundtrip(v[i]);
    } else {
      out += std::to_string(v[i]);
    }
  }
  return out;
}

}  // namespace

GridSpec paper_grid() {
  GridSpec g;
  g.theta = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  g.p1 = g.p2 = {0.1, 0.3, 0.5, 0.7, 0.9};
  g.m1 = g.m2 = {0.1, 0.2, 0.3, 0.4, 0.5};
  g.rho_u = g.rho_c = {0.1, 0.3, 0.5, 0.7, 0.9};
  g.n = {25, 50, 100, 200};
  g.reps = 1000;
  return g;
}

void validate(const GridSpec& g) {
  check_list(g.theta, "theta", 0.0, 1.0, true, true);
  check_list(g.p1, "p1", 0.0, 1.0, false, false);
  check_list(g.p2, "p2", 0.0, 1.0, false, false);
  check_list(g.m1, "m1", 0.0, 0.5, false, false);
  check_list(g.m2, "m2", 0.0, 0.5, false, false);
  check_list(g.rho_u, "rho_u", 0.0, 1.0, false, true);
  check_list(g.rho_c, "rho_c", 0.0, 1.0, false, true);
  if (g.n.empty()) throw InvalidInput("grid list 'n' is empty");
  for (const auto n : g.n) {
    if (n < 1) throw InvalidInput("grid value n must be >= 1");
  }
  if (g.reps < 1) throw InvalidInput("reps must be >= 1");
  if (g.reps > 0xFFFFFFFFLL) throw InvalidInput("reps must fit in 32 bits");
  if (setting_count(g) > 0xFFFFFFFFULL) throw InvalidInput("grid has more than 2^32 settings");
}

std::uint64_t setting_count(const GridSpec& g) {
  std::uint64_t c = 1;
  for (const auto s : {g.theta.size(), g.p1.size(), g.p2.size(), g.m1.size(), g.m2.size(), g.rho_u.size(),
                       g.rho_c.size(), g.n.size()}) {
    c *= s;
  }
  return c;
}

Setting setting_at(const GridSpec& g, std::uint64_t index) {
  if (index >= setting_count(g)) throw InvalidInput("setting index out of range");
  Setting s;
  s.index = index;
  auto take = [&index](std::size_t size) {
    const auto i = static_cast<std::size_t>(index % size);
    index /= size;
    return i;
  };
  s.n = g.n[take(g.n.size())];
  s.scenario.rho_c = g.rho_c[take(g.rho_c.size())];
  s.scenario.rho_u = g.rho_u[take(g.rho_u.size())];
  s.scenario.m2 = g.m2[take(g.m2.size())];
  s.scenario.m1 = g.m1[take(g.m1.size())];
  s.scenario.p2 = g.p2[take(g.p2.size())];
  s.scenario.p1 = g.p1[take(g.p1.size())];
  s.scenario.theta = g.theta[take(g.theta.size())];
  return s;
}

GridSpec parse_grid_config(std::string_view text) {
  GridSpec g = paper_grid();
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = trim(line.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidInput("config line " + std::to_string(line_no) + ": expected 'key = values'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (!seen.insert(std::string(key)).second) {
      throw InvalidInput("config line " + std::to_string(line_no) + ": duplicate key '" + std::string(key) + "'");
    }
    if (key == "theta") g.theta = parse_doubles(value, key);
    else if (key == "p1") g.p1 = parse_doubles(value, key);
    else if (key == "p2") g.p2 = parse_doubles(value, key);
    else if (key == "m1") g.m1 = parse_doubles(value, key);
    else if (key == "m2") g.m2 = parse_doubles(value, key);
    else if (key == "rho_u") g.rho_u = parse_doubles(value, key);
    else if (key == "rho_c") g.rho_c = parse_doubles(value, key);
    else if (key == "n") {
      g.n.clear();
      for (const auto f : split(value, ',')) g.n.push_back(parse_integer<std::int64_t>(f, key));
    } else if (key == "reps") {
      g.reps = parse_integer<std::int64_t>(value, key);
    } else if (key == "seed") {
      g.seed = parse_integer<std::uint64_t>(value, key);
    } else {
      throw InvalidInput("config line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }
  validate(g);
  return g;
}

GridSpec load_grid_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read grid config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_grid_config(ss.str());
}

std::string format_grid_config(const GridSpec& g) {
  std::string out;
  out += "theta = " + join(g.theta) + "\n";
  out += "p1 = " + join(g.p1) + "\n";
  out += "p2 = " + join(g.p2) + "\n";
  out += "m1 = " + join(g.m1) + "\n";
  out += "m2 = " + join(g.m2) + "\n";
  out += "rho_u = " + join(g.rho_u) + "\n";
  out += "rho_c = " + join(g.rho_c) + "\n";
  out += "n = " + join(g.n) + "\n";
  out += "reps = " + std::to_string(g.reps) + "\n";
  if (g.seed) out += "seed = " + std::to_string(*g.seed) + "\n";
  return out;
}

}  // namespace ira
