#include "ira/results_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "ira/error.hpp"
#include "ira/number_format.hpp"

namespace ira {

namespace {

constexpr std::size_t kFixedColumns = 11;
constexpr std::size_t kPerMethodColumns = 5;
constexpr std::size_t kColumns = kFixedColumns + kPerMethodColumns * kMethodCount;

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  out.reserve(kColumns);
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

template <typename Int>
Int parse_int_field(std::string_view f) {
  Int v{};
  const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
  if (f.empty() || res.ec != std::errc() || res.ptr != f.data() + f.size()) {
    throw InvalidInput("bad integer field '" + std::string(f) + "' in results row");
  }
  return v;
}

}  // namespace

std::string results_header() {
  std::string h = "setting,theta,p1,p2,m1,m2,rho_u,rho_c,n,reps,k";
  for (const auto m : kAllMethods) {
    const std::string l(method_label(m));
    h += "," + l + "_mean," + l + "_bias," + l + "_coverage," + l + "_undefined," + l + "_corrected";
  }
  return h;
}

std::string format_results_row(const SettingSummary& s) {
  std::string r;
  r.reserve(600);
  r += std::to_string(s.index);
  for (const double v : {s.scenario.theta, s.scenario.p1, s.scenario.p2, s.scenario.m1, s.scenario.m2,
                         s.scenario.rho_u, s.scenario.rho_c}) {
    r += ',';
    r += format_roundtrip(v);
  }
  r += ',' + std::to_string(s.n) + ',' + std::to_string(s.reps) + ',' + format_optional(s.k);
  for (const auto& m : s.methods) {
    r += ',' + format_optional(m.mean) + ',' + format_optional(m.bias) + ',' + format_optional(m.coverage) + ',' +
         std::to_string(m.undefined) + ',' + std::to_string(m.corrected);
  }
  return r;
}

SettingSummary parse_results_row(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const auto f = split_fields(line);
  if (f.size() != kColumns) {
    throw InvalidInput("results row has " + std::to_string(f.size()) + " fields, expected " +
                       std::to_string(kColumns));
  }
  SettingSummary s;
  s.index = parse_int_field<std::uint64_t>(f[0]);
  s.scenario.theta = parse_double(f[1]);
  s.scenario.p1 = parse_double(f[2]);
  s.scenario.p2 = parse_double(f[3]);
  s.scenario.m1 = parse_double(f[4]);
  s.scenario.m2 = parse_double(f[5]);
  s.scenario.rho_u = parse_double(f[6]);
  s.scenario.rho_c = parse_double(f[7]);
  s.n = parse_int_field<std::int64_t>(f[8]);
  s.reps = parse_int_field<std::int64_t>(f[9]);
  s.k = parse_optional_double(f[10]);
  for (std::size_t i = 0; i < kMethodCount; ++i) {
    const std::size_t base = kFixedColumns + kPerMethodColumns * i;
    auto& m = s.methods[i];
    m.mean = parse_optional_double(f[base]);
    m.bias = parse_optional_double(f[base + 1]);
    m.coverage = parse_optional_double(f[base + 2]);
    m.undefined = parse_int_field<std::int64_t>(f[base + 3]);
    m.corrected = parse_int_field<std::int64_t>(f[base + 4]);
    m.used = s.reps - m.undefined;
    if (m.undefined < 0 || m.used < 0) throw InvalidInput("results row has inconsistent replicate counts");
  }
  return s;
}

std::vector<SettingSummary> read_results(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidInput("results file is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != results_header()) throw InvalidInput("results file has an unexpected header");
  std::vector<SettingSummary> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      rows.push_back(parse_results_row(line));
    } catch (const InvalidInput& e) {
      throw InvalidInput("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return rows;
}

std::vector<SettingSummary> read_results_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read results file '" + path + "'");
  return read_results(in);
}

void write_results(std::ostream& out, const std::vector<SettingSummary>& rows) {
  out << results_header() << '\n';
  for (const auto& r : rows) out << format_results_row(r) << '\n';
}

}  // namespace ira
