#include "ira/tables.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>

#include "ira/error.hpp"

namespace ira {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

void require_valid(const RealTable& t) {
  if (!(t.n11 >= 0.0 && t.n10 >= 0.0 && t.n01 >= 0.0 && t.n00 >= 0.0)) {
    throw InvalidInput("table cells must be non-negative");
  }
  if (!(t.total() > 0.0)) throw InvalidInput("table is empty (N = 0)");
}

}  // namespace

ContingencyTable make_table(std::int64_t n11, std::int64_t n10, std::int64_t n01, std::int64_t n00) {
  if (n11 < 0 || n10 < 0 || n01 < 0 || n00 < 0) {
    throw InvalidInput("table counts must be non-negative");
  }
  ContingencyTable t{n11, n10, n01, n00};
  if (t.total() < 1) throw InvalidInput("table is empty (N = 0)");
  return t;
}

ContingencyTable parse_table(std::string_view text) {
  std::array<std::int64_t, 4> cells{};
  std::size_t field = 0;
  while (true) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    if (field >= cells.size()) {
      throw InvalidInput("table must have exactly 4 comma-separated counts: n11,n10,n01,n00");
    }
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InvalidInput("invalid table count '" + std::string(token) + "'");
    }
    cells[field++] = value;
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (field != cells.size()) {
    throw InvalidInput("table must have exactly 4 comma-separated counts: n11,n10,n01,n00");
  }
  return make_table(cells[0], cells[1], cells[2], cells[3]);
}

CellProportions proportions(const RealTable& table) {
  require_valid(table);
  const double n = table.total();
  CellProportions p;
  p.p11 = table.n11 / n;
  p.p10 = table.n10 / n;
  p.p01 = table.n01 / n;
  p.p00 = table.n00 / n;
  p.pa = p.p11 + p.p00;
  return p;
}

PosNegAgreement pos_neg_agreement(const RealTable& table) {
  require_valid(table);
  const double off = table.n10 + table.n01;
  PosNegAgreement r;
  if (const double den = 2.0 * table.n11 + off; den > 0.0) r.p_pos = 2.0 * table.n11 / den;
  if (const double den = 2.0 * table.n00 + off; den > 0.0) r.p_neg = 2.0 * table.n00 / den;
  return r;
}

RealTable byrt_adjust(const RealTable& table) {
  require_valid(table);
  const double diag = 0.5 * (table.n11 + table.n00);
  const double off = 0.5 * (table.n10 + table.n01);
  return {diag, off, off, diag};
}

RealTable hoehler_adjust(const RealTable& table) {
  require_valid(table);
  const double concordant = table.n11 * table.n00;
  const double discordant = table.n10 * table.n01;
  if (!(concordant > 0.0) || !(discordant > 0.0)) {
    throw InvalidInput("odds ratio undefined: Hoehler adjustment needs all four cells positive");
  }
  const double root_or = std::sqrt(concordant / discordant);
  const double n = table.total();
  const double diag = n * root_or / (2.0 * (1.0 + root_or));
  const double off = 0.5 * n - diag;
  return {diag, off, off, diag};
}

}  // namespace ira
