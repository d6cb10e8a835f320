#include "ira/number_format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "ira/error.hpp"

namespace ira {

std::string format_roundtrip(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), res.ptr};
}

std::string format_fixed6(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 6);
  std::string out(buf.data(), res.ptr);
  if (out == "-0.000000") out = "0.000000";
  return out;
}

std::string format_optional(const std::optional<double>& v) { return v ? format_roundtrip(*v) : "NA"; }

std::string_view trim(std::string_view s) noexcept {
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view text) {
  const auto t = trim(text);
  double v = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (t.empty() || res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) {
    throw InvalidInput("not a number: '" + std::string(text) + "'");
  }
  return v;
}

std::optional<double> parse_optional_double(std::string_view text) {
  if (trim(text) == "NA") return std::nullopt;
  return parse_double(text);
}

}  // namespace ira
