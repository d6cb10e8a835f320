#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace ira {

/// Shortest decimal string that parses back to exactly `v`.
std::string format_roundtrip(double v);

/// Fixed notation with six decimals, as used in human-readable reports.
std::string format_fixed6(double v);

/// "NA" for nullopt, otherwise format_roundtrip.
std::string format_optional(const std::optional<double>& v);

/// Strict parse of a complete decimal field; nullopt for "NA".
/// Throws InvalidInput on anything else that is not a number.
std::optional<double> parse_optional_double(std::string_view text);

/// Strict parse of a finite double; throws InvalidInput.
double parse_double(std::string_view text);

std::string_view trim(std::string_view s) noexcept;

}  // namespace ira
