#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ira/harness.hpp"

namespace ira {

/// setting,theta,p1,p2,m1,m2,rho_u,rho_c,n,reps,k, then for every method in
/// canonical order <label>_mean,<label>_bias,<label>_coverage,<label>_undefined,
/// <label>_corrected. Undefined reals are written as NA.
std::string results_header();

/// One CSV line without the trailing newline. Reals use the shortest
/// round-trip representation, so parse_results_row(format_results_row(s)) == s.
std::string format_results_row(const SettingSummary& s);

/// Throws InvalidInput on a malformed row.
SettingSummary parse_results_row(std::string_view line);

/// Reads a whole results file (header required). Throws InvalidInput.
std::vector<SettingSummary> read_results(std::istream& in);
std::vector<SettingSummary> read_results_file(const std::string& path);

void write_results(std::ostream& out, const std::vector<SettingSummary>& rows);

}  // namespace ira
