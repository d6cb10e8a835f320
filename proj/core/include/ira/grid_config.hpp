#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ira/truth.hpp"

namespace ira {

/// Value lists for every simulation factor. Settings enumerate the Cartesian
/// product with theta outermost and N innermost.
struct GridSpec {
  std::vector<double> theta;
  std::vector<double> p1;
  std::vector<double> p2;
  std::vector<double> m1;
  std::vector<double> m2;
  std::vector<double> rho_u;
  std::vector<double> rho_c;
  std::vector<std::int64_t> n;
  std::int64_t reps = 1000;
  std::optional<std::uint64_t> seed;
};

/// 9 x 5^6 x 4 = 562,500 settings, 1000 replicates each.
GridSpec paper_grid();

struct Setting {
  std::uint64_t index = 0;
  Scenario scenario;
  std::int64_t n = 0;
};

/// Checks list contents and ranges; throws InvalidInput.
void validate(const GridSpec& grid);

std::uint64_t setting_count(const GridSpec& grid);

/// Throws InvalidInput when index >= setting_count(grid).
Setting setting_at(const GridSpec& grid, std::uint64_t index);

/// Flat text format, one `key = v1, v2, ...` per line; `#` starts a comment.
/// Keys: theta p1 p2 m1 m2 rho_u rho_c n reps seed. Missing keys keep the
/// paper defaults. Unknown keys, duplicates and bad numbers throw InvalidInput.
GridSpec parse_grid_config(std::string_view text);

/// Reads and parses a file; an unreadable file is InvalidInput.
GridSpec load_grid_config(const std::string& path);

/// Inverse of parse_grid_config.
std::string format_grid_config(const GridSpec& grid);

}  // namespace ira
