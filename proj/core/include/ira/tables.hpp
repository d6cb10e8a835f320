#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace ira {

/// Observed two-rater dichotomous ratings. Subscripts are (rater 1 vote,
/// rater 2 vote) with 1 meaning "+": n10 counts subjects rater 1 called "+"
/// and rater 2 called "-".
struct ContingencyTable {
  std::int64_t n11 = 0;
  std::int64_t n10 = 0;
  std::int64_t n01 = 0;
  std::int64_t n00 = 0;

  [[nodiscard]] constexpr std::int64_t total() const noexcept { return n11 + n10 + n01 + n00; }

  friend constexpr bool operator==(const ContingencyTable&, const ContingencyTable&) = default;
};

/// Validates counts (all >= 0, N >= 1). Throws InvalidInput otherwise.
ContingencyTable make_table(std::int64_t n11, std::int64_t n10, std::int64_t n01, std::int64_t n00);

/// Parses "n11,n10,n01,n00". Whitespace around fields is ignored.
ContingencyTable parse_table(std::string_view text);

/// A 2x2 table with real-valued cells. Adjusted tables (Byrt, Hoehler) and
/// continuity-corrected tables live here; every estimator accepts this form.
struct RealTable {
  double n11 = 0.0;
  double n10 = 0.0;
  double n01 = 0.0;
  double n00 = 0.0;

  [[nodiscard]] constexpr double total() const noexcept { return n11 + n10 + n01 + n00; }

  friend constexpr bool operator==(const RealTable&, const RealTable&) = default;
};

[[nodiscard]] constexpr RealTable to_real(const ContingencyTable& t) noexcept {
  return {static_cast<double>(t.n11), static_cast<double>(t.n10), static_cast<double>(t.n01),
          static_cast<double>(t.n00)};
}

/// Swap n10 and n01 (exchange the two raters).
[[nodiscard]] constexpr RealTable transpose(const RealTable& t) noexcept {
  return {t.n11, t.n01, t.n10, t.n00};
}

/// Swap "+" and "-" for both raters.
[[nodiscard]] constexpr RealTable relabel(const RealTable& t) noexcept {
  return {t.n00, t.n01, t.n10, t.n11};
}

[[nodiscard]] constexpr RealTable add_to_cells(const RealTable& t, double c) noexcept {
  return {t.n11 + c, t.n10 + c, t.n01 + c, t.n00 + c};
}

struct CellProportions {
  double p11 = 0.0;
  double p10 = 0.0;
  double p01 = 0.0;
  double p00 = 0.0;
  double pa = 0.0;  ///< observed agreement p11 + p00
};

CellProportions proportions(const RealTable& table);
inline CellProportions proportions(const ContingencyTable& table) { return proportions(to_real(table)); }

/// Specific agreement on "+" and on "-". A component is nullopt when its
/// denominator vanishes.
struct PosNegAgreement {
  std::optional<double> p_pos;
  std::optional<double> p_neg;
};

PosNegAgreement pos_neg_agreement(const RealTable& table);
inline PosNegAgreement pos_neg_agreement(const ContingencyTable& table) {
  return pos_neg_agreement(to_real(table));
}

/// Byrt et al. symmetrisation: both diagonal cells become (n11+n00)/2, both
/// off-diagonal cells (n10+n01)/2. Cohen's kappa of the result is PABAK.
RealTable byrt_adjust(const RealTable& table);
inline RealTable byrt_adjust(const ContingencyTable& table) { return byrt_adjust(to_real(table)); }

/// Hoehler's adjustment: a symmetric table with uniform marginals and the same
/// odds ratio. Throws InvalidInput when the odds ratio is undefined or zero
/// (any zero cell); apply a continuity correction first in that case.
RealTable hoehler_adjust(const RealTable& table);
inline RealTable hoehler_adjust(const ContingencyTable& table) { return hoehler_adjust(to_real(table)); }

}  // namespace ira
