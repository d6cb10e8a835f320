#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "ira/tables.hpp"

namespace ira {

/// The ten agreement statistics. The enumerator order is the canonical
/// reporting order used by every table, CSV and checkpoint in the project.
enum class MethodId : std::uint8_t {
  PercentAgreement,
  CohenKappa,
  ScottPi,
  KrippendorffAlpha,
  VanOestIr2,
  MakRho,
  BennettS,
  YuleY,
  MaxwellPillinerR11,
  GwetAC1,
};

inline constexpr std::size_t kMethodCount = 10;

inline constexpr std::array<MethodId, kMethodCount> kAllMethods = {
    MethodId::PercentAgreement, MethodId::CohenKappa,         MethodId::ScottPi,
    MethodId::KrippendorffAlpha, MethodId::VanOestIr2,        MethodId::MakRho,
    MethodId::BennettS,          MethodId::YuleY,             MethodId::MaxwellPillinerR11,
    MethodId::GwetAC1,
};

[[nodiscard]] constexpr std::size_t index_of(MethodId m) noexcept { return static_cast<std::size_t>(m); }

/// Short machine label ("kappa", "ac1", ...) used in CSV headers and on the CLI.
std::string_view method_label(MethodId m) noexcept;
/// Human-readable name ("Cohen's kappa").
std::string_view method_name(MethodId m) noexcept;
std::optional<MethodId> method_from_label(std::string_view label) noexcept;

/// Continuity correction applied to Yule's Y when a cell is zero.
enum class ContinuityPolicy : std::uint8_t {
  none,      ///< leave Y undefined when any cell is zero
  add_half,  ///< add 0.5 to all four cells first (default)
};

struct AgreementEstimate {
  MethodId method = MethodId::PercentAgreement;
  std::optional<double> value;               ///< nullopt when a denominator vanished
  std::optional<double> applied_correction;  ///< amount added to each cell, if any

  [[nodiscard]] bool defined() const noexcept { return value.has_value(); }
};

using EstimateSet = std::array<AgreementEstimate, kMethodCount>;

/// Closed-form point estimate. Throws InvalidInput for an empty or negative table;
/// vanishing denominators yield an undefined value instead.
AgreementEstimate estimate(MethodId method, const RealTable& table,
                           ContinuityPolicy policy = ContinuityPolicy::add_half);
inline AgreementEstimate estimate(MethodId method, const ContingencyTable& table,
                                  ContinuityPolicy policy = ContinuityPolicy::add_half) {
  return estimate(method, to_real(table), policy);
}

/// All ten methods, indexed by index_of(MethodId).
EstimateSet estimate_all(const RealTable& table, ContinuityPolicy policy = ContinuityPolicy::add_half);
inline EstimateSet estimate_all(const ContingencyTable& table,
                                ContinuityPolicy policy = ContinuityPolicy::add_half) {
  return estimate_all(to_real(table), policy);
}

/// Chance-agreement estimate p_e for the methods written as (p_a - p_e)/(1 - p_e).
/// nullopt for Y, r11 and percent agreement, which have no such component.
std::optional<double> chance_agreement(MethodId method, const RealTable& table);

/// Intraclass correlation estimators from the two-rater one/two-way ANOVA tables,
/// computed from the mean squares rather than the simplified closed forms.
enum class IccModel : std::uint8_t {
  no_rater_effect,  ///< q1, identical to Mak's rho
  random_rater,     ///< q2, asymptotically Cohen's kappa
  fixed_rater,      ///< q3, identical to Maxwell-Pilliner r11
};

/// Requires N >= 2. nullopt when the mean-square denominator vanishes.
std::optional<double> icc_anova(IccModel model, const ContingencyTable& table);

}  // namespace ira
