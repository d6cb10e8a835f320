#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "ira/estimators.hpp"
#include "ira/tables.hpp"

namespace ira {

enum class IntervalKind : std::uint8_t {
  wald,         ///< estimate +- z * sqrt(variance)
  bonett_tanh,  ///< tanh(atanh(Y) +- z * se) on 0.5-corrected cells (Yule's Y)
};

struct IntervalEstimate {
  MethodId method = MethodId::PercentAgreement;
  double estimate = 0.0;
  double variance = 0.0;  ///< >= 0
  double lower = 0.0;
  double upper = 0.0;
  double level = 0.95;
  IntervalKind kind = IntervalKind::wald;
  bool clamped = false;  ///< a bound was pulled back into [-1, 1]
};

/// Large-sample variance of the method's estimate. nullopt when the point
/// estimate is undefined, a denominator vanishes, or the formula goes negative.
/// Yule's Y is always evaluated on the 0.5-corrected cells.
std::optional<double> variance(MethodId method, const RealTable& table,
                               ContinuityPolicy policy = ContinuityPolicy::add_half);
inline std::optional<double> variance(MethodId method, const ContingencyTable& table,
                                      ContinuityPolicy policy = ContinuityPolicy::add_half) {
  return variance(method, to_real(table), policy);
}

/// Two-sided interval at `level` (in (0, 1), else InvalidInput). nullopt when
/// the variance is undefined.
std::optional<IntervalEstimate> confidence_interval(MethodId method, const RealTable& table, double level = 0.95,
                                                    ContinuityPolicy policy = ContinuityPolicy::add_half);
inline std::optional<IntervalEstimate> confidence_interval(MethodId method, const ContingencyTable& table,
                                                           double level = 0.95,
                                                           ContinuityPolicy policy = ContinuityPolicy::add_half) {
  return confidence_interval(method, to_real(table), level, policy);
}

/// Coverage rule: lower <= target <= upper, except that a zero-width interval
/// covers only a target exactly equal to its point estimate.
[[nodiscard]] bool covers(const IntervalEstimate& ci, double target) noexcept;

struct EstimateReport {
  AgreementEstimate estimate;
  std::optional<IntervalEstimate> interval;
};

using ReportSet = std::array<EstimateReport, kMethodCount>;

/// Point estimates and intervals for all ten methods.
ReportSet report_all(const RealTable& table, double level = 0.95,
                     ContinuityPolicy policy = ContinuityPolicy::add_half);
inline ReportSet report_all(const ContingencyTable& table, double level = 0.95,
                            ContinuityPolicy policy = ContinuityPolicy::add_half) {
  return report_all(to_real(table), level, policy);
}

/// z_{1-(1-level)/2}.
double two_sided_z(double level);

}  // namespace ira
