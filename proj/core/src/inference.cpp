#include "ira/inference.hpp"

#include <algorithm>
#include <cmath>

#include "ira/error.hpp"
#include "ira/gaussian.hpp"

namespace ira {

namespace {

struct Props {
  double p11, p10, p01, p00, pa, omega, n;
};

Props props_of(const RealTable& t) {
  const auto p = proportions(t);
  return {p.p11, p.p10, p.p01, p.p00, p.pa, p.p11 + 0.5 * (p.p10 + p.p01), t.total()};
}

std::optional<double> non_negative(double v) {
  if (!std::isfinite(v)) return std::nullopt;
  if (v >= 0.0) return v;
  // rounding noise around an exact zero
  if (v > -1e-14) return 0.0;
  return std::nullopt;
}

std::optional<double> scott_linearized(const Props& x, double pi) {
  const double w = x.omega;
  const double pe = w * w + (1.0 - w) * (1.0 - w);
  if (1.0 - pe == 0.0) return std::nullopt;
  const double body = x.pa * (1.0 - x.pa) - 4.0 * (1.0 - pi) * (x.p11 * w + x.p00 * (1.0 - w) - x.pa * pe) +
                      4.0 * (1.0 - pi) * (1.0 - pi) *
                          (x.p11 * w * w + 0.25 * (x.p10 + x.p01) + x.p00 * (1.0 - w) * (1.0 - w) - pe * pe);
  return body / (x.n * (1.0 - pe) * (1.0 - pe));
}

std::optional<double> kappa_variance(const Props& x, double k) {
  const double w = x.omega;
  const double pe = (x.p11 + x.p10) * (x.p11 + x.p01) + (x.p00 + x.p01) * (x.p00 + x.p10);
  if (1.0 - pe == 0.0) return std::nullopt;
  const double t10 = 2.0 * x.p01 + x.pa;
  const double t01 = 2.0 * x.p10 + x.pa;
  const double body =
      x.pa * (1.0 - x.pa) - 4.0 * (1.0 - k) * (x.p11 * w + x.p00 * (1.0 - w) - k * pe) +
      4.0 * (1.0 - k) * (1.0 - k) *
          (x.p11 * w * w + 0.25 * x.p10 * t10 * t10 + 0.25 * x.p01 * t01 * t01 + x.p00 * (1.0 - w) * (1.0 - w));
  return body / (x.n * (1.0 - pe) * (1.0 - pe));
}

std::optional<double> ac1_variance(const Props& x, double g) {
  const double w = x.omega;
  const double pe = 2.0 * w * (1.0 - w);
  if (1.0 - pe == 0.0) return std::nullopt;
  const double body = x.pa * (1.0 - x.pa) - 4.0 * (1.0 - g) * (x.p11 * (1.0 - w) + x.p00 * w - x.pa * pe) +
                      4.0 * (1.0 - g) * (1.0 - g) *
                          (x.p11 * (1.0 - w) * (1.0 - w) + 0.25 * (x.p10 + x.p01) + x.p00 * w * w - pe * pe);
  return body / (x.n * (1.0 - pe) * (1.0 - pe));
}

// Large-sample variance of the intraclass kappa, shared by rho, r11 and Ir2.
std::optional<double> intraclass_variance(const Props& x, double k) {
  const double spread = 2.0 * x.omega * (1.0 - x.omega);
  if (spread == 0.0) return std::nullopt;
  return (1.0 - k) / x.n * ((1.0 - k) * (1.0 - 2.0 * k) + k * (2.0 - k) / spread);
}

double yule_log_se(const RealTable& t) {
  return 0.25 * std::sqrt(1.0 / (t.n11 + 0.5) + 1.0 / (t.n10 + 0.5) + 1.0 / (t.n01 + 0.5) + 1.0 / (t.n00 + 0.5));
}

double yule_corrected(const RealTable& t) {
  const RealTable c = add_to_cells(t, 0.5);
  const double con = std::sqrt(c.n11 * c.n00);
  const double dis = std::sqrt(c.n10 * c.n01);
  return (con - dis) / (con + dis);
}

}  // namespace

double two_sided_z(double level) {
  if (!(level > 0.0 && level < 1.0)) throw InvalidInput("confidence level must lie in (0, 1)");
  return std_normal_quantile(1.0 - 0.5 * (1.0 - level));
}

std::optional<double> variance(MethodId method, const RealTable& table, ContinuityPolicy policy) {
  const auto est = estimate(method, table, policy);
  if (!est.defined()) return std::nullopt;
  const double k = *est.value;
  const Props x = props_of(table);

  std::optional<double> v;
  switch (method) {
    case MethodId::PercentAgreement:
      v = x.pa * (1.0 - x.pa) / x.n;
      break;
    case MethodId::BennettS:
      v = 4.0 * x.pa * (1.0 - x.pa) / x.n;
      break;
    case MethodId::CohenKappa:
      v = kappa_variance(x, k);
      break;
    case MethodId::ScottPi:
      v = scott_linearized(x, k);
      break;
    case MethodId::GwetAC1:
      v = ac1_variance(x, k);
      break;
    case MethodId::KrippendorffAlpha: {
      // 1 - alpha = (2N-1)/(2N) (1 - pi): alpha is an affine map of pi.
      const auto pi = estimate(MethodId::ScottPi, table, policy);
      if (!pi.defined()) return std::nullopt;
      const auto vp = scott_linearized(x, *pi.value);
      if (!vp) return std::nullopt;
      const double f = (2.0 * x.n - 1.0) / (2.0 * x.n);
      v = f * f * *vp;
      break;
    }
    case MethodId::MakRho:
    case MethodId::MaxwellPillinerR11:
    case MethodId::VanOestIr2:
      v = intraclass_variance(x, k);
      break;
    case MethodId::YuleY: {
      const double y = yule_corrected(table);
      const double se = yule_log_se(table);
      v = (1.0 - y * y) * (1.0 - y * y) * se * se;
      break;
    }
  }
  if (!v) return std::nullopt;
  return non_negative(*v);
}

std::optional<IntervalEstimate> confidence_interval(MethodId method, const RealTable& table, double level,
                                                    ContinuityPolicy policy) {
  const double z = two_sided_z(level);
  const auto est = estimate(method, table, policy);
  if (!est.defined()) return std::nullopt;
  const auto var = variance(method, table, policy);
  if (!var) return std::nullopt;

  IntervalEstimate ci;
  ci.method = method;
  ci.estimate = *est.value;
  ci.variance = *var;
  ci.level = level;
  double lo, hi;
  if (method == MethodId::YuleY) {
    ci.kind = IntervalKind::bonett_tanh;
    const double centre = std::atanh(yule_corrected(table));
    const double half = z * yule_log_se(table);
    lo = std::tanh(centre - half);
    hi = std::tanh(centre + half);
  } else {
    ci.kind = IntervalKind::wald;
    const double half = z * std::sqrt(*var);
    lo = ci.estimate - half;
    hi = ci.estimate + half;
  }
  ci.lower = std::max(lo, -1.0);
  ci.upper = std::min(hi, 1.0);
  ci.clamped = ci.lower != lo || ci.upper != hi;
  return ci;
}

bool covers(const IntervalEstimate& ci, double target) noexcept {
  if (ci.lower == ci.upper) return target == ci.estimate;
  return ci.lower <= target && target <= ci.upper;
}

ReportSet report_all(const RealTable& table, double level, ContinuityPolicy policy) {
  two_sided_z(level);
  ReportSet out;
  for (const auto m : kAllMethods) {
    auto& r = out[index_of(m)];
    r.estimate = estimate(m, table, policy);
    r.interval = confidence_interval(m, table, level, policy);
  }
  return out;
}

}  // namespace ira
