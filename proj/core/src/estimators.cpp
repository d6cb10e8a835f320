#include "ira/estimators.hpp"

#include <cmath>

#include "ira/error.hpp"

namespace ira {

namespace {

struct Spec {
  MethodId id;
  std::string_view label;
  std::string_view name;
};

constexpr std::array<Spec, kMethodCount> kSpecs = {{
    {MethodId::PercentAgreement, "pa", "percent agreement"},
    {MethodId::CohenKappa, "kappa", "Cohen's kappa"},
    {MethodId::ScottPi, "pi", "Scott's pi"},
    {MethodId::KrippendorffAlpha, "alpha", "Krippendorff's alpha"},
    {MethodId::VanOestIr2, "ir2", "Van Oest's Ir2"},
    {MethodId::MakRho, "rho", "Mak's rho"},
    {MethodId::BennettS, "s", "Bennett's S"},
    {MethodId::YuleY, "y", "Yule's Y"},
    {MethodId::MaxwellPillinerR11, "r11", "Maxwell-Pilliner r11"},
    {MethodId::GwetAC1, "ac1", "Gwet's AC1"},
}};

std::optional<double> ratio(double num, double den) {
  if (den == 0.0) return std::nullopt;
  const double r = num / den;
  if (!std::isfinite(r)) return std::nullopt;
  return r;
}

void require_valid(const RealTable& t) {
  if (!(t.n11 >= 0.0 && t.n10 >= 0.0 && t.n01 >= 0.0 && t.n00 >= 0.0)) {
    throw InvalidInput("table cells must be non-negative");
  }
  if (!(t.total() > 0.0)) throw InvalidInput("table is empty (N = 0)");
}

bool has_zero_cell(const RealTable& t) {
  return t.n11 == 0.0 || t.n10 == 0.0 || t.n01 == 0.0 || t.n00 == 0.0;
}

// Cell shorthand: a = n11, b = n10, c = n01, d = n00.
struct Cells {
  double a, b, c, d, n;
  explicit Cells(const RealTable& t) : a(t.n11), b(t.n10), c(t.n01), d(t.n00), n(t.total()) {}

  [[nodiscard]] double cross() const { return a * d - b * c; }
  [[nodiscard]] double off() const { return b + c; }
  // (2a+b+c)(2d+b+c): 4N^2 times omega(1-omega)
  [[nodiscard]] double pooled_product() const { return (2.0 * a + b + c) * (2.0 * d + b + c); }
};

double yule_y(const Cells& x) {
  const double concordant = std::sqrt(x.a * x.d);
  const double discordant = std::sqrt(x.b * x.c);
  return (concordant - discordant) / (concordant + discordant);
}

std::optional<double> closed_form(MethodId method, const Cells& x) {
  switch (method) {
    case MethodId::PercentAgreement:
      return (x.a + x.d) / x.n;
    case MethodId::CohenKappa:
      return ratio(2.0 * x.cross(), (x.a + x.b) * (x.b + x.d) + (x.a + x.c) * (x.c + x.d));
    case MethodId::ScottPi:
      return ratio(4.0 * x.cross() - (x.b - x.c) * (x.b - x.c), x.pooled_product());
    case MethodId::KrippendorffAlpha: {
      const double den = x.pooled_product();
      if (den == 0.0) return std::nullopt;
      return 1.0 - (2.0 * x.n - 1.0) * x.off() / den;
    }
    case MethodId::VanOestIr2: {
      const double pos = (2.0 * x.a + x.off() + 1.0) / (2.0 * x.n + 2.0);
      const double neg = (2.0 * x.d + x.off() + 1.0) / (2.0 * x.n + 2.0);
      const double pe = pos * pos + neg * neg;
      return ratio(x.a + x.d - x.n * pe, x.n - x.n * pe);
    }
    case MethodId::MakRho:
      return ratio(4.0 * x.cross() - (x.b - x.c) * (x.b - x.c) + x.off(), x.pooled_product() - x.off());
    case MethodId::BennettS:
      return 2.0 * (x.a + x.d) / x.n - 1.0;
    case MethodId::YuleY: {
      if (x.a * x.d + x.b * x.c == 0.0) return std::nullopt;
      return yule_y(x);
    }
    case MethodId::MaxwellPillinerR11:
      return ratio(2.0 * x.cross(), (x.a + x.b) * (x.c + x.d) + (x.a + x.c) * (x.b + x.d));
    case MethodId::GwetAC1:
      return ratio(2.0 * (x.a * x.a + x.d * x.d) - x.off() * x.off(),
                   2.0 * (x.a * x.n + x.d * x.n - 2.0 * x.a * x.d) + x.off() * x.off());
  }
  return std::nullopt;
}

}  // namespace

std::string_view method_label(MethodId m) noexcept { return kSpecs[index_of(m)].label; }

std::string_view method_name(MethodId m) noexcept { return kSpecs[index_of(m)].name; }

std::optional<MethodId> method_from_label(std::string_view label) noexcept {
  for (const auto& s : kSpecs) {
    if (s.label == label) return s.id;
  }
  return std::nullopt;
}

AgreementEstimate estimate(MethodId method, const RealTable& table, ContinuityPolicy policy) {
  require_valid(table);
  AgreementEstimate out;
  out.method = method;
  if (method == MethodId::YuleY && has_zero_cell(table)) {
    if (policy == ContinuityPolicy::none) return out;
    out.applied_correction = 0.5;
    out.value = closed_form(method, Cells(add_to_cells(table, 0.5)));
    return out;
  }
  out.value = closed_form(method, Cells(table));
  return out;
}

EstimateSet estimate_all(const RealTable& table, ContinuityPolicy policy) {
  EstimateSet out;
  for (const auto m : kAllMethods) out[index_of(m)] = estimate(m, table, policy);
  return out;
}

std::optional<double> chance_agreement(MethodId method, const RealTable& table) {
  require_valid(table);
  const Cells x(table);
  const double omega = (2.0 * x.a + x.off()) / (2.0 * x.n);
  switch (method) {
    case MethodId::CohenKappa:
      return ((x.a + x.b) / x.n) * ((x.a + x.c) / x.n) + ((x.d + x.c) / x.n) * ((x.d + x.b) / x.n);
    case MethodId::ScottPi:
      return omega * omega + (1.0 - omega) * (1.0 - omega);
    case MethodId::KrippendorffAlpha: {
      const double pos = 2.0 * x.a + x.off();
      const double neg = 2.0 * x.d + x.off();
      return (pos / (2.0 * x.n)) * ((pos - 1.0) / (2.0 * x.n - 1.0)) +
             (neg / (2.0 * x.n)) * ((neg - 1.0) / (2.0 * x.n - 1.0));
    }
    case MethodId::VanOestIr2: {
      const double pos = (2.0 * x.a + x.off() + 1.0) / (2.0 * x.n + 2.0);
      const double neg = (2.0 * x.d + x.off() + 1.0) / (2.0 * x.n + 2.0);
      return pos * pos + neg * neg;
    }
    case MethodId::MakRho:
      if (x.n <= 1.0) return std::nullopt;
      return 1.0 - (x.pooled_product() - x.off()) / (2.0 * x.n * (x.n - 1.0));
    case MethodId::BennettS:
      return 0.5;
    case MethodId::GwetAC1:
      return 2.0 * omega * (1.0 - omega);
    case MethodId::PercentAgreement:
    case MethodId::YuleY:
    case MethodId::MaxwellPillinerR11:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<double> icc_anova(IccModel model, const ContingencyTable& table) {
  const auto t = make_table(table.n11, table.n10, table.n01, table.n00);
  if (t.total() < 2) throw InvalidInput("ANOVA intraclass estimators need N >= 2");
  const Cells x(to_real(t));
  const double n = x.n;

  // y_ij in {0,1}, d = 2 raters. Sums over subjects i and raters j.
  const double sum_y = 2.0 * x.a + x.b + x.c;
  const double grand_mean = sum_y / (2.0 * n);
  const double sum_subject_mean_sq = x.a + 0.25 * (x.b + x.c);
  const double ss_total = sum_y - 2.0 * n * grand_mean * grand_mean;
  const double ss_subject = 2.0 * sum_subject_mean_sq - 2.0 * n * grand_mean * grand_mean;
  const double ms_subject = ss_subject / (n - 1.0);

  if (model == IccModel::no_rater_effect) {
    const double ss_error = sum_y - 2.0 * sum_subject_mean_sq;
    const double ms_error = ss_error / n;
    return ratio(ms_subject - ms_error, ms_subject + ms_error);
  }

  const double rater1_mean = (x.a + x.b) / n;
  const double rater2_mean = (x.a + x.c) / n;
  const double ss_rater = n * (rater1_mean * rater1_mean + rater2_mean * rater2_mean) -
                          2.0 * n * grand_mean * grand_mean;
  const double ms_rater = ss_rater;  // d - 1 = 1 degree of freedom
  const double ms_error = (ss_total - ss_subject - ss_rater) / (n - 1.0);

  if (model == IccModel::fixed_rater) {
    return ratio(ms_subject - ms_error, ms_subject + ms_error);
  }
  return ratio(n * (ms_subject - ms_error),
               2.0 * (ms_rater - ms_error) + n * (ms_subject - ms_error) + 2.0 * n * ms_error);
}

}  // namespace ira
