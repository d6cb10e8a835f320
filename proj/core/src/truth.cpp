#include "ira/truth.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ira/error.hpp"
#include "ira/gaussian.hpp"

namespace ira {

namespace {

void require_range(const char* name, double v, double lo, double hi, bool open_lo, bool open_hi) {
  const bool ok = (open_lo ? v > lo : v >= lo) && (open_hi ? v < hi : v <= hi);
  if (!ok) {
    throw InvalidInput(std::string(name) + " = " + std::to_string(v) + " is outside " + (open_lo ? "(" : "[") +
                       std::to_string(lo) + ", " + std::to_string(hi) + (open_hi ? ")" : "]"));
  }
}

// Rounding in marginal subtraction can leave -1e-17 where the exact value is 0.
double clamp_prob(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

void validate(const Scenario& s) {
  require_range("theta", s.theta, 0.0, 1.0, true, true);
  require_range("p1", s.p1, 0.0, 1.0, false, false);
  require_range("p2", s.p2, 0.0, 1.0, false, false);
  require_range("m1", s.m1, 0.0, 0.5, false, false);
  require_range("m2", s.m2, 0.0, 0.5, false, false);
  require_range("rho_u", s.rho_u, 0.0, 1.0, false, true);
  require_range("rho_c", s.rho_c, 0.0, 1.0, false, true);
}

UncertaintyProbs uncertainty_probs(double p1, double p2, double rho_u) {
  require_range("p1", p1, 0.0, 1.0, false, false);
  require_range("p2", p2, 0.0, 1.0, false, false);
  require_range("rho_u", rho_u, 0.0, 1.0, false, true);
  UncertaintyProbs u;
  u.u11 = bvn_upper_orthant({latent_mean_for(p1), latent_mean_for(p2), rho_u});
  u.u10 = clamp_prob(p1 - u.u11);
  u.u01 = clamp_prob(p2 - u.u11);
  u.u00 = clamp_prob(1.0 - p1 - p2 + u.u11);
  return u;
}

CorrectnessProbs correctness_probs(double m1, double m2, double rho_c) {
  require_range("m1", m1, 0.0, 0.5, false, false);
  require_range("m2", m2, 0.0, 0.5, false, false);
  require_range("rho_c", rho_c, 0.0, 1.0, false, true);
  CorrectnessProbs c;
  c.c11 = bvn_upper_orthant({latent_mean_for(1.0 - m1), latent_mean_for(1.0 - m2), rho_c});
  c.c10 = clamp_prob((1.0 - m1) - c.c11);
  c.c01 = clamp_prob((1.0 - m2) - c.c11);
  c.c00 = clamp_prob(1.0 - (1.0 - m1) - (1.0 - m2) + c.c11);
  c.c2_given_1 = c.c11 / (1.0 - m1);
  c.c1_given_2 = c.c11 / (1.0 - m2);

  const double den = m1 * m2 * (1.0 - m1) * (1.0 - m2);
  if (den > 0.0) {
    c.gamma = (c.c00 * c.c11 - c.c10 * c.c01) / std::sqrt(den);
  } else if (rho_c > 0.0 && m1 == m2) {
    c.gamma = 1.0;
  }
  return c;
}

TruthTable truth_table(const Scenario& s) {
  validate(s);
  TruthTable t;
  t.uncertainty = uncertainty_probs(s.p1, s.p2, s.rho_u);
  t.correctness = correctness_probs(s.m1, s.m2, s.rho_c);
  const auto& u = t.uncertainty;
  const auto& c = t.correctness;
  const double th = s.theta;
  auto& x = t.cells;

  x[kUncertainPos][kUncertainPos] = u.u11 * (th * c.c11 + (1.0 - th) * c.c00);
  x[kUncertainPos][kUncertainNeg] = u.u11 * (th * c.c10 + (1.0 - th) * c.c01);
  x[kUncertainNeg][kUncertainPos] = u.u11 * (th * c.c01 + (1.0 - th) * c.c10);
  x[kUncertainNeg][kUncertainNeg] = u.u11 * (th * c.c00 + (1.0 - th) * c.c11);

  x[kUncertainPos][kCertainPos] = u.u10 * th * c.c1_given_2;
  x[kUncertainPos][kCertainNeg] = u.u10 * (1.0 - th) * (1.0 - c.c1_given_2);
  x[kUncertainNeg][kCertainPos] = u.u10 * th * (1.0 - c.c1_given_2);
  x[kUncertainNeg][kCertainNeg] = u.u10 * (1.0 - th) * c.c1_given_2;

  x[kCertainPos][kUncertainPos] = u.u01 * th * c.c2_given_1;
  x[kCertainPos][kUncertainNeg] = u.u01 * th * (1.0 - c.c2_given_1);
  x[kCertainNeg][kUncertainPos] = u.u01 * (1.0 - th) * (1.0 - c.c2_given_1);
  x[kCertainNeg][kUncertainNeg] = u.u01 * (1.0 - th) * c.c2_given_1;

  x[kCertainPos][kCertainPos] = u.u00 * th;
  x[kCertainPos][kCertainNeg] = 0.0;
  x[kCertainNeg][kCertainPos] = 0.0;
  x[kCertainNeg][kCertainNeg] = u.u00 * (1.0 - th);
  return t;
}

CellProportions theoretical_cell_probs(const Scenario& s) {
  const auto t = truth_table(s);
  CellProportions p;
  for (std::size_t r = 0; r < 4; ++r) {
    const bool pos1 = r == kUncertainPos || r == kCertainPos;
    for (std::size_t col = 0; col < 4; ++col) {
      const bool pos2 = col == kUncertainPos || col == kCertainPos;
      const double v = t.cells[r][col];
      if (pos1 && pos2) p.p11 += v;
      else if (pos1) p.p10 += v;
      else if (pos2) p.p01 += v;
      else p.p00 += v;
    }
  }
  p.pa = p.p11 + p.p00;
  return p;
}

std::optional<double> true_k(const Scenario& s) {
  validate(s);
  const auto u = uncertainty_probs(s.p1, s.p2, s.rho_u);
  const auto c = correctness_probs(s.m1, s.m2, s.rho_c);
  if (!c.gamma) return std::nullopt;
  const double g = *c.gamma;
  const double both = u.u11 * (c.c11 + c.c00);
  const double one = u.u10 * c.c1_given_2 + u.u01 * c.c2_given_1;
  const double num = u.u00 + g * (g * both + one);
  const double den = 1.0 - (1.0 - g) * ((1.0 + g) * both + one);
  if (den == 0.0) return std::nullopt;
  return num / den;
}

std::optional<double> true_k_reduced(double m1, double m2, double rho_c) {
  const auto c = correctness_probs(m1, m2, rho_c);
  if (!c.gamma) return std::nullopt;
  const double g2 = *c.gamma * *c.gamma;
  const double agree = c.c11 + c.c00;
  const double den = 1.0 - (1.0 - g2) * agree;
  if (den == 0.0) return std::nullopt;
  return g2 * agree / den;
}

double chance_agreement_star(const Scenario& s) {
  validate(s);
  return 2.0 * s.p1 * s.p2 * s.m1 * s.m2 + (1.0 - s.m1) * s.p1 + (1.0 - s.m2) * s.p2 - s.p1 * s.p2;
}

std::optional<double> k_star(const Scenario& s) {
  const double pe = chance_agreement_star(s);
  const double pa = theoretical_cell_probs(s).pa;
  if (std::abs(1.0 - pe) < 1e-14) return std::nullopt;
  return (pa - pe) / (1.0 - pe);
}

}  // namespace ira
