#pragma once

#include <array>
#include <optional>

#include "ira/tables.hpp"

namespace ira {

/// The seven generator parameters.
struct Scenario {
  double theta = 0.5;  ///< prevalence of "+" subjects, in (0, 1)
  double p1 = 0.5;     ///< rater 1 probability of feeling uncertain, [0, 1]
  double p2 = 0.5;
  double m1 = 0.5;     ///< rater 1 misclassification probability when uncertain, [0, 0.5]
  double m2 = 0.5;
  double rho_u = 0.0;  ///< latent correlation of uncertainty, [0, 1)
  double rho_c = 0.0;  ///< latent correlation of correctness, [0, 1)

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Throws InvalidInput naming the first out-of-range field.
void validate(const Scenario& s);

/// Joint uncertainty status; first index rater 1, 1 = uncertain.
struct UncertaintyProbs {
  double u11 = 0.0;
  double u10 = 0.0;
  double u01 = 0.0;
  double u00 = 0.0;
};

/// Joint correctness status when both are uncertain; 1 = correct.
struct CorrectnessProbs {
  double c11 = 0.0;
  double c10 = 0.0;
  double c01 = 0.0;
  double c00 = 0.0;
  double c1_given_2 = 0.0;  ///< P(rater 1 correct | rater 2 certain)
  double c2_given_1 = 0.0;  ///< P(rater 2 correct | rater 1 certain)
  /// Phi coefficient of the two correctness indicators. nullopt when a marginal
  /// is degenerate, except m1 = m2 at the same endpoint with rho_c > 0 (then 1).
  std::optional<double> gamma;
};

UncertaintyProbs uncertainty_probs(double p1, double p2, double rho_u);
CorrectnessProbs correctness_probs(double m1, double m2, double rho_c);

/// Rows and columns: rater 1 (rows) / rater 2 (columns) status and vote, in the
/// order uncertain "+", uncertain "-", certain "+", certain "-".
enum TruthIndex : std::size_t { kUncertainPos = 0, kUncertainNeg = 1, kCertainPos = 2, kCertainNeg = 3 };

struct TruthTable {
  std::array<std::array<double, 4>, 4> cells{};
  UncertaintyProbs uncertainty;
  CorrectnessProbs correctness;
};

TruthTable truth_table(const Scenario& s);

/// Expected cell probabilities of the observed 2x2 table (block sums of the
/// truth table). pa = p11 + p00.
CellProportions theoretical_cell_probs(const Scenario& s);

/// Benchmark chance-corrected agreement K. Does not depend on theta.
/// nullopt when gamma or the denominator is degenerate.
std::optional<double> true_k(const Scenario& s);

/// K when both raters are always uncertain (p1 = p2 = 1).
std::optional<double> true_k_reduced(double m1, double m2, double rho_c);

/// Alternative chance agreement p_e* = 2 p1 p2 m1 m2 + (1-m1) p1 + (1-m2) p2 - p1 p2.
double chance_agreement_star(const Scenario& s);

/// (p_a - p_e*) / (1 - p_e*); nullopt when 1 - p_e* vanishes.
std::optional<double> k_star(const Scenario& s);

}  // namespace ira
