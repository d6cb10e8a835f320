#pragma once

#include <cstdint>

#include "ira/gaussian.hpp"
#include "ira/rng.hpp"
#include "ira/tables.hpp"
#include "ira/truth.hpp"

namespace ira {

struct SubjectOutcome {
  bool truth_positive = false;
  bool vote1_positive = false;
  bool vote2_positive = false;
  bool uncertain1 = false;  ///< diagnostic only
  bool uncertain2 = false;
};

/// Latent means and correlations for one scenario, computed once and reused for
/// every subject.
class ScenarioSampler {
 public:
  explicit ScenarioSampler(const Scenario& s);

  [[nodiscard]] const Scenario& scenario() const noexcept { return scenario_; }

  /// Draw order per subject: truth (one uniform); uncertainty (bivariate
  /// normal); then nothing if both are certain, a bivariate correctness draw
  /// if both are uncertain, or a truncated draw for the certain rater followed
  /// by a conditional draw for the uncertain one.
  SubjectOutcome subject(RngStream& rng) const noexcept;

  /// Tabulates n_subjects outcomes ("+" maps to subscript 1).
  ContingencyTable study(std::int64_t n_subjects, RngStream& rng) const;

 private:
  Scenario scenario_;
  BvnSpec uncertainty_;
  BvnSpec correctness_;
};

inline SubjectOutcome simulate_subject(const Scenario& s, RngStream& rng) { return ScenarioSampler(s).subject(rng); }

/// Throws InvalidInput when n_subjects < 1.
inline ContingencyTable simulate_study(const Scenario& s, std::int64_t n_subjects, RngStream& rng) {
  return ScenarioSampler(s).study(n_subjects, rng);
}

}  // namespace ira
