#include "ira/generator.hpp"

#include "ira/error.hpp"

namespace ira {

ScenarioSampler::ScenarioSampler(const Scenario& s) : scenario_(s) {
  validate(s);
  uncertainty_ = {latent_mean_for(s.p1), latent_mean_for(s.p2), s.rho_u};
  correctness_ = {latent_mean_for(1.0 - s.m1), latent_mean_for(1.0 - s.m2), s.rho_c};
}

SubjectOutcome ScenarioSampler::subject(RngStream& rng) const noexcept {
  SubjectOutcome out;
  out.truth_positive = rng.uniform() < scenario_.theta;

  const auto [lu1, lu2] = sample_bvn(uncertainty_, rng);
  out.uncertain1 = lu1 > 0.0;
  out.uncertain2 = lu2 > 0.0;

  bool correct1 = true;
  bool correct2 = true;
  if (out.uncertain1 && out.uncertain2) {
    const auto [lc1, lc2] = sample_bvn(correctness_, rng);
    correct1 = lc1 > 0.0;
    correct2 = lc2 > 0.0;
  } else if (out.uncertain2) {
    const double lc1 = sample_truncated_normal(correctness_.mu1, 0.0, rng);
    correct2 = sample_conditional_normal(correctness_.mu2, correctness_.mu1, correctness_.rho, lc1, rng) > 0.0;
  } else if (out.uncertain1) {
    const double lc2 = sample_truncated_normal(correctness_.mu2, 0.0, rng);
    correct1 = sample_conditional_normal(correctness_.mu1, correctness_.mu2, correctness_.rho, lc2, rng) > 0.0;
  }

  out.vote1_positive = correct1 == out.truth_positive;
  out.vote2_positive = correct2 == out.truth_positive;
  return out;
}

ContingencyTable ScenarioSampler::study(std::int64_t n_subjects, RngStream& rng) const {
  if (n_subjects < 1) throw InvalidInput("a study needs at least one subject");
  ContingencyTable t;
  for (std::int64_t j = 0; j < n_subjects; ++j) {
    const auto o = subject(rng);
    if (o.vote1_positive) {
      (o.vote2_positive ? t.n11 : t.n10) += 1;
    } else {
      (o.vote2_positive ? t.n01 : t.n00) += 1;
    }
  }
  return t;
}

}  // namespace ira
