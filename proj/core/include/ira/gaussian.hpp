#pragma once

#include <utility>

#include "ira/rng.hpp"

namespace ira {

double std_normal_pdf(double x) noexcept;

/// Phi(x) via erfc; absolute error at the level of double rounding.
double std_normal_cdf(double x) noexcept;

/// Phi^{-1}(p) for p in (0, 1) (Wichura's AS 241, ~1e-16 relative).
/// Throws InvalidInput outside (0, 1).
double std_normal_quantile(double p);

/// Same as std_normal_quantile without the range check, for hot loops that
/// already guarantee 0 < p < 1.
double std_normal_quantile_unchecked(double p) noexcept;

/// Latent mean mu with P(N(mu, 1) > 0) = prob. The endpoints prob = 0 and
/// prob = 1 map to -kLatentMeanBound / +kLatentMeanBound, far enough out that
/// the threshold event is impossible / certain in double precision.
inline constexpr double kLatentMeanBound = 40.0;
double latent_mean_for(double prob);

/// Bivariate normal with unit variances.
struct BvnSpec {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double rho = 0.0;
};

/// P(L1 > 0, L2 > 0). |rho| < 1 goes through adaptive Gauss-Kronrod
/// quadrature of phi(z) * Phi((mu2 + rho z) / sqrt(1 - rho^2)) over
/// z > -mu1 (absolute error below 1e-12); rho = 0 and rho = +-1 are closed forms.
double bvn_upper_orthant(const BvnSpec& spec);

/// P(sign conditions) for any of the four quadrants: `first_positive` selects
/// L1 > 0 versus L1 < 0, likewise for the second coordinate. Each quadrant is
/// an independent quadrature on the reflected distribution.
double bvn_orthant(const BvnSpec& spec, bool first_positive, bool second_positive);

std::pair<double, double> sample_bvn(const BvnSpec& spec, RngStream& rng) noexcept;

/// N(mu, 1) restricted to (lower_bound, inf), by inversion of the upper tail.
double sample_truncated_normal(double mu, double lower_bound, RngStream& rng) noexcept;

/// Draw L_target | L_given = observed_value for a unit-variance bivariate normal
/// with correlation rho: N(mu_target + rho (observed - mu_given), 1 - rho^2).
/// |rho| = 1 returns the conditional mean without consuming a draw.
double sample_conditional_normal(double mu_target, double mu_given, double rho,
                                 double observed_value, RngStream& rng) noexcept;

}  // namespace ira
