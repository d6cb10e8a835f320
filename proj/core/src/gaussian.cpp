#include "ira/gaussian.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "ira/error.hpp"

namespace ira {

namespace {

constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934;

template <std::size_t N>
double horner(const std::array<double, N>& c, double x) noexcept {
  double s = 0.0;
  for (std::size_t i = N; i-- > 0;) s = s * x + c[i];
  return s;
}

// AS 241 (PPND16) coefficients, lowest order first.
constexpr std::array<double, 8> kCentralNum = {
    3.3871328727963666080e0, 1.3314166789178437745e+2, 1.9715909503065514427e+3,
    1.3731693765509461125e+4, 4.5921953931549871457e+4, 6.7265770927008700853e+4,
    3.3430575583588128105e+4, 2.5090809287301226727e+3};
constexpr std::array<double, 8> kCentralDen = {
    1.0, 4.2313330701600911252e+1, 6.8718700749205790830e+2, 5.3941960214247511077e+3,
    2.1213794301586595867e+4, 3.9307895800092710610e+4, 2.8729085735721942674e+4,
    5.2264952788528545610e+3};
constexpr std::array<double, 8> kNearNum = {
    1.42343711074968357734e0, 4.63033784615654529590e0, 5.76949722146069140550e0,
    3.64784832476320460504e0, 1.27045825245236838258e0, 2.41780725177450611770e-1,
    2.27238449892691845833e-2, 7.74545014278341407640e-4};
constexpr std::array<double, 8> kNearDen = {
    1.0, 2.05319162663775882187e0, 1.67638483018380384940e0, 6.89767334985100004550e-1,
    1.48103976427480074590e-1, 1.51986665636164571966e-2, 5.47593808499534494600e-4,
    1.05075007164441684324e-9};
constexpr std::array<double, 8> kFarNum = {
    6.65790464350110377720e0, 5.46378491116411436990e0, 1.78482653991729133580e0,
    2.96560571828504891230e-1, 2.65321895265761230930e-2, 1.24266094738807843860e-3,
    2.71155556874348757815e-5, 2.01033439929228813265e-7};
constexpr std::array<double, 8> kFarDen = {
    1.0, 5.99832206555887937690e-1, 1.36929880922735805310e-1, 1.48753612908506148525e-2,
    7.86869131145613259100e-4, 1.84631831751005468180e-5, 1.42151175831644588870e-7,
    2.04426310338993978564e-15};

// Gauss-Kronrod 7/15 on [-1, 1]. Odd Kronrod nodes (index 1, 3, 5) and the
// centre are the Gauss nodes.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo, hi, kronrod, error;
};

template <typename F>
Segment gauss_kronrod(F&& f, double lo, double hi) {
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  const double fc = f(mid);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double pair = f(mid - dx) + f(mid + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

// Globally adaptive: keep bisecting the segment with the largest error until
// the summed error estimate drops below tol.
template <typename F>
double integrate(F&& f, const std::vector<double>& breaks, double tol) {
  std::vector<Segment> segs;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i + 1] > breaks[i]) segs.push_back(gauss_kronrod(f, breaks[i], breaks[i + 1]));
  }
  constexpr int kMaxSplits = 2000;
  for (int it = 0; it < kMaxSplits && !segs.empty(); ++it) {
    double total_err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      total_err += segs[i].error;
      if (segs[i].error > segs[worst].error) worst = i;
    }
    if (total_err <= tol) break;
    const Segment s = segs[worst];
    const double mid = 0.5 * (s.lo + s.hi);
    if (!(mid > s.lo && mid < s.hi)) break;
    segs[worst] = gauss_kronrod(f, s.lo, mid);
    segs.push_back(gauss_kronrod(f, mid, s.hi));
  }
  double sum = 0.0;
  for (const auto& s : segs) sum += s.kronrod;
  return sum;
}

// Beyond |z| = 9.5 the standard normal mass is below 1e-20.
constexpr double kIntegrationBound = 9.5;

double upper_orthant(double mu1, double mu2, double rho) {
  if (rho == 0.0) return std_normal_cdf(mu1) * std_normal_cdf(mu2);
  if (rho >= 1.0) return std_normal_cdf(std::min(mu1, mu2));
  if (rho <= -1.0) return std::max(0.0, std_normal_cdf(mu1) + std_normal_cdf(mu2) - 1.0);

  // L1 = mu1 + z, L2 = mu2 + rho z + s w with z, w iid N(0, 1).
  const double s = std::sqrt((1.0 - rho) * (1.0 + rho));
  const double lo = std::max(-mu1, -kIntegrationBound);
  const double hi = kIntegrationBound;
  if (!(lo < hi)) return 0.0;

  auto integrand = [=](double z) { return std_normal_pdf(z) * std_normal_cdf((mu2 + rho * z) / s); };

  std::vector<double> breaks = {lo};
  // The conditional probability steps from 0 to 1 around z = -mu2 / rho; put a
  // break there so the steep region is resolved from the first pass.
  const double step = -mu2 / rho;
  if (step > lo && step < hi) breaks.push_back(step);
  breaks.push_back(hi);
  const double p = integrate(integrand, breaks, 1e-13);
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace

double std_normal_pdf(double x) noexcept { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double std_normal_cdf(double x) noexcept { return 0.5 * std::erfc(-x * std::numbers::sqrt2 / 2.0); }

double std_normal_quantile_unchecked(double p) noexcept {
  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q * horner(kCentralNum, r) / horner(kCentralDen, r);
  }
  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double x;
  if (r <= 5.0) {
    r -= 1.6;
    x = horner(kNearNum, r) / horner(kNearDen, r);
  } else {
    r -= 5.0;
    x = horner(kFarNum, r) / horner(kFarDen, r);
  }
  return q < 0.0 ? -x : x;
}

double std_normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidInput("normal quantile needs p in (0, 1)");
  return std_normal_quantile_unchecked(p);
}

double latent_mean_for(double prob) {
  if (!(prob >= 0.0 && prob <= 1.0)) throw InvalidInput("probability must lie in [0, 1]");
  if (prob == 0.0) return -kLatentMeanBound;
  if (prob == 1.0) return kLatentMeanBound;
  return std::clamp(std_normal_quantile_unchecked(prob), -kLatentMeanBound, kLatentMeanBound);
}

double bvn_upper_orthant(const BvnSpec& spec) { return bvn_orthant(spec, true, true); }

double bvn_orthant(const BvnSpec& spec, bool first_positive, bool second_positive) {
  const double rho = std::clamp(spec.rho, -1.0, 1.0);
  const double mu1 = first_positive ? spec.mu1 : -spec.mu1;
  const double mu2 = second_positive ? spec.mu2 : -spec.mu2;
  const double r = (first_positive == second_positive) ? rho : -rho;
  return upper_orthant(mu1, mu2, r);
}

std::pair<double, double> sample_bvn(const BvnSpec& spec, RngStream& rng) noexcept {
  const double z1 = rng.normal();
  const double z2 = rng.normal();
  const double s = std::sqrt(std::max(0.0, (1.0 - spec.rho) * (1.0 + spec.rho)));
  return {spec.mu1 + z1, spec.mu2 + spec.rho * z1 + s * z2};
}

double sample_truncated_normal(double mu, double lower_bound, RngStream& rng) noexcept {
  const double u = rng.uniform();
  // X = mu - Phi^{-1}(v) with v uniform on (0, P(X > lower)).
  const double tail = std_normal_cdf(mu - lower_bound);
  double x;
  if (tail > std::numeric_limits<double>::min()) {
    x = mu - std_normal_quantile_unchecked(u * tail);
  } else {
    // Truncation point ~38 sd into the tail: the exponential tail limit.
    x = lower_bound - std::log(u) / (lower_bound - mu);
  }
  if (!(x > lower_bound)) x = std::nextafter(lower_bound, std::numeric_limits<double>::infinity());
  return x;
}

double sample_conditional_normal(double mu_target, double mu_given, double rho, double observed_value,
                                 RngStream& rng) noexcept {
  const double mean = mu_target + rho * (observed_value - mu_given);
  if (std::abs(rho) >= 1.0) return mean;
  return mean + std::sqrt((1.0 - rho) * (1.0 + rho)) * rng.normal();
}

}  // namespace ira
