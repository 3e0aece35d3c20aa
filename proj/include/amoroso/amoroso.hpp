#pragma once

// The Amoroso (generalized gamma) distribution
//
//   f(x) = |beta / theta| / Gamma(alpha) * z^(alpha beta - 1) * exp(-z^beta),
//   z = (x - a) / theta,
//
// supported on x >= a when theta > 0 and x <= a when theta < 0.

#include <cstddef>
#include <optional>
#include <vector>

#include "amoroso/distribution.hpp"
#include "amoroso/random.hpp"

namespace amoroso {

/// Location a, scale theta, shape alpha and Weibull shape beta.
///
/// Construction validates alpha > 0, theta != 0, beta != 0 and finiteness
/// and throws std::invalid_argument otherwise, so every instance is a
/// proper distribution.
class AmorosoParams {
 public:
  AmorosoParams(double a, double theta, double alpha, double beta);

  double a() const { return a_; }
  double theta() const { return theta_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  friend bool operator==(const AmorosoParams&, const AmorosoParams&) = default;

 private:
  double a_;
  double theta_;
  double alpha_;
  double beta_;
};

Support support(const AmorosoParams& p);

/// ln f(x). Returns -inf outside the support. On the boundary x = a the
/// limit of the density is reported: for beta > 0 it is 0, finite or +inf
/// as alpha*beta is above, equal to or below 1; for beta < 0 it is 0.
double log_pdf(const AmorosoParams& p, double x);
double pdf(const AmorosoParams& p, double x);

double cdf(const AmorosoParams& p, double x);
/// 1 - cdf, evaluated on the complementary incomplete-gamma branch.
double survival(const AmorosoParams& p, double x);
/// Inverse cdf for q in (0, 1); throws std::domain_error otherwise.
double quantile(const AmorosoParams& p, double q);

double mode(const AmorosoParams& p);

/// E[Z^r] for the standardized variable Z = ((X - a) / theta), i.e.
/// Gamma(alpha + r/beta) / Gamma(alpha). Empty unless alpha + r/beta > 0.
std::optional<double> std_moment(const AmorosoParams& p, int r);
std::optional<double> mean(const AmorosoParams& p);
std::optional<double> variance(const AmorosoParams& p);
/// Differential entropy in nats.
double entropy(const AmorosoParams& p);

DistributionSummary summarize(const AmorosoParams& p);

/// n independent draws a + theta * G^(1/beta), G ~ StdGamma(alpha).
std::vector<double> sample(const AmorosoParams& p, RandomStream& rng, std::size_t n);

/// The law of 1/X for X ~ p. Requires a == 0 (std::domain_error otherwise).
AmorosoParams reciprocal(const AmorosoParams& p);

}  // namespace amoroso
