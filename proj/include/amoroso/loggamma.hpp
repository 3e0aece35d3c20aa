#pragma once

// The log-gamma family
//
//   f(x) = exp(alpha y - e^y) / (Gamma(alpha) |lambda|),  y = (x - nu) / lambda,
//
// on the whole real line. LogGamma(nu, lambda, alpha) is the law of
// nu + lambda ln G with G ~ StdGamma(alpha).

#include <cstddef>
#include <vector>

#include "amoroso/distribution.hpp"
#include "amoroso/random.hpp"

namespace amoroso {

/// Location nu, scale lambda (non-zero) and shape alpha (> 0).
/// Throws std::invalid_argument on invalid or non-finite values.
class LogGammaParams {
 public:
  LogGammaParams(double nu, double lambda, double alpha);

  double nu() const { return nu_; }
  double lambda() const { return lambda_; }
  double alpha() const { return alpha_; }

  friend bool operator==(const LogGammaParams&, const LogGammaParams&) = default;

 private:
  double nu_;
  double lambda_;
  double alpha_;
};

Support support(const LogGammaParams& p);
double log_pdf(const LogGammaParams& p, double x);
double pdf(const LogGammaParams& p, double x);
double cdf(const LogGammaParams& p, double x);
double survival(const LogGammaParams& p, double x);
double quantile(const LogGammaParams& p, double q);

/// nu + lambda ln(alpha), the stationary point of the log-density.
double mode(const LogGammaParams& p);
double mean(const LogGammaParams& p);
double variance(const LogGammaParams& p);
double skew(const LogGammaParams& p);
/// Excess kurtosis psi_3(alpha) / psi_1(alpha)^2 (zero in the normal limit).
double kurtosis(const LogGammaParams& p);

/// Cumulant generating function ln E[exp(tX)]. Requires alpha + lambda t > 0,
/// throws std::domain_error otherwise.
double cgf(const LogGammaParams& p, double t);
double entropy(const LogGammaParams& p);

DistributionSummary summarize(const LogGammaParams& p);

std::vector<double> sample(const LogGammaParams& p, RandomStream& rng, std::size_t n);

}  // namespace amoroso
