#include "amoroso/loggamma.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "amoroso/specfun.hpp"

namespace amoroso {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double tail_probability(const LogGammaParams& p, double x, bool lower) {
  const double y = (x - p.nu()) / p.lambda();
  if (std::isnan(y)) return std::numeric_limits<double>::quiet_NaN();
  const double w = std::exp(y);
  // cdf = P(alpha, e^y) for lambda > 0 and Q(alpha, e^y) for lambda < 0.
  const bool use_p = (p.lambda() > 0.0) == lower;
  return use_p ? specfun::reg_gamma_p(p.alpha(), w) : specfun::reg_gamma_q(p.alpha(), w);
}

}  // namespace

LogGammaParams::LogGammaParams(double nu, double lambda, double alpha)
    : nu_(nu), lambda_(lambda), alpha_(alpha) {
  if (!std::isfinite(nu) || !std::isfinite(lambda) || !std::isfinite(alpha)) {
    throw std::invalid_argument("log-gamma parameters must be finite");
  }
  if (!(alpha > 0.0)) throw std::invalid_argument("log-gamma alpha must be positive");
  if (lambda == 0.0) throw std::invalid_argument("log-gamma lambda must be non-zero");
}

Support support(const LogGammaParams&) { return {-kInf, kInf, false, false}; }

double log_pdf(const LogGammaParams& p, double x) {
  const double y = (x - p.nu()) / p.lambda();
  if (std::isinf(y)) return -kInf;
  return p.alpha() * y - std::exp(y) - specfun::ln_gamma(p.alpha()) - std::log(std::abs(p.lambda()));
}

double pdf(const LogGammaParams& p, double x) { return std::exp(log_pdf(p, x)); }

double cdf(const LogGammaParams& p, double x) { return tail_probability(p, x, true); }

double survival(const LogGammaParams& p, double x) { return tail_probability(p, x, false); }

double quantile(const LogGammaParams& p, double q) {
  if (!(q > 0.0 && q < 1.0)) throw std::domain_error("quantile: q must lie in (0, 1)");
  const double w = p.lambda() > 0.0 ? specfun::inv_reg_gamma_p(p.alpha(), q)
                                    : specfun::inv_reg_gamma_q(p.alpha(), q);
  return p.nu() + p.lambda() * std::log(w);
}

double mode(const LogGammaParams& p) { return p.nu() + p.lambda() * std::log(p.alpha()); }

double mean(const LogGammaParams& p) { return p.nu() + p.lambda() * specfun::digamma(p.alpha()); }

double variance(const LogGammaParams& p) {
  return p.lambda() * p.lambda() * specfun::polygamma(1, p.alpha());
}

double skew(const LogGammaParams& p) {
  const double sign = p.lambda() > 0.0 ? 1.0 : -1.0;
  const double psi1 = specfun::polygamma(1, p.alpha());
  return sign * specfun::polygamma(2, p.alpha()) / (psi1 * std::sqrt(psi1));
}

double kurtosis(const LogGammaParams& p) {
  const double psi1 = specfun::polygamma(1, p.alpha());
  return specfun::polygamma(3, p.alpha()) / (psi1 * psi1);
}

double cgf(const LogGammaParams& p, double t) {
  const double shifted = p.alpha() + p.lambda() * t;
  if (!(shifted > 0.0)) throw std::domain_error("cgf: requires alpha + lambda t > 0");
  return p.nu() * t + specfun::ln_gamma(shifted) - specfun::ln_gamma(p.alpha());
}

double entropy(const LogGammaParams& p) {
  const double alpha = p.alpha();
  return specfun::ln_gamma(alpha) + std::log(std::abs(p.lambda())) - alpha * specfun::digamma(alpha) + alpha;
}

DistributionSummary summarize(const LogGammaParams& p) {
  DistributionSummary s;
  s.support = support(p);
  s.mode = mode(p);
  s.mean = mean(p);
  s.variance = variance(p);
  s.skew = skew(p);
  s.kurtosis = kurtosis(p);
  s.entropy = entropy(p);
  return s;
}

std::vector<double> sample(const LogGammaParams& p, RandomStream& rng, std::size_t n) {
  std::vector<double> draws;
  draws.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    draws.push_back(p.nu() + p.lambda() * log_standard_gamma(rng, p.alpha()));
  }
  return draws;
}

}  // namespace amoroso
