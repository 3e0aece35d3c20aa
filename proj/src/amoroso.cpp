#include "amoroso/amoroso.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "amoroso/specfun.hpp"

namespace amoroso {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_normalizer(const AmorosoParams& p) {
  return std::log(std::abs(p.beta() / p.theta())) - specfun::ln_gamma(p.alpha());
}

// The cdf is P(alpha, z^beta) when beta/theta > 0 and Q(alpha, z^beta) otherwise.
bool cdf_is_lower_tail(const AmorosoParams& p) { return (p.beta() > 0.0) == (p.theta() > 0.0); }

// cdf (lower = true) or survival (lower = false).
double tail_probability(const AmorosoParams& p, double x, bool lower) {
  const double z = (x - p.a()) / p.theta();
  if (std::isnan(z)) return std::numeric_limits<double>::quiet_NaN();
  double cdf_value;
  if (z <= 0.0) {
    cdf_value = p.theta() > 0.0 ? 0.0 : 1.0;
  } else if (std::isinf(z)) {
    cdf_value = p.theta() > 0.0 ? 1.0 : 0.0;
  } else {
    const double w = std::exp(p.beta() * std::log(z));
    const bool use_p = cdf_is_lower_tail(p) == lower;
    return use_p ? specfun::reg_gamma_p(p.alpha(), w) : specfun::reg_gamma_q(p.alpha(), w);
  }
  return lower ? cdf_value : 1.0 - cdf_value;
}

std::optional<double> log_moment_ratio(const AmorosoParams& p, int r) {
  const double shifted = p.alpha() + r / p.beta();
  if (!(shifted > 0.0)) return std::nullopt;
  return specfun::ln_gamma(shifted) - specfun::ln_gamma(p.alpha());
}

}  // namespace

AmorosoParams::AmorosoParams(double a, double theta, double alpha, double beta)
    : a_(a), theta_(theta), alpha_(alpha), beta_(beta) {
  if (!std::isfinite(a) || !std::isfinite(theta) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw std::invalid_argument("Amoroso parameters must be finite");
  }
  if (!(alpha > 0.0)) throw std::invalid_argument("Amoroso alpha must be positive");
  if (theta == 0.0) throw std::invalid_argument("Amoroso theta must be non-zero");
  if (beta == 0.0) throw std::invalid_argument("Amoroso beta must be non-zero");
}

Support support(const AmorosoParams& p) {
  if (p.theta() > 0.0) return {p.a(), kInf, true, false};
  return {-kInf, p.a(), false, true};
}

double log_pdf(const AmorosoParams& p, double x) {
  const double z = (x - p.a()) / p.theta();
  if (std::isnan(z)) return std::numeric_limits<double>::quiet_NaN();
  if (z < 0.0 || std::isinf(z)) return -kInf;
  const double ab = p.alpha() * p.beta();
  if (z == 0.0) {
    if (p.beta() < 0.0 || ab > 1.0) return -kInf;
    if (ab < 1.0) return kInf;
    return log_normalizer(p);
  }
  const double log_z = std::log(z);
  return log_normalizer(p) + (ab - 1.0) * log_z - std::exp(p.beta() * log_z);
}

double pdf(const AmorosoParams& p, double x) { return std::exp(log_pdf(p, x)); }

double cdf(const AmorosoParams& p, double x) { return tail_probability(p, x, true); }

double survival(const AmorosoParams& p, double x) { return tail_probability(p, x, false); }

double quantile(const AmorosoParams& p, double q) {
  if (!(q > 0.0 && q < 1.0)) throw std::domain_error("quantile: q must lie in (0, 1)");
  const double w = cdf_is_lower_tail(p) ? specfun::inv_reg_gamma_p(p.alpha(), q)
                                        : specfun::inv_reg_gamma_q(p.alpha(), q);
  return p.a() + p.theta() * std::exp(std::log(w) / p.beta());
}

double mode(const AmorosoParams& p) {
  // Interior maximum exists iff alpha - 1/beta > 0; this is alpha*beta > 1
  // for beta > 0 and always true for beta < 0.
  const double base = p.alpha() - 1.0 / p.beta();
  if (!(base > 0.0)) return p.a();
  return p.a() + p.theta() * std::exp(std::log(base) / p.beta());
}

std::optional<double> std_moment(const AmorosoParams& p, int r) {
  if (r < 1) throw std::invalid_argument("std_moment: order must be a positive integer");
  const auto log_ratio = log_moment_ratio(p, r);
  if (!log_ratio) return std::nullopt;
  return std::exp(*log_ratio);
}

std::optional<double> mean(const AmorosoParams& p) {
  const auto m1 = std_moment(p, 1);
  if (!m1) return std::nullopt;
  return p.a() + p.theta() * *m1;
}

std::optional<double> variance(const AmorosoParams& p) {
  const auto l1 = log_moment_ratio(p, 1);
  const auto l2 = log_moment_ratio(p, 2);
  if (!l1 || !l2) return std::nullopt;
  // theta^2 (m2 - m1^2) = theta^2 m1^2 (m2 / m1^2 - 1)
  const double m1 = std::exp(*l1);
  const double v = p.theta() * p.theta() * m1 * m1 * std::expm1(*l2 - 2.0 * *l1);
  return v > 0.0 ? v : 0.0;
}

double entropy(const AmorosoParams& p) {
  const double alpha = p.alpha();
  return std::log(std::abs(p.theta())) + specfun::ln_gamma(alpha) - std::log(std::abs(p.beta())) + alpha +
         (1.0 / p.beta() - alpha) * specfun::digamma(alpha);
}

DistributionSummary summarize(const AmorosoParams& p) {
  DistributionSummary s;
  s.support = support(p);
  s.mode = mode(p);
  s.mean = mean(p);
  s.variance = variance(p);
  s.entropy = entropy(p);
  s.side_conditions = {
      {"mean: alpha + 1/beta > 0", s.mean.has_value()},
      {"variance: alpha + 2/beta > 0", s.variance.has_value()},
  };
  return s;
}

std::vector<double> sample(const AmorosoParams& p, RandomStream& rng, std::size_t n) {
  std::vector<double> draws;
  draws.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double log_g = log_standard_gamma(rng, p.alpha());
    draws.push_back(p.a() + p.theta() * std::exp(log_g / p.beta()));
  }
  return draws;
}

AmorosoParams reciprocal(const AmorosoParams& p) {
  if (p.a() != 0.0) throw std::domain_error("reciprocal: location must be zero");
  return {0.0, 1.0 / p.theta(), p.alpha(), -p.beta()};
}

}  // namespace amoroso
