#include "amoroso/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace amoroso {

double uniform_open01(RandomStream& rng) {
  constexpr double kScale = 0x1.0p-53;
  return (static_cast<double>(rng() >> 11) + 0.5) * kScale;
}

double standard_normal(RandomStream& rng) {
  const double u1 = uniform_open01(rng);
  const double u2 = uniform_open01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double log_standard_gamma(RandomStream& rng, double alpha) {
  if (!(alpha > 0.0) || std::isinf(alpha)) {
    throw std::domain_error("log_standard_gamma: alpha must be positive and finite");
  }
  if (alpha < 1.0) {
    const double boosted = log_standard_gamma(rng, alpha + 1.0);
    return boosted + std::log(uniform_open01(rng)) / alpha;
  }
  const double d = alpha - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = standard_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_open01(rng);
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return std::log(d) + std::log(v);
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return std::log(d) + std::log(v);
  }
}

}  // namespace amoroso
