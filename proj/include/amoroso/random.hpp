#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace amoroso {

// The random stream is std::mt19937_64, whose output sequence is fixed by
// the C++ standard. All variates below are derived from its raw 64-bit
// output by code in this library, never by <random> distributions (whose
// algorithms are implementation-defined), so draws are reproducible across
// platforms and standard libraries.
using RandomStream = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0;

/// Uniform on the open interval (0, 1), 53 bits of resolution.
double uniform_open01(RandomStream& rng);

/// Standard normal variate (Box-Muller, one value per call).
double standard_normal(RandomStream& rng);

/// ln G with G ~ StdGamma(alpha).
///
/// Marsaglia-Tsang squeeze/rejection for alpha >= 1. For alpha < 1 the
/// boost G(alpha) = G(alpha + 1) * U^(1/alpha) is applied in log space, so
/// tiny shapes do not underflow to an exact zero.
double log_standard_gamma(RandomStream& rng, double alpha);

inline double standard_gamma(RandomStream& rng, double alpha) {
  return std::exp(log_standard_gamma(rng, alpha));
}

}  // namespace amoroso
