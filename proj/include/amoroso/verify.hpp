#pragma once

// Independent numerical oracles and the identity / limit-theorem suites.
//
// Nothing in this header calls the closed-form moment or entropy
// operations; the quadrature and KS machinery only ever sees densities,
// cdfs and raw draws.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "amoroso/amoroso.hpp"
#include "amoroso/distribution.hpp"
#include "amoroso/loggamma.hpp"
#include "amoroso/random.hpp"

namespace amoroso::verify {

using RealFunction = std::function<double(double)>;

/// Outcome of one check. passed is true iff statistic <= threshold, except
/// for negative controls (names ending in "/control"), which pass iff the
/// underlying test rejects.
struct CheckReport {
  std::string check_name;
  double statistic = 0.0;
  double threshold = 0.0;
  bool passed = false;
  std::string detail;
};

// ---------------------------------------------------------------------------
// Quadrature

struct QuadOptions {
  /// Length scale of the integrand, measured from the finite endpoint for a
  /// ray and from `center` for the whole line.
  double scale = 1.0;
  double center = 0.0;
  int max_levels = 12;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
  int levels = 0;
};

/// Double-exponential quadrature over `support`: tanh-sinh on a bounded
/// interval, exp-sinh on a ray, sinh-sinh on the whole line. Step halving
/// continues until successive estimates agree within tol * max(1, |I|).
/// A non-finite integrand value at any node makes the result non-converged.
QuadResult integrate(const RealFunction& f, const Support& support, double tol, const QuadOptions& opts = {});

/// As integrate(), but throws std::runtime_error when it does not converge.
double quad_integral(const RealFunction& f, const Support& support, double tol, const QuadOptions& opts = {});

/// Mass, mean, variance and entropy of a density given by its log, all by
/// quadrature.
struct QuadMoments {
  double mass = 0.0;
  double mean = 0.0;
  double variance = 0.0;
  double entropy = 0.0;
};
QuadMoments quadrature_moments(const RealFunction& log_density, const Support& support, double tol,
                               const QuadOptions& opts = {});

/// Doubling-interval divergence test for E|X - anchor|^r. Integrates the
/// moment integrand over [anchor + s 2^k, anchor + s 2^(k+1)] (mirrored for
/// left-infinite supports) for k = 8 .. 24 and reports divergence when the
/// contributions stop shrinking geometrically.
bool moment_diverges(const RealFunction& density, const Support& support, int r, double scale);

/// Golden-section maximizer of a unimodal function on [lo, hi].
double numeric_argmax(const RealFunction& f, double lo, double hi, double tol = 1e-12);

// ---------------------------------------------------------------------------
// Kolmogorov-Smirnov

/// P(K > x) for the Kolmogorov distribution.
double kolmogorov_survival(double x);

/// One-sample KS test of `samples` against `cdf` at the given significance,
/// using the asymptotic Kolmogorov law with Stephens' small-sample
/// correction. statistic is D_n; threshold is the critical D_n.
/// Throws std::invalid_argument for fewer than 100 samples.
CheckReport ks_two_way(std::span<const double> samples, const RealFunction& cdf, double significance = 0.01);

// ---------------------------------------------------------------------------
// Distributional identities. With negative_control set, the draws are
// compared against a deliberately wrong law and the check passes iff KS
// rejects it.

CheckReport identity_gamma_addition(double theta, double alpha1, double alpha2, std::size_t n, RandomStream& rng,
                                    bool negative_control = false);
CheckReport identity_chi_sqrt(int k, std::size_t n, RandomStream& rng, bool negative_control = false);
CheckReport identity_stacy_normal_power(double sigma, double beta, std::size_t n, RandomStream& rng,
                                        bool negative_control = false);
CheckReport identity_loggamma_log(double alpha, std::size_t n, RandomStream& rng, bool negative_control = false);
CheckReport identity_amoroso_stdgamma(const AmorosoParams& params, std::size_t n, RandomStream& rng,
                                      bool negative_control = false);
CheckReport identity_lognormal_exp_normal(double a, double vartheta, double sigma, std::size_t n, RandomStream& rng,
                                          bool negative_control = false);

/// Scale of the maximum (minimum when beta/omega > 0) of two independent
/// FisherTippett(a, omega_i, beta) variables:
/// sign(omega) (|omega1|^-beta + |omega2|^-beta)^(-1/beta).
double fisher_tippett_combined_scale(double omega1, double omega2, double beta);

/// The combined scale as printed in the reference text,
/// (omega1^beta + omega2^beta)^(1/beta) / (omega1 omega2).
double fisher_tippett_printed_scale(double omega1, double omega2, double beta);

/// Max-stability, checked analytically: the product of the two cdfs (or
/// survivals, for minima) against the combined law on a 50-point grid.
CheckReport identity_ft_max(double a, double omega1, double omega2, double beta);

/// Passes iff the printed combined scale disagrees with the cdf product.
CheckReport ft_max_printed_scale_discrepancy(double a, double omega1, double omega2, double beta);

// ---------------------------------------------------------------------------
// Limit theorems. Each reports sup-norm pdf distances over the grid in
// `detail`; statistic is the distance at the last grid point, threshold the
// absolute cap, and the check also requires strictly decreasing distances.

/// Amoroso(nu - beta lambda, beta lambda, alpha, beta) -> LogGamma(nu, lambda, alpha).
CheckReport limit_loggamma(double alpha, double lambda, double nu, std::span<const double> beta_grid);

/// Amoroso(mu - sigma sqrt(alpha), sigma / sqrt(alpha), alpha, 1) -> Normal(mu, sigma).
CheckReport limit_normal(double mu, double sigma, std::span<const double> alpha_grid);

/// LogGamma(mu - sigma sqrt(alpha) ln alpha, sigma sqrt(alpha), alpha) -> Normal(mu, sigma).
CheckReport limit_normal_loggamma(double mu, double sigma, std::span<const double> alpha_grid);

/// Amoroso(a, vartheta (beta sigma)^(2/beta), 1/(beta sigma)^2, beta) -> LogNormal(a, vartheta, sigma).
CheckReport limit_lognormal(double vartheta, double sigma, std::span<const double> beta_grid, double a = 0.0);

/// Shape of Amoroso(0, 1, alpha, beta) with alpha beta = 1 - p tends to
/// x^-p on [1, 2] as beta -> 0 (pdf ratios against x = 1). The sign of
/// beta follows 1 - p; p = 1 is approached along alpha = |beta|.
CheckReport limit_power_law(double p, std::span<const double> beta_magnitudes);

/// Log-normal density transcribed in its own parameterization.
double lognormal_pdf(double x, double a, double vartheta, double sigma);
double normal_pdf(double x, double mu, double sigma);

// ---------------------------------------------------------------------------
// Suites

enum class Suite { identities, limits, all };

Suite parse_suite(const std::string& name);

/// Runs every check in the suite. Each check seeds its own stream from
/// (seed, check name), so results do not depend on execution order and
/// are reproducible bit for bit. Reports are sorted by check name.
std::vector<CheckReport> run_suite(Suite suite, std::uint64_t seed, std::size_t n = 100000);

/// Tab-separated: name, statistic, threshold, PASS|FAIL, detail.
std::string format_report_line(const CheckReport& report);
std::string reports_to_json(const std::vector<CheckReport>& reports, std::uint64_t seed);

}  // namespace amoroso::verify
