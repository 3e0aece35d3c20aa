#include "amoroso/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "amoroso/format.hpp"
#include "amoroso/specfun.hpp"

namespace amoroso::verify {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kTMax = 6.5;

enum class Region { bounded, right_ray, left_ray, line };

struct Node {
  double x;
  double weight;
};

Node map_node(Region region, const Support& s, const QuadOptions& o, double t) {
  const double u = kHalfPi * std::sinh(t);
  const double du = kHalfPi * std::cosh(t);
  switch (region) {
    case Region::bounded: {
      const double half = 0.5 * (s.upper - s.lower);
      // e = exp(-2|u|); 1 - tanh|u| = 2e / (1 + e); sech^2 u = 4e / (1 + e)^2.
      const double e = std::exp(-2.0 * std::abs(u));
      const double offset = half * 2.0 * e / (1.0 + e);
      const double x = t < 0.0 ? s.lower + offset : s.upper - offset;
      return {x, half * du * 4.0 * e / ((1.0 + e) * (1.0 + e))};
    }
    case Region::right_ray: {
      const double g = o.scale * std::exp(u);
      return {s.lower + g, g * du};
    }
    case Region::left_ray: {
      const double g = o.scale * std::exp(u);
      return {s.upper - g, g * du};
    }
    case Region::line:
      return {o.center + o.scale * std::sinh(u), o.scale * std::cosh(u) * du};
  }
  return {0.0, 0.0};
}

Region classify_region(const Support& s) {
  const bool lower_finite = std::isfinite(s.lower);
  const bool upper_finite = std::isfinite(s.upper);
  if (lower_finite && upper_finite) return Region::bounded;
  if (lower_finite) return Region::right_ray;
  if (upper_finite) return Region::left_ray;
  return Region::line;
}

// Contribution of one node; nodes that round onto a finite endpoint carry
// negligible weight and are skipped.
bool accumulate(const RealFunction& f, Region region, const Support& s, const QuadOptions& o, double t,
                double& sum) {
  const Node node = map_node(region, s, o, t);
  if (!std::isfinite(node.x) || node.weight == 0.0) return true;
  if (std::isfinite(s.lower) && node.x <= s.lower) return true;
  if (std::isfinite(s.upper) && node.x >= s.upper) return true;
  const double fx = f(node.x);
  if (!std::isfinite(fx)) {
    // An integrable endpoint singularity seen through an underflowed
    // argument; the node's weight is negligible.
    const double tiny = 1e-290;
    const bool at_lower = std::isfinite(s.lower) && node.x - s.lower < tiny * std::max(1.0, std::abs(s.lower));
    const bool at_upper = std::isfinite(s.upper) && s.upper - node.x < tiny * std::max(1.0, std::abs(s.upper));
    return fx == kInf && (at_lower || at_upper);
  }
  sum += fx * node.weight;
  return true;
}

struct KsResult {
  double d = 0.0;
  double critical = 0.0;
  double p_value = 0.0;
};

double stephens_factor(double n) {
  const double root = std::sqrt(n);
  return root + 0.12 + 0.11 / root;
}

// cdf_values must be the target cdf evaluated at the sorted samples.
KsResult ks_from_sorted(std::span<const double> cdf_values, double significance) {
  const auto n = static_cast<double>(cdf_values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < cdf_values.size(); ++i) {
    const double f = cdf_values[i];
    const double above = (static_cast<double>(i) + 1.0) / n - f;
    const double below = f - static_cast<double>(i) / n;
    d = std::max({d, above, below});
  }
  if (std::any_of(cdf_values.begin(), cdf_values.end(), [](double v) { return std::isnan(v); })) d = 1.0;

  // Critical value: K(lambda) = significance, solved by bisection.
  double lo = 0.2;
  double hi = 5.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (kolmogorov_survival(mid) > significance) lo = mid; else hi = mid;
  }
  const double factor = stephens_factor(n);
  return {d, 0.5 * (lo + hi) / factor, kolmogorov_survival(factor * d)};
}

CheckReport ks_report(std::string name, std::span<const double> cdf_values, bool negative_control,
                      const std::string& note) {
  const KsResult ks = ks_from_sorted(cdf_values, 0.01);
  CheckReport r;
  r.check_name = negative_control ? name + "/control" : std::move(name);
  r.statistic = ks.d;
  r.threshold = ks.critical;
  const bool accepted = ks.d <= ks.critical;
  r.passed = negative_control ? !accepted : accepted;
  r.detail = "n=" + std::to_string(cdf_values.size()) + " p=" + format_real(ks.p_value) +
             (note.empty() ? "" : " " + note);
  return r;
}

CheckReport ks_check(std::string name, std::vector<double> draws, const RealFunction& cdf, bool negative_control,
                     const std::string& note = {}) {
  if (draws.size() < 100) throw std::invalid_argument("KS test needs at least 100 samples");
  std::sort(draws.begin(), draws.end());
  std::vector<double> values(draws.size());
  std::transform(draws.begin(), draws.end(), values.begin(), cdf);
  return ks_report(std::move(name), values, negative_control, note);
}

std::string grid_detail(std::span<const double> grid, std::span<const double> distances) {
  std::ostringstream os;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i) os << ' ';
    os << format_real(grid[i]) << ':' << format_real(distances[i]);
  }
  return os.str();
}

bool strictly_decreasing(std::span<const double> v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

CheckReport limit_report(std::string name, std::span<const double> grid, std::span<const double> distances,
                         double cap) {
  CheckReport r;
  r.check_name = std::move(name);
  r.statistic = distances.empty() ? kInf : distances.back();
  r.threshold = cap;
  const bool monotone = strictly_decreasing(distances);
  r.passed = !distances.empty() && monotone && r.statistic <= cap;
  r.detail = (monotone ? "decreasing " : "NOT decreasing ") + grid_detail(grid, distances);
  return r;
}

template <class Dist>
double sup_distance(const Dist& dist, const RealFunction& target, std::span<const double> xs) {
  double d = 0.0;
  for (double x : xs) d = std::max(d, std::abs(pdf(dist, x) - target(x)));
  return d;
}

std::vector<double> linspace(double lo, double hi, int points) {
  std::vector<double> xs(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  return xs;
}

// 5-point Gauss-Legendre on [lo, hi].
double gauss_legendre5(const RealFunction& f, double lo, double hi) {
  static constexpr std::array<double, 5> node = {0.0, 0.5384693101056831, -0.5384693101056831,
                                                 0.9061798459386640, -0.9061798459386640};
  static constexpr std::array<double, 5> weight = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                                   0.2369268850561891, 0.2369268850561891};
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double sum = 0.0;
  for (std::size_t i = 0; i < node.size(); ++i) sum += weight[i] * f(mid + half * node[i]);
  return sum * half;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

// ---------------------------------------------------------------------------

QuadResult integrate(const RealFunction& f, const Support& support, double tol, const QuadOptions& opts) {
  if (!(opts.scale > 0.0)) throw std::invalid_argument("integrate: scale must be positive");
  const Region region = classify_region(support);
  QuadResult result;

  double h = 0.5;
  double sum = 0.0;
  const int k_max = static_cast<int>(kTMax / h);
  for (int k = -k_max; k <= k_max; ++k) {
    if (!accumulate(f, region, support, opts, k * h, sum)) return result;
  }
  double estimate = h * sum;

  for (int level = 1; level <= opts.max_levels; ++level) {
    h *= 0.5;
    const int odd_max = static_cast<int>(kTMax / h);
    for (int k = -odd_max; k <= odd_max; ++k) {
      if (k % 2 == 0) continue;
      if (!accumulate(f, region, support, opts, k * h, sum)) return result;
    }
    const double refined = h * sum;
    result.error_estimate = std::abs(refined - estimate);
    result.value = refined;
    result.levels = level;
    estimate = refined;
    if (level >= 4 && result.error_estimate <= tol * std::max(1.0, std::abs(refined))) {
      result.converged = true;
      return result;
    }
  }
  return result;
}

double quad_integral(const RealFunction& f, const Support& support, double tol, const QuadOptions& opts) {
  const QuadResult r = integrate(f, support, tol, opts);
  if (!r.converged) {
    throw std::runtime_error("quadrature did not converge (estimate " + format_real(r.value) + ", error " +
                             format_real(r.error_estimate) + ")");
  }
  return r.value;
}

QuadMoments quadrature_moments(const RealFunction& log_density, const Support& support, double tol,
                               const QuadOptions& opts) {
  auto density = [&](double x) {
    const double lp = log_density(x);
    return lp == -kInf ? 0.0 : std::exp(lp);
  };
  QuadMoments m;
  m.mass = quad_integral(density, support, tol, opts);
  m.mean = quad_integral(
               [&](double x) {
                 const double d = density(x);
                 return d == 0.0 ? 0.0 : x * d;
               },
               support, tol, opts) /
           m.mass;
  m.variance = quad_integral(
                   [&](double x) {
                     const double d = density(x);
                     const double dx = x - m.mean;
                     return d == 0.0 ? 0.0 : dx * dx * d;
                   },
                   support, tol, opts) /
               m.mass;
  m.entropy = -quad_integral(
      [&](double x) {
        const double lp = log_density(x);
        return lp == -kInf ? 0.0 : std::exp(lp) * lp;
      },
      support, tol, opts);
  return m;
}

bool moment_diverges(const RealFunction& density, const Support& support, int r, double scale) {
  const bool right = std::isfinite(support.lower);
  const double anchor = right ? support.lower : support.upper;
  if (!std::isfinite(anchor)) throw std::invalid_argument("moment_diverges: support must be a ray");
  auto integrand = [&](double x) { return std::pow(std::abs(x - anchor), r) * density(x); };

  std::vector<double> contributions;
  for (int k = 8; k <= 24; ++k) {
    const double near = scale * std::ldexp(1.0, k);
    const double far = 2.0 * near;
    const Support piece = right ? Support{anchor + near, anchor + far, true, true}
                                : Support{anchor - far, anchor - near, true, true};
    contributions.push_back(quad_integral(integrand, piece, 1e-10));
  }
  // Converging tails shrink geometrically; a ratio near or above one means
  // the tail integral grows without bound.
  double ratio_sum = 0.0;
  int ratios = 0;
  for (std::size_t i = contributions.size() - 4; i < contributions.size(); ++i) {
    if (contributions[i - 1] <= 0.0) return false;
    ratio_sum += contributions[i] / contributions[i - 1];
    ++ratios;
  }
  return ratio_sum / ratios >= 0.9;
}

double numeric_argmax(const RealFunction& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > tol * std::max(1.0, std::abs(lo) + std::abs(hi))) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------

double kolmogorov_survival(double x) {
  if (x <= 0.0) return 1.0;
  if (x < 1.18) {
    // P(K <= x) = sqrt(2 pi) / x sum exp(-(2k-1)^2 pi^2 / (8 x^2))
    const double c = std::numbers::pi * std::numbers::pi / (8.0 * x * x);
    double sum = 0.0;
    for (int k = 1; k <= 50; ++k) {
      const double m = 2.0 * k - 1.0;
      sum += std::exp(-m * m * c);
    }
    return 1.0 - std::sqrt(2.0 * std::numbers::pi) / x * sum;
  }
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 == 1) ? term : -term;
    if (term < 1e-300) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

CheckReport ks_two_way(std::span<const double> samples, const RealFunction& cdf, double significance) {
  if (samples.size() < 100) throw std::invalid_argument("ks_two_way: at least 100 samples are required");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> values(sorted.size());
  std::transform(sorted.begin(), sorted.end(), values.begin(), cdf);
  const KsResult ks = ks_from_sorted(values, significance);
  CheckReport r;
  r.check_name = "ks";
  r.statistic = ks.d;
  r.threshold = ks.critical;
  r.passed = ks.d <= ks.critical;
  r.detail = "n=" + std::to_string(samples.size()) + " p=" + format_real(ks.p_value);
  return r;
}

// ---------------------------------------------------------------------------

CheckReport identity_gamma_addition(double theta, double alpha1, double alpha2, std::size_t n, RandomStream& rng,
                                    bool negative_control) {
  const auto first = sample(AmorosoParams(0.0, theta, alpha1, 1.0), rng, n);
  const auto second = sample(AmorosoParams(0.0, theta, alpha2, 1.0), rng, n);
  std::vector<double> sums(n);
  for (std::size_t i = 0; i < n; ++i) sums[i] = first[i] + second[i];
  const double shape = negative_control ? std::max(alpha1, alpha2) : alpha1 + alpha2;
  const AmorosoParams target(0.0, theta, shape, 1.0);
  return ks_check("gamma_addition/theta=" + format_real(theta) + ",alpha1=" + format_real(alpha1) +
                      ",alpha2=" + format_real(alpha2),
                  std::move(sums), [&](double x) { return cdf(target, x); }, negative_control);
}

CheckReport identity_chi_sqrt(int k, std::size_t n, RandomStream& rng, bool negative_control) {
  if (k < 1) throw std::invalid_argument("identity_chi_sqrt: k must be a positive integer");
  // Chi-square draws as sums of k squared standard normals.
  std::vector<double> roots(n);
  for (auto& v : roots) {
    double sum = 0.0;
    for (int j = 0; j < k; ++j) {
      const double z = standard_normal(rng);
      sum += z * z;
    }
    v = std::sqrt(sum);
  }
  const int dof = negative_control ? k + 1 : k;
  const AmorosoParams chi(0.0, std::numbers::sqrt2, 0.5 * dof, 2.0);
  return ks_check("chi_sqrt/k=" + std::to_string(k), std::move(roots), [&](double x) { return cdf(chi, x); },
                  negative_control);
}

CheckReport identity_stacy_normal_power(double sigma, double beta, std::size_t n, RandomStream& rng,
                                        bool negative_control) {
  std::vector<double> draws(n);
  for (auto& v : draws) v = std::pow(std::abs(sigma * standard_normal(rng)), 2.0 / beta);
  const AmorosoParams stacy(0.0, std::pow(2.0 * sigma * sigma, 1.0 / beta), negative_control ? 1.0 : 0.5, beta);
  return ks_check("stacy_normal_power/sigma=" + format_real(sigma) + ",beta=" + format_real(beta), std::move(draws),
                  [&](double x) { return cdf(stacy, x); }, negative_control);
}

CheckReport identity_loggamma_log(double alpha, std::size_t n, RandomStream& rng, bool negative_control) {
  auto draws = sample(AmorosoParams(0.0, 1.0, alpha, 1.0), rng, n);
  for (auto& v : draws) v = std::log(v);
  const LogGammaParams target(0.0, negative_control ? -1.0 : 1.0, alpha);
  return ks_check("loggamma_log/alpha=" + format_real(alpha), std::move(draws),
                  [&](double x) { return cdf(target, x); }, negative_control);
}

CheckReport identity_amoroso_stdgamma(const AmorosoParams& params, std::size_t n, RandomStream& rng,
                                      bool negative_control) {
  auto draws = sample(AmorosoParams(0.0, 1.0, params.alpha(), 1.0), rng, n);
  for (auto& g : draws) g = params.a() + params.theta() * std::pow(g, 1.0 / params.beta());
  const AmorosoParams target = negative_control
                                   ? AmorosoParams(params.a(), params.theta(), params.alpha(), -params.beta())
                                   : params;
  return ks_check("amoroso_stdgamma/a=" + format_real(params.a()) + ",theta=" + format_real(params.theta()) +
                      ",alpha=" + format_real(params.alpha()) + ",beta=" + format_real(params.beta()),
                  std::move(draws), [&](double x) { return cdf(target, x); }, negative_control);
}

double lognormal_pdf(double x, double a, double vartheta, double sigma) {
  const double z = (x - a) / vartheta;
  if (!(z > 0.0)) return 0.0;
  const double l = std::log(z);
  return 1.0 / (std::abs(vartheta) * std::sqrt(2.0 * std::numbers::pi * sigma * sigma)) / z *
         std::exp(-l * l / (2.0 * sigma * sigma));
}

double normal_pdf(double x, double mu, double sigma) {
  const double z = (x - mu) / sigma;
  return std::exp(-0.5 * z * z) / (std::abs(sigma) * std::sqrt(2.0 * std::numbers::pi));
}

CheckReport identity_lognormal_exp_normal(double a, double vartheta, double sigma, std::size_t n, RandomStream& rng,
                                          bool negative_control) {
  if (n < 100) throw std::invalid_argument("identity_lognormal_exp_normal: at least 100 samples are required");
  std::vector<double> draws(n);
  for (auto& v : draws) v = std::exp(std::log(vartheta) + sigma * standard_normal(rng)) + a;
  std::sort(draws.begin(), draws.end());

  // Target cdf by integrating the log-normal density between successive
  // sorted draws, so the check exercises the density itself.
  const double target_sigma = negative_control ? 1.1 * sigma : sigma;
  const RealFunction density = [&](double x) { return lognormal_pdf(x, a, vartheta, target_sigma); };
  std::vector<double> values(n);
  double running = quad_integral(density, Support{a, draws.front(), true, true}, 1e-12);
  values[0] = running;
  for (std::size_t i = 1; i < n; ++i) {
    running += gauss_legendre5(density, draws[i - 1], draws[i]);
    values[i] = running;
  }
  return ks_report("lognormal_exp_normal/a=" + format_real(a) + ",vartheta=" + format_real(vartheta) +
                       ",sigma=" + format_real(sigma),
                   values, negative_control, "cdf=" + format_real(running) + " at max draw");
}

double fisher_tippett_combined_scale(double omega1, double omega2, double beta) {
  if ((omega1 > 0.0) != (omega2 > 0.0)) {
    throw std::invalid_argument("fisher_tippett_combined_scale: scales must share a sign");
  }
  const double magnitude =
      std::pow(std::pow(std::abs(omega1), -beta) + std::pow(std::abs(omega2), -beta), -1.0 / beta);
  return omega1 > 0.0 ? magnitude : -magnitude;
}

double fisher_tippett_printed_scale(double omega1, double omega2, double beta) {
  return std::pow(std::pow(omega1, beta) + std::pow(omega2, beta), 1.0 / beta) / (omega1 * omega2);
}

namespace {

double ft_product_distance(double a, double omega1, double omega2, double beta, double combined) {
  const AmorosoParams f1(a, omega1, 1.0, beta);
  const AmorosoParams f2(a, omega2, 1.0, beta);
  const AmorosoParams reference(a, fisher_tippett_combined_scale(omega1, omega2, beta), 1.0, beta);
  const bool maxima = beta / omega1 < 0.0;
  double d = 0.0;
  if (!std::isfinite(combined) || combined == 0.0) return kInf;
  const AmorosoParams candidate(a, combined, 1.0, beta);
  for (int i = 1; i <= 50; ++i) {
    const double x = quantile(reference, i / 51.0);
    const double product = maxima ? cdf(f1, x) * cdf(f2, x) : survival(f1, x) * survival(f2, x);
    const double expected = maxima ? cdf(candidate, x) : survival(candidate, x);
    d = std::max(d, std::abs(product - expected));
  }
  return d;
}

std::string ft_name(double a, double omega1, double omega2, double beta) {
  return "a=" + format_real(a) + ",omega1=" + format_real(omega1) + ",omega2=" + format_real(omega2) +
         ",beta=" + format_real(beta);
}

}  // namespace

CheckReport identity_ft_max(double a, double omega1, double omega2, double beta) {
  const double combined = fisher_tippett_combined_scale(omega1, omega2, beta);
  CheckReport r;
  r.check_name = "ft_max/" + ft_name(a, omega1, omega2, beta);
  r.statistic = ft_product_distance(a, omega1, omega2, beta, combined);
  r.threshold = 1e-12;
  r.passed = r.statistic <= r.threshold;
  r.detail = std::string(beta / omega1 < 0.0 ? "maxima" : "minima") + " combined_scale=" + format_real(combined);
  return r;
}

CheckReport ft_max_printed_scale_discrepancy(double a, double omega1, double omega2, double beta) {
  const double printed = fisher_tippett_printed_scale(omega1, omega2, beta);
  CheckReport r;
  r.check_name = "ft_max_printed_scale/" + ft_name(a, omega1, omega2, beta) + "/control";
  r.statistic = ft_product_distance(a, omega1, omega2, beta, printed);
  r.threshold = 1e-3;
  r.passed = r.statistic > r.threshold;
  r.detail = "printed_scale=" + format_real(printed) +
             " derived_scale=" + format_real(fisher_tippett_combined_scale(omega1, omega2, beta));
  return r;
}

// ---------------------------------------------------------------------------

CheckReport limit_loggamma(double alpha, double lambda, double nu, std::span<const double> beta_grid) {
  const LogGammaParams target(nu, lambda, alpha);
  std::vector<double> xs;
  for (int i = 0; i <= 200; ++i) xs.push_back(quantile(target, 0.001 + 0.998 * i / 200.0));
  std::vector<double> distances;
  for (double beta : beta_grid) {
    const AmorosoParams approx(nu - beta * lambda, beta * lambda, alpha, beta);
    distances.push_back(sup_distance(approx, [&](double x) { return pdf(target, x); }, xs));
  }
  return limit_report("limit_loggamma/alpha=" + format_real(alpha) + ",lambda=" + format_real(lambda) +
                          ",nu=" + format_real(nu),
                      beta_grid, distances, 1e-3);
}

CheckReport limit_normal(double mu, double sigma, std::span<const double> alpha_grid) {
  const auto xs = linspace(mu - 4.0 * sigma, mu + 4.0 * sigma, 201);
  std::vector<double> distances;
  for (double alpha : alpha_grid) {
    const double root = std::sqrt(alpha);
    const AmorosoParams approx(mu - sigma * root, sigma / root, alpha, 1.0);
    distances.push_back(sup_distance(approx, [&](double x) { return normal_pdf(x, mu, sigma); }, xs));
  }
  return limit_report("limit_normal/mu=" + format_real(mu) + ",sigma=" + format_real(sigma), alpha_grid, distances,
                      1e-2 / (sigma * std::sqrt(2.0 * std::numbers::pi)));
}

CheckReport limit_normal_loggamma(double mu, double sigma, std::span<const double> alpha_grid) {
  const auto xs = linspace(mu - 4.0 * sigma, mu + 4.0 * sigma, 201);
  std::vector<double> distances;
  for (double alpha : alpha_grid) {
    const double root = std::sqrt(alpha);
    const LogGammaParams approx(mu - sigma * root * std::log(alpha), sigma * root, alpha);
    distances.push_back(sup_distance(approx, [&](double x) { return normal_pdf(x, mu, sigma); }, xs));
  }
  return limit_report("limit_normal_loggamma/mu=" + format_real(mu) + ",sigma=" + format_real(sigma), alpha_grid,
                      distances, 1e-2 / (sigma * std::sqrt(2.0 * std::numbers::pi)));
}

CheckReport limit_lognormal(double vartheta, double sigma, std::span<const double> beta_grid, double a) {
  std::vector<double> xs;
  for (double z : linspace(-4.0, 4.0, 201)) xs.push_back(a + vartheta * std::exp(sigma * z));
  std::vector<double> distances;
  for (double beta : beta_grid) {
    const double bs = beta * sigma;
    const double theta = vartheta * std::exp(2.0 / beta * std::log(bs));
    const AmorosoParams approx(a, theta, 1.0 / (bs * bs), beta);
    distances.push_back(
        sup_distance(approx, [&](double x) { return lognormal_pdf(x, a, vartheta, sigma); }, xs));
  }
  return limit_report("limit_lognormal/a=" + format_real(a) + ",vartheta=" + format_real(vartheta) +
                          ",sigma=" + format_real(sigma),
                      beta_grid, distances, kInf);
}

CheckReport limit_power_law(double p, std::span<const double> beta_magnitudes) {
  const auto xs = linspace(1.0, 2.0, 101);
  std::vector<double> distances;
  for (double magnitude : beta_magnitudes) {
    const double beta = p > 1.0 ? -magnitude : magnitude;
    const double alpha = p == 1.0 ? magnitude : (1.0 - p) / beta;
    const AmorosoParams approx(0.0, 1.0, alpha, beta);
    const double reference = log_pdf(approx, 1.0);
    double d = 0.0;
    for (double x : xs) d = std::max(d, std::abs(std::exp(log_pdf(approx, x) - reference) - std::pow(x, -p)));
    distances.push_back(d);
  }
  return limit_report("limit_power_law/p=" + format_real(p), beta_magnitudes, distances, 0.05);
}

// ---------------------------------------------------------------------------

Suite parse_suite(const std::string& name) {
  if (name == "identities") return Suite::identities;
  if (name == "limits") return Suite::limits;
  if (name == "all") return Suite::all;
  throw std::invalid_argument("unknown suite '" + name + "' (expected identities, limits or all)");
}

std::vector<CheckReport> run_suite(Suite suite, std::uint64_t seed, std::size_t n) {
  std::vector<CheckReport> out;
  // Each check draws from its own stream keyed on a stable label.
  auto stream = [seed](const std::string& label) { return RandomStream(seed ^ fnv1a(label)); };

  if (suite == Suite::identities || suite == Suite::all) {
    for (bool control : {false, true}) {
      const std::string tag = control ? "/control" : "";
      {
        auto rng = stream("gamma_addition/1" + tag);
        out.push_back(identity_gamma_addition(1.0, 1.0, 1.0, n, rng, control));
      }
      {
        auto rng = stream("gamma_addition/2" + tag);
        out.push_back(identity_gamma_addition(2.0, 0.5, 1.5, n, rng, control));
      }
      for (int k : {1, 2, 3}) {
        auto rng = stream("chi_sqrt/" + std::to_string(k) + tag);
        out.push_back(identity_chi_sqrt(k, n, rng, control));
      }
      for (double beta : {1.0, 2.0, -1.0}) {
        auto rng = stream("stacy_normal_power/" + format_real(beta) + tag);
        out.push_back(identity_stacy_normal_power(1.0, beta, n, rng, control));
      }
      for (double alpha : {1.0, std::numbers::pi / 2.0, 10.0}) {
        auto rng = stream("loggamma_log/" + format_real(alpha) + tag);
        out.push_back(identity_loggamma_log(alpha, n, rng, control));
      }
      for (const AmorosoParams& p : {AmorosoParams(0.0, 1.0, 2.0, -1.0), AmorosoParams(1.0, -1.0, 1.0, 2.0),
                                     AmorosoParams(0.0, 1.0, 1.0, 1.0)}) {
        auto rng = stream("amoroso_stdgamma/" + format_real(p.a()) + format_real(p.beta()) + tag);
        out.push_back(identity_amoroso_stdgamma(p, n, rng, control));
      }
      {
        auto rng = stream("lognormal_exp_normal" + tag);
        out.push_back(identity_lognormal_exp_normal(0.5, 2.0, 0.5, n, rng, control));
      }
    }
    out.push_back(identity_ft_max(0.0, -1.0, -1.0, 1.0));
    out.push_back(identity_ft_max(0.0, 1.0, 2.0, -2.0));
    out.push_back(identity_ft_max(1.0, 0.5, 1.5, 2.0));
    out.push_back(identity_ft_max(0.0, 2.0, 3.0, 1.0));
    out.push_back(ft_max_printed_scale_discrepancy(0.0, -1.0, -1.0, 1.0));
  }

  if (suite == Suite::limits || suite == Suite::all) {
    constexpr std::array<double, 3> kLogGammaBetas = {10.0, 100.0, 1000.0};
    constexpr std::array<double, 4> kNormalAlphas = {10.0, 1e2, 1e3, 1e4};
    constexpr std::array<double, 3> kLogNormalBetas = {0.25, 0.125, 0.0625};
    constexpr std::array<double, 4> kPowerLawBetas = {0.25, 0.125, 0.0625, 0.03125};
    for (double alpha : {1.0, 2.0}) {
      for (double lambda : {1.0, -1.0}) out.push_back(limit_loggamma(alpha, lambda, 0.0, kLogGammaBetas));
    }
    out.push_back(limit_normal(0.0, 1.0, kNormalAlphas));
    out.push_back(limit_normal(3.0, 2.0, kNormalAlphas));
    out.push_back(limit_normal_loggamma(0.0, 1.0, kNormalAlphas));
    out.push_back(limit_normal_loggamma(3.0, 2.0, kNormalAlphas));
    out.push_back(limit_lognormal(1.0, 1.0, kLogNormalBetas));
    out.push_back(limit_lognormal(1.0, 0.5, kLogNormalBetas));
    for (double p : {0.0, 1.0, 2.0}) out.push_back(limit_power_law(p, kPowerLawBetas));
  }

  std::sort(out.begin(), out.end(),
            [](const CheckReport& l, const CheckReport& r) { return l.check_name < r.check_name; });
  return out;
}

std::string format_report_line(const CheckReport& report) {
  return report.check_name + '\t' + format_real(report.statistic) + '\t' + format_real(report.threshold) + '\t' +
         (report.passed ? "PASS" : "FAIL") + '\t' + report.detail;
}

std::string reports_to_json(const std::vector<CheckReport>& reports, std::uint64_t seed) {
  nlohmann::json checks = nlohmann::json::array();
  bool all = true;
  for (const auto& r : reports) {
    all = all && r.passed;
    nlohmann::json item;
    item["name"] = r.check_name;
    item["statistic"] = std::isfinite(r.statistic) ? nlohmann::json(r.statistic) : nlohmann::json(nullptr);
    item["threshold"] = std::isfinite(r.threshold) ? nlohmann::json(r.threshold) : nlohmann::json(nullptr);
    item["passed"] = r.passed;
    item["detail"] = r.detail;
    checks.push_back(std::move(item));
  }
  nlohmann::json doc;
  doc["seed"] = seed;
  doc["passed"] = all;
  doc["checks"] = std::move(checks);
  return doc.dump(2);
}

}  // namespace amoroso::verify
