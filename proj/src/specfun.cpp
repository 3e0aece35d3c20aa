#include "amoroso/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace amoroso::specfun {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kEulerGamma = std::numbers::egamma;

// zeta(k) - 1 for k = 2 .. 30.
constexpr std::array<double, 29> kZetaMinusOne = {
    0.64493406684822643647,    0.2020569031595942854,
    0.082323233711138191516,   0.036927755143369926331,
    0.017343061984449139715,   0.0083492773819228268398,
    0.0040773561979443393787,  0.0020083928260822144179,
    0.00099457512781808533715, 0.0004941886041194645587,
    0.00024608655330804829864, 0.00012271334757848914675,
    6.1248135058704829259e-5,  3.0588236307020493552e-5,
    1.5282259408651871733e-5,  7.6371976378997622736e-6,
    3.8172932649998398565e-6,  1.9082127165539389257e-6,
    9.5396203387279611315e-7,  4.7693298678780646312e-7,
    2.3845050272773299e-7,     1.1921992596531107307e-7,
    5.9608189051259479612e-8,  2.9803503514652280186e-8,
    1.4901554828365041235e-8,  7.450711789835429492e-9,
    3.7253340247884570548e-9,  1.8626597235130490064e-9,
    9.3132743241966818287e-10,
};

// Positive root of digamma, split into a double-double pair, and the
// Taylor coefficients psi^(k)(x0) / k! for k = 1 .. 15.
constexpr double kDigammaRootHi = 1.4616321449683622;
constexpr double kDigammaRootLo = 9.549995429965697e-17;
constexpr std::array<double, 15> kDigammaRootTaylor = {
    0.96767224544762117043,   -0.44276316898359210609,
    0.25849976095565101062,   -0.1639427054424065275,
    0.10782405069126236576,   -0.072199561256454710926,
    0.048804288164143107225,  -0.033161126474847359292,
    0.02259764823221810466,   -0.015424765904948959139,
    0.010538791616612175388,  -0.007204534386356868241,
    0.0049267813957298534464, -0.0033698016554393280828,
    0.0023051263267349278369,
};

// Bernoulli numbers B_2 .. B_16.
constexpr std::array<double, 8> kBernoulli = {
    1.0 / 6.0,      -1.0 / 30.0, 1.0 / 42.0,     -1.0 / 30.0,
    5.0 / 66.0,     -691.0 / 2730.0, 7.0 / 6.0,  -3617.0 / 510.0,
};

[[noreturn]] void domain(const char* fn, const std::string& what) {
  throw std::domain_error(std::string(fn) + ": " + what);
}

// ln Gamma(1 + z) for |z| <= 0.5.
double ln_gamma_1p(double z) {
  double sum = 0.0;
  double power = -z;
  for (std::size_t i = 0; i < kZetaMinusOne.size(); ++i) {
    power *= -z;
    const double k = static_cast<double>(i + 2);
    sum += kZetaMinusOne[i] * power / k;
  }
  // The (-1)^k z^k / k tail of the zeta series sums to z - log1p(z).
  return -kEulerGamma * z + (z - std::log1p(z)) + sum;
}

// ln Gamma(x) - [(x - 1/2) ln x - x + ln(2 pi) / 2], valid for x >= 10.
double stirling_correction(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double sum = 0.0;
  double power = inv;
  for (std::size_t i = 0; i < kBernoulli.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    sum += kBernoulli[i] / (2.0 * k * (2.0 * k - 1.0)) * power;
    power *= inv2;
  }
  return sum;
}

// log1p(d) - d without cancellation for small d.
double log1pmx(double d) {
  if (std::abs(d) > 0.25) return std::log1p(d) - d;
  double term = d;
  double sum = 0.0;
  for (int k = 2; k < 60; ++k) {
    term *= -d;
    const double next = term / k;
    sum += next;
    if (std::abs(next) < kEps * std::abs(sum)) break;
  }
  return sum;
}

// ln(x^alpha e^-x / Gamma(alpha)).
double log_gamma_prefix(double alpha, double x) {
  if (x == 0.0) return -kInf;
  if (alpha < 10.0) return alpha * std::log(x) - x - ln_gamma(alpha);
  const double d = (x - alpha) / alpha;
  return alpha * log1pmx(d) + 0.5 * std::log(alpha / (2.0 * std::numbers::pi)) -
         stirling_correction(alpha);
}

// P(alpha, x) by its power series, for x < alpha + 1.
double lower_series(double alpha, double x) {
  double ap = alpha;
  double term = 1.0 / alpha;
  double sum = term;
  for (int n = 0; n < 100000; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (term < sum * kEps) break;
  }
  return sum * std::exp(log_gamma_prefix(alpha, x));
}

// Q(alpha, x) by modified Lentz continued fraction, for x >= alpha + 1.
double upper_fraction(double alpha, double x) {
  constexpr double kTiny = 1e-300;
  double b = x + 1.0 - alpha;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 100000; ++i) {
    const double an = -i * (i - alpha);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h * std::exp(log_gamma_prefix(alpha, x));
}

void check_gamma_args(const char* fn, double alpha, double x) {
  if (!(alpha > 0.0) || std::isinf(alpha)) domain(fn, "alpha must be positive and finite");
  if (!(x >= 0.0)) domain(fn, "x must be non-negative");
}

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

// Solves tail(alpha, x) = target where tail is P (lower) or Q (upper).
// Safeguarded Newton iteration in t = ln x with a Wilson-Hilferty start;
// falls back to bisection in t after 64 Newton steps.
double invert_gamma_tail(double alpha, double p, double q) {
  const bool upper = q < p;
  const double target = upper ? q : p;
  const double log_target = std::log(target);

  auto tail = [&](double x) {
    if (upper) return x < alpha + 1.0 ? 1.0 - lower_series(alpha, x) : upper_fraction(alpha, x);
    return x < alpha + 1.0 ? lower_series(alpha, x) : 1.0 - upper_fraction(alpha, x);
  };
  // g is increasing in t; its root is the answer.
  auto g = [&](double t) {
    const double f = std::log(tail(std::exp(t))) - log_target;
    return upper ? -f : f;
  };

  double x0;
  const double z = upper ? -normal_quantile(q) : normal_quantile(p);
  const double c = 1.0 / (9.0 * alpha);
  const double w = 1.0 - c + z * std::sqrt(c);
  if (alpha >= 1.0 && w > 0.0) {
    x0 = alpha * w * w * w;
  } else if (!upper || p < 0.5) {
    // P(alpha, x) ~ x^alpha / Gamma(alpha + 1) for small x.
    x0 = std::exp((std::log(p) + ln_gamma(alpha + 1.0)) / alpha);
  } else {
    // Q(alpha, x) ~ x^(alpha - 1) e^-x / Gamma(alpha) for large x.
    x0 = std::max(1.0, -std::log(q) - ln_gamma(alpha));
  }
  if (!(x0 > 0.0) || !std::isfinite(x0)) x0 = alpha;

  constexpr double kTMin = -745.0;
  constexpr double kTMax = 709.0;
  double t = std::clamp(std::log(x0), kTMin, kTMax);
  double lo = kTMin;
  double hi = kTMax;

  for (int iter = 0; iter < 64; ++iter) {
    const double x = std::exp(t);
    const double tail_x = tail(x);
    const double gt = upper ? -(std::log(tail_x) - log_target) : std::log(tail_x) - log_target;
    if (gt == 0.0) return x;
    if (gt < 0.0) lo = t; else hi = t;
    // d/dt ln P = e^prefix / P, d/dt ln Q = -e^prefix / Q.
    const double slope = std::exp(log_gamma_prefix(alpha, x)) / tail_x;
    double next = t - gt / slope;
    if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
    const double step = next - t;
    t = next;
    if (std::abs(step) <= 4.0 * kEps * std::max(1.0, std::abs(t))) return std::exp(t);
  }

  for (int iter = 0; iter < 2000 && hi - lo > 4.0 * kEps * std::max(1.0, std::abs(lo)); ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < 0.0) lo = mid; else hi = mid;
  }
  return std::exp(0.5 * (lo + hi));
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0)) domain("ln_gamma", "x must be positive");
  if (std::isinf(x)) return kInf;
  if (x < 0.5) return ln_gamma_1p(x) - std::log(x);
  if (x < 1.5) return ln_gamma_1p(x - 1.0);
  if (x < 2.5) {
    const double z = x - 2.0;
    return ln_gamma_1p(z) + std::log1p(z);
  }
  if (x < 10.0) {
    double y = x;
    double product = 1.0;
    while (y >= 2.5) {
      y -= 1.0;
      product *= y;
    }
    return ln_gamma(y) + std::log(product);
  }
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) +
         stirling_correction(x);
}

double reg_gamma_p(double alpha, double x) {
  check_gamma_args("reg_gamma_p", alpha, x);
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < alpha + 1.0) return clamp01(lower_series(alpha, x));
  return clamp01(1.0 - upper_fraction(alpha, x));
}

double reg_gamma_q(double alpha, double x) {
  check_gamma_args("reg_gamma_q", alpha, x);
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < alpha + 1.0) return clamp01(1.0 - lower_series(alpha, x));
  return clamp01(upper_fraction(alpha, x));
}

double inv_reg_gamma_q(double alpha, double q) {
  if (!(alpha > 0.0) || std::isinf(alpha)) domain("inv_reg_gamma_q", "alpha must be positive and finite");
  if (!(q > 0.0 && q < 1.0)) domain("inv_reg_gamma_q", "q must lie in (0, 1)");
  return invert_gamma_tail(alpha, 1.0 - q, q);
}

double inv_reg_gamma_p(double alpha, double p) {
  if (!(alpha > 0.0) || std::isinf(alpha)) domain("inv_reg_gamma_p", "alpha must be positive and finite");
  if (!(p > 0.0 && p < 1.0)) domain("inv_reg_gamma_p", "p must lie in (0, 1)");
  return invert_gamma_tail(alpha, p, 1.0 - p);
}

double digamma(double x) {
  if (!(x > 0.0)) domain("digamma", "x must be positive");
  if (std::isinf(x)) return kInf;

  const double d = (x - kDigammaRootHi) - kDigammaRootLo;
  if (std::abs(d) < 0.1) {
    double sum = 0.0;
    for (auto it = kDigammaRootTaylor.rbegin(); it != kDigammaRootTaylor.rend(); ++it) {
      sum = sum * d + *it;
    }
    return sum * d;
  }

  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  double series = 0.0;
  double power = inv2;
  for (std::size_t i = 0; i < kBernoulli.size(); ++i) {
    series += kBernoulli[i] / (2.0 * static_cast<double>(i + 1)) * power;
    power *= inv2;
  }
  return shift + std::log(x) - 0.5 / x - series;
}

double polygamma(int n, double x) {
  if (n < 1 || n > 3) throw std::invalid_argument("polygamma: order must be 1, 2 or 3");
  if (!(x > 0.0)) domain("polygamma", "x must be positive");
  if (std::isinf(x)) return 0.0;

  // psi_n(x) = psi_n(x + 1) + (-1)^(n+1) n! / x^(n+1)
  constexpr std::array<double, 20> fact = [] {
    std::array<double, 20> f{};
    f[0] = 1.0;
    for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * static_cast<double>(i);
    return f;
  }();
  const double sign = (n % 2 == 1) ? 1.0 : -1.0;

  double shift = 0.0;
  while (x < 20.0) {
    shift += fact[n] / std::pow(x, n + 1);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  double series = fact[n - 1] * std::pow(inv, n) + 0.5 * fact[n] * std::pow(inv, n + 1);
  double power = std::pow(inv, n + 2);
  for (std::size_t i = 0; i < kBernoulli.size(); ++i) {
    const std::size_t k2 = 2 * (i + 1);
    series += kBernoulli[i] * fact[k2 + n - 1] / fact[k2] * power;
    power *= inv * inv;
  }
  return sign * (shift + series);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) domain("normal_quantile", "p must lie in (0, 1)");
  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((2509.0809287301226727 * r + 33430.575583588128105) * r + 67265.770927008700853) * r +
                45921.953931549871457) * r + 13731.693765509461125) * r + 1971.5909503065514427) * r +
             133.14166789178437745) * r + 3.387132872796366608) /
           (((((((5226.495278852545925 * r + 28729.085735721942674) * r + 39307.89580009271061) * r +
                21213.794301586595867) * r + 5394.1960214247511077) * r + 687.1870074920579083) * r +
             42.313330701600911252) * r + 1.0);
  }
  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double val;
  if (r <= 5.0) {
    r -= 1.6;
    val = (((((((7.7454501427834140764e-4 * r + 0.0227238449892691845833) * r + 0.24178072517745061177) * r +
               1.27045825245236838258) * r + 3.64784832476320460504) * r + 5.7694972214606914055) * r +
            4.6303378461565452959) * r + 1.42343711074968357734) /
          (((((((1.05075007164441684324e-9 * r + 5.475938084995344946e-4) * r + 0.0151986665636164571966) * r +
               0.14810397642748007459) * r + 0.68976733498510000455) * r + 1.6763848301838038494) * r +
            2.05319162663775882187) * r + 1.0);
  } else {
    r -= 5.0;
    val = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r + 0.0012426609473880784386) * r +
               0.026532189526576123093) * r + 0.29656057182850489123) * r + 1.7848265399172913358) * r +
            5.4637849111641143699) * r + 6.6579046435011037772) /
          (((((((2.04426310338993978564e-15 * r + 1.4215117583164458887e-7) * r + 1.8463183175100546818e-5) * r +
               7.868691311456132591e-4) * r + 0.0148753612908506148525) * r + 0.13692988092273580531) * r +
            0.59983220655588793769) * r + 1.0);
  }
  return q < 0.0 ? -val : val;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

}  // namespace amoroso::specfun
