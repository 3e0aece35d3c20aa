#pragma once

// Real-argument special functions used by the Amoroso and log-gamma
// families. Every function here is pure and reentrant.

namespace amoroso::specfun {

/// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double ln_gamma(double x);

/// Regularized lower incomplete gamma P(alpha, x) = gamma(alpha, x) / Gamma(alpha).
double reg_gamma_p(double alpha, double x);

/// Regularized upper incomplete gamma Q(alpha, x) = Gamma(alpha, x) / Gamma(alpha).
///
/// Uses the power series for P when x < alpha + 1 and a Lentz continued
/// fraction for Q otherwise, so whichever tail is smaller is computed
/// directly. For alpha >= 10 the common prefactor x^alpha e^-x / Gamma(alpha)
/// is formed around x = alpha to avoid cancellation between large terms.
/// Accepts x = +inf. Throws std::domain_error on alpha <= 0, x < 0 or NaN.
double reg_gamma_q(double alpha, double x);

/// Returns x >= 0 with Q(alpha, x) = q, for q in (0, 1).
double inv_reg_gamma_q(double alpha, double q);

/// Returns x >= 0 with P(alpha, x) = p, for p in (0, 1).
double inv_reg_gamma_p(double alpha, double p);

/// Digamma psi(x) = d/dx ln Gamma(x), x > 0.
double digamma(double x);

/// Polygamma psi_n(x) for n in {1, 2, 3}, x > 0.
double polygamma(int n, double x);

/// Standard normal quantile (Wichura AS241), p in (0, 1).
double normal_quantile(double p);

/// Standard normal cdf.
double normal_cdf(double z);

}  // namespace amoroso::specfun
