#include "amoroso/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "json.hpp"

namespace amoroso::catalog {
namespace {

using Kind = FieldPattern::Kind;
using std::numbers::pi;
using std::numbers::sqrt2;

ParamSpec location(std::string name) { return {std::move(name), Constraint::real, 0.0}; }
ParamSpec real(std::string name) { return {std::move(name), Constraint::real, std::nullopt}; }
ParamSpec positive(std::string name) { return {std::move(name), Constraint::positive, std::nullopt}; }
ParamSpec nonzero(std::string name) { return {std::move(name), Constraint::nonzero, std::nullopt}; }
ParamSpec whole(std::string name) { return {std::move(name), Constraint::positive_integer, std::nullopt}; }

constexpr FieldPattern any{Kind::free, 0.0};
constexpr FieldPattern integer{Kind::integer, 0.0};
constexpr FieldPattern half_integer{Kind::half_integer, 0.0};
constexpr FieldPattern above{Kind::positive, 0.0};
constexpr FieldPattern below{Kind::negative, 0.0};
constexpr FieldPattern one_plus_inv_beta{Kind::one_plus_inv_beta, 0.0};
constexpr FieldPattern exactly(double v) { return {Kind::exact, v}; }

// theta = (2 sigma^2)^(1/beta) for the sigma-parameterized entries.
double sigma_scale(double sigma, double beta) { return std::pow(2.0 * sigma * sigma, 1.0 / beta); }

Distribution am(double a, double theta, double alpha, double beta) { return AmorosoParams(a, theta, alpha, beta); }
Distribution lg(double nu, double lambda, double alpha) { return LogGammaParams(nu, lambda, alpha); }

struct Spec {
  std::string name;
  std::vector<std::string> synonyms;
  std::vector<ParamSpec> params;
  std::string mapping;
  std::string anchor;
  std::vector<FieldPattern> pattern;
  std::function<Distribution(const NamedParams&)> build;
  std::string note = {};
};

CatalogEntry amoroso_entry(Spec s) {
  CatalogEntry e;
  e.canonical_name = std::move(s.name);
  e.synonyms = std::move(s.synonyms);
  e.family = Family::amoroso;
  e.params = std::move(s.params);
  e.mapping = std::move(s.mapping);
  e.anchor = std::move(s.anchor);
  e.pattern = std::move(s.pattern);
  e.build = std::move(s.build);
  e.note = std::move(s.note);
  return e;
}

CatalogEntry loggamma_entry(Spec s) {
  CatalogEntry e = amoroso_entry(std::move(s));
  e.family = Family::loggamma;
  return e;
}

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> v;
  auto add = [&v](CatalogEntry e) { v.push_back(std::move(e)); };

  // Amoroso family, in the order of the family table.
  add(amoroso_entry({"Amoroso",
                     {"Amaroso", "Stacy-Mihram"},
                     {location("a"), nonzero("theta"), positive("alpha"), nonzero("beta")},
                     "Amoroso(x | a, theta, alpha, beta)",
                     "Eq. Amoroso",
                     {any, any, any, any},
                     [](const NamedParams& p) { return am(p.at("a"), p.at("theta"), p.at("alpha"), p.at("beta")); }}));
  add(amoroso_entry({"Stacy",
                     {"generalized gamma", "hyper gamma", "Nukiyama-Tanasawa", "generalized semi-normal",
                      "hydrograph", "Leonard hydrograph", "transformed gamma", "generalized inverse gamma"},
                     {nonzero("theta"), positive("alpha"), nonzero("beta")},
                     "Amoroso(x | 0, theta, alpha, beta)",
                     "Eq. Stacy",
                     {exactly(0), any, any, any},
                     [](const NamedParams& p) { return am(0, p.at("theta"), p.at("alpha"), p.at("beta")); },
                     "generalized inverse gamma when beta < 0"}));
  add(amoroso_entry({"generalized Fisher-Tippett",
                     {},
                     {location("a"), nonzero("omega"), whole("n"), nonzero("beta")},
                     "Amoroso(x | a, omega / n^(1/beta), n, beta)",
                     "Eq. GenFisherTippett",
                     {any, any, integer, any},
                     [](const NamedParams& p) {
                       const double n = p.at("n");
                       const double beta = p.at("beta");
                       return am(p.at("a"), p.at("omega") / std::pow(n, 1.0 / beta), n, beta);
                     },
                     "nth maxima when beta/omega < 0, nth minima when beta/omega > 0"}));
  add(amoroso_entry({"Fisher-Tippett",
                     {"generalized extreme value", "GEV", "von Mises-Jenkinson", "von Mises extreme value"},
                     {location("a"), nonzero("omega"), nonzero("beta")},
                     "Amoroso(x | a, omega, 1, beta)",
                     "Eq. FisherTippett",
                     {any, any, exactly(1), any},
                     [](const NamedParams& p) { return am(p.at("a"), p.at("omega"), 1, p.at("beta")); },
                     "maxima when beta/omega < 0, minima when beta/omega > 0"}));
  add(amoroso_entry({"Fréchet",
                     {"Fisher-Tippett type II", "extreme value type II", "Gumbel type II", "inverse Weibull"},
                     {location("a"), nonzero("omega"), positive("beta_bar")},
                     "Amoroso(x | a, omega, 1, -beta_bar)",
                     "Eq. Frechet",
                     {any, any, exactly(1), below},
                     [](const NamedParams& p) { return am(p.at("a"), p.at("omega"), 1, -p.at("beta_bar")); },
                     "minima rather than maxima when omega < 0"}));
  add(amoroso_entry({"generalized Fréchet",
                     {},
                     {location("a"), nonzero("omega"), whole("n"), positive("beta_bar")},
                     "Amoroso(x | a, omega / n^(1/beta), n, beta), beta = -beta_bar",
                     "Eq. GenFrechet",
                     {any, any, integer, below},
                     [](const NamedParams& p) {
                       const double n = p.at("n");
                       const double beta = -p.at("beta_bar");
                       return am(p.at("a"), p.at("omega") / std::pow(n, 1.0 / beta), n, beta);
                     }}));
  add(amoroso_entry({"scaled inverse chi",
                     {},
                     {positive("sigma"), whole("k")},
                     "Amoroso(x | 0, 1/sqrt(2 sigma^2), k/2, -2)",
                     "Eq. ScaledInvChi",
                     {exactly(0), above, half_integer, exactly(-2)},
                     [](const NamedParams& p) {
                       const double s = p.at("sigma");
                       return am(0, 1.0 / std::sqrt(2.0 * s * s), 0.5 * p.at("k"), -2);
                     }}));
  add(amoroso_entry({"inverse chi",
                     {},
                     {whole("k")},
                     "Amoroso(x | 0, 1/sqrt(2), k/2, -2)",
                     "Eq. InvChi",
                     {exactly(0), exactly(1.0 / sqrt2), half_integer, exactly(-2)},
                     [](const NamedParams& p) { return am(0, 1.0 / sqrt2, 0.5 * p.at("k"), -2); }}));
  add(amoroso_entry({"inverse Rayleigh",
                     {},
                     {positive("sigma")},
                     "Amoroso(x | 0, 1/sqrt(2 sigma^2), 1, -2)",
                     "Eq. InvRayleigh",
                     {exactly(0), above, exactly(1), exactly(-2)},
                     [](const NamedParams& p) {
                       const double s = p.at("sigma");
                       return am(0, 1.0 / std::sqrt(2.0 * s * s), 1, -2);
                     }}));
  add(amoroso_entry({"Pearson type V",
                     {},
                     {location("a"), nonzero("theta"), positive("alpha")},
                     "Amoroso(x | a, theta, alpha, -1)",
                     "Eq. PearsonV",
                     {any, any, any, exactly(-1)},
                     [](const NamedParams& p) { return am(p.at("a"), p.at("theta"), p.at("alpha"), -1); }}));
  add(amoroso_entry({"inverse gamma",
                     {"Vinci"},
                     {nonzero("theta"), positive("alpha")},
                     "Amoroso(x | 0, theta, alpha, -1)",
                     "Eq. InvGamma",
                     {exactly(0), any, any, exactly(-1)},
                     [](const NamedParams& p) { return am(0, p.at("theta"), p.at("alpha"), -1); }}));
  add(amoroso_entry({"scaled inverse chi-square",
                     {},
                     {positive("sigma"), whole("k")},
                     "Amoroso(x | 0, 1/(2 sigma^2), k/2, -1)",
                     "Eq. ScaledInvChiSqr",
                     {exactly(0), above, half_integer, exactly(-1)},
                     [](const NamedParams& p) {
                       const double s = p.at("sigma");
                       return am(0, 1.0 / (2.0 * s * s), 0.5 * p.at("k"), -1);
                     }}));
  add(amoroso_entry({"inverse chi-square",
                     {},
                     {whole("k")},
                     "Amoroso(x | 0, 1/2, k/2, -1)",
                     "Eq. InvChiSqr",
                     {exactly(0), exactly(0.5), half_integer, exactly(-1)},
                     [](const NamedParams& p) { return am(0, 0.5, 0.5 * p.at("k"), -1); }}));
  add(amoroso_entry({"Lévy",
                     {"van der Waals profile"},
                     {location("a"), positive("c")},
                     "Amoroso(x | a, c/2, 1/2, -1)",
                     "Eq. Levy",
                     {any, above, exactly(0.5), exactly(-1)},
                     [](const NamedParams& p) { return am(p.at("a"), 0.5 * p.at("c"), 0.5, -1); }}));
  add(amoroso_entry({"inverse exponential",
                     {},
                     {nonzero("theta")},
                     "Amoroso(x | 0, theta, 1, -1)",
                     "Eq. InvExp",
                     {exactly(0), any, exactly(1), exactly(-1)},
                     [](const NamedParams& p) { return am(0, p.at("theta"), 1, -1); },
                     "the name is occasionally used for the ordinary exponential"}));
  add(amoroso_entry({"Pearson type III",
                     {},
                     {location("a"), nonzero("theta"), positive("alpha")},
                     "Amoroso(x | a, theta, alpha, 1)",
                     "Eq. PearsonIII",
                     {any, any, any, exactly(1)},
                     [](const NamedParams& p) { return am(p.at("a"), p.at("theta"), p.at("alpha"), 1); }}));
  add(amoroso_entry({"gamma",
                     {"Γ"},
                     {nonzero("theta"), positive("alpha")},
                     "Amoroso(x | 0, theta, alpha, 1)",
                     "Eq. Gamma",
                     {exactly(0), any, any, exactly(1)},
                     [](const NamedParams& p) { return am(0, p.at("theta"), p.at("alpha"), 1); }}));
  add(amoroso_entry({"Erlang",
                     {"m-Erlang"},
                     {positive("theta"), whole("n")},
                     "Amoroso(x | 0, theta, n, 1)",
                     "Eq. Gamma",
                     {exactly(0), above, integer, exactly(1)},
                     [](const NamedParams& p) { return am(0, p.at("theta"), p.at("n"), 1); },
                     "waiting time for n events of a Poisson process with rate 1/theta"}));
  add(amoroso_entry({"standard gamma",
                     {"standard Amoroso"},
                     {positive("alpha")},
                     "Amoroso(x | 0, 1, alpha, 1)",
                     "Eq. StdGamma",
                     {exactly(0), exactly(1), any, exactly(1)},
                     [](const NamedParams& p) { return am(0, 1, p.at("alpha"), 1); }}));
  add(amoroso_entry({"scaled chi-square",
                     {},
                     {positive("sigma"), whole("k")},
                     "Amoroso(x | 0, 2 sigma^2, k/2, 1)",
                     "Eq. ScaledChiSqr",
                     {exactly(0), above, half_integer, exactly(1)},
                     [](const NamedParams& p) {
                       const double s = p.at("sigma");
                       return am(0, 2.0 * s * s, 0.5 * p.at("k"), 1);
                     }}));
  add(amoroso_entry({"chi-square",
                     {"χ²", "chi-squared"},
                     {whole("k")},
                     "Amoroso(x | 0, 2, k/2, 1)",
                     "Eq. ChiSqr",
                     {exactly(0), exactly(2), half_integer, exactly(1)},
                     [](const NamedParams& p) { return am(0, 2, 0.5 * p.at("k"), 1); }}));
  add(amoroso_entry({"shifted exponential",
                     {},
                     {location("a"), nonzero("theta")},
                     "Amoroso(x | a, theta, 1, 1)",
                     "Eq. ShiftExp",
                     {any, any, exactly(1), exactly(1)},
                     [](const NamedParams& p) { return am(p.at("a"), p.at("theta"), 1, 1); }}));
  add(amoroso_entry({"exponential",
                     {"Pearson type X", "waiting time", "negative exponential"},
                     {nonzero("theta")},
                     "Amoroso(x | 0, theta, 1, 1)",
                     "Eq. Exp",
                     {exactly(0), any, exactly(1), exactly(1)},
                     [](const NamedParams& p) { return am(0, p.at("theta"), 1, 1); }}));
  add(amoroso_entry({"standard exponential",
                     {},
                     {},
                     "Amoroso(x | 0, 1, 1, 1)",
                     "Eq. Exp",
                     {exactly(0), exactly(1), exactly(1), exactly(1)},
                     [](const NamedParams&) { return am(0, 1, 1, 1); }}));
  add(amoroso_entry({"Wien",
                     {"Vienna"},
                     {nonzero("T")},
                     "Amoroso(x | 0, T, 4, 1)",
                     "Eq. Gamma",
                     {exactly(0), any, exactly(4), exactly(1)},
                     [](const NamedParams& p) { return am(0, p.at("T"), 4, 1); },
                     "Wien(x | T) = Gamma(x | T, 4), the gamma distribution with alpha = 4"}));
  add(amoroso_entry({"Nakagami",
                     {"generalized normal", "Nakagami-m"},
                     {location("a"), nonzero("theta"), positive("m")},
                     "Amoroso(x | a, theta, m/2, 2)",
                     "Eq. Nakagami",
                     {any, any, any, exactly(2)},
                     [](const NamedParams& p) { return am(p.at("a"), p.at("theta"), 0.5 * p.at("m"), 2); }}));
  add(amoroso_entry({"scaled chi",
                     {"generalized Rayleigh"},
                     {positive("sigma"), whole("k")},
                     "Amoroso(x | 0, sqrt(2 sigma^2), k/2, 2)",
                     "Eq. ScaledChi",
                     {exactly(0), above, half_integer, exactly(2)},
                     [](const NamedParams& p) { return am(0, sigma_scale(p.at("sigma"), 2), 0.5 * p.at("k"), 2); }}));
  add(amoroso_entry({"chi",
                     {"χ"},
                     {whole("k")},
                     "Amoroso(x | 0, sqrt(2), k/2, 2)",
                     "Eq. Chi",
                     {exactly(0), exactly(sqrt2), half_integer, exactly(2)},
                     [](const NamedParams& p) { return am(0, sqrt2, 0.5 * p.at("k"), 2); }}));
  add(amoroso_entry({"half-normal",
                     {"semi-normal", "positive definite normal", "one-sided normal"},
                     {positive("sigma")},
                     "Amoroso(x | 0, sqrt(2 sigma^2), 1/2, 2)",
                     "Eq. HalfNormal",
                     {exactly(0), above, exactly(0.5), exactly(2)},
                     [](const NamedParams& p) { return am(0, sigma_scale(p.at("sigma"), 2), 0.5, 2); }}));
  add(amoroso_entry({"Rayleigh",
                     {},
                     {positive("sigma")},
                     "Amoroso(x | 0, sqrt(2 sigma^2), 1, 2)",
                     "Eq. Rayleigh",
                     {exactly(0), above, exactly(1), exactly(2)},
                     [](const NamedParams& p) { return am(0, sigma_scale(p.at("sigma"), 2), 1, 2); }}));
  add(amoroso_entry({"Maxwell",
                     {"Maxwell-Boltzmann", "Maxwell speed"},
                     {positive("sigma")},
                     "Amoroso(x | 0, sqrt(2 sigma^2), 3/2, 2)",
                     "Eq. Maxwell",
                     {exactly(0), above, exactly(1.5), exactly(2)},
                     [](const NamedParams& p) { return am(0, sigma_scale(p.at("sigma"), 2), 1.5, 2); }}));
  add(amoroso_entry({"Wilson-Hilferty",
                     {},
                     {nonzero("theta"), positive("alpha")},
                     "Amoroso(x | 0, theta, alpha, 3)",
                     "Eq. WilsonHilferty",
                     {exactly(0), any, any, exactly(3)},
                     [](const NamedParams& p) { return am(0, p.at("theta"), p.at("alpha"), 3); }}));
  add(amoroso_entry({"generalized Weibull",
                     {},
                     {location("a"), nonzero("omega"), whole("n"), positive("beta")},
                     "Amoroso(x | a, omega / n^(1/beta), n, beta)",
                     "Eq. GenWeibull",
                     {any, any, integer, above},
                     [](const NamedParams& p) {
                       const double n = p.at("n");
                       const double beta = p.at("beta");
                       return am(p.at("a"), p.at("omega") / std::pow(n, 1.0 / beta), n, beta);
                     },
                     "nth largest value when omega < 0"}));
  add(amoroso_entry({"Weibull",
                     {"Fisher-Tippett type III", "Gumbel type III", "extreme value type III", "Rosin-Rammler",
                      "Rosin-Rammler-Weibull", "Weibull-Gnedenko", "reversed Weibull"},
                     {location("a"), nonzero("omega"), positive("beta")},
                     "Amoroso(x | a, omega, 1, beta)",
                     "Eq. Weibull",
                     {any, any, exactly(1), above},
                     [](const NamedParams& p) { return am(p.at("a"), p.at("omega"), 1, p.at("beta")); },
                     "reversed Weibull (maxima) when omega < 0"}));
  add(amoroso_entry({"pseudo-Weibull",
                     {},
                     {nonzero("theta"), positive("beta")},
                     "Amoroso(x | 0, theta, 1 + 1/beta, beta)",
                     "Eq. PseudoWeibull",
                     {exactly(0), any, one_plus_inv_beta, above},
                     [](const NamedParams& p) {
                       const double beta = p.at("beta");
                       return am(0, p.at("theta"), 1.0 + 1.0 / beta, beta);
                     }}));
  add(amoroso_entry({"stretched exponential",
                     {},
                     {nonzero("theta"), positive("beta")},
                     "Amoroso(x | 0, theta, 1, beta)",
                     "Eq. StretchedExp",
                     {exactly(0), any, exactly(1), above},
                     [](const NamedParams& p) { return am(0, p.at("theta"), 1, p.at("beta")); }}));

  // Log-gamma family.
  add(loggamma_entry({"log-gamma",
                      {"Coale-McNeil", "generalized log-gamma"},
                      {location("nu"), nonzero("lambda"), positive("alpha")},
                      "LogGamma(x | nu, lambda, alpha)",
                      "Eq. LogGamma",
                      {any, any, any},
                      [](const NamedParams& p) { return lg(p.at("nu"), p.at("lambda"), p.at("alpha")); }}));
  add(loggamma_entry({"standard log-gamma",
                      {},
                      {positive("alpha")},
                      "LogGamma(x | 0, 1, alpha)",
                      "Eq. StdLogGamma",
                      {exactly(0), exactly(1), any},
                      [](const NamedParams& p) { return lg(0, 1, p.at("alpha")); }}));
  add(loggamma_entry({"log-chi-square",
                      {},
                      {whole("k")},
                      "LogGamma(x | ln 2, 1, k/2)",
                      "Eq. LogChiSqr",
                      {exactly(std::numbers::ln2), exactly(1), half_integer},
                      [](const NamedParams& p) { return lg(std::numbers::ln2, 1, 0.5 * p.at("k")); }}));
  add(loggamma_entry({"generalized Gumbel",
                      {},
                      {location("u"), nonzero("lambda_bar"), whole("n")},
                      "LogGamma(x | u + lambda_bar ln n, -lambda_bar, n)",
                      "Eq. GenGumbel",
                      {any, any, integer},
                      [](const NamedParams& p) {
                        const double n = p.at("n");
                        const double lb = p.at("lambda_bar");
                        return lg(p.at("u") + lb * std::log(n), -lb, n);
                      }}));
  add(loggamma_entry({"Gumbel",
                      {"Fisher-Tippett type I", "Fisher-Tippett-Gumbel", "FTG", "Gumbel-Fisher-Tippett", "log-Weibull",
                       "extreme value", "extreme value type I", "Gumbel type I", "doubly exponential",
                       "double exponential"},
                      {location("u"), nonzero("lambda_bar")},
                      "LogGamma(x | u, -lambda_bar, 1)",
                      "Eq. Gumbel",
                      {any, any, exactly(1)},
                      [](const NamedParams& p) { return lg(p.at("u"), -p.at("lambda_bar"), 1); },
                      "maxima when lambda_bar > 0, minima when lambda_bar < 0; \"double exponential\" can also "
                      "mean Laplace, which is not in this catalog"}));
  add(loggamma_entry({"BHP",
                      {"Bramwell-Holdsworth-Pinton"},
                      {location("nu"), nonzero("lambda")},
                      "LogGamma(x | nu, lambda, pi/2)",
                      "Eq. BHP",
                      {any, any, exactly(pi / 2)},
                      [](const NamedParams& p) { return lg(p.at("nu"), p.at("lambda"), pi / 2); }}));
  add(loggamma_entry({"standard Gumbel",
                      {},
                      {},
                      "LogGamma(x | 0, -1, 1)",
                      "Eq. StdGumbel",
                      {exactly(0), exactly(-1), exactly(1)},
                      [](const NamedParams&) { return lg(0, -1, 1); }}));

  // Limit-only classification entries.
  {
    CatalogEntry e;
    e.canonical_name = "log-normal";
    e.synonyms = {"Λ", "antilog-normal", "Cobb-Douglas", "Galton", "Galton-McAlister", "logarithmic-normal",
                  "logarithmico-normal", "log-normal, two parameter", "two-parameter log-normal",
                  "standard log-normal", "Gibrat"};
    e.family = Family::limit_only;
    e.params = {location("a"), positive("vartheta"), positive("sigma")};
    e.mapping = "lim beta->0 Amoroso(x | a, vartheta (beta sigma)^(2/beta), 1/(beta sigma)^2, beta)";
    e.anchor = "Eq. LogNormal";
    e.note = "LogNormal(a, vartheta, sigma) ~ exp(Normal(ln vartheta, sigma)) + a; standard (Gibrat) at a=0, "
             "vartheta=1, sigma=1";
    e.limits.push_back({"Amoroso(a, vartheta (beta sigma)^(2/beta), 1/(beta sigma)^2, beta)", "beta", "0",
                        Family::amoroso, e.params, [](const NamedParams& p, double beta) {
                          const double bs = beta * p.at("sigma");
                          return am(p.at("a"), p.at("vartheta") * std::exp(2.0 / beta * std::log(std::abs(bs))),
                                    1.0 / (bs * bs), beta);
                        }});
    add(std::move(e));
  }
  {
    CatalogEntry e;
    e.canonical_name = "normal";
    e.synonyms = {"Gauss", "Gaussian", "bell curve", "Laplace-Gauss", "de Moivre", "error",
                  "Laplace's second law of error", "law of error", "standard normal", "unit normal", "Φ", "z",
                  "error function", "delta", "degenerate", "uniform", "flat"};
    e.family = Family::limit_only;
    e.params = {real("mu"), positive("sigma")};
    e.mapping = "lim alpha->inf Amoroso(x | mu - sigma sqrt(alpha), sigma/sqrt(alpha), alpha, 1); "
                "lim alpha->inf LogGamma(x | mu - sigma sqrt(alpha) ln alpha, sigma sqrt(alpha), alpha)";
    e.anchor = "Eq. Normal";
    e.note = "standard normal at mu=0, sigma=1; error function at sigma = 1/(sqrt(2) h); uniform as "
             "sigma->inf and delta as sigma->0";
    e.limits.push_back({"Amoroso(mu - sigma sqrt(alpha), sigma/sqrt(alpha), alpha, 1)", "alpha", "inf",
                        Family::amoroso, e.params, [](const NamedParams& p, double alpha) {
                          const double root = std::sqrt(alpha);
                          const double sigma = p.at("sigma");
                          return am(p.at("mu") - sigma * root, sigma / root, alpha, 1);
                        }});
    e.limits.push_back({"LogGamma(mu - sigma sqrt(alpha) ln alpha, sigma sqrt(alpha), alpha)", "alpha", "inf",
                        Family::loggamma, e.params, [](const NamedParams& p, double alpha) {
                          const double root = std::sqrt(alpha);
                          const double sigma = p.at("sigma");
                          return lg(p.at("mu") - sigma * root * std::log(alpha), sigma * root, alpha);
                        }});
    add(std::move(e));
  }
  {
    CatalogEntry e;
    e.canonical_name = "power law";
    e.synonyms = {"Pearson type XI", "fractal", "half-uniform", "Jeffreys"};
    e.family = Family::limit_only;
    e.params = {location("a"), nonzero("theta"), real("p")};
    e.mapping = "PowerLaw(x | p) ∝ (x - a)^-p = lim beta->0 Amoroso(x | a, theta, (1-p)/beta, beta)";
    e.anchor = "Eq. PowerLaw";
    e.improper = true;
    e.note = "improper (unnormalizable); half-uniform at p=0, Jeffreys at p=1; beta takes the sign of 1-p";
    e.limits.push_back({"Amoroso(a, theta, (1-p)/beta, beta)", "beta", "0", Family::amoroso, e.params,
                        [](const NamedParams& p, double beta) {
                          return am(p.at("a"), p.at("theta"), (1.0 - p.at("p")) / beta, beta);
                        }});
    add(std::move(e));
  }
  {
    CatalogEntry e;
    e.canonical_name = "log-gamma limit";
    e.synonyms = {};
    e.family = Family::limit_only;
    e.params = {location("nu"), nonzero("lambda"), positive("alpha")};
    e.mapping = "LogGamma(x | nu, lambda, alpha) = lim beta->inf Amoroso(x | nu - beta lambda, beta lambda, alpha, "
                "beta)";
    e.anchor = "Eq. LogGamma";
    e.note = "the log-gamma family as the large-beta limit of the Amoroso family";
    e.limits.push_back({"Amoroso(nu - beta lambda, beta lambda, alpha, beta)", "beta", "inf", Family::amoroso,
                        e.params, [](const NamedParams& p, double beta) {
                          const double lambda = p.at("lambda");
                          return am(p.at("nu") - beta * lambda, beta * lambda, p.at("alpha"), beta);
                        }});
    add(std::move(e));
  }
  return v;
}

struct Index {
  std::vector<CatalogEntry> entries;
  std::unordered_map<std::string, std::size_t> by_name;
  std::vector<std::string> names;  // every canonical name and synonym, as written
};

const Index& index() {
  static const Index idx = [] {
    Index i;
    i.entries = build_entries();
    for (std::size_t n = 0; n < i.entries.size(); ++n) {
      const auto& e = i.entries[n];
      auto insert = [&](const std::string& name) {
        const auto key = normalize_name(name);
        const auto [it, fresh] = i.by_name.emplace(key, n);
        if (!fresh && it->second != n) throw std::logic_error("catalog name collision: " + name);
        i.names.push_back(name);
      };
      insert(e.canonical_name);
      for (const auto& s : e.synonyms) insert(s);
    }
    return i;
  }();
  return idx;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

bool close(double x, double v, double tol) { return std::abs(x - v) <= tol * std::max(1.0, std::abs(v)); }

bool near_positive_integer(double x, double tol) {
  const double r = std::round(x);
  return r >= 1.0 && close(x, r, tol);
}

bool field_matches(const FieldPattern& f, double x, double beta, double tol) {
  switch (f.kind) {
    case Kind::free: return true;
    case Kind::exact: return close(x, f.value, tol);
    case Kind::integer: return near_positive_integer(x, tol);
    case Kind::half_integer: return near_positive_integer(2.0 * x, tol);
    case Kind::positive: return x > 0.0;
    case Kind::negative: return x < 0.0;
    case Kind::one_plus_inv_beta: return close(x, 1.0 + 1.0 / beta, tol);
  }
  return false;
}

int field_score(const FieldPattern& f) {
  switch (f.kind) {
    case Kind::free: return 0;
    case Kind::positive:
    case Kind::negative: return 1;
    case Kind::integer:
    case Kind::half_integer:
    case Kind::one_plus_inv_beta: return 2;
    case Kind::exact: return 3;
  }
  return 0;
}

std::vector<std::string> classify_values(Family family, const std::vector<double>& values, double beta,
                                         double tol) {
  struct Match {
    int score;
    std::size_t order;
    const CatalogEntry* entry;
  };
  std::vector<Match> matches;
  const auto& all = entries();
  for (std::size_t n = 0; n < all.size(); ++n) {
    const auto& e = all[n];
    if (e.family != family || e.pattern.size() != values.size()) continue;
    bool ok = true;
    int score = 0;
    for (std::size_t i = 0; i < values.size() && ok; ++i) {
      ok = field_matches(e.pattern[i], values[i], beta, tol);
      score += field_score(e.pattern[i]);
    }
    if (ok) matches.push_back({score, n, &e});
  }
  // The family parent has an all-free pattern and always sorts last.
  std::stable_sort(matches.begin(), matches.end(), [](const Match& l, const Match& r) {
    if (l.score != r.score) return l.score > r.score;
    return l.order < r.order;
  });
  std::vector<std::string> out;
  for (const auto& m : matches) out.push_back(m.entry->canonical_name);
  return out;
}

nlohmann::json param_json(const ParamSpec& s) {
  nlohmann::json j;
  j["name"] = s.name;
  j["constraint"] = constraint_text(s);
  j["default"] = s.default_value ? nlohmann::json(*s.default_value) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json_value(const CatalogEntry& e) {
  nlohmann::json j;
  j["name"] = e.canonical_name;
  j["synonyms"] = e.synonyms;
  j["family"] = std::string(family_name(e.family));
  j["params"] = nlohmann::json::array();
  for (const auto& p : e.params) j["params"].push_back(param_json(p));
  j["mapping"] = e.mapping;
  j["anchor"] = e.anchor;
  j["note"] = e.note;
  j["improper"] = e.improper;
  j["limits"] = nlohmann::json::array();
  for (const auto& l : e.limits) {
    j["limits"].push_back({{"substitution", l.description},
                           {"control", l.control_name},
                           {"towards", l.towards},
                           {"target_family", std::string(family_name(l.target))}});
  }
  return j;
}

}  // namespace

UnknownDistribution::UnknownDistribution(const std::string& name, std::vector<std::string> suggestions)
    : std::invalid_argument([&] {
        std::string msg = "unknown distribution '" + name + "'";
        if (!suggestions.empty()) {
          msg += "; did you mean ";
          for (std::size_t i = 0; i < suggestions.size(); ++i) {
            if (i) msg += i + 1 == suggestions.size() ? " or " : ", ";
            msg += "'" + suggestions[i] + "'";
          }
          msg += "?";
        }
        return msg;
      }()),
      suggestions_(std::move(suggestions)) {}

std::string normalize_name(std::string_view name) {
  std::string out;
  bool pending_separator = false;
  for (std::size_t i = 0; i < name.size(); ++i) {
    const auto c = static_cast<unsigned char>(name[i]);
    const bool separator = c == ' ' || c == '-' || c == '_' || c == ',' || c == '\t';
    if (c == '\'') continue;
    if (separator) {
      pending_separator = !out.empty();
      continue;
    }
    if (pending_separator) out.push_back('-');
    pending_separator = false;
    // U+00E9 / U+00C9 (é / É) in UTF-8.
    if (c == 0xC3 && i + 1 < name.size()) {
      const auto next = static_cast<unsigned char>(name[i + 1]);
      if (next == 0xA9 || next == 0x89) {
        out.push_back('e');
        ++i;
        continue;
      }
    }
    out.push_back(c < 0x80 ? static_cast<char>(std::tolower(c)) : static_cast<char>(c));
  }
  return out;
}

const std::vector<CatalogEntry>& entries() { return index().entries; }

std::vector<const CatalogEntry*> limit_entries() {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries()) {
    if (e.family == Family::limit_only) out.push_back(&e);
  }
  return out;
}

std::vector<std::string> suggest(std::string_view name, std::size_t count) {
  const auto key = normalize_name(name);
  std::vector<std::pair<std::size_t, std::string>> scored;
  for (const auto& n : index().names) scored.emplace_back(edit_distance(key, normalize_name(n)), n);
  std::stable_sort(scored.begin(), scored.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < scored.size() && out.size() < count; ++i) out.push_back(scored[i].second);
  return out;
}

const CatalogEntry& lookup(std::string_view name) {
  const auto& idx = index();
  const auto it = idx.by_name.find(normalize_name(name));
  if (it == idx.by_name.end()) throw UnknownDistribution(std::string(name), suggest(name));
  return idx.entries[it->second];
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::amoroso: return "amoroso";
    case Family::loggamma: return "loggamma";
    case Family::limit_only: return "limit-only";
  }
  return "";
}

std::string constraint_text(const ParamSpec& spec) {
  switch (spec.constraint) {
    case Constraint::real: return spec.name + " real";
    case Constraint::positive: return spec.name + " > 0";
    case Constraint::nonzero: return spec.name + " != 0";
    case Constraint::positive_integer: return spec.name + " positive integer";
  }
  return spec.name;
}

Distribution construct(const CatalogEntry& entry, const NamedParams& params, const ConstructOptions& opts) {
  if (!entry.constructible()) {
    throw ConstraintViolation("'" + entry.canonical_name + "' is a limiting form (" + entry.mapping +
                              ") and cannot be constructed as a family member");
  }
  NamedParams resolved;
  for (const auto& [name, value] : params) {
    const bool known = std::any_of(entry.params.begin(), entry.params.end(),
                                   [&](const ParamSpec& s) { return s.name == name; });
    if (!known) {
      std::string expected;
      for (const auto& s : entry.params) expected += (expected.empty() ? "" : ", ") + s.name;
      throw ConstraintViolation("'" + entry.canonical_name + "' has no parameter '" + name + "' (expected: " +
                                (expected.empty() ? "none" : expected) + ")");
    }
  }
  for (const auto& spec : entry.params) {
    const auto it = params.find(spec.name);
    double value;
    if (it != params.end()) {
      value = it->second;
    } else if (spec.default_value) {
      value = *spec.default_value;
    } else {
      throw ConstraintViolation("'" + entry.canonical_name + "' requires parameter '" + spec.name + "' (" +
                                constraint_text(spec) + ")");
    }
    bool ok = std::isfinite(value);
    switch (spec.constraint) {
      case Constraint::real: break;
      case Constraint::positive: ok = ok && value > 0.0; break;
      case Constraint::nonzero: ok = ok && value != 0.0; break;
      case Constraint::positive_integer:
        ok = ok && value > 0.0 && (opts.relax_integer || value == std::round(value));
        break;
    }
    if (!ok) {
      throw ConstraintViolation("'" + entry.canonical_name + "' violates constraint " + constraint_text(spec) +
                                " (got " + spec.name + " = " + std::to_string(value) + ")");
    }
    resolved[spec.name] = value;
  }
  try {
    return entry.build(resolved);
  } catch (const std::invalid_argument& e) {
    throw ConstraintViolation("'" + entry.canonical_name + "': " + e.what());
  }
}

Distribution construct(std::string_view name, const NamedParams& params, const ConstructOptions& opts) {
  return construct(lookup(name), params, opts);
}

std::vector<std::string> classify(const AmorosoParams& p, double tol) {
  return classify_values(Family::amoroso, {p.a(), p.theta(), p.alpha(), p.beta()}, p.beta(), tol);
}

std::vector<std::string> classify(const LogGammaParams& p, double tol) {
  return classify_values(Family::loggamma, {p.nu(), p.lambda(), p.alpha()}, 0.0, tol);
}

std::string to_json(int indent) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : entries()) j.push_back(to_json_value(e));
  return j.dump(indent);
}

std::string entry_to_json(const CatalogEntry& entry, int indent) { return to_json_value(entry).dump(indent); }

}  // namespace amoroso::catalog
