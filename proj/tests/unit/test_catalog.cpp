#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "../common/appendix_names.hpp"
#include "amoroso/catalog.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace amoroso;
using namespace amoroso::catalog;

namespace {

const AmorosoParams& as_amoroso(const Distribution& d) { return std::get<AmorosoParams>(d); }
const LogGammaParams& as_loggamma(const Distribution& d) { return std::get<LogGammaParams>(d); }

bool contains(const std::vector<std::string>& names, const std::string& name) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

// Same density up to rounding at a handful of support points.
void check_same_density(const Distribution& l, const Distribution& r) {
  std::visit(
      [&](const auto& lp) {
        using T = std::decay_t<decltype(lp)>;
        const auto& rp = std::get<T>(r);
        for (double q : {0.1, 0.5, 0.9}) {
          const double x = quantile(lp, q);
          CHECK(pdf(lp, x) == doctest::Approx(pdf(rp, x)).epsilon(1e-14));
        }
      },
      l);
}

}  // namespace

TEST_CASE("entry counts by family") {
  int amoroso_count = 0, loggamma_count = 0, limit_count = 0;
  for (const auto& e : entries()) {
    switch (e.family) {
      case Family::amoroso: ++amoroso_count; break;
      case Family::loggamma: ++loggamma_count; break;
      case Family::limit_only: ++limit_count; break;
    }
  }
  CHECK(amoroso_count == 36);
  CHECK(loggamma_count == 7);
  CHECK(limit_count == 4);
  CHECK(limit_entries().size() == 4);
}

TEST_CASE("name normalization") {
  CHECK(normalize_name("Chi Square") == "chi-square");
  CHECK(normalize_name("chi_square") == "chi-square");
  CHECK(normalize_name("  chi -- square ") == "chi-square");
  CHECK(normalize_name("Fréchet") == "frechet");
  CHECK(normalize_name("LÉVY") == "levy");
  CHECK(normalize_name("Laplace's second law of error") == "laplaces-second-law-of-error");
  CHECK(normalize_name("log-normal, two parameter") == "log-normal-two-parameter");
}

TEST_CASE("every appendix name resolves to its canonical entry") {
  for (const auto& [name, canonical] : appendix::kIndex) {
    CAPTURE(std::string(name));
    CHECK(lookup(name).canonical_name == canonical);
  }
}

TEST_CASE("canonical names are fixed points and separators are interchangeable") {
  for (const auto& e : entries()) {
    CHECK(lookup(e.canonical_name).canonical_name == e.canonical_name);
    std::string spaced = e.canonical_name;
    std::replace(spaced.begin(), spaced.end(), '-', ' ');
    CHECK(lookup(spaced).canonical_name == e.canonical_name);
    std::string shouty;
    for (char c : e.canonical_name) shouty.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    CHECK(lookup(shouty).canonical_name == e.canonical_name);
  }
}

TEST_CASE("lookup examples") {
  CHECK(lookup("Vinci").canonical_name == "inverse gamma");
  CHECK(lookup("log-Weibull").canonical_name == "Gumbel");
  CHECK(lookup("van der Waals profile").canonical_name == "Lévy");
  CHECK(lookup("Rosin-Rammler").canonical_name == "Weibull");
  CHECK(lookup("doubly exponential").canonical_name == "Gumbel");
  const auto& wien = lookup("wien");
  CHECK(wien.anchor == "Eq. Gamma");
  CHECK(wien.note.find("alpha = 4") != std::string::npos);
}

TEST_CASE("unknown names fail with suggestions") {
  try {
    lookup("raleigh");
    FAIL("expected UnknownDistribution");
  } catch (const UnknownDistribution& e) {
    REQUIRE_FALSE(e.suggestions().empty());
    CHECK(e.suggestions().front() == "Rayleigh");
    CHECK(std::string(e.what()).find("Rayleigh") != std::string::npos);
  }
  CHECK_THROWS_AS(lookup("laplace"), UnknownDistribution);
  CHECK_THROWS_AS(lookup(""), UnknownDistribution);
}

TEST_CASE("construct examples") {
  CHECK(as_amoroso(construct("rayleigh", {{"sigma", 1}})) == AmorosoParams(0, std::sqrt(2.0), 1, 2));
  CHECK(as_amoroso(construct("chi-square", {{"k", 4}})) == AmorosoParams(0, 2, 2, 1));
  CHECK(as_loggamma(construct("standard gumbel", {})) == LogGammaParams(0, -1, 1));
  CHECK(as_amoroso(construct("levy", {{"c", 1}})) == AmorosoParams(0, 0.5, 0.5, -1));
  CHECK(as_amoroso(construct("maxwell", {{"sigma", 1}})) == AmorosoParams(0, std::sqrt(2.0), 1.5, 2));
  CHECK(as_amoroso(construct("pearson type v", {{"a", 1}, {"theta", 2}, {"alpha", 3}})) ==
        AmorosoParams(1, 2, 3, -1));
  CHECK(as_amoroso(construct("frechet", {{"omega", 2}, {"beta_bar", 3}})) == AmorosoParams(0, 2, 1, -3));
  CHECK(as_amoroso(construct("pseudo-weibull", {{"theta", 1}, {"beta", 2}})) == AmorosoParams(0, 1, 1.5, 2));
  CHECK(as_amoroso(construct("scaled inverse chi", {{"sigma", 0.5}, {"k", 3}})) ==
        AmorosoParams(0, 1.0 / std::sqrt(0.5), 1.5, -2));
  const auto gen_gumbel = as_loggamma(construct("generalized gumbel", {{"u", 1}, {"lambda_bar", 2}, {"n", 3}}));
  CHECK(gen_gumbel.nu() == doctest::Approx(1 + 2 * std::log(3.0)));
  CHECK(gen_gumbel.lambda() == -2);
  CHECK(as_loggamma(construct("log-chi-square", {{"k", 3}})) == LogGammaParams(std::numbers::ln2, 1, 1.5));
  CHECK(as_loggamma(construct("bhp", {{"lambda", 1}})).alpha() == doctest::Approx(std::numbers::pi / 2));
}

TEST_CASE("generalized Frechet scale uses the negative Amoroso beta") {
  const auto p = as_amoroso(construct("generalized frechet", {{"omega", 2}, {"n", 3}, {"beta_bar", 2}}));
  CHECK(p.beta() == -2);
  CHECK(p.theta() == doctest::Approx(2 * std::sqrt(3.0)));
}

TEST_CASE("constraint violations name the constraint") {
  auto message = [](const std::string& name, const NamedParams& params) {
    try {
      construct(name, params);
    } catch (const ConstraintViolation& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("chi", {{"k", 2.5}}).find("k positive integer") != std::string::npos);
  CHECK(message("erlang", {{"theta", 1}, {"n", 1.5}}).find("n positive integer") != std::string::npos);
  CHECK(message("erlang", {{"theta", -1}, {"n", 2}}).find("theta > 0") != std::string::npos);
  CHECK(message("levy", {{"c", -1}}).find("c > 0") != std::string::npos);
  CHECK(message("weibull", {{"omega", 1}, {"beta", -2}}).find("beta > 0") != std::string::npos);
  CHECK(message("gamma", {{"theta", 0}, {"alpha", 1}}).find("theta != 0") != std::string::npos);
  CHECK(message("gamma", {{"alpha", 1}}).find("requires parameter 'theta'") != std::string::npos);
  CHECK(message("gamma", {{"theta", 1}, {"alpha", 1}, {"beta", 2}}).find("no parameter 'beta'") !=
        std::string::npos);
  CHECK(message("normal", {{"mu", 0}, {"sigma", 1}}).find("limiting form") != std::string::npos);
  CHECK(message("exponential", {{"theta", NAN}}).find("theta != 0") != std::string::npos);
}

TEST_CASE("integer escape hatch builds the relaxed member") {
  ConstructOptions relaxed;
  relaxed.relax_integer = true;
  CHECK(as_amoroso(construct("chi", {{"k", 2.5}}, relaxed)) == AmorosoParams(0, std::sqrt(2.0), 1.25, 2));
  CHECK_THROWS_AS(construct("chi", {{"k", -1}}, relaxed), ConstraintViolation);
}

TEST_CASE("location parameters default to zero") {
  CHECK(as_amoroso(construct("weibull", {{"omega", 1}, {"beta", 2}})).a() == 0);
  CHECK(as_loggamma(construct("gumbel", {{"lambda_bar", 1}})).nu() == 0);
}

TEST_CASE("equality chains printed alongside the densities hold") {
  const double sigma = 1.3;
  for (double k : {1.0, 2.0, 5.0}) {
    check_same_density(construct("scaled chi", {{"sigma", 1}, {"k", k}}), construct("chi", {{"k", k}}));
    check_same_density(construct("inverse chi-square", {{"k", k}}),
                       construct("scaled inverse chi-square", {{"sigma", 1}, {"k", k}}));
    check_same_density(construct("chi-square", {{"k", k}}), construct("gamma", {{"theta", 2}, {"alpha", k / 2}}));
    check_same_density(construct("scaled chi-square", {{"sigma", sigma}, {"k", k}}),
                       construct("gamma", {{"theta", 2 * sigma * sigma}, {"alpha", k / 2}}));
    check_same_density(construct("scaled inverse chi-square", {{"sigma", sigma}, {"k", k}}),
                       construct("inverse gamma", {{"theta", 1 / (2 * sigma * sigma)}, {"alpha", k / 2}}));
    check_same_density(construct("scaled inverse chi", {{"sigma", 1}, {"k", k}}),
                       construct("inverse chi", {{"k", k}}));
  }
  check_same_density(construct("half-normal", {{"sigma", sigma}}),
                     construct("scaled chi", {{"sigma", sigma}, {"k", 1}}));
  check_same_density(construct("rayleigh", {{"sigma", sigma}}), construct("scaled chi", {{"sigma", sigma}, {"k", 2}}));
  check_same_density(construct("maxwell", {{"sigma", sigma}}), construct("scaled chi", {{"sigma", sigma}, {"k", 3}}));
  check_same_density(construct("inverse rayleigh", {{"sigma", sigma}}),
                     construct("scaled inverse chi", {{"sigma", sigma}, {"k", 2}}));
  check_same_density(construct("exponential", {{"theta", 2}}), construct("gamma", {{"theta", 2}, {"alpha", 1}}));
  check_same_density(construct("inverse exponential", {{"theta", 2}}),
                     construct("inverse gamma", {{"theta", 2}, {"alpha", 1}}));
  check_same_density(construct("levy", {{"a", 1}, {"c", 3}}),
                     construct("pearson type v", {{"a", 1}, {"theta", 1.5}, {"alpha", 0.5}}));
  check_same_density(construct("stretched exponential", {{"theta", 2}, {"beta", 0.7}}),
                     construct("weibull", {{"omega", 2}, {"beta", 0.7}}));
  check_same_density(construct("fisher-tippett", {{"a", 1}, {"omega", 2}, {"beta", 3}}),
                     construct("generalized fisher-tippett", {{"a", 1}, {"omega", 2}, {"n", 1}, {"beta", 3}}));
  check_same_density(construct("generalized weibull", {{"a", 1}, {"omega", 2}, {"n", 3}, {"beta", 1.5}}),
                     construct("generalized fisher-tippett", {{"a", 1}, {"omega", 2}, {"n", 3}, {"beta", 1.5}}));
  check_same_density(construct("generalized frechet", {{"a", 1}, {"omega", 2}, {"n", 3}, {"beta_bar", 1.5}}),
                     construct("generalized fisher-tippett", {{"a", 1}, {"omega", 2}, {"n", 3}, {"beta", -1.5}}));
  check_same_density(construct("wien", {{"T", 2}}), construct("gamma", {{"theta", 2}, {"alpha", 4}}));
  check_same_density(construct("gumbel", {{"u", 0}, {"lambda_bar", 1}}), construct("standard gumbel", {}));
  check_same_density(construct("generalized gumbel", {{"u", 0.5}, {"lambda_bar", 2}, {"n", 1}}),
                     construct("gumbel", {{"u", 0.5}, {"lambda_bar", 2}}));
  check_same_density(construct("standard log-gamma", {{"alpha", 2}}),
                     construct("log-gamma", {{"nu", 0}, {"lambda", 1}, {"alpha", 2}}));
}

TEST_CASE("classify examples") {
  const auto maxwell = classify(AmorosoParams(0, std::sqrt(2.0), 1.5, 2));
  CHECK(contains(maxwell, "Maxwell"));
  CHECK(contains(maxwell, "chi"));
  CHECK(maxwell.back() == "Amoroso");
  const auto exp = classify(AmorosoParams(0, 1, 1, 1));
  CHECK(contains(exp, "standard exponential"));
  CHECK(exp.front() == "standard exponential");
  CHECK(classify(AmorosoParams(1.3, 0.7, 2.1, 1.7)) == std::vector<std::string>{"Amoroso"});

  const auto chi_square = classify(AmorosoParams(0, 2, 2, 1));
  CHECK(chi_square.front() == "chi-square");
  for (const char* name : {"gamma", "scaled chi-square", "Stacy", "Erlang", "Pearson type III"}) {
    CHECK(contains(chi_square, name));
  }
  CHECK_FALSE(contains(chi_square, "chi"));
  CHECK(chi_square.back() == "Amoroso");
}

TEST_CASE("classify respects signs and tolerances") {
  CHECK_FALSE(contains(classify(AmorosoParams(0, -std::sqrt(2.0), 1.5, 2)), "Maxwell"));
  CHECK(contains(classify(AmorosoParams(0, 1, 1.5, 2)), "pseudo-Weibull"));
  CHECK(contains(classify(AmorosoParams(2, 1, 3, -0.5)), "generalized Fréchet"));
  CHECK(contains(classify(AmorosoParams(2, 1, 1, -0.5)), "Fréchet"));
  CHECK(contains(classify(AmorosoParams(0, 1, 1 + 1e-14, 1)), "standard exponential"));
  CHECK_FALSE(contains(classify(AmorosoParams(0, 1, 1 + 1e-6, 1)), "standard exponential"));
  CHECK(contains(classify(AmorosoParams(0, 1, 1 + 1e-6, 1), 1e-3), "standard exponential"));
}

TEST_CASE("every constructible entry classifies its own member") {
  for (const auto& e : entries()) {
    if (!e.constructible()) continue;
    NamedParams params;
    for (const auto& spec : e.params) {
      if (spec.default_value) continue;
      params[spec.name] = spec.constraint == Constraint::positive_integer ? 3.0 : 1.25;
    }
    const auto d = construct(e, params);
    const auto names = std::visit([](const auto& p) { return classify(p); }, d);
    CAPTURE(e.canonical_name);
    CHECK(contains(names, e.canonical_name));
  }
}

TEST_CASE("log-gamma classification") {
  const auto names = classify(LogGammaParams(0, -1, 1));
  CHECK(names.front() == "standard Gumbel");
  CHECK(contains(names, "Gumbel"));
  CHECK(contains(names, "generalized Gumbel"));
  CHECK(names.back() == "log-gamma");
}

TEST_CASE("limit entries carry their substitutions") {
  const auto& lognormal = lookup("log-normal");
  CHECK(lognormal.family == Family::limit_only);
  REQUIRE(lognormal.limits.size() == 1);
  CHECK(lognormal.limits[0].description == "Amoroso(a, vartheta (beta sigma)^(2/beta), 1/(beta sigma)^2, beta)");
  const auto member = std::get<AmorosoParams>(lognormal.limits[0].member({{"a", 0}, {"vartheta", 1}, {"sigma", 1}}, 0.5));
  CHECK(member.alpha() == doctest::Approx(4));
  CHECK(member.theta() == doctest::Approx(std::pow(0.5, 4)));

  const auto& normal = lookup("normal");
  REQUIRE(normal.limits.size() == 2);
  CHECK(normal.limits[0].description == "Amoroso(mu - sigma sqrt(alpha), sigma/sqrt(alpha), alpha, 1)");
  CHECK(std::holds_alternative<LogGammaParams>(normal.limits[1].member({{"mu", 0}, {"sigma", 1}}, 100)));

  const auto& power = lookup("power law");
  CHECK(power.improper);
  const auto& lg_limit = lookup("log-gamma limit");
  CHECK(lg_limit.limits[0].towards == "inf");
}

TEST_CASE("JSON export lists every entry") {
  const auto doc = nlohmann::json::parse(to_json());
  REQUIRE(doc.is_array());
  CHECK(doc.size() == entries().size());
  std::set<std::string> names;
  for (const auto& e : doc) {
    names.insert(e["name"].get<std::string>());
    CHECK(e.contains("synonyms"));
    CHECK(e.contains("mapping"));
    CHECK(e.contains("anchor"));
    CHECK(e.contains("params"));
  }
  CHECK(names.count("Fréchet") == 1);
  const auto chi = nlohmann::json::parse(entry_to_json(lookup("chi")));
  CHECK(chi["params"][0]["constraint"] == "k positive integer");
  CHECK(chi["family"] == "amoroso");
}
