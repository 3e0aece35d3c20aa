#include "amoroso/cli.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "amoroso/format.hpp"
#include "amoroso/verify.hpp"
#include "json.hpp"

namespace amoroso::cli {
namespace {

using catalog::Distribution;
using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& text, const std::string& what) {
  std::string_view s = text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
    throw UsageError(what + ": '" + text + "' is not a number");
  }
  return value;
}

catalog::NamedParams parse_params(const std::vector<std::string>& items) {
  catalog::NamedParams params;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    if (params.count(name)) throw UsageError("--param: '" + name + "' given twice");
    params[name] = parse_real(item.substr(eq + 1), "--param " + name);
  }
  return params;
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json optional_number(const std::optional<double>& v) { return v ? number(*v) : json(nullptr); }

json bound(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

std::string support_text(const Support& s) {
  return std::string(s.lower_closed ? "[" : "(") + format_real(s.lower) + ", " + format_real(s.upper) +
         (s.upper_closed ? "]" : ")");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::vector<std::pair<std::string, double>> family_params(const Distribution& d) {
  if (const auto* a = std::get_if<AmorosoParams>(&d)) {
    return {{"a", a->a()}, {"theta", a->theta()}, {"alpha", a->alpha()}, {"beta", a->beta()}};
  }
  const auto& l = std::get<LogGammaParams>(d);
  return {{"nu", l.nu()}, {"lambda", l.lambda()}, {"alpha", l.alpha()}};
}

std::string family_label(const Distribution& d) {
  return std::holds_alternative<AmorosoParams>(d) ? "Amoroso" : "LogGamma";
}

double evaluate(const Distribution& d, const std::string& what, double x) {
  return std::visit(
      [&](const auto& p) -> double {
        if (what == "pdf") return pdf(p, x);
        if (what == "logpdf") return log_pdf(p, x);
        if (what == "cdf") return cdf(p, x);
        if (what == "sf") return survival(p, x);
        if (!(x > 0.0 && x < 1.0)) {
          throw UsageError("quantile: probability " + format_real(x) + " must lie strictly between 0 and 1");
        }
        return quantile(p, x);
      },
      d);
}

struct Resolved {
  const catalog::CatalogEntry* entry;
  Distribution dist;
};

Resolved resolve(const CliConfig& cfg) {
  const auto& entry = catalog::lookup(cfg.dist_name);
  catalog::ConstructOptions opts;
  opts.relax_integer = cfg.relax_integer;
  return {&entry, catalog::construct(entry, cfg.named_params, opts)};
}

// ---------------------------------------------------------------------------

int do_eval(const CliConfig& cfg, std::ostream& out) {
  if (cfg.xs.empty()) throw UsageError("eval: at least one --x value is required");
  const auto [entry, dist] = resolve(cfg);
  const std::string& what = cfg.what.front();
  std::vector<double> values;
  for (double x : cfg.xs) values.push_back(evaluate(dist, what, x));

  switch (cfg.output_format) {
    case OutputFormat::text:
      for (double v : values) out << format_real(v) << '\n';
      break;
    case OutputFormat::csv:
      out << (what == "quantile" ? "q," : "x,") << what << '\n';
      for (std::size_t i = 0; i < values.size(); ++i) out << format_real(cfg.xs[i]) << ',' << format_real(values[i]) << '\n';
      break;
    case OutputFormat::json: {
      json j{{"distribution", entry->canonical_name}, {"what", what}};
      j["x"] = json::array();
      j["values"] = json::array();
      for (std::size_t i = 0; i < values.size(); ++i) {
        j["x"].push_back(number(cfg.xs[i]));
        j["values"].push_back(number(values[i]));
      }
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

void describe_limit_entry(const catalog::CatalogEntry& e, const CliConfig& cfg, std::ostream& out) {
  if (cfg.output_format == OutputFormat::json) {
    out << catalog::entry_to_json(e) << '\n';
    return;
  }
  out << "distribution: " << e.canonical_name << '\n';
  out << "family: limiting form (not a family member)\n";
  out << "density: " << e.mapping << '\n';
  for (const auto& rule : e.limits) {
    out << "limit: " << rule.description << " as " << rule.control_name << " -> " << rule.towards << '\n';
  }
  if (!e.note.empty()) out << "note: " << e.note << '\n';
}

int do_describe(const CliConfig& cfg, std::ostream& out) {
  const auto& entry = catalog::lookup(cfg.dist_name);
  if (!entry.constructible()) {
    describe_limit_entry(entry, cfg, out);
    return kExitOk;
  }
  const auto [_, dist] = resolve(cfg);
  const auto summary = std::visit([](const auto& p) { return summarize(p); }, dist);
  const auto matches = std::visit([](const auto& p) { return catalog::classify(p); }, dist);
  const auto params = family_params(dist);

  if (cfg.output_format == OutputFormat::json) {
    json j;
    j["distribution"] = entry.canonical_name;
    j["family"] = family_label(dist);
    j["params"] = json::object();
    for (const auto& [name, value] : params) j["params"][name] = value;
    j["support"] = {{"lower", bound(summary.support.lower)},
                    {"upper", bound(summary.support.upper)},
                    {"lower_closed", summary.support.lower_closed},
                    {"upper_closed", summary.support.upper_closed}};
    j["mode"] = number(summary.mode);
    j["mean"] = optional_number(summary.mean);
    j["variance"] = optional_number(summary.variance);
    j["skew"] = optional_number(summary.skew);
    j["excess_kurtosis"] = optional_number(summary.kurtosis);
    j["entropy"] = number(summary.entropy);
    j["side_conditions"] = json::array();
    for (const auto& c : summary.side_conditions) {
      j["side_conditions"].push_back({{"condition", c.quantity}, {"satisfied", c.satisfied}});
    }
    j["matched_names"] = matches;
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  auto optional_text = [&](const std::optional<double>& v, const std::string& quantity) {
    if (v) return format_real(*v);
    for (const auto& c : summary.side_conditions) {
      if (!c.satisfied && c.quantity.rfind(quantity + ":", 0) == 0) {
        return "undefined (requires " + c.quantity.substr(quantity.size() + 2) + ")";
      }
    }
    return std::string("undefined");
  };
  std::vector<std::string> param_text;
  for (const auto& [name, value] : params) param_text.push_back(name + "=" + format_real(value));
  out << "distribution: " << entry.canonical_name << '\n';
  out << "family: " << family_label(dist) << '(' << join(param_text, ", ") << ")\n";
  out << "support: " << support_text(summary.support) << '\n';
  out << "mode: " << format_real(summary.mode) << '\n';
  out << "mean: " << optional_text(summary.mean, "mean") << '\n';
  out << "variance: " << optional_text(summary.variance, "variance") << '\n';
  if (summary.skew) out << "skew: " << format_real(*summary.skew) << '\n';
  if (summary.kurtosis) out << "excess kurtosis: " << format_real(*summary.kurtosis) << '\n';
  out << "entropy: " << format_real(summary.entropy) << '\n';
  out << "matches: " << join(matches, ", ") << '\n';
  return kExitOk;
}

int do_sample(const CliConfig& cfg, std::ostream& out) {
  const auto [entry, dist] = resolve(cfg);
  RandomStream rng(cfg.seed);
  const auto draws = std::visit([&](const auto& p) { return sample(p, rng, cfg.count); }, dist);
  switch (cfg.output_format) {
    case OutputFormat::csv:
      out << "x\n";
      [[fallthrough]];
    case OutputFormat::text:
      for (double v : draws) out << format_real(v) << '\n';
      break;
    case OutputFormat::json: {
      json j{{"distribution", entry->canonical_name}, {"seed", cfg.seed}, {"draws", json::array()}};
      for (double v : draws) j["draws"].push_back(number(v));
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

int do_curve(const CliConfig& cfg, std::ostream& out) {
  if (cfg.grid.points < 2) throw UsageError("curve: --points must be at least 2");
  if (!(std::isfinite(cfg.grid.from) && std::isfinite(cfg.grid.to) && cfg.grid.from < cfg.grid.to)) {
    throw UsageError("curve: need finite --from < --to");
  }
  for (const auto& w : cfg.what) {
    if (w == "quantile") throw UsageError("curve: --what accepts pdf, logpdf, cdf and sf");
  }
  const auto [entry, dist] = resolve(cfg);
  const int n = cfg.grid.points;
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = i + 1 == n ? cfg.grid.to : cfg.grid.from + (cfg.grid.to - cfg.grid.from) * i / (n - 1);
  }

  if (cfg.output_format == OutputFormat::json) {
    json j{{"distribution", entry->canonical_name}, {"x", json::array()}};
    for (double x : xs) j["x"].push_back(x);
    for (const auto& w : cfg.what) {
      j[w] = json::array();
      for (double x : xs) j[w].push_back(number(evaluate(dist, w, x)));
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "x," << join(cfg.what, ",") << '\n';
  for (double x : xs) {
    out << format_real(x);
    for (const auto& w : cfg.what) out << ',' << format_real(evaluate(dist, w, x));
    out << '\n';
  }
  return kExitOk;
}

std::string params_text(const catalog::CatalogEntry& e) {
  std::vector<std::string> parts;
  for (const auto& p : e.params) {
    parts.push_back(p.default_value ? p.name + " (default " + format_real(*p.default_value) + ")"
                                    : catalog::constraint_text(p));
  }
  return join(parts, "; ");
}

int do_catalog(const CliConfig& cfg, std::ostream& out) {
  if (!cfg.find.empty()) {
    const auto& e = catalog::lookup(cfg.find);
    if (cfg.output_format == OutputFormat::json) {
      out << catalog::entry_to_json(e) << '\n';
      return kExitOk;
    }
    out << "name: " << e.canonical_name << '\n';
    out << "family: " << catalog::family_name(e.family) << '\n';
    out << "parameters: " << (e.params.empty() ? "none" : params_text(e)) << '\n';
    out << "mapping: " << e.mapping << '\n';
    out << "anchor: " << e.anchor << '\n';
    if (!e.synonyms.empty()) out << "synonyms: " << join(e.synonyms, ", ") << '\n';
    for (const auto& rule : e.limits) {
      out << "limit: " << rule.description << " as " << rule.control_name << " -> " << rule.towards << '\n';
    }
    if (e.improper) out << "improper: true\n";
    if (!e.note.empty()) out << "note: " << e.note << '\n';
    return kExitOk;
  }

  if (cfg.output_format == OutputFormat::json) {
    out << catalog::to_json() << '\n';
    return kExitOk;
  }
  const bool csv = cfg.output_format == OutputFormat::csv;
  const std::string sep = csv ? "," : "\t";
  auto field = [&](const std::string& s) { return csv ? csv_field(s) : s; };
  out << join({"name", "family", "parameters", "mapping", "anchor", "synonyms"}, sep) << '\n';
  for (const auto& e : catalog::entries()) {
    out << join({field(e.canonical_name), field(std::string(catalog::family_name(e.family))), field(params_text(e)),
                 field(e.mapping), field(e.anchor), field(join(e.synonyms, "; "))},
                sep)
        << '\n';
  }
  return kExitOk;
}

int do_check(const CliConfig& cfg, std::ostream& out) {
  const auto reports = verify::run_suite(verify::parse_suite(cfg.suite), cfg.seed, cfg.count);
  std::size_t passed = 0;
  for (const auto& r : reports) passed += r.passed;
  if (cfg.output_format == OutputFormat::json) {
    out << verify::reports_to_json(reports, cfg.seed) << '\n';
  } else {
    for (const auto& r : reports) out << verify::format_report_line(r) << '\n';
    out << "passed " << passed << '/' << reports.size() << '\n';
  }
  return passed == reports.size() ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------

struct RawOptions {
  std::vector<std::string> params;
  std::vector<std::string> xs;
  std::string what;
  std::string format;
};

void add_format(CLI::App* sub, RawOptions& raw, const std::string& default_format) {
  sub->add_option("--format", raw.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->default_str(default_format);
}

void add_dist(CLI::App* sub, CliConfig& cfg, RawOptions& raw) {
  sub->add_option("--dist,-d", cfg.dist_name, "Distribution name or synonym")->required();
  sub->add_option("--param,-p", raw.params, "Parameters as name=value")->expected(0, CLI::detail::expected_max_vector_size);
  sub->add_flag("--relax-integer", cfg.relax_integer, "Accept non-integer k and n");
}

OutputFormat to_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  return OutputFormat::text;
}

std::vector<std::string> split_what(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item != "pdf" && item != "logpdf" && item != "cdf" && item != "sf" && item != "quantile") {
      throw UsageError("--what: unknown quantity '" + item + "' (expected pdf, logpdf, cdf, sf or quantile)");
    }
    parts.push_back(item);
  }
  if (parts.empty()) throw UsageError("--what: empty list");
  return parts;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Amoroso and log-gamma distributions: evaluate, describe, sample, tabulate and verify", "amoroso"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "amoroso 0.1.0");

  CliConfig cfg;
  RawOptions raw;

  auto* eval = app.add_subcommand("eval", "Evaluate pdf, logpdf, cdf, sf or quantile");
  add_dist(eval, cfg, raw);
  eval->add_option("--x,-x", raw.xs, "Points (probabilities for quantile)")->required();
  raw.what = "pdf";
  eval->add_option("--what", raw.what, "pdf|logpdf|cdf|sf|quantile")
      ->check(CLI::IsMember({"pdf", "logpdf", "cdf", "sf", "quantile"}))
      ->default_str("pdf");

  auto* describe = app.add_subcommand("describe", "Support, mode, moments, entropy and matching catalog names");
  add_dist(describe, cfg, raw);

  auto* sample_cmd = app.add_subcommand("sample", "Draw random variates");
  add_dist(sample_cmd, cfg, raw);
  sample_cmd->add_option("-n,--count", cfg.count, "Number of draws")->default_val(10);
  sample_cmd->add_option("--seed", cfg.seed, "Random seed")->default_val(kDefaultSeed);

  auto* curve = app.add_subcommand("curve", "Tabulate a grid as CSV");
  add_dist(curve, cfg, raw);
  curve->add_option("--from", cfg.grid.from, "Grid start")->required();
  curve->add_option("--to", cfg.grid.to, "Grid end")->required();
  curve->add_option("--points", cfg.grid.points, "Grid points")->default_val(101);
  std::string curve_what = "pdf,cdf";
  curve->add_option("--what", curve_what, "Comma-separated pdf,logpdf,cdf,sf")->default_str("pdf,cdf");

  auto* catalog_cmd = app.add_subcommand("catalog", "List the catalog or resolve one name");
  catalog_cmd->add_option("--find", cfg.find, "Name or synonym to resolve");

  auto* check = app.add_subcommand("check", "Run the identity and limit-theorem suites");
  check->add_option("--suite", cfg.suite, "identities|limits|all")
      ->check(CLI::IsMember({"identities", "limits", "all"}))
      ->default_str("all");
  check->add_option("--seed", cfg.seed, "Base seed")->default_val(kDefaultSeed);
  std::size_t check_n = 100000;
  check->add_option("-n,--count", check_n, "Draws per Monte-Carlo check")->default_val(100000);

  for (auto* sub : {eval, describe, sample_cmd, catalog_cmd, check}) add_format(sub, raw, "text");
  add_format(curve, raw, "csv");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    cfg.named_params = parse_params(raw.params);
    cfg.output_format = to_format(raw.format.empty() && *curve ? "csv" : raw.format);
    if (*eval) {
      cfg.subcommand = Subcommand::eval;
      for (const auto& x : raw.xs) cfg.xs.push_back(parse_real(x, "--x"));
      cfg.what = {raw.what};
      return do_eval(cfg, out);
    }
    if (*describe) {
      cfg.subcommand = Subcommand::describe;
      return do_describe(cfg, out);
    }
    if (*sample_cmd) {
      cfg.subcommand = Subcommand::sample;
      return do_sample(cfg, out);
    }
    if (*curve) {
      cfg.subcommand = Subcommand::curve;
      cfg.what = split_what(curve_what);
      return do_curve(cfg, out);
    }
    if (*catalog_cmd) {
      cfg.subcommand = Subcommand::catalog;
      return do_catalog(cfg, out);
    }
    cfg.subcommand = Subcommand::check;
    cfg.count = check_n;
    return do_check(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const catalog::UnknownDistribution& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const catalog::ConstraintViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace amoroso::cli
