#pragma once

// Named special cases of the Amoroso and log-gamma families, the synonym
// index, and the reverse classifier. The catalog is immutable static data;
// every function here is safe to call concurrently.

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "amoroso/amoroso.hpp"
#include "amoroso/loggamma.hpp"

namespace amoroso::catalog {

enum class Family { amoroso, loggamma, limit_only };

enum class Constraint { real, positive, nonzero, positive_integer };

struct ParamSpec {
  std::string name;
  Constraint constraint = Constraint::real;
  std::optional<double> default_value;
};

using NamedParams = std::map<std::string, double>;
using Distribution = std::variant<AmorosoParams, LogGammaParams>;

/// Structural pattern for one field of the family parameters, used by
/// classify().
struct FieldPattern {
  enum class Kind { free, exact, integer, half_integer, positive, negative, one_plus_inv_beta };
  Kind kind = Kind::free;
  double value = 0.0;  // for exact
};

/// A limiting substitution: `family_params(params, control)` is the member
/// that approaches the limit as `control_name` tends to `towards`.
struct LimitRule {
  std::string description;
  std::string control_name;
  std::string towards;
  Family target = Family::amoroso;
  std::vector<ParamSpec> params;
  std::function<Distribution(const NamedParams&, double)> member;
};

struct CatalogEntry {
  std::string canonical_name;
  std::vector<std::string> synonyms;
  Family family = Family::amoroso;
  std::vector<ParamSpec> params;
  std::string mapping;
  std::string anchor;
  std::string note;
  /// Field patterns over (a, theta, alpha, beta) or (nu, lambda, alpha);
  /// empty for limit-only entries.
  std::vector<FieldPattern> pattern;
  bool improper = false;
  std::vector<LimitRule> limits;
  std::function<Distribution(const NamedParams&)> build;

  bool constructible() const { return family != Family::limit_only; }
};

class UnknownDistribution : public std::invalid_argument {
 public:
  UnknownDistribution(const std::string& name, std::vector<std::string> suggestions);
  const std::vector<std::string>& suggestions() const { return suggestions_; }

 private:
  std::vector<std::string> suggestions_;
};

class ConstraintViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ConstructOptions {
  /// Accept non-integer values for integer-constrained shape parameters
  /// (k, n), yielding the underlying real-shape family member.
  bool relax_integer = false;
};

/// Lowercase ASCII, 'é' folded to 'e', runs of spaces, hyphens,
/// underscores, commas and apostrophes collapsed to one '-'.
std::string normalize_name(std::string_view name);

const std::vector<CatalogEntry>& entries();
std::vector<const CatalogEntry*> limit_entries();

/// Resolves canonical names and synonyms. Throws UnknownDistribution, with
/// nearest-name suggestions, for anything else.
const CatalogEntry& lookup(std::string_view name);

/// Up to `count` known names closest to `name` by edit distance.
std::vector<std::string> suggest(std::string_view name, std::size_t count = 3);

/// Validates `params` against the entry and builds the family member.
/// Location parameters default to 0. Throws ConstraintViolation naming the
/// failed constraint, or for missing or unrecognized parameters; limit-only
/// entries are not constructible.
Distribution construct(const CatalogEntry& entry, const NamedParams& params, const ConstructOptions& opts = {});
Distribution construct(std::string_view name, const NamedParams& params, const ConstructOptions& opts = {});

/// Canonical names whose pattern matches p within tol, most specific first,
/// with "Amoroso" (or "log-gamma") last.
std::vector<std::string> classify(const AmorosoParams& p, double tol = 1e-12);
std::vector<std::string> classify(const LogGammaParams& p, double tol = 1e-12);

std::string_view family_name(Family family);
std::string constraint_text(const ParamSpec& spec);

/// Machine-readable export: a JSON array of entries with name, synonyms,
/// family, params, mapping, anchor, note, improper and limits.
std::string to_json(int indent = 2);
std::string entry_to_json(const CatalogEntry& entry, int indent = 2);

}  // namespace amoroso::catalog
