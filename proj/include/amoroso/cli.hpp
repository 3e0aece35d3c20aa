#pragma once

// Command-line front end. run() is the whole program minus process
// plumbing, so it can be driven in-process by tests and bindings.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "amoroso/catalog.hpp"
#include "amoroso/random.hpp"

namespace amoroso::cli {

enum class Subcommand { eval, describe, sample, curve, catalog, check };
enum class OutputFormat { text, csv, json };

struct Grid {
  double from = 0.0;
  double to = 1.0;
  int points = 101;
};

struct CliConfig {
  Subcommand subcommand = Subcommand::eval;
  std::string dist_name;
  catalog::NamedParams named_params;
  bool relax_integer = false;
  OutputFormat output_format = OutputFormat::text;
  std::uint64_t seed = kDefaultSeed;
  std::size_t count = 10;
  Grid grid;
  std::vector<double> xs;
  std::vector<std::string> what{"pdf"};
  std::string suite = "all";
  std::string find;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// args excludes the program name. Normal output goes to out, diagnostics
/// to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace amoroso::cli
