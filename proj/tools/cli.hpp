#pragma once

// Command-line front end. `run` is separate from argument parsing so the
// verbs can be driven directly from tests.

#include "pgrowth/unicritical.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace pgrowth::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,  ///< e.g. the inverse-branch hypothesis fails, or a relation is invalid.
  kNonConvergence = 2,
  kUsageError = 3,  ///< Unknown verb, malformed flag value, unwritable output.
};

struct RunConfig {
  std::string verb;
  long d = 2;
  cplx c{0.0, 0.0};
  unsigned nu = 3;
  unsigned k = 1;
  unsigned depth = 48;
  double landing_tol = 1e-9;
  double grouping_tol = 1e-6;
  double itinerary_tol = 1e-9;
  std::string output;  ///< Empty for stdout.
  std::string format;  ///< json, csv or svg; empty picks the verb's default.

  // stars
  std::string check;
  std::string stars_json;
  unsigned grid = 2;

  // ncp
  int n = 4;
  bool exhaustive = false;
  std::string blocks;

  // rays / itinerary
  std::string angle = "0";
  std::string word;
  double radius = 0.0;

  // rate
  std::string source = "classes";
  unsigned nu_min = 1;
  unsigned nu_max = 8;
  std::string samples;

  // repro
  int figure = 0;
  unsigned k_max = 6;  ///< Largest period for the cantor example.
  std::string example;
};

/// Parses argv into a RunConfig. Throws CLI::ParseError (including for --help).
RunConfig parse_args(int argc, const char* const* argv);

/// parse_args + run, reporting parse errors and --help on the given streams.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes one verb, writing the artifact to cfg.output or `out`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses "re,im" (or a single real).
cplx parse_complex(const std::string& text);

}  // namespace pgrowth::cli
