#pragma once

// Run configuration for the command-line driver: a flat `key = value` file
// with dotted keys, overridable from the command line.  Unknown keys and
// malformed values throw ConfigError.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "malab/series.hpp"

namespace malab {

// Holomorphic seed grammar: "zero" | "linear" | "exp <rate>" |
// "poly <c0> <c1> ...".  linear materializes as w / scale.
struct SeedSpec {
  enum class Kind { Zero, Linear, Exp, Poly };
  Kind kind = Kind::Zero;
  double rate = 0.0;
  std::vector<double> coeffs;

  static SeedSpec parse(const std::string& text);
  std::string describe() const;  // round-trips through parse
};

BiSeries materialize(const SeedSpec& spec, int order, double scale);

struct NumericConfig {
  int order = 24;
  double radius = 1.0;        // model disc radius R
  double grid_h = 0.0;        // lattice spacing; 0 = command default
  double tol = 1e-9;          // symbolic / sampled defect budget
  double picard_tol = 1e-13;  // fixed-point stop threshold
  int samples = 25;
  int max_iter = 200;
  std::uint64_t rng_seed = 20260815;
};

struct SeedConfig {
  SeedSpec h;           // log-coefficient seed of the entire family
  SeedSpec f;           // fiber seed of the entire family
  SeedSpec b;           // holomorphic passthrough
  SeedSpec cylinder_f;  // fiber seed of the disc family
};

struct FaultConfig {
  double b_wbar = 0.0;  // additive wbar-slope injected into b (negative control)
};

struct RunConfig {
  std::string command = "all";
  std::string out;  // report path; empty = stdout only
  NumericConfig numeric;
  SeedConfig seeds;
  std::string radial_entry = "all";
  std::string donaldson_seed = "const-2";
  FaultConfig faults;
};

RunConfig default_config();
const std::vector<std::string>& known_commands();

// One `key = value` per line; '#' starts a comment.
RunConfig parse_config(std::istream& in);
RunConfig parse_config_file(const std::string& path);  // throws IoError
void apply_key(RunConfig& cfg, const std::string& key, const std::string& value);

}  // namespace malab
