#include "malab/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "malab/errors.hpp"
#include "malab/families.hpp"

namespace malab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

double parse_double(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw ConfigError("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for " + key + ": '" + text + "'");
  }
}

long parse_long(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used != text.size()) throw ConfigError("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad integer value for " + key + ": '" + text + "'");
  }
}

}  // namespace

SeedSpec SeedSpec::parse(const std::string& text) {
  const std::vector<std::string> ts = tokens(text);
  if (ts.empty()) throw ConfigError("empty seed spec");
  SeedSpec spec;
  if (ts[0] == "zero" || ts[0] == "linear") {
    spec.kind = ts[0] == "zero" ? Kind::Zero : Kind::Linear;
    if (ts.size() != 1) {
      throw ConfigError("seed '" + ts[0] + "' takes no arguments");
    }
  } else if (ts[0] == "exp") {
    spec.kind = Kind::Exp;
    if (ts.size() != 2) throw ConfigError("seed 'exp' needs exactly one rate");
    spec.rate = parse_double("seed exp", ts[1]);
  } else if (ts[0] == "poly") {
    spec.kind = Kind::Poly;
    if (ts.size() < 2) {
      throw ConfigError("seed 'poly' needs at least one coefficient");
    }
    for (std::size_t i = 1; i < ts.size(); ++i) {
      spec.coeffs.push_back(parse_double("seed poly", ts[i]));
    }
  } else {
    throw ConfigError("unknown seed kind: '" + ts[0] + "'");
  }
  return spec;
}

std::string SeedSpec::describe() const {
  std::ostringstream out;
  out.precision(17);
  switch (kind) {
    case Kind::Zero:
      return "zero";
    case Kind::Linear:
      return "linear";
    case Kind::Exp:
      out << "exp " << rate;
      return out.str();
    case Kind::Poly:
      out << "poly";
      for (double c : coeffs) out << ' ' << c;
      return out.str();
  }
  throw ConfigError("corrupt seed spec");
}

BiSeries materialize(const SeedSpec& spec, int order, double scale) {
  switch (spec.kind) {
    case SeedSpec::Kind::Zero:
      return seed_zero(order);
    case SeedSpec::Kind::Linear:
      return seed_linear_over_R(scale, order);
    case SeedSpec::Kind::Exp:
      return seed_exp(Complex(spec.rate), order);
    case SeedSpec::Kind::Poly: {
      std::vector<Complex> cs(spec.coeffs.begin(), spec.coeffs.end());
      return seed_poly(cs, order);
    }
  }
  throw ConfigError("corrupt seed spec");
}

RunConfig default_config() {
  RunConfig cfg;
  cfg.seeds.h = SeedSpec::parse("poly 0 0.25");
  cfg.seeds.f = SeedSpec::parse("exp 0.5");
  cfg.seeds.b = SeedSpec::parse("zero");
  cfg.seeds.cylinder_f = SeedSpec::parse("linear");
  return cfg;
}

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> cmds = {
      "verify-flat", "verify-cylinder", "curvature", "radial",
      "donaldson",   "picard",          "appendix",  "all"};
  return cmds;
}

void apply_key(RunConfig& cfg, const std::string& key,
               const std::string& value) {
  NumericConfig& num = cfg.numeric;
  if (key == "command") {
    const auto& cmds = known_commands();
    if (std::find(cmds.begin(), cmds.end(), value) == cmds.end()) {
      throw ConfigError("unknown command: '" + value + "'");
    }
    cfg.command = value;
  } else if (key == "out") {
    cfg.out = value;
  } else if (key == "numeric.order") {
    const long v = parse_long(key, value);
    if (v < 4 || v > 128) throw ConfigError("numeric.order must be in [4, 128]");
    num.order = static_cast<int>(v);
  } else if (key == "numeric.radius") {
    num.radius = parse_double(key, value);
    if (!(num.radius > 0.0)) throw ConfigError("numeric.radius must be positive");
  } else if (key == "numeric.grid_h") {
    num.grid_h = parse_double(key, value);
    if (!(num.grid_h > 0.0) || !(num.grid_h < 0.5)) {
      throw ConfigError("numeric.grid_h must be in (0, 1/2)");
    }
  } else if (key == "numeric.tol") {
    num.tol = parse_double(key, value);
    if (!(num.tol > 0.0)) throw ConfigError("numeric.tol must be positive");
  } else if (key == "numeric.picard_tol") {
    num.picard_tol = parse_double(key, value);
    if (!(num.picard_tol > 0.0)) {
      throw ConfigError("numeric.picard_tol must be positive");
    }
  } else if (key == "numeric.samples") {
    const long v = parse_long(key, value);
    if (v < 1 || v > 100000) {
      throw ConfigError("numeric.samples must be in [1, 100000]");
    }
    num.samples = static_cast<int>(v);
  } else if (key == "numeric.max_iter") {
    const long v = parse_long(key, value);
    if (v < 1 || v > 100000) {
      throw ConfigError("numeric.max_iter must be in [1, 100000]");
    }
    num.max_iter = static_cast<int>(v);
  } else if (key == "numeric.rng_seed") {
    num.rng_seed = static_cast<std::uint64_t>(parse_long(key, value));
  } else if (key == "seeds.h") {
    cfg.seeds.h = SeedSpec::parse(value);
  } else if (key == "seeds.f") {
    cfg.seeds.f = SeedSpec::parse(value);
  } else if (key == "seeds.b") {
    cfg.seeds.b = SeedSpec::parse(value);
  } else if (key == "seeds.cylinder_f") {
    cfg.seeds.cylinder_f = SeedSpec::parse(value);
  } else if (key == "radial.entry") {
    cfg.radial_entry = value;
  } else if (key == "donaldson.seed") {
    cfg.donaldson_seed = value;
  } else if (key == "faults.b_wbar") {
    cfg.faults.b_wbar = parse_double(key, value);
  } else {
    throw ConfigError("unknown config key: '" + key + "'");
  }
}

RunConfig parse_config(std::istream& in) {
  RunConfig cfg = default_config();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected 'key = value'");
    }
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("line " + std::to_string(lineno) +
                        ": empty key or value");
    }
    apply_key(cfg, key, value);
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  return parse_config(in);
}

}  // namespace malab
