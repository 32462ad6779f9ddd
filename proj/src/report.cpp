#include "malab/report.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "malab/errors.hpp"

namespace malab {

Check make_check(const std::string& name, double measured, double tolerance) {
  Check c;
  c.name = name;
  c.measured = measured;
  c.tolerance = tolerance;
  c.pass = std::abs(measured) <= tolerance;
  return c;
}

Check make_witness(const std::string& name, double measured, double threshold) {
  Check c;
  c.name = name;
  c.measured = measured;
  c.tolerance = threshold;
  c.pass = measured >= threshold;
  return c;
}

Json to_json(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["measured"] = c.measured;
  j["tolerance"] = c.tolerance;
  j["pass"] = c.pass;
  return j;
}

Json config_echo(const RunConfig& cfg) {
  Json j;
  j["numeric"] = {{"order", cfg.numeric.order},
                  {"radius", cfg.numeric.radius},
                  {"grid_h", cfg.numeric.grid_h},
                  {"tol", cfg.numeric.tol},
                  {"picard_tol", cfg.numeric.picard_tol},
                  {"samples", cfg.numeric.samples},
                  {"max_iter", cfg.numeric.max_iter},
                  {"rng_seed", cfg.numeric.rng_seed}};
  j["seeds"] = {{"h", cfg.seeds.h.describe()},
                {"f", cfg.seeds.f.describe()},
                {"b", cfg.seeds.b.describe()},
                {"cylinder_f", cfg.seeds.cylinder_f.describe()}};
  j["radial"] = {{"entry", cfg.radial_entry}};
  j["donaldson"] = {{"seed", cfg.donaldson_seed}};
  j["faults"] = {{"b_wbar", cfg.faults.b_wbar}};
  return j;
}

bool CommandReport::pass() const {
  for (const Check& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

Json CommandReport::to_json(const RunConfig& cfg) const {
  Json j;
  j["tool"] = "malab";
  j["command"] = command;
  j["anchor"] = anchor;
  j["config"] = config_echo(cfg);
  Json arr = Json::array();
  for (const Check& c : checks) arr.push_back(malab::to_json(c));
  j["checks"] = arr;
  j["pass"] = pass();
  return j;
}

std::string render_report(const Json& report) { return report.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& content) {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(parent, ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  out << content;
  if (!out) throw IoError("failed writing output file: " + path);
}

}  // namespace malab
