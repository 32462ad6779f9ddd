#pragma once

// JSON run reports: ordered keys, no timestamps, byte-reproducible for a
// fixed configuration.  Each command contributes a list of named checks;
// the report passes iff every check passes.

#include <json.hpp>
#include <string>
#include <vector>

#include "malab/config.hpp"
#include "malab/csv.hpp"

namespace malab {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// pass = |measured| <= tolerance
Check make_check(const std::string& name, double measured, double tolerance);
// pass = measured >= threshold (witness checks: the quantity must be LARGE)
Check make_witness(const std::string& name, double measured, double threshold);

Json to_json(const Check& c);

// Echo of the effective configuration relevant to reproducing the run.
Json config_echo(const RunConfig& cfg);

struct CommandReport {
  std::string command;
  std::string anchor;  // one-line description of what the command certifies
  std::vector<Check> checks;
  CsvTable table;      // optional sample table (empty header = none)

  bool pass() const;
  Json to_json(const RunConfig& cfg) const;
};

std::string render_report(const Json& report);  // dump with 2-space indent + \n
void write_text_file(const std::string& path, const std::string& content);

}  // namespace malab
