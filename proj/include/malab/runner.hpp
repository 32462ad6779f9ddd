#pragma once

// Command dispatch for the driver: each command builds objects from the
// library modules, measures defects, and reports named checks.

#include <iosfwd>
#include <vector>

#include "malab/config.hpp"
#include "malab/report.hpp"

namespace malab {

// cfg.command must be a single command (not "all").
CommandReport run_command(const RunConfig& cfg);

// Every command, in a fixed order, sharing cfg.
std::vector<CommandReport> run_all(const RunConfig& cfg);

// Executes cfg.command (possibly "all"), prints the JSON report to console,
// writes report/table files when cfg.out is set.  Returns 0 when every
// check passes, 1 otherwise.
int run_cli(const RunConfig& cfg, std::ostream& console);

}  // namespace malab
