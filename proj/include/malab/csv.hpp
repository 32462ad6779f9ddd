#pragma once

// Minimal numeric CSV emitter for sample tables; values are printed with
// %.17g so that doubles round-trip exactly.

#include <string>
#include <vector>

namespace malab {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::string format_g17(double v);
std::string csv_to_string(const CsvTable& table);        // throws on ragged rows
void write_csv(const CsvTable& table, const std::string& path);  // IoError

}  // namespace malab
