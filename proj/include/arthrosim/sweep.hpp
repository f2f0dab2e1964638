#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace arthro {

struct SweepColumn {
  std::string name;  // lower_snake_case, unit suffix where meaningful (theta22_deg)
  std::string unit;  // deg | mm | m | n | n_m | dimensionless | percent
  std::vector<double> values;  // NaN = series not defined at that abscissa
};

// One model sweep: a strictly monotone abscissa plus one or more series,
// carrying provenance (module name + config hash) into the CSV output.
struct SweepResult {
  std::string module;       // provenance: producing module
  std::string config_hash;  // provenance: fnv1a64 of the canonical config text
  SweepColumn abscissa;
  std::vector<SweepColumn> series;
  std::vector<std::string> notes;  // extra comment lines (frames, summaries)

  // Equal column lengths and strictly monotone abscissa; throws NumericError.
  void validate() const;
};

// CSV layout: '#' comment lines (provenance, units, notes), then an RFC-4180
// header row and data rows, LF line endings, 9 significant digits, NaN cells
// emitted empty. Byte-deterministic for identical inputs.
void write_csv(const SweepResult& sweep, std::ostream& os);
void write_csv_file(const SweepResult& sweep, const std::string& path);

// Reads the same dialect back (comments preserved as notes; units recovered
// from the '# units:' line). Used by the comparison harness.
struct CsvTable {
  std::vector<std::string> column_names;
  std::vector<std::string> column_units;
  std::vector<std::vector<double>> columns;  // column-major, NaN for empty cells
  std::vector<std::string> comments;
};
CsvTable read_csv_file(const std::string& path);

// Formats one value exactly as the CSV writer does (9 significant digits).
std::string format_value(double v);

// FNV-1a 64-bit over bytes, rendered as 16 hex digits; stable provenance hash.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace arthro
