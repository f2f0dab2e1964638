#include "arthrosim/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "arthrosim/errors.hpp"

namespace arthro {

void SweepResult::validate() const {
  const size_t n = abscissa.values.size();
  if (n == 0) throw NumericError("sweep '" + module + "': empty abscissa");
  for (const auto& col : series) {
    if (col.values.size() != n) {
      throw NumericError("sweep '" + module + "': column '" + col.name + "' has " +
                         std::to_string(col.values.size()) + " rows, abscissa has " +
                         std::to_string(n));
    }
  }
  for (size_t i = 1; i < n; ++i) {
    if (!(abscissa.values[i] > abscissa.values[i - 1])) {
      throw NumericError("sweep '" + module + "': abscissa not strictly increasing at row " +
                         std::to_string(i));
    }
  }
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

namespace {

// RFC-4180 quoting; our column names and numbers never need it, but comments
// configured as notes might contain commas when echoed into future columns.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

void write_csv(const SweepResult& sweep, std::ostream& os) {
  sweep.validate();
  os << "# module: " << sweep.module << "\n";
  os << "# config_fnv1a: " << sweep.config_hash << "\n";
  for (const auto& note : sweep.notes) os << "# " << note << "\n";
  os << "# units: " << sweep.abscissa.unit;
  for (const auto& col : sweep.series) os << "," << col.unit;
  os << "\n";
  os << csv_field(sweep.abscissa.name);
  for (const auto& col : sweep.series) os << "," << csv_field(col.name);
  os << "\n";
  for (size_t i = 0; i < sweep.abscissa.values.size(); ++i) {
    os << format_value(sweep.abscissa.values[i]);
    for (const auto& col : sweep.series) {
      os << ",";
      if (!std::isnan(col.values[i])) os << format_value(col.values[i]);
    }
    os << "\n";
  }
}

void write_csv_file(const SweepResult& sweep, const std::string& path) {
  std::ofstream os(path, std::ios::binary);  // binary: keep LF on every platform
  if (!os) throw ValidationError("cannot open output file: " + path);
  write_csv(sweep, os);
  if (!os) throw ValidationError("failed writing output file: " + path);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(field);
      field.clear();
    } else {
      field += c;
    }
  }
  out.push_back(field);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  size_t b = s.find_last_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

}  // namespace

CsvTable read_csv_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ValidationError("cannot open csv file: " + path);
  CsvTable table;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = trim(line.substr(1));
      table.comments.push_back(body);
      if (body.rfind("units:", 0) == 0) {
        for (const auto& u : split_csv_line(trim(body.substr(6)))) {
          table.column_units.push_back(trim(u));
        }
      }
      continue;
    }
    if (!have_header) {
      for (const auto& name : split_csv_line(line)) {
        table.column_names.push_back(trim(name));
      }
      table.columns.assign(table.column_names.size(), {});
      have_header = true;
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != table.column_names.size()) {
      throw ValidationError("csv row with " + std::to_string(fields.size()) +
                            " fields, expected " + std::to_string(table.column_names.size()) +
                            " in " + path);
    }
    for (size_t c = 0; c < fields.size(); ++c) {
      const std::string f = trim(fields[c]);
      if (f.empty()) {
        table.columns[c].push_back(std::nan(""));
        continue;
      }
      size_t pos = 0;
      double v = 0.0;
      try {
        v = std::stod(f, &pos);
      } catch (const std::exception&) {
        throw ValidationError("non-numeric csv field '" + f + "' in " + path);
      }
      if (pos != f.size()) throw ValidationError("non-numeric csv field '" + f + "' in " + path);
      table.columns[c].push_back(v);
    }
  }
  if (!have_header) throw ValidationError("csv file has no header row: " + path);
  return table;
}

std::string fnv1a_hex(const std::string& bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace arthro
