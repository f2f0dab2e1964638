#include "arthrosim/compare.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "arthrosim/errors.hpp"
#include "arthrosim/units.hpp"

namespace arthro {

namespace {

// Trims ASCII whitespace from both ends.
std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::optional<std::string> comment_value(const std::vector<std::string>& comments,
                                         const std::string& key) {
  const std::string prefix = key + ":";
  for (const auto& c : comments) {
    const std::string t = trim(c);
    if (t.rfind(prefix, 0) == 0) return trim(t.substr(prefix.size()));
  }
  return std::nullopt;
}

double parse_number(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw ValidationError(what + " is not a number: " + s);
  }
  if (pos != s.size()) throw ValidationError(what + " is not a number: " + s);
  return v;
}

}  // namespace

ExperimentRecord read_experiment_csv(const std::string& path,
                                     const std::string& value_column) {
  const CsvTable t = read_csv_file(path);
  if (t.column_names.size() < 2) {
    throw ValidationError(path + ": experiment needs an abscissa column and a value column");
  }
  std::size_t vcol = 1;
  if (!value_column.empty()) {
    const auto it = std::find(t.column_names.begin(), t.column_names.end(), value_column);
    if (it == t.column_names.end()) {
      throw ValidationError(path + ": no column named " + value_column);
    }
    vcol = static_cast<std::size_t>(it - t.column_names.begin());
    if (vcol == 0) throw ValidationError(path + ": value column cannot be the abscissa");
  } else if (t.column_names.size() != 2) {
    throw ValidationError(path + ": multiple value columns; pick one by name");
  }

  ExperimentRecord r;
  r.source = comment_value(t.comments, "source").value_or(path);
  r.abscissa_name = t.column_names[0];
  r.value_name = t.column_names[vcol];
  r.abscissa_unit = t.column_units.size() > 0 ? t.column_units[0] : "";
  r.value_unit = t.column_units.size() > vcol ? t.column_units[vcol] : "";
  r.abscissa = t.columns[0];
  r.values = t.columns[vcol];
  if (const auto f = comment_value(t.comments, "applied_force_n")) {
    r.applied_force_n = parse_number(*f, path + ": applied_force_n");
  }
  if (r.abscissa.empty()) throw ValidationError(path + ": experiment has no rows");
  for (std::size_t i = 0; i < r.abscissa.size(); ++i) {
    if (std::isnan(r.abscissa[i]) || std::isnan(r.values[i])) {
      throw ValidationError(path + ": empty cell in row " + std::to_string(i + 1));
    }
  }
  return r;
}

double convert_unit(double value, const std::string& from, const std::string& to) {
  if (from == to) return value;
  if (from == "deg" && to == "rad") return deg2rad(value);
  if (from == "rad" && to == "deg") return rad2deg(value);
  if (from == "mm" && to == "m") return mm2m(value);
  if (from == "m" && to == "mm") return m2mm(value);
  if (from == "percent" && to == "dimensionless") return value / 100.0;
  if (from == "dimensionless" && to == "percent") return value * 100.0;
  throw ValidationError("cannot convert unit \"" + from + "\" to \"" + to + "\"");
}

ComparisonReport compare_series(const SweepResult& model,
                                const std::string& series_name,
                                const ExperimentRecord& experiment,
                                double tolerance) {
  if (!(tolerance >= 0.0)) throw ValidationError("tolerance must be non-negative");
  model.validate();
  const SweepColumn* series = nullptr;
  for (const auto& s : model.series) {
    if (s.name == series_name) {
      series = &s;
      break;
    }
  }
  if (series == nullptr) {
    std::string known;
    for (const auto& s : model.series) {
      if (!known.empty()) known += ", ";
      known += s.name;
    }
    throw ValidationError("no series named " + series_name + " (known: " + known + ")");
  }

  const std::vector<double>& ax = model.abscissa.values;
  const std::size_t n_exp = experiment.abscissa.size();
  ComparisonReport rep;
  rep.series_name = series_name;
  rep.source = experiment.source;
  rep.tolerance = tolerance;
  rep.n_points = static_cast<int>(n_exp);

  const double span = ax.back() - ax.front();
  const double slack = span * 1e-12;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < n_exp; ++i) {
    const double x = convert_unit(experiment.abscissa[i], experiment.abscissa_unit,
                                  model.abscissa.unit);
    const double y_exp = convert_unit(experiment.values[i], experiment.value_unit,
                                      series->unit);
    if (x < ax.front() - slack || x > ax.back() + slack) {
      throw ValidationError("experiment abscissa " + format_value(x) +
                            " outside model span [" + format_value(ax.front()) +
                            ", " + format_value(ax.back()) + "]");
    }
    double y_model = 0.0;
    if (ax.size() == 1) {
      y_model = series->values[0];
    } else {
      std::size_t hi = static_cast<std::size_t>(
          std::upper_bound(ax.begin(), ax.end(), x) - ax.begin());
      hi = std::min(std::max<std::size_t>(hi, 1), ax.size() - 1);
      const std::size_t lo = hi - 1;
      const double t =
          std::clamp((x - ax[lo]) / (ax[hi] - ax[lo]), 0.0, 1.0);
      const double y0 = series->values[lo];
      const double y1 = series->values[hi];
      if (std::isnan(y0) || std::isnan(y1)) {
        throw ValidationError("model series " + series_name +
                              " is undefined near abscissa " + format_value(x));
      }
      y_model = y0 + t * (y1 - y0);
    }
    const double res = y_model - y_exp;
    rep.abscissa.push_back(x);
    rep.model.push_back(y_model);
    rep.experiment.push_back(y_exp);
    rep.residuals.push_back(res);
    sum_sq += res * res;
    rep.max_abs_dev = std::max(rep.max_abs_dev, std::fabs(res));
  }
  rep.rmse = std::sqrt(sum_sq / static_cast<double>(n_exp));
  rep.pass = rep.max_abs_dev <= tolerance;
  return rep;
}

std::string format_report(const ComparisonReport& r) {
  std::ostringstream os;
  os << "comparison: " << r.series_name << " vs " << r.source << "\n";
  os << "n_points: " << r.n_points << "\n";
  os << "rmse: " << format_value(r.rmse) << "\n";
  os << "max_abs_dev: " << format_value(r.max_abs_dev) << "\n";
  os << "tolerance: " << format_value(r.tolerance) << "\n";
  os << "result: " << (r.pass ? "PASS" : "FAIL") << "\n";
  for (std::size_t i = 0; i < r.residuals.size(); ++i) {
    os << "point " << i << ": x=" << format_value(r.abscissa[i])
       << " model=" << format_value(r.model[i])
       << " experiment=" << format_value(r.experiment[i])
       << " residual=" << format_value(r.residuals[i]) << "\n";
  }
  return os.str();
}

}  // namespace arthro
