#include "arthrosim/figures.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "arthrosim/errors.hpp"
#include "arthrosim/units.hpp"

namespace arthro {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

FigureSpec make_spec(const std::string& id, const std::string& axis,
                     double start, double stop, int samples,
                     const std::string& description) {
  FigureSpec s;
  s.id = id;
  s.axis = axis;
  s.start = start;
  s.stop = stop;
  s.samples = samples;
  s.description = description;
  return s;
}

}  // namespace

std::vector<FigureSpec> builtin_manifest() {
  std::vector<FigureSpec> specs;

  FigureSpec hr = make_spec(
      "hr-dislocation", "delta_ls", 0.0, 0.0, 401,
      "external force vs collateral-ligament elongation, rim-angle family");
  hr.theta_s_deg = {10.0, 15.0, 20.0, 25.0, 30.0};
  specs.push_back(hr);

  specs.push_back(make_spec("tfcc", "theta22", -60.0, 51.5, 224,
                            "distal radioulnar ligament elongations vs "
                            "forearm rotation"));
  specs.push_back(make_spec("iom-strain", "deflection", -8.0, 8.0, 161,
                            "membrane bundle strains vs lateral linkage "
                            "deflection"));
  specs.push_back(make_spec("mcl-strain", "theta21", 0.0, 140.25, 562,
                            "collateral band strains vs elbow flexion"));
  specs.push_back(make_spec("flexion-torque", "theta21", 0.0, 140.25, 562,
                            "flexor torque envelopes vs elbow flexion"));

  FigureSpec fa = make_spec(
      "forearm-torque", "theta22_fs", 0.0, 111.5, 224,
      "pronation/supination torque envelopes vs forearm rotation from full "
      "supination");
  fa.theta21_deg = 90.0;
  specs.push_back(fa);

  return specs;
}

std::vector<FigureSpec> load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open figure manifest: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("figures") || !j["figures"].is_array()) {
    throw ValidationError(path + ": manifest root must hold a \"figures\" array");
  }
  std::vector<FigureSpec> specs;
  for (const auto& f : j["figures"]) {
    if (!f.is_object()) throw ValidationError(path + ": figure entry must be an object");
    FigureSpec s;
    for (auto it = f.begin(); it != f.end(); ++it) {
      const std::string& k = it.key();
      if (k != "id" && k != "axis" && k != "start" && k != "stop" &&
          k != "samples" && k != "theta_s_deg" && k != "theta21_deg" &&
          k != "description") {
        throw ValidationError(path + ": unknown manifest key: " + k);
      }
    }
    if (!f.contains("id") || !f.contains("axis") || !f.contains("samples")) {
      throw ValidationError(path + ": figure entry needs id, axis, samples");
    }
    s.id = f.at("id").get<std::string>();
    s.axis = f.at("axis").get<std::string>();
    if (f.contains("start")) s.start = f.at("start").get<double>();
    if (f.contains("stop")) s.stop = f.at("stop").get<double>();
    s.samples = f.at("samples").get<int>();
    if (f.contains("theta_s_deg")) {
      s.theta_s_deg = f.at("theta_s_deg").get<std::vector<double>>();
    }
    if (f.contains("theta21_deg")) s.theta21_deg = f.at("theta21_deg").get<double>();
    if (f.contains("description")) s.description = f.at("description").get<std::string>();
    if (s.samples < 1) throw ValidationError(path + ": samples must be >= 1 for " + s.id);
    specs.push_back(s);
  }
  return specs;
}

const FigureSpec& find_figure(const std::vector<FigureSpec>& specs,
                              const std::string& id) {
  for (const auto& s : specs) {
    if (s.id == id) return s;
  }
  std::string known;
  for (const auto& s : specs) {
    if (!known.empty()) known += ", ";
    known += s.id;
  }
  throw ValidationError("unknown figure id: " + id + " (known: " + known + ")");
}

void parallel_map(int n, int threads, const std::function<void(int)>& fn) {
  threads = std::max(1, std::min(threads, n));
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::mutex err_mutex;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (int i = t; i < n; i += threads) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
  if (n < 1) throw ValidationError("grid needs at least 1 sample");
  if (n == 1 || lo == hi) return {lo};  // degenerate range: single posture
  if (!(lo < hi)) throw ValidationError("grid range must be increasing");
  std::vector<double> xs(static_cast<std::size_t>(n));
  const double span = hi - lo;
  for (int i = 0; i < n; ++i) {
    xs[static_cast<std::size_t>(i)] =
        lo + span * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  xs.back() = lo + span;
  return xs;
}

namespace {

// One output column: fn maps the abscissa (file units) to the series value.
struct SeriesDef {
  std::string name;
  std::string unit;
  std::function<double(double)> fn;
};

SweepResult evaluate_sweep(const std::string& module, const std::string& hash,
                           SweepColumn abscissa, std::vector<SeriesDef> defs,
                           int threads, std::vector<std::string> notes = {}) {
  SweepResult r;
  r.module = module;
  r.config_hash = hash;
  r.abscissa = std::move(abscissa);
  r.notes = std::move(notes);
  const int n = static_cast<int>(r.abscissa.values.size());
  r.series.resize(defs.size());
  for (std::size_t s = 0; s < defs.size(); ++s) {
    r.series[s].name = defs[s].name;
    r.series[s].unit = defs[s].unit;
    r.series[s].values.assign(static_cast<std::size_t>(n), 0.0);
  }
  parallel_map(n, threads, [&](int i) {
    const double x = r.abscissa.values[static_cast<std::size_t>(i)];
    for (std::size_t s = 0; s < defs.size(); ++s) {
      r.series[s].values[static_cast<std::size_t>(i)] = defs[s].fn(x);
    }
  });
  r.validate();
  return r;
}

std::string deg_label(double deg) {
  // Compact label for series names: 10 -> "10", 12.5 -> "12p5".
  std::string s = format_value(deg);
  for (auto& ch : s) {
    if (ch == '.') ch = 'p';
    if (ch == '-') ch = 'm';
  }
  return s;
}

}  // namespace

SweepResult hr_profile_sweep(const Model& m, const std::string& hash, int n,
                             int threads) {
  const HumeroradialGeometry& g = m.humeroradial;
  const double edge_mm = m2mm(elongation_limit(g));
  const DislocationThreshold th = dislocation_threshold(g);
  SweepColumn ax{"delta_ls_mm", "mm", uniform_grid(0.0, edge_mm, n)};
  std::vector<SeriesDef> defs;
  defs.push_back({"f_e_n", "n",
                  [&g](double x) { return external_force(g, mm2m(x)); }});
  defs.push_back({"theta_s1_deg", "deg", [&g](double x) {
                    return rad2deg(deflection_from_elongation(g, mm2m(x)).theta_s1);
                  }});
  std::vector<std::string> notes = {
      "delta_lp_mm: " + format_value(m2mm(th.delta_lp)),
      "f_peak_n: " + format_value(th.f_peak),
  };
  return evaluate_sweep("humeroradial", hash, std::move(ax), std::move(defs),
                        threads, std::move(notes));
}

SweepResult hr_family_sweep(const Model& m, const std::string& hash,
                            const std::vector<double>& theta_s_deg, int n,
                            int threads) {
  if (theta_s_deg.empty()) {
    throw ValidationError("rim-angle family needs at least one angle");
  }
  const HumeroradialGeometry& base = m.humeroradial;
  std::vector<HumeroradialGeometry> geoms;
  std::vector<double> edges_mm;
  double max_edge = 0.0;
  for (double ts : theta_s_deg) {
    HumeroradialGeometry g = HumeroradialGeometry::from_rest_pose(
        base.l_a, base.r, base.gamma, deg2rad(ts), base.k, base.l_e);
    geoms.push_back(g);
    const double e = m2mm(elongation_limit(g));
    edges_mm.push_back(e);
    max_edge = std::max(max_edge, e);
  }
  SweepColumn ax{"delta_ls_mm", "mm", uniform_grid(0.0, max_edge, n)};
  std::vector<SeriesDef> defs;
  std::vector<std::string> notes;
  for (std::size_t c = 0; c < geoms.size(); ++c) {
    const HumeroradialGeometry g = geoms[c];
    const double edge = edges_mm[c];
    defs.push_back({"f_e_n_theta_s_" + deg_label(theta_s_deg[c]), "n",
                    [g, edge](double x) {
                      if (x > edge) return kNaN;
                      return external_force(g, mm2m(x));
                    }});
    const DislocationThreshold th = dislocation_threshold(geoms[c]);
    notes.push_back("theta_s_" + deg_label(theta_s_deg[c]) +
                    ": l_s0_mm=" + format_value(m2mm(geoms[c].l_s0)) +
                    " domain_mm=" + format_value(edge) +
                    " delta_lp_mm=" + format_value(m2mm(th.delta_lp)) +
                    " f_peak_n=" + format_value(th.f_peak));
  }
  return evaluate_sweep("humeroradial", hash, std::move(ax), std::move(defs),
                        threads, std::move(notes));
}

SweepResult tfcc_sweep(const Model& m, const std::string& hash, double lo_deg,
                       double hi_deg, int n, int threads) {
  const TfccGeometry& g = m.tfcc;
  SweepColumn ax{"theta22_deg", "deg", uniform_grid(lo_deg, hi_deg, n)};
  std::vector<SeriesDef> defs;
  defs.push_back({"drul_mm", "mm", [&g](double x) {
                    return m2mm(drul_elongation(g, deg2rad(x)));
                  }});
  defs.push_back({"prul_mm", "mm", [&g](double x) {
                    return m2mm(prul_elongation(g, deg2rad(x)));
                  }});
  std::vector<std::string> notes = {
      "theta_ecu_deg: " + format_value(rad2deg(g.theta_ecu)),
      "tension_threshold_mm: " + format_value(m2mm(g.tension_threshold)),
  };
  return evaluate_sweep("tfcc", hash, std::move(ax), std::move(defs), threads,
                        std::move(notes));
}

SweepResult iom_strain_sweep(const Model& m, const std::string& hash,
                             double lo_deg, double hi_deg, int n, int threads) {
  SweepColumn ax{"deflection_deg", "deg", uniform_grid(lo_deg, hi_deg, n)};
  std::vector<SeriesDef> defs;
  for (const IomBundle& b : m.bundles) {
    const std::string base = "bundle_" + std::to_string(b.id);
    const ForearmLinkage& link = m.linkage;
    defs.push_back({base + "_raw", "dimensionless", [&link, &b](double x) {
                      return bundle_strains(link, b, deg2rad(x)).raw;
                    }});
    defs.push_back({base + "_taut", "dimensionless", [&link, &b](double x) {
                      return bundle_strains(link, b, deg2rad(x)).taut;
                    }});
  }
  std::vector<std::string> notes = {
      "deflection: theta_d minus rest angle; positive = leftward push",
  };
  for (const IomBundle& b : m.bundles) {
    notes.push_back("bundle_" + std::to_string(b.id) +
                    ": direction=" + to_string(b.direction) +
                    " rest_deviation=" +
                    format_value(rest_length_deviation(m.linkage, b)));
  }
  return evaluate_sweep("iom", hash, std::move(ax), std::move(defs), threads,
                        std::move(notes));
}

SweepResult iom_equilibrium_sweep(const Model& m, const std::string& hash,
                                  double max_force_n, double lever_m,
                                  const std::vector<int>& disabled_ids, int n,
                                  int threads) {
  if (!(max_force_n > 0.0)) {
    throw ValidationError("equilibrium sweep needs a positive maximum force");
  }
  SweepColumn ax{"force_n", "n", uniform_grid(0.0, max_force_n, n)};
  const ForearmLinkage& link = m.linkage;
  const std::vector<IomBundle>& bundles = m.bundles;
  std::vector<SeriesDef> defs;
  defs.push_back({"deflection_left_deg", "deg",
                  [&link, &bundles, lever_m, &disabled_ids](double f) {
                    return rad2deg(lateral_equilibrium(
                        link, bundles, f, ForceSide::left, lever_m,
                        disabled_ids));
                  }});
  defs.push_back({"deflection_right_deg", "deg",
                  [&link, &bundles, lever_m, &disabled_ids](double f) {
                    return rad2deg(lateral_equilibrium(
                        link, bundles, f, ForceSide::right, lever_m,
                        disabled_ids));
                  }});
  std::vector<std::string> notes = {
      "lever_mm: " + format_value(m2mm(lever_m)),
  };
  if (!disabled_ids.empty()) {
    std::string line = "disabled_bundles:";
    std::vector<int> ids = disabled_ids;
    std::sort(ids.begin(), ids.end());
    for (int id : ids) line += " " + std::to_string(id);
    notes.push_back(line);
  }
  return evaluate_sweep("iom", hash, std::move(ax), std::move(defs), threads,
                        std::move(notes));
}

SweepResult mcl_sweep(const Model& m, const std::string& hash, double lo_deg,
                      double hi_deg, int n, int threads) {
  const MclGeometry& g = m.mcl;
  SweepColumn ax{"theta21_deg", "deg", uniform_grid(lo_deg, hi_deg, n)};
  std::vector<SeriesDef> defs;
  defs.push_back({"eps_anterior", "dimensionless", [&g](double x) {
                    return std::max(0.0, mcl_strains(g, deg2rad(x)).eps_a);
                  }});
  defs.push_back({"eps_posterior", "dimensionless", [&g](double x) {
                    return std::max(0.0, mcl_strains(g, deg2rad(x)).eps_p);
                  }});
  defs.push_back({"eps_anterior_raw", "dimensionless", [&g](double x) {
                    return mcl_strains(g, deg2rad(x)).eps_a;
                  }});
  defs.push_back({"eps_posterior_raw", "dimensionless", [&g](double x) {
                    return mcl_strains(g, deg2rad(x)).eps_p;
                  }});
  std::vector<std::string> notes = {
      std::string("strain_mode: ") + to_string(g.mode),
  };
  return evaluate_sweep("mcl", hash, std::move(ax), std::move(defs), threads,
                        std::move(notes));
}

SweepResult flexion_sweep(const Model& m, const std::string& hash,
                          double lo_deg, double hi_deg, int n, int threads) {
  const ElbowActuation& a = m.elbow;
  SweepColumn ax{"theta21_deg", "deg", uniform_grid(lo_deg, hi_deg, n)};
  std::vector<SeriesDef> defs;
  defs.push_back({"tau_brachialis_nm", "n_m", [&a](double x) {
                    return flexion_torque(a.brachialis, deg2rad(x));
                  }});
  defs.push_back({"tau_biceps_nm", "n_m", [&a](double x) {
                    return flexion_torque(a.biceps, deg2rad(x));
                  }});
  defs.push_back({"tau_combined_nm", "n_m", [&a](double x) {
                    return combined_flexion_torque(a, deg2rad(x));
                  }});
  std::vector<std::string> notes = {
      "gamma_brachialis_deg: " + format_value(rad2deg(a.brachialis.gamma())),
      "gamma_biceps_deg: " + format_value(rad2deg(a.biceps.gamma())),
  };
  return evaluate_sweep("actuation", hash, std::move(ax), std::move(defs),
                        threads, std::move(notes));
}

SweepResult extension_sweep(const Model& m, const std::string& hash,
                            double lo_deg, double hi_deg, int n, int threads) {
  const ElbowActuation& a = m.elbow;
  SweepColumn ax{"theta21_deg", "deg", uniform_grid(lo_deg, hi_deg, n)};
  std::vector<SeriesDef> defs;
  defs.push_back({"tau_extension_nm", "n_m",
                  [&a](double) { return extension_torque(a); }});
  return evaluate_sweep("actuation", hash, std::move(ax), std::move(defs),
                        threads);
}

SweepResult forearm_torque_sweep(const Model& m, const std::string& hash,
                                 double lo_fs_deg, double hi_fs_deg,
                                 double theta21_deg, int n, int threads) {
  const PronationGeometry& p = m.pronation;
  const SupinationGeometry& s = m.supination;
  const double theta21 = deg2rad(theta21_deg);
  SweepColumn ax{"theta22_fs_deg", "deg", uniform_grid(lo_fs_deg, hi_fs_deg, n)};
  std::vector<SeriesDef> defs;
  defs.push_back({"tau_pronation_nm", "n_m", [&p](double x) {
                    return pronation_torque(p, deg2rad(x));
                  }});
  defs.push_back({"tau_supination_s1_nm", "n_m", [&s](double x) {
                    return supination_torque_s1(s, deg2rad(x));
                  }});
  defs.push_back({"tau_supination_total_nm", "n_m", [&s, theta21](double x) {
                    return supination_torque(s, deg2rad(x), theta21);
                  }});
  std::vector<std::string> notes = {
      "axis: forearm rotation from full supination",
      "theta21_deg: " + format_value(theta21_deg),
  };
  return evaluate_sweep("actuation", hash, std::move(ax), std::move(defs),
                        threads, std::move(notes));
}

SweepResult run_figure(const Model& m, const std::string& hash,
                       const FigureSpec& spec, int threads) {
  if (spec.id == "hr-dislocation" || spec.axis == "delta_ls") {
    return hr_family_sweep(m, hash, spec.theta_s_deg, spec.samples, threads);
  }
  if (spec.axis == "theta22") {
    return tfcc_sweep(m, hash, spec.start, spec.stop, spec.samples, threads);
  }
  if (spec.axis == "deflection") {
    return iom_strain_sweep(m, hash, spec.start, spec.stop, spec.samples,
                            threads);
  }
  if (spec.axis == "theta21" && spec.id == "mcl-strain") {
    return mcl_sweep(m, hash, spec.start, spec.stop, spec.samples, threads);
  }
  if (spec.axis == "theta21" && spec.id == "flexion-torque") {
    return flexion_sweep(m, hash, spec.start, spec.stop, spec.samples, threads);
  }
  if (spec.axis == "theta22_fs") {
    return forearm_torque_sweep(m, hash, spec.start, spec.stop,
                                spec.theta21_deg, spec.samples, threads);
  }
  throw ValidationError("figure " + spec.id + " has unsupported axis " +
                        spec.axis);
}

}  // namespace arthro
