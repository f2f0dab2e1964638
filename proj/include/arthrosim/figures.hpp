#pragma once

#include <functional>
#include <string>
#include <vector>

#include "arthrosim/config.hpp"
#include "arthrosim/sweep.hpp"

namespace arthro {

// One canonical, reproducible figure: the sweep axis, range, and sampling are
// data (manifest-driven), not code.  Ranges/lengths are in file units
// (degrees, mm).
struct FigureSpec {
  std::string id;
  std::string axis;    // delta_ls | theta22 | deflection | theta21 | theta22_fs
  double start = 0.0;  // ignored for axis = delta_ls (domain is geometric)
  double stop = 0.0;
  int samples = 0;
  std::vector<double> theta_s_deg;  // rim-angle curve family (delta_ls axis)
  double theta21_deg = 90.0;        // fixed elbow angle (theta22_fs axis)
  std::string description;
};

// Compiled-in manifest; data/figure_manifest.json carries identical entries
// so the canonical ranges stay inspectable and overridable as data.
std::vector<FigureSpec> builtin_manifest();
std::vector<FigureSpec> load_manifest(const std::string& path);
const FigureSpec& find_figure(const std::vector<FigureSpec>& specs,
                              const std::string& id);

// Runs fn(0..n-1) on `threads` workers (strided); each index writes only its
// own slot, so results never depend on scheduling.  Worker exceptions are
// rethrown on the calling thread.
void parallel_map(int n, int threads, const std::function<void(int)>& fn);

// lo + (hi-lo)*i/(n-1): endpoints exact, decimal-friendly interior points.
std::vector<double> uniform_grid(double lo, double hi, int n);

// Sweep builders (CSV-unit in/out).  `hash` is the config provenance hash.
SweepResult hr_profile_sweep(const Model& m, const std::string& hash, int n,
                             int threads);
SweepResult hr_family_sweep(const Model& m, const std::string& hash,
                            const std::vector<double>& theta_s_deg, int n,
                            int threads);
SweepResult tfcc_sweep(const Model& m, const std::string& hash, double lo_deg,
                       double hi_deg, int n, int threads);
SweepResult iom_strain_sweep(const Model& m, const std::string& hash,
                             double lo_deg, double hi_deg, int n, int threads);
SweepResult iom_equilibrium_sweep(const Model& m, const std::string& hash,
                                  double max_force_n, double lever_m,
                                  const std::vector<int>& disabled_ids, int n,
                                  int threads);
SweepResult mcl_sweep(const Model& m, const std::string& hash, double lo_deg,
                      double hi_deg, int n, int threads);
SweepResult flexion_sweep(const Model& m, const std::string& hash,
                          double lo_deg, double hi_deg, int n, int threads);
SweepResult extension_sweep(const Model& m, const std::string& hash,
                            double lo_deg, double hi_deg, int n, int threads);
// Forearm torque on the full-supination axis; theta21_deg fixes the elbow
// angle entering the biceps supination term.
SweepResult forearm_torque_sweep(const Model& m, const std::string& hash,
                                 double lo_fs_deg, double hi_fs_deg,
                                 double theta21_deg, int n, int threads);

SweepResult run_figure(const Model& m, const std::string& hash,
                       const FigureSpec& spec, int threads);

}  // namespace arthro
