#include "arthrosim/humeroradial.hpp"

#include <cmath>
#include <string>

#include "arthrosim/errors.hpp"
#include "arthrosim/numerics.hpp"
#include "arthrosim/units.hpp"

namespace arthro {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) {
    throw ValidationError(std::string("humeroradial.") + name + " must be > 0");
  }
}

// acos argument clamp; genuinely infeasible triangles fail loudly instead.
double safe_acos(double c, const char* ctx) {
  if (c > 1.0) {
    if (c > 1.0 + 1e-12) {
      throw NumericError(std::string("triangle cannot close (") + ctx + ")");
    }
    c = 1.0;
  } else if (c < -1.0) {
    if (c < -1.0 - 1e-12) {
      throw NumericError(std::string("triangle cannot close (") + ctx + ")");
    }
    c = -1.0;
  }
  return std::acos(c);
}

}  // namespace

HumeroradialGeometry HumeroradialGeometry::from_rest_pose(double l_a, double r,
                                                          double gamma, double theta_s,
                                                          double k, double l_e) {
  HumeroradialGeometry g;
  g.l_a = l_a;
  g.r = r;
  g.gamma = gamma;
  g.theta_s = theta_s;
  g.k = k;
  g.l_e = l_e;
  const double s = r * std::sin(theta_s);
  if (!(l_a > s)) {
    throw ValidationError("humeroradial.theta_s: rest pose cannot close (l_a <= r*sin(theta_s))");
  }
  g.l_s0 = r * std::cos(theta_s) + std::sqrt(l_a * l_a - s * s);
  return g;
}

void HumeroradialGeometry::validate() const {
  require_positive(l_a, "l_a");
  require_positive(r, "r");
  require_positive(k, "k");
  require_positive(l_e, "l_e");
  require_positive(l_s0, "l_s0");
  if (!(theta_s > 0.0 && theta_s < kPi / 2.0)) {
    throw ValidationError("humeroradial.theta_s must lie in (0, pi/2)");
  }
  if (!(gamma > 0.0 && gamma < kPi)) {
    throw ValidationError("humeroradial.gamma must lie in (0, pi)");
  }
  if (!(l_s0 > std::abs(l_a - r) && l_s0 < l_a + r)) {
    throw ValidationError("humeroradial.l_s0: rest triangle (l_s0, l_a, r) does not close");
  }
  // The rest pose must reproduce theta_s; an explicit l_s0 that disagrees with
  // the (l_a, r, theta_s) closure is a configuration mistake.
  const double rest = deflection_from_elongation(*this, 0.0).theta_s1;
  if (std::abs(rest - theta_s) > 1e-9) {
    throw ValidationError("humeroradial.l_s0 inconsistent with theta_s rest closure");
  }
}

HrDeflection deflection_from_elongation(const HumeroradialGeometry& g, double delta_ls) {
  if (delta_ls < 0.0) throw NumericError("humeroradial: negative spring elongation");
  const double l_s1 = g.l_s0 + delta_ls;
  const double cos_a1 = (l_s1 * l_s1 + g.l_a * g.l_a - g.r * g.r) / (2.0 * l_s1 * g.l_a);
  const double alpha1 = safe_acos(cos_a1, "O-T'-A', spring side");
  const double sin_t = g.l_a * std::sin(alpha1) / g.r;
  if (sin_t > 1.0 + 1e-12) {
    throw NumericError("humeroradial: contact lost beyond geometric dislocation (sin(theta_s1) > 1)");
  }
  HrDeflection d;
  d.theta_s1 = std::asin(std::min(sin_t, 1.0));
  d.beta = kPi - g.gamma - alpha1;
  return d;
}

double external_force(const HumeroradialGeometry& g, double delta_ls) {
  const HrDeflection d = deflection_from_elongation(g, delta_ls);
  const double l_s1 = g.l_s0 + delta_ls;
  return g.k * delta_ls * l_s1 * std::tan(d.theta_s1) / g.l_e;
}

double support_force(const HumeroradialGeometry& g, double delta_ls) {
  const HrDeflection d = deflection_from_elongation(g, delta_ls);
  const double f_s = g.k * delta_ls / std::cos(d.theta_s1);
  return f_s * std::sin(d.theta_s1) + external_force(g, delta_ls);
}

double elongation_limit(const HumeroradialGeometry& g) {
  // theta_s1 = 0 <=> sin(alpha1) = 0 on the stretching branch <=> collinear
  // O, T', A' with T' between them: l_s1 = l_a + r.
  return g.l_a + g.r - g.l_s0;
}

DislocationThreshold dislocation_threshold(const HumeroradialGeometry& g) {
  const double edge = elongation_limit(g);
  const MaxResult m = maximize_1d([&g](double d) { return external_force(g, d); }, 0.0,
                                  edge, 1e-12, 512);
  DislocationThreshold t;
  t.delta_lp = m.x;
  t.f_peak = m.value;
  return t;
}

DislocationProfile dislocation_profile(const HumeroradialGeometry& g, int n_samples) {
  if (n_samples < 2) throw ValidationError("humeroradial profile needs >= 2 samples");
  DislocationProfile p;
  const double edge = elongation_limit(g);
  p.delta_ls.reserve(n_samples);
  p.f_e.reserve(n_samples);
  p.theta_s1.reserve(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    const double d = edge * static_cast<double>(i) / (n_samples - 1);
    p.delta_ls.push_back(d);
    p.f_e.push_back(external_force(g, d));
    p.theta_s1.push_back(deflection_from_elongation(g, d).theta_s1);
  }
  p.threshold = dislocation_threshold(g);
  return p;
}

}  // namespace arthro
