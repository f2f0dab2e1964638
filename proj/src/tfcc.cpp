#include "arthrosim/tfcc.hpp"

#include <cmath>
#include <string>

#include "arthrosim/errors.hpp"

namespace arthro {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) throw ValidationError(std::string("tfcc.") + name + " must be > 0");
}

double chord(double a, double b, double angle) {
  return std::sqrt(a * a + b * b - 2.0 * a * b * std::cos(angle));
}

// Straight-line dorsal length before tendon contact.
double pre_contact_dorsal(const TfccGeometry& g, double theta22) {
  return chord(g.l_r, g.l_or, g.theta_d_init + theta22);
}

// Wrapped dorsal length after tendon contact.
double post_contact_dorsal(const TfccGeometry& g, double theta22) {
  return chord(g.l_r, g.l_re, theta22 - g.theta_ecu) + g.l_te;
}

}  // namespace

void TfccGeometry::finalize() {
  require_positive(l_r, "l_r");
  require_positive(l_or, "l_or");
  require_positive(l_re, "l_re");
  if (l_od <= 0.0) l_od = pre_contact_dorsal(*this, 0.0);
  if (l_op <= 0.0) l_op = chord(l_r, l_or, theta_p_init);
  if (l_te <= 0.0) {
    // Branch continuity at the switch pins |E O_t|:
    // pre(theta_ecu) = |l_r - l_re| + l_te.
    l_te = pre_contact_dorsal(*this, theta_ecu) - std::abs(l_r - l_re);
    if (l_te <= 0.0) {
      throw ValidationError("tfcc: wrap point outside the pre-contact ligament path (derived l_te <= 0)");
    }
  }
}

void TfccGeometry::validate() const {
  require_positive(l_r, "l_r");
  require_positive(l_or, "l_or");
  require_positive(l_re, "l_re");
  require_positive(l_od, "l_od");
  require_positive(l_op, "l_op");
  require_positive(l_te, "l_te");
  if (!(tension_threshold >= 0.0)) {
    throw ValidationError("tfcc.tension_threshold must be >= 0");
  }
  if (std::abs(l_od - pre_contact_dorsal(*this, 0.0)) > 1e-9) {
    throw ValidationError("tfcc.l_od inconsistent with the (l_r, l_or, theta_d_init) rest geometry");
  }
  if (std::abs(l_op - chord(l_r, l_or, theta_p_init)) > 1e-9) {
    throw ValidationError("tfcc.l_op inconsistent with the (l_r, l_or, theta_p_init) rest geometry");
  }
  const double pre = pre_contact_dorsal(*this, theta_ecu);
  const double post = post_contact_dorsal(*this, theta_ecu);
  if (std::abs(pre - post) > 1e-9) {
    throw ValidationError("tfcc: dorsal branches disagree at theta_ecu by " +
                          std::to_string(std::abs(pre - post)) + " m (l_te vs rest geometry)");
  }
}

double drul_elongation(const TfccGeometry& g, double theta22) {
  const double len =
      (theta22 >= g.theta_ecu) ? post_contact_dorsal(g, theta22) : pre_contact_dorsal(g, theta22);
  return len - g.l_od;
}

double prul_elongation(const TfccGeometry& g, double theta22) {
  return chord(g.l_r, g.l_or, g.theta_p_init + theta22) - g.l_op;
}

double drul_slope(const TfccGeometry& g, double theta22, int side) {
  const bool post = (theta22 > g.theta_ecu) || (theta22 == g.theta_ecu && side >= 0);
  if (post) {
    const double u = theta22 - g.theta_ecu;
    const double len = chord(g.l_r, g.l_re, u);
    if (len == 0.0) {
      // l_re == l_r exactly: len = 2 l_r |sin(u/2)|, one-sided slope l_r.
      return g.l_r;
    }
    return g.l_r * g.l_re * std::sin(u) / len;
  }
  const double a = g.theta_d_init + theta22;
  return g.l_r * g.l_or * std::sin(a) / chord(g.l_r, g.l_or, a);
}

double prul_slope(const TfccGeometry& g, double theta22) {
  const double a = g.theta_p_init + theta22;
  return g.l_r * g.l_or * std::sin(a) / chord(g.l_r, g.l_or, a);
}

}  // namespace arthro
