#include "arthrosim/mcl.hpp"

#include <cmath>
#include <string>

#include "arthrosim/errors.hpp"
#include "arthrosim/units.hpp"

namespace arthro {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) throw ValidationError(std::string("mcl.") + name + " must be > 0");
}

double band_length(double ecc, double r, double angle) {
  return std::sqrt(ecc * ecc + r * r - 2.0 * ecc * r * std::cos(angle));
}

}  // namespace

void MclGeometry::validate() const {
  require_positive(l_oa, "l_oa");
  require_positive(l_op, "l_op");
  require_positive(r_ins, "r_ins");
  if (!(theta_a0 > 0.0 && theta_a0 < kPi)) {
    throw ValidationError("mcl.theta_a0 must lie in (0, pi)");
  }
  if (!(theta_p0 > 0.0 && theta_p0 < kPi)) {
    throw ValidationError("mcl.theta_p0 must lie in (0, pi)");
  }
}

double MclGeometry::anterior_rest_length() const {
  return band_length(l_oa, r_ins, theta_a0);
}

double MclGeometry::posterior_rest_length() const {
  return band_length(l_op, r_ins, theta_p0);
}

MclLengths mcl_lengths(const MclGeometry& g, double theta21) {
  // Grouped so the offset vanishes exactly at theta21 = pi/2 and both bands
  // report their rest length (and zero strain) there.
  const double offset = kPi / 2.0 - theta21;
  MclLengths out;
  out.l_a1 = band_length(g.l_oa, g.r_ins, g.theta_a0 + offset);
  out.l_p1 = band_length(g.l_op, g.r_ins, g.theta_p0 - offset);
  return out;
}

MclStrains mcl_strains(const MclGeometry& g, double theta21) {
  const MclLengths len = mcl_lengths(g, theta21);
  MclStrains s;
  if (g.mode == MclStrainMode::rest_length) {
    s.eps_a = (len.l_a1 - g.anterior_rest_length()) / g.anterior_rest_length();
    s.eps_p = (len.l_p1 - g.posterior_rest_length()) / g.posterior_rest_length();
  } else {
    s.eps_a = (len.l_a1 - g.l_oa) / g.l_oa;
    s.eps_p = (len.l_p1 - g.l_op) / g.l_op;
  }
  return s;
}

}  // namespace arthro
