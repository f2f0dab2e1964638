#pragma once

namespace arthro {

// Distal radioulnar ligament elongation model. Two ligaments anchor the
// fixed centre O_t to points D (dorsal) and P (palmar) on the joint contact
// edge, which rotates about O_r with the forearm angle theta22. Beyond
// theta_ecu the dorsal ligament wraps a tendon at E and switches formula:
//   pre:  |D'O_t| = sqrt(l_r^2 + l_or^2 - 2 l_r l_or cos(theta_init + theta22))
//   post: |D'E| + l_te, |D'E| = sqrt(l_r^2 + l_re^2 - 2 l_r l_re cos(theta22 - theta_ecu))
// Elongations are reported relative to the rest lengths at theta22 = 0.
// All lengths m, angles rad; theta22 in the configured joint frame
// (positive = pronation).
struct TfccGeometry {
  double l_r = 0.0;           // contact-edge radius |O_r D|, m
  double l_or = 0.0;          // centre offset |O_t O_r|, m
  double theta_d_init = 0.0;  // rest angle of O_r->D against O_r->O_t, rad
  double theta_p_init = 0.0;  // rest angle of O_r->P against O_r->O_t, rad
  double l_re = 0.0;          // wrap-point radius |O_r E|, m
  double theta_ecu = 0.0;     // contact switch angle, rad
  double l_od = 0.0;          // dorsal rest length, m (derived unless explicit)
  double l_op = 0.0;          // palmar rest length, m (derived unless explicit)
  double l_te = 0.0;          // wrap-to-centre length |E O_t|, m (derived unless explicit)
  double tension_threshold = 0.0;  // reporting aid for the taut-crossing, m

  // Derives l_od/l_op from the rest pose and l_te from branch continuity at
  // theta_ecu. Explicit values (> 0) are kept and validated instead.
  void finalize();
  void validate() const;  // positivity + branch continuity within 1e-9 m
};

// Dorsal ligament elongation at theta22 (rad); piecewise across theta_ecu.
double drul_elongation(const TfccGeometry& g, double theta22);
// Palmar ligament elongation; single smooth branch.
double prul_elongation(const TfccGeometry& g, double theta22);

// Analytic d(elongation)/d(theta22); at theta_ecu the dorsal value is the
// one-sided derivative from the requested side (side >= 0 -> post-contact).
double drul_slope(const TfccGeometry& g, double theta22, int side = 0);
double prul_slope(const TfccGeometry& g, double theta22);

}  // namespace arthro
