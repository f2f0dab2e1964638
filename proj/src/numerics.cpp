#include "arthrosim/numerics.hpp"

#include <cmath>
#include <string>

#include "arthrosim/errors.hpp"

namespace arthro {

namespace {

double checked_eval(const std::function<double(double)>& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    throw NumericError("objective evaluated to a non-finite value at x=" + std::to_string(x));
  }
  return v;
}

}  // namespace

MaxResult maximize_1d(const std::function<double(double)>& f, double lo, double hi,
                      double x_tol, int grid_samples) {
  if (!(hi > lo)) throw NumericError("maximize_1d: empty interval");
  if (grid_samples < 2) grid_samples = 2;

  // Coarse scan; ties keep the first (lowest-x) sample so results never depend
  // on evaluation order.
  int best_i = 0;
  double best_v = checked_eval(f, lo);
  for (int i = 1; i <= grid_samples; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / grid_samples;
    const double v = checked_eval(f, x);
    if (v > best_v) {
      best_v = v;
      best_i = i;
    }
  }

  const double step = (hi - lo) / grid_samples;
  double a = (best_i == 0) ? lo : lo + step * (best_i - 1);
  double b = (best_i == grid_samples) ? hi : lo + step * (best_i + 1);

  // Golden-section refinement on the bracketing interval.
  constexpr double kInvPhi = 0.6180339887498949;  // 1/phi
  double c = b - (b - a) * kInvPhi;
  double d = a + (b - a) * kInvPhi;
  double fc = checked_eval(f, c);
  double fd = checked_eval(f, d);
  while (b - a > x_tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * kInvPhi;
      fc = checked_eval(f, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * kInvPhi;
      fd = checked_eval(f, d);
    }
  }

  MaxResult res;
  res.x = 0.5 * (a + b);
  res.value = checked_eval(f, res.x);

  // Endpoint snap: monotone objectives must report the boundary exactly.
  for (double endpoint : {lo, hi}) {
    if (std::abs(res.x - endpoint) <= std::max(x_tol, (hi - lo) * 1e-12) * 2.0) {
      const double fe = checked_eval(f, endpoint);
      if (fe >= res.value) {
        res.x = endpoint;
        res.value = fe;
      }
      res.on_boundary = true;
    }
  }
  return res;
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double x_tol) {
  double fa = checked_eval(f, lo);
  double fb = checked_eval(f, hi);
  if (fa == 0.0) return lo;
  if (fb == 0.0) return hi;
  if (fa * fb > 0.0) {
    throw NumericError("bisect_root: no sign change on [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "] (f=" + std::to_string(fa) + ", " +
                       std::to_string(fb) + ")");
  }
  double a = lo, b = hi;
  for (int it = 0; it < 200 && (b - a) > x_tol; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = checked_eval(f, m);
    if (fm == 0.0) return m;
    if (fa * fm < 0.0) {
      b = m;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

double fit_scalar(double target, const std::function<double(double)>& g, double lo,
                  double hi, double f_tol) {
  const double glo = checked_eval(g, lo);
  const double ghi = checked_eval(g, hi);
  if (std::abs(glo - target) <= f_tol) return lo;
  if (std::abs(ghi - target) <= f_tol) return hi;

  double a = lo, b = hi;
  double fa = glo - target;
  double fb = ghi - target;
  if (fa * fb > 0.0) {
    // No endpoint bracket; a unimodal g may still reach the target inside.
    const MaxResult peak = maximize_1d(g, lo, hi);
    if (peak.value < target) {
      throw NumericError("fit_scalar: target " + std::to_string(target) +
                         " not bracketed (g(lo)=" + std::to_string(glo) +
                         ", g(hi)=" + std::to_string(ghi) +
                         ", max g=" + std::to_string(peak.value) + ")");
    }
    // Left crossing for determinism.
    b = peak.x;
    fb = peak.value - target;
    if (fa * fb > 0.0) {
      throw NumericError("fit_scalar: no crossing left of the interior maximum");
    }
  }
  for (int it = 0; it < 400; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = checked_eval(g, m) - target;
    if (std::abs(fm) <= f_tol) return m;
    if (fa * fm <= 0.0) {
      b = m;
      fb = fm;
    } else {
      a = m;
      fa = fm;
    }
    if (b - a < 1e-300 || (b - a) <= std::abs(m) * 1e-17) break;
  }
  const double m = 0.5 * (a + b);
  if (std::abs(checked_eval(g, m) - target) <= f_tol) return m;
  throw NumericError("fit_scalar: bisection stalled before reaching f_tol=" +
                     std::to_string(f_tol));
}

}  // namespace arthro
