#pragma once

#include <functional>

namespace arthro {

struct MaxResult {
  double x = 0.0;      // argmax
  double value = 0.0;  // f(argmax)
  bool on_boundary = false;
};

// Deterministic 1-D maximization: coarse uniform grid scan (grid_samples
// intervals) picks a bracket, golden-section refines it to x_tol.
// Non-finite f anywhere visited raises NumericError naming the abscissa.
// A maximum within x_tol of lo/hi is snapped to the endpoint and flagged.
MaxResult maximize_1d(const std::function<double(double)>& f, double lo, double hi,
                      double x_tol = 1e-10, int grid_samples = 512);

// Bisection root of f on [lo, hi]; requires a sign change (f(lo)*f(hi) <= 0).
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double x_tol = 1e-14);

// Solves g(p) = target for p in [lo, hi] by bisection, |g(p) - target| <= f_tol.
// Accepts either a direct sign change of g - target across [lo, hi], or a
// unimodal g whose interior maximum reaches the target; in that case the
// smaller (left) crossing is returned for determinism.
double fit_scalar(double target, const std::function<double(double)>& g, double lo,
                  double hi, double f_tol = 1e-10);

}  // namespace arthro
