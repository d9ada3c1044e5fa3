#pragma once

#include <functional>

namespace hk {

struct QuadResult {
  double value = 0;
  double abs_error = 0;
  long evals = 0;
  bool converged = false;
};

using Fn1 = std::function<double(double)>;

// Adaptive 15-point Gauss-Kronrod on [a,b].
QuadResult integrate_gk(const Fn1& f, double a, double b, double abs_tol,
                        double rel_tol, int max_intervals = 2000);

// tanh-sinh rule on the finite interval [a,b]; exponentially convergent for
// smooth bumps, tolerates integrable endpoint behavior.
QuadResult integrate_tanh_sinh(const Fn1& f, double a, double b,
                               double rel_tol, int max_level = 12);

// Integral over [0,inf) of a decaying (possibly oscillatory) integrand.
// Advances in panels of width `panel`, each integrated adaptively, and stops
// once `tail_cap` consecutive panels contribute below tolerance.
QuadResult integrate_half_line(const Fn1& f, double panel, double abs_tol,
                               double rel_tol, int max_panels = 4000,
                               int tail_cap = 3);

}  // namespace hk
