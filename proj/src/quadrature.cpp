#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace hk {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
const double kXgk[8] = {.991455371120812639206854697526329,
                        .949107912342758524526189684047851,
                        .864864423359769072789712788640926,
                        .741531185599394439863864773280788,
                        .58608723546769113029414483825873,
                        .405845151377397166906606412076961,
                        .207784955007898467600689403773245,
                        0.};
const double kWgk[8] = {.02293532201052922496373200805897,
                        .063092092629978553290700663189204,
                        .104790010322250183839876322541518,
                        .140653259715525918745189590510238,
                        .16900472663926790282658342659855,
                        .190350578064785409913256402421014,
                        .204432940075298892414161999234649,
                        .209482141084727828012999174891714};
const double kWg[4] = {.129484966168869693270611432679082,
                       .27970539148927666790146777142378,
                       .381830050505118944950369775488975,
                       .417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const Fn1& f, double a, double b, long& evals) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  double resk = fc * kWgk[7], resg = fc * kWg[3];
  double resabs = std::abs(resk);
  for (int j = 0; j < 7; ++j) {
    double x = h * kXgk[j];
    double f1 = f(c - x), f2 = f(c + x);
    double s = f1 + f2;
    resk += kWgk[j] * s;
    if (j % 2 == 1) resg += kWg[j / 2] * s;
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
  }
  evals += 15;
  double value = resk * h;
  double err = std::abs((resk - resg) * h);
  // QUADPACK-style sharpened error estimate.
  double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  // resasc above is partial; a full recomputation is not worth the extra
  // evaluations here, the (err/resabs) scaling below dominates in practice.
  (void)resasc;
  if (resabs > 0 && err > 0) {
    double scale = std::pow(200.0 * err / (resabs * std::abs(h) * 2), 1.5);
    if (scale < 1.0) err = resabs * std::abs(h) * 2 * scale;
  }
  return Panel{a, b, value, err};
}

}  // namespace

QuadResult integrate_gk(const Fn1& f, double a, double b, double abs_tol,
                        double rel_tol, int max_intervals) {
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::priority_queue<Panel> q;
  q.push(gk15(f, a, b, out.evals));
  double total = q.top().value, toterr = q.top().error;
  int n = 1;
  while (n < max_intervals) {
    double bound = std::max(abs_tol, rel_tol * std::abs(total));
    if (toterr <= bound) break;
    Panel worst = q.top();
    q.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // interval exhausted
      q.push(worst);
      break;
    }
    Panel left = gk15(f, worst.a, mid, out.evals);
    Panel right = gk15(f, mid, worst.b, out.evals);
    total += left.value + right.value - worst.value;
    toterr += left.error + right.error - worst.error;
    q.push(left);
    q.push(right);
    ++n;
  }
  out.value = total;
  out.abs_error = std::max(toterr, 0.0);
  out.converged =
      toterr <= std::max(abs_tol, rel_tol * std::abs(total)) * 1.000001 + 1e-300;
  return out;
}

QuadResult integrate_tanh_sinh(const Fn1& f, double a, double b,
                               double rel_tol, int max_level) {
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  const double c = 0.5 * (a + b), half = 0.5 * (b - a);
  // x = c + half*tanh(pi/2 sinh(u)); weights w = half * pi/2 cosh(u)/cosh^2(..)
  auto eval = [&](double u) -> double {
    double sh = std::sinh(u);
    double t = std::tanh(1.5707963267948966 * sh);
    double x = c + half * t;
    if (x <= std::min(a, b) || x >= std::max(a, b)) return 0.0;
    double ch = std::cosh(1.5707963267948966 * sh);
    double w = half * 1.5707963267948966 * std::cosh(u) / (ch * ch);
    ++out.evals;
    double fx = f(x);
    return std::isfinite(fx) ? fx * w : 0.0;
  };
  const double umax = 3.8;
  double h = 1.0;
  double sum = eval(0.0);
  for (double u = h; u <= umax; u += h) sum += eval(u) + eval(-u);
  double prev = sum * h;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double add = 0;
    for (double u = h; u <= umax; u += 2 * h) add += eval(u) + eval(-u);
    double cur = prev * 0.5 + add * h;
    double change = std::abs(cur - prev);
    prev = cur;
    if (level >= 3 && change <= rel_tol * std::abs(cur) + 1e-300) {
      out.value = cur;
      out.abs_error = change;
      out.converged = true;
      return out;
    }
    out.abs_error = change;
  }
  out.value = prev;
  out.converged = false;
  return out;
}

QuadResult integrate_half_line(const Fn1& f, double panel, double abs_tol,
                               double rel_tol, int max_panels, int tail_cap) {
  QuadResult out;
  double total = 0, toterr = 0;
  int quiet = 0;
  for (int k = 0; k < max_panels; ++k) {
    double a = k * panel, b = (k + 1) * panel;
    QuadResult p = integrate_gk(f, a, b, abs_tol / 8, rel_tol / 4, 160);
    out.evals += p.evals;
    total += p.value;
    toterr += p.abs_error;
    double bound = std::max(abs_tol, rel_tol * std::abs(total));
    if (std::abs(p.value) + p.abs_error <= 0.02 * bound)
      ++quiet;
    else
      quiet = 0;
    if (quiet >= tail_cap) {
      out.value = total;
      out.abs_error = toterr + std::abs(p.value);
      out.converged = true;
      return out;
    }
  }
  out.value = total;
  out.abs_error = toterr;
  out.converged = false;
  return out;
}

}  // namespace hk
