#pragma once

#include <cmath>

namespace lrpossib {

struct ScalarMax {
  double x = 0.0;
  double f = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Golden-section maximization of f on [lo, hi]. Stops when the bracket is
/// narrower than xtol * max(1, |x|) or after max_iter iterations. Values of
/// -inf are handled as ordinary (worst) values.
template <typename F>
ScalarMax golden_section_max(F&& f, double lo, double hi, double xtol = 1e-13, int max_iter = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  ScalarMax out;
  out.evaluations = 2;
  for (int it = 0; it < max_iter; ++it) {
    const double mid = 0.5 * (a + b);
    if (b - a <= xtol * std::fmax(1.0, std::fabs(mid))) {
      out.converged = true;
      break;
    }
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++out.evaluations;
  }
  if (fc >= fd) {
    out.x = c;
    out.f = fc;
  } else {
    out.x = d;
    out.f = fd;
  }
  return out;
}

}  // namespace lrpossib
