#include "lrpossib/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <limits>
#include <vector>

namespace lrpossib {

namespace {

struct Run {
  Eigen::VectorXd x;
  double f;
  int evals;
  bool converged;
};

// one Nelder-Mead descent on -f
Run descend(const VectorObjective& f, const Eigen::VectorXd& x0, const Eigen::VectorXd& step, double ftol,
            double xtol, int budget) {
  const Eigen::Index n = x0.size();
  std::vector<Eigen::VectorXd> pts(static_cast<std::size_t>(n + 1), x0);
  std::vector<double> vals(static_cast<std::size_t>(n + 1));
  int evals = 0;
  auto eval = [&](const Eigen::VectorXd& x) {
    ++evals;
    const double v = f(x);
    return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v;
  };
  for (Eigen::Index i = 0; i < n; ++i) pts[i + 1][i] += step[i];
  for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = eval(pts[i]);

  std::vector<std::size_t> order(pts.size());
  bool converged = false;
  while (evals < budget) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[order.size() - 2];

    double spread = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      spread = std::max(spread, (pts[order[i]] - pts[best]).cwiseAbs().maxCoeff());
    }
    const double scale = std::max(1.0, pts[best].cwiseAbs().maxCoeff());
    const bool flat = std::isfinite(vals[worst]) &&
                      std::abs(vals[best] - vals[worst]) <= ftol * std::max(1.0, std::abs(vals[best]));
    if ((flat && spread <= 1e3 * xtol * scale) || spread <= xtol * scale) {
      converged = true;
      break;
    }
    if (!std::isfinite(vals[best])) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (std::size_t i = 0; i + 1 < order.size(); ++i) centroid += pts[order[i]];
    centroid /= static_cast<double>(n);

    const Eigen::VectorXd xr = centroid + (centroid - pts[worst]);
    const double fr = eval(xr);
    if (fr > vals[best]) {
      const Eigen::VectorXd xe = centroid + 2.0 * (centroid - pts[worst]);
      const double fe = eval(xe);
      if (fe > fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr > vals[second]) {
      pts[worst] = xr;
      vals[worst] = fr;
      continue;
    }
    const bool outside = fr > vals[worst];
    const Eigen::VectorXd xc =
        outside ? Eigen::VectorXd(centroid + 0.5 * (xr - centroid)) : Eigen::VectorXd(centroid + 0.5 * (pts[worst] - centroid));
    const double fc = eval(xc);
    if (fc > (outside ? fr : vals[worst])) {
      pts[worst] = xc;
      vals[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i == best) continue;
      pts[i] = pts[best] + 0.5 * (pts[i] - pts[best]);
      vals[i] = eval(pts[i]);
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (vals[i] > vals[best]) best = i;
  }
  return {pts[best], vals[best], evals, converged};
}

}  // namespace

SimplexResult nelder_mead_max(const VectorObjective& f, const Eigen::VectorXd& x0, const Eigen::VectorXd& step,
                              double ftol, double xtol, int max_evals) {
  SimplexResult out;
  out.x = x0;
  out.f = f(x0);
  out.evaluations = 1;
  if (std::isnan(out.f)) out.f = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd s = step;
  for (int restart = 0; restart < 6 && out.evaluations < max_evals; ++restart) {
    Run r = descend(f, out.x, s, ftol, xtol, max_evals - out.evaluations);
    out.evaluations += r.evals;
    const double gain = r.f - out.f;
    const bool improved = r.f > out.f;
    if (improved) {
      out.x = r.x;
      out.f = r.f;
    }
    out.converged = r.converged;
    if (!improved || gain <= ftol * std::max(1.0, std::abs(out.f))) break;
    // restart with a smaller simplex around the incumbent
    s *= 0.25;
  }
  return out;
}

}  // namespace lrpossib
