#pragma once

#include <Eigen/Dense>

#include <functional>

namespace lrpossib {

using VectorObjective = std::function<double(const Eigen::VectorXd&)>;

struct SimplexResult {
  Eigen::VectorXd x;
  double f = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Nelder-Mead maximization with restarts from the incumbent until a restart
/// no longer improves the value. `step` sets the initial simplex edge per
/// coordinate.
SimplexResult nelder_mead_max(const VectorObjective& f, const Eigen::VectorXd& x0, const Eigen::VectorXd& step,
                              double ftol = 1e-15, double xtol = 1e-13, int max_evals = 4000);

}  // namespace lrpossib
