#pragma once

#include <Eigen/Dense>

#include <vector>

namespace lrpossib {

using Polyline = std::vector<Eigen::Vector2d>;

/// Iso-lines of a sampled scalar field. values(i, j) is the field at
/// (xs[i], ys[j]). Segments are chained into polylines; closed curves repeat
/// their first vertex at the end. Non-finite samples are treated as lying
/// below every level.
std::vector<Polyline> marching_squares(const Eigen::ArrayXXd& values, const Eigen::ArrayXd& xs,
                                       const Eigen::ArrayXd& ys, double level);

}  // namespace lrpossib
