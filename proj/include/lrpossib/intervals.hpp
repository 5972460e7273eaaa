#pragma once

#include "lrpossib/param_space.hpp"
#include "lrpossib/region.hpp"

#include <vector>

namespace lrpossib {

/// Finite union of disjoint intervals kept sorted and merged. Degenerate
/// closed intervals represent isolated points.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts);
  static IntervalSet of(const Interval& iv) { return IntervalSet({iv}); }

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(double t) const;

  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet complement_in(const Interval& domain) const;

 private:
  std::vector<Interval> parts_;
};

/// Affine line origin + t * direction through ambient coordinates.
struct Line {
  Eigen::VectorXd origin;
  Eigen::VectorXd direction;
  Eigen::VectorXd at(double t) const { return origin + t * direction; }
};

/// The set {t in domain : line(t) in region}. Box and finite-set nodes are
/// solved exactly. Constraint and predicate nodes are sampled at `samples`
/// points of the finite `sample_range` with bisection-refined boundaries;
/// a feasible run touching an infinite end of the domain is extended to it.
IntervalSet slice(const ParamRegion& region, const Line& line, const Interval& domain,
                  const Interval& sample_range, int samples);

}  // namespace lrpossib
