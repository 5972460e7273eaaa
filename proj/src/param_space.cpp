#include "lrpossib/param_space.hpp"

#include "lrpossib/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace lrpossib {

bool Interval::contains(double v, double tol) const {
  if (!std::isfinite(v)) return false;
  // open ends are strict; closed ends accept the tolerance
  const bool lo_ok = (lo_open || std::isinf(lo)) ? v > lo : v >= lo - tol;
  const bool hi_ok = (hi_open || std::isinf(hi)) ? v < hi : v <= hi + tol;
  return lo_ok && hi_ok;
}

bool Interval::closure_contains(double v, double tol) const {
  if (std::isinf(v)) return false;
  return v >= lo - tol && v <= hi + tol;
}

double Interval::distance(double v) const {
  if (v < lo) return lo - v;
  if (v > hi) return v - hi;
  return 0.0;
}

bool Interval::bounded() const { return std::isfinite(lo) && std::isfinite(hi); }

ParamPoint::ParamPoint(std::initializer_list<double> c) : coords(static_cast<Eigen::Index>(c.size())) {
  Eigen::Index i = 0;
  for (double v : c) coords[i++] = v;
}

Sample::Sample(std::initializer_list<double> v) : values(static_cast<Eigen::Index>(v.size())) {
  Eigen::Index i = 0;
  for (double x : v) values[i++] = x;
}

namespace {

void check_bounds(const std::vector<Interval>& bounds) {
  if (bounds.empty()) throw InputError("continuous parameter space needs dimension >= 1");
  for (const auto& b : bounds) {
    if (std::isnan(b.lo) || std::isnan(b.hi) || !(b.lo < b.hi)) {
      throw InputError("parameter space bounds must satisfy lower < upper");
    }
  }
}

}  // namespace

ParamSpace ParamSpace::continuous(std::vector<Interval> bounds) {
  check_bounds(bounds);
  ParamSpace s;
  s.kind_ = Kind::Continuous;
  s.ambient_dim_ = static_cast<int>(bounds.size());
  s.bounds_ = std::move(bounds);
  s.free_.resize(s.bounds_.size());
  for (int i = 0; i < s.ambient_dim_; ++i) s.free_[i] = i;
  return s;
}

ParamSpace ParamSpace::constrained(std::vector<Interval> bounds, Eigen::MatrixXd eq_lhs,
                                   Eigen::VectorXd eq_rhs, std::vector<int> free_coords) {
  check_bounds(bounds);
  const int k = static_cast<int>(bounds.size());
  if (eq_lhs.cols() != k || eq_lhs.rows() != eq_rhs.size()) {
    throw InputError("equality constraint shape does not match the space dimension");
  }
  const int r = static_cast<int>(eq_lhs.rows());
  if (static_cast<int>(free_coords.size()) != k - r) {
    throw InputError("number of free coordinates must equal dimension minus equality count");
  }
  std::set<int> free_set(free_coords.begin(), free_coords.end());
  if (static_cast<int>(free_set.size()) != k - r || (!free_set.empty() && (*free_set.begin() < 0 || *free_set.rbegin() >= k))) {
    throw InputError("free coordinates must be distinct indices into the space");
  }
  ParamSpace s;
  s.kind_ = Kind::Continuous;
  s.ambient_dim_ = k;
  s.bounds_ = std::move(bounds);
  s.eq_lhs_ = std::move(eq_lhs);
  s.eq_rhs_ = std::move(eq_rhs);
  s.free_ = std::move(free_coords);
  for (int i = 0; i < k; ++i) {
    if (!free_set.count(i)) s.dependent_.push_back(i);
  }
  Eigen::MatrixXd a_dep(r, r);
  Eigen::MatrixXd a_free(r, k - r);
  for (int j = 0; j < r; ++j) a_dep.col(j) = s.eq_lhs_.col(s.dependent_[j]);
  for (int j = 0; j < k - r; ++j) a_free.col(j) = s.eq_lhs_.col(s.free_[j]);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a_dep);
  if (!lu.isInvertible()) {
    throw InputError("equality constraints cannot be solved for the dependent coordinates");
  }
  s.solve_base_ = lu.solve(s.eq_rhs_);
  s.solve_free_ = -lu.solve(a_free);
  return s;
}

ParamSpace ParamSpace::finite(std::vector<std::string> labels, std::vector<Eigen::VectorXd> points) {
  if (points.empty()) throw InputError("finite parameter space needs at least one point");
  if (labels.size() != points.size()) throw InputError("finite space: label and point counts differ");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw InputError("finite space: duplicate label '" + l + "'");
  }
  const auto d = points.front().size();
  for (const auto& p : points) {
    if (p.size() != d) throw InputError("finite space: points have differing dimensions");
  }
  ParamSpace s;
  s.kind_ = Kind::Finite;
  s.ambient_dim_ = static_cast<int>(d);
  s.labels_ = std::move(labels);
  s.points_ = std::move(points);
  return s;
}

int ParamSpace::dim() const {
  return is_finite() ? 0 : static_cast<int>(free_.size());
}

ParamPoint ParamSpace::point(std::size_t i) const {
  if (!is_finite() || i >= points_.size()) throw InputError("finite space index out of range");
  return ParamPoint(points_[i], i);
}

std::optional<std::size_t> ParamSpace::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::optional<std::size_t> ParamSpace::find_coords(const Eigen::VectorXd& coords) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() == coords.size() &&
        (points_[i] - coords).cwiseAbs().maxCoeff() <= kFeasibilityTol) {
      return i;
    }
  }
  return std::nullopt;
}

Eigen::VectorXd ParamSpace::to_ambient(const Eigen::VectorXd& free) const {
  Eigen::VectorXd out(ambient_dim_);
  for (std::size_t j = 0; j < free_.size(); ++j) out[free_[j]] = free[static_cast<Eigen::Index>(j)];
  if (!dependent_.empty()) {
    const Eigen::VectorXd dep = solve_base_ + solve_free_ * free;
    for (std::size_t j = 0; j < dependent_.size(); ++j) out[dependent_[j]] = dep[static_cast<Eigen::Index>(j)];
  }
  return out;
}

Eigen::VectorXd ParamSpace::to_free(const Eigen::VectorXd& ambient) const {
  Eigen::VectorXd out(static_cast<Eigen::Index>(free_.size()));
  for (std::size_t j = 0; j < free_.size(); ++j) out[static_cast<Eigen::Index>(j)] = ambient[free_[j]];
  return out;
}

std::vector<Interval> ParamSpace::free_bounds() const {
  std::vector<Interval> out;
  out.reserve(free_.size());
  for (int j : free_) out.push_back(bounds_[j]);
  return out;
}

bool ParamSpace::contains(const ParamPoint& p) const {
  if (is_finite()) {
    if (p.index) return *p.index < points_.size();
    return find_coords(p.coords).has_value();
  }
  if (p.coords.size() != ambient_dim_) return false;
  for (int i = 0; i < ambient_dim_; ++i) {
    if (!bounds_[i].contains(p.coords[i], kFeasibilityTol)) return false;
  }
  if (has_equalities()) {
    const Eigen::VectorXd r = eq_lhs_ * p.coords - eq_rhs_;
    if (r.cwiseAbs().maxCoeff() > kFeasibilityTol) return false;
  }
  return true;
}

bool ParamSpace::closure_contains(const ParamPoint& p) const {
  if (is_finite()) return contains(p);
  if (p.coords.size() != ambient_dim_) return false;
  return bound_violation(p.coords) <= kFeasibilityTol;
}

double ParamSpace::bound_violation(const Eigen::VectorXd& ambient) const {
  double sq = 0.0;
  for (int i = 0; i < ambient_dim_; ++i) {
    if (std::isnan(ambient[i])) return std::numeric_limits<double>::infinity();
    const double d = bounds_[i].distance(ambient[i]);
    sq += d * d;
  }
  double v = std::sqrt(sq);
  if (has_equalities()) v += (eq_lhs_ * ambient - eq_rhs_).cwiseAbs().maxCoeff();
  return v;
}

void ParamSpace::check_point(const ParamPoint& p) const {
  if (p.coords.size() != ambient_dim_) {
    throw InputError("parameter point has " + std::to_string(p.coords.size()) +
                     " coordinates, space has " + std::to_string(ambient_dim_));
  }
  if (!closure_contains(p)) throw InputError("parameter point lies outside the parameter space");
}

}  // namespace lrpossib
