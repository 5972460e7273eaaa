#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace lrpossib {

/// Absolute tolerance for "point satisfies bounds / equality constraints".
inline constexpr double kFeasibilityTol = 1e-12;

/// A real interval with independently open or closed ends. Ends may be
/// infinite; an infinite end is always treated as open.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_open = false;
  bool hi_open = false;

  static Interval closed(double lo, double hi) { return {lo, hi, false, false}; }
  static Interval open(double lo, double hi) { return {lo, hi, true, true}; }

  bool contains(double v, double tol = 0.0) const;
  bool closure_contains(double v, double tol = 0.0) const;
  /// Distance from v to the closure of the interval.
  double distance(double v) const;
  bool degenerate() const { return lo == hi; }
  bool bounded() const;
};

/// A point of a parameter space. Coordinates are always ambient coordinates
/// (for the trinomial: all three cell probabilities). Points of a finite
/// space also carry their index into the space's label list.
struct ParamPoint {
  Eigen::VectorXd coords;
  std::optional<std::size_t> index;

  ParamPoint() = default;
  explicit ParamPoint(Eigen::VectorXd c, std::optional<std::size_t> idx = std::nullopt)
      : coords(std::move(c)), index(idx) {}
  ParamPoint(std::initializer_list<double> c);

  Eigen::Index size() const { return coords.size(); }
  double operator[](Eigen::Index i) const { return coords[i]; }
};

/// Observed data. The meaning of the entries is model specific (a count, a
/// pair of sufficient statistics, genotype counts, ...).
struct Sample {
  Eigen::VectorXd values;

  Sample() = default;
  explicit Sample(Eigen::VectorXd v) : values(std::move(v)) {}
  Sample(std::initializer_list<double> v);
};

/// Continuous subset of R^k given by per-coordinate bounds, optionally cut by
/// linear equalities A theta = b, or a finite labelled set of points.
///
/// With equalities, a subset of the coordinates is declared free and the
/// remaining coordinates are solved from the equalities. Optimizers work in
/// the free coordinates; everything else works in ambient coordinates.
class ParamSpace {
 public:
  enum class Kind { Continuous, Finite };

  static ParamSpace continuous(std::vector<Interval> bounds);
  static ParamSpace constrained(std::vector<Interval> bounds, Eigen::MatrixXd eq_lhs,
                                Eigen::VectorXd eq_rhs, std::vector<int> free_coords);
  static ParamSpace finite(std::vector<std::string> labels, std::vector<Eigen::VectorXd> points);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }

  /// Length of ParamPoint::coords.
  int ambient_dim() const { return ambient_dim_; }
  /// Lebesgue dimension: number of free coordinates, 0 for finite spaces.
  int dim() const;

  const std::vector<Interval>& bounds() const { return bounds_; }

  // finite spaces
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  ParamPoint point(std::size_t i) const;
  std::optional<std::size_t> find_label(const std::string& label) const;
  /// Index of the finite point with these coordinates (within tolerance).
  std::optional<std::size_t> find_coords(const Eigen::VectorXd& coords) const;

  // continuous spaces: chart between free and ambient coordinates
  bool has_equalities() const { return eq_lhs_.rows() > 0; }
  const std::vector<int>& free_coords() const { return free_; }
  Eigen::VectorXd to_ambient(const Eigen::VectorXd& free) const;
  Eigen::VectorXd to_free(const Eigen::VectorXd& ambient) const;
  std::vector<Interval> free_bounds() const;

  /// Membership honouring open ends, bounds within kFeasibilityTol.
  bool contains(const ParamPoint& p) const;
  /// Membership in the topological closure of the space.
  bool closure_contains(const ParamPoint& p) const;
  /// Euclidean distance from the ambient point to the closed bounds box plus
  /// the equality residual.
  double bound_violation(const Eigen::VectorXd& ambient) const;

  /// Throws InputError when p is not a point of the closure of this space.
  void check_point(const ParamPoint& p) const;

 private:
  ParamSpace() = default;

  Kind kind_ = Kind::Continuous;
  int ambient_dim_ = 0;
  std::vector<Interval> bounds_;
  Eigen::MatrixXd eq_lhs_;
  Eigen::VectorXd eq_rhs_;
  std::vector<int> free_;
  std::vector<int> dependent_;
  // dependent = solve_base_ + solve_free_ * free
  Eigen::VectorXd solve_base_;
  Eigen::MatrixXd solve_free_;
  std::vector<std::string> labels_;
  std::vector<Eigen::VectorXd> points_;
};

}  // namespace lrpossib
