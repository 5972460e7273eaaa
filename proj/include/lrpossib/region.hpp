#pragma once

#include "lrpossib/param_space.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lrpossib {

enum class Relation { Le, Lt, Eq, Gt, Ge };

/// Real-valued function of the ambient coordinates.
using ScalarFn = std::function<double(const Eigen::VectorXd&)>;
/// Opaque membership test.
using MembershipFn = std::function<bool(const ParamPoint&)>;

/// Immutable expression tree describing a subset of a parameter space.
///
/// Complement is always relative to the parameter space the region is
/// evaluated against. Nodes are shared, so copying a region is cheap.
class ParamRegion {
 public:
  enum class Kind { Full, Empty, FiniteSet, Box, Constraint, Predicate, Complement, Union, Intersection };

  static ParamRegion full();
  static ParamRegion empty();
  static ParamRegion finite_set(std::vector<ParamPoint> points);
  static ParamRegion box(std::vector<Interval> intervals);
  static ParamRegion constraint(ScalarFn g, Relation rel, double rhs, std::string description = {});
  static ParamRegion predicate(MembershipFn test, std::string description = {});
  static ParamRegion complement(ParamRegion child);
  static ParamRegion unite(std::vector<ParamRegion> children);
  static ParamRegion intersect(std::vector<ParamRegion> children);

  /// Copy with a declared Lebesgue dimension (used for sharp/non-sharp
  /// classification).
  ParamRegion with_dimension(int dim) const;
  /// Copy tagged with a named region family; models may provide closed-form
  /// restricted maximizers keyed by family.
  ParamRegion with_family(std::string family) const;

  Kind kind() const;
  const std::vector<ParamPoint>& points() const;
  const std::vector<Interval>& intervals() const;
  const ScalarFn& function() const;
  Relation relation() const;
  double rhs() const;
  const MembershipFn& test() const;
  const std::vector<ParamRegion>& children() const;
  const std::optional<int>& declared_dimension() const;
  const std::string& family() const;
  const std::string& description() const;

  /// True when the tree contains a Constraint or Predicate node.
  bool has_implicit_nodes() const;

 private:
  struct Node;
  explicit ParamRegion(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline ParamRegion operator|(const ParamRegion& a, const ParamRegion& b) { return ParamRegion::unite({a, b}); }
inline ParamRegion operator&(const ParamRegion& a, const ParamRegion& b) { return ParamRegion::intersect({a, b}); }
inline ParamRegion operator~(const ParamRegion& a) { return ParamRegion::complement(a); }

/// Exact set-algebra membership. Throws StructuralError when a Box arity does
/// not match the point.
bool contains(const ParamRegion& region, const ParamPoint& theta);

/// Distance-like measure of how far an ambient point lies from the closure of
/// the region: 0 inside the closure, positive outside. Box nodes give a
/// Euclidean distance, Constraint nodes the absolute residual of g - rhs,
/// Predicate nodes 0/1.
double violation(const ParamRegion& region, const Eigen::VectorXd& ambient);

/// Membership in the closure, using `violation` for nodes with a geometric
/// description and exact membership for predicates and finite sets.
bool closure_contains(const ParamRegion& region, const ParamPoint& theta, double tol = kFeasibilityTol);

/// Axis-aligned box (ambient coordinates) that contains the closure of the
/// region; unknown extents are (-inf, inf). Returns nullopt for provably
/// empty regions.
std::optional<std::vector<Interval>> bounding_box(const ParamRegion& region, int ambient_dim);

/// Lebesgue dimension of the region inside a space of dimension `space_dim`
/// when it is declared or derivable (Full, Empty, FiniteSet, Box,
/// complements of lower-dimensional regions).
std::optional<int> region_dimension(const ParamRegion& region, int space_dim);

/// Structural validation against a space (Box arity, finite-set arity).
void check_region(const ParamRegion& region, const ParamSpace& space);

}  // namespace lrpossib
