#include "lrpossib/region.hpp"

#include "lrpossib/errors.hpp"
#include "lrpossib/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace lrpossib {

struct ParamRegion::Node {
  Kind kind = Kind::Full;
  std::vector<ParamPoint> points;
  std::vector<Interval> intervals;
  ScalarFn g;
  Relation rel = Relation::Le;
  double rhs = 0.0;
  MembershipFn test;
  std::vector<ParamRegion> children;
  std::optional<int> dim;
  std::string family;
  std::string description;
};

ParamRegion ParamRegion::full() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Full;
  return ParamRegion(std::move(n));
}

ParamRegion ParamRegion::empty() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Empty;
  return ParamRegion(std::move(n));
}

ParamRegion ParamRegion::finite_set(std::vector<ParamPoint> points) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::FiniteSet;
  n->points = std::move(points);
  return ParamRegion(std::move(n));
}

ParamRegion ParamRegion::box(std::vector<Interval> intervals) {
  if (intervals.empty()) throw StructuralError("box region needs at least one interval");
  for (const auto& iv : intervals) {
    if (std::isnan(iv.lo) || std::isnan(iv.hi) || iv.lo > iv.hi) {
      throw StructuralError("box interval with lower end above upper end");
    }
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Box;
  n->intervals = std::move(intervals);
  return ParamRegion(std::move(n));
}

ParamRegion ParamRegion::constraint(ScalarFn g, Relation rel, double rhs, std::string description) {
  if (!g) throw StructuralError("constraint region needs a function");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constraint;
  n->g = std::move(g);
  n->rel = rel;
  n->rhs = rhs;
  n->description = std::move(description);
  return ParamRegion(std::move(n));
}

ParamRegion ParamRegion::predicate(MembershipFn test, std::string description) {
  if (!test) throw StructuralError("predicate region needs a membership test");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Predicate;
  n->test = std::move(test);
  n->description = std::move(description);
  return ParamRegion(std::move(n));
}

ParamRegion ParamRegion::complement(ParamRegion child) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Complement;
  n->children.push_back(std::move(child));
  return ParamRegion(std::move(n));
}

ParamRegion ParamRegion::unite(std::vector<ParamRegion> children) {
  if (children.empty()) throw StructuralError("union needs at least one child");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Union;
  n->children = std::move(children);
  return ParamRegion(std::move(n));
}

ParamRegion ParamRegion::intersect(std::vector<ParamRegion> children) {
  if (children.empty()) throw StructuralError("intersection needs at least one child");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Intersection;
  n->children = std::move(children);
  return ParamRegion(std::move(n));
}

ParamRegion ParamRegion::with_dimension(int dim) const {
  auto n = std::make_shared<Node>(*node_);
  n->dim = dim;
  return ParamRegion(std::move(n));
}

ParamRegion ParamRegion::with_family(std::string family) const {
  auto n = std::make_shared<Node>(*node_);
  n->family = std::move(family);
  return ParamRegion(std::move(n));
}

ParamRegion::Kind ParamRegion::kind() const { return node_->kind; }
const std::vector<ParamPoint>& ParamRegion::points() const { return node_->points; }
const std::vector<Interval>& ParamRegion::intervals() const { return node_->intervals; }
const ScalarFn& ParamRegion::function() const { return node_->g; }
Relation ParamRegion::relation() const { return node_->rel; }
double ParamRegion::rhs() const { return node_->rhs; }
const MembershipFn& ParamRegion::test() const { return node_->test; }
const std::vector<ParamRegion>& ParamRegion::children() const { return node_->children; }
const std::optional<int>& ParamRegion::declared_dimension() const { return node_->dim; }
const std::string& ParamRegion::family() const { return node_->family; }
const std::string& ParamRegion::description() const { return node_->description; }

bool ParamRegion::has_implicit_nodes() const {
  if (kind() == Kind::Constraint || kind() == Kind::Predicate) return true;
  return std::any_of(children().begin(), children().end(),
                     [](const ParamRegion& c) { return c.has_implicit_nodes(); });
}

namespace {

bool same_point(const ParamPoint& a, const ParamPoint& b) {
  if (a.index && b.index) return *a.index == *b.index;
  if (a.coords.size() != b.coords.size()) return false;
  if (a.coords.size() == 0) return false;
  return (a.coords - b.coords).cwiseAbs().maxCoeff() <= kFeasibilityTol;
}

void check_box_arity(const ParamRegion& r, Eigen::Index n) {
  if (static_cast<Eigen::Index>(r.intervals().size()) != n) {
    throw StructuralError("box region has " + std::to_string(r.intervals().size()) +
                          " intervals but the point has " + std::to_string(n) + " coordinates");
  }
}

bool satisfies(Relation rel, double h) {
  if (std::isnan(h)) return false;
  switch (rel) {
    case Relation::Le: return h <= kFeasibilityTol;
    case Relation::Lt: return h < 0.0;
    case Relation::Eq: return std::abs(h) <= kFeasibilityTol;
    case Relation::Gt: return h > 0.0;
    case Relation::Ge: return h >= -kFeasibilityTol;
  }
  return false;
}

double violation_impl(const ParamRegion& r, const Eigen::VectorXd& x, bool negated) {
  using K = ParamRegion::Kind;
  switch (r.kind()) {
    case K::Full:
      return negated ? kInf : 0.0;
    case K::Empty:
      return negated ? 0.0 : kInf;
    case K::FiniteSet: {
      if (negated) return 0.0;
      double best = kInf;
      for (const auto& p : r.points()) {
        if (p.coords.size() == x.size()) best = std::min(best, (p.coords - x).norm());
      }
      return best;
    }
    case K::Box: {
      check_box_arity(r, x.size());
      const auto& iv = r.intervals();
      if (!negated) {
        double sq = 0.0;
        for (Eigen::Index j = 0; j < x.size(); ++j) {
          const double d = iv[j].distance(x[j]);
          sq += d * d;
        }
        return std::sqrt(sq);
      }
      // closure of the complement: zero unless strictly inside the box
      double depth = kInf;
      for (Eigen::Index j = 0; j < x.size(); ++j) {
        const double d = std::min(x[j] - iv[j].lo, iv[j].hi - x[j]);
        depth = std::min(depth, std::max(d, 0.0));
      }
      return depth;
    }
    case K::Constraint: {
      const double h = r.function()(x) - r.rhs();
      if (std::isnan(h)) return kInf;
      Relation rel = r.relation();
      if (negated) {
        switch (rel) {
          case Relation::Le: case Relation::Lt: rel = Relation::Ge; break;
          case Relation::Ge: case Relation::Gt: rel = Relation::Le; break;
          case Relation::Eq: return 0.0;
        }
      }
      switch (rel) {
        case Relation::Le: case Relation::Lt: return std::max(h, 0.0);
        case Relation::Ge: case Relation::Gt: return std::max(-h, 0.0);
        case Relation::Eq: return std::abs(h);
      }
      return kInf;
    }
    case K::Predicate: {
      const bool in = r.test()(ParamPoint(x));
      return (in != negated) ? 0.0 : 1.0;
    }
    case K::Complement:
      return violation_impl(r.children().front(), x, !negated);
    case K::Union:
    case K::Intersection: {
      // De Morgan: a negated union behaves like an intersection
      const bool as_union = (r.kind() == K::Union) != negated;
      double acc = as_union ? kInf : 0.0;
      for (const auto& c : r.children()) {
        const double v = violation_impl(c, x, negated);
        acc = as_union ? std::min(acc, v) : std::max(acc, v);
      }
      return acc;
    }
  }
  return kInf;
}

bool closure_impl(const ParamRegion& r, const ParamPoint& p, bool negated, double tol) {
  using K = ParamRegion::Kind;
  switch (r.kind()) {
    case K::FiniteSet: {
      const bool in = std::any_of(r.points().begin(), r.points().end(),
                                  [&](const ParamPoint& q) { return same_point(q, p); });
      // complement of a finite set: only its own points can fall outside the
      // closure in a finite space; in a continuous space the closure is all
      return negated ? (!in || !p.index) : in;
    }
    case K::Predicate:
      return r.test()(p) != negated;
    case K::Complement:
      return closure_impl(r.children().front(), p, !negated, tol);
    case K::Union:
    case K::Intersection: {
      const bool as_union = (r.kind() == K::Union) != negated;
      for (const auto& c : r.children()) {
        const bool v = closure_impl(c, p, negated, tol);
        if (as_union && v) return true;
        if (!as_union && !v) return false;
      }
      return !as_union;
    }
    default:
      return violation_impl(r, p.coords, negated) <= tol;
  }
}

void hull_into(std::vector<Interval>& acc, const std::vector<Interval>& b) {
  for (std::size_t j = 0; j < acc.size(); ++j) {
    acc[j].lo = std::min(acc[j].lo, b[j].lo);
    acc[j].hi = std::max(acc[j].hi, b[j].hi);
  }
}

std::vector<Interval> unbounded(int d) {
  return std::vector<Interval>(static_cast<std::size_t>(d), Interval{kNegInf, kInf, true, true});
}

}  // namespace

bool contains(const ParamRegion& r, const ParamPoint& theta) {
  using K = ParamRegion::Kind;
  switch (r.kind()) {
    case K::Full: return true;
    case K::Empty: return false;
    case K::FiniteSet:
      return std::any_of(r.points().begin(), r.points().end(),
                         [&](const ParamPoint& q) { return same_point(q, theta); });
    case K::Box: {
      check_box_arity(r, theta.coords.size());
      for (Eigen::Index j = 0; j < theta.coords.size(); ++j) {
        if (!r.intervals()[j].contains(theta.coords[j], kFeasibilityTol)) return false;
      }
      return true;
    }
    case K::Constraint:
      return satisfies(r.relation(), r.function()(theta.coords) - r.rhs());
    case K::Predicate:
      return r.test()(theta);
    case K::Complement:
      return !contains(r.children().front(), theta);
    case K::Union:
      return std::any_of(r.children().begin(), r.children().end(),
                         [&](const ParamRegion& c) { return contains(c, theta); });
    case K::Intersection:
      return std::all_of(r.children().begin(), r.children().end(),
                         [&](const ParamRegion& c) { return contains(c, theta); });
  }
  return false;
}

double violation(const ParamRegion& region, const Eigen::VectorXd& ambient) {
  return violation_impl(region, ambient, false);
}

bool closure_contains(const ParamRegion& region, const ParamPoint& theta, double tol) {
  return closure_impl(region, theta, false, tol);
}

std::optional<std::vector<Interval>> bounding_box(const ParamRegion& r, int d) {
  using K = ParamRegion::Kind;
  switch (r.kind()) {
    case K::Empty:
      return std::nullopt;
    case K::FiniteSet: {
      std::optional<std::vector<Interval>> acc;
      for (const auto& p : r.points()) {
        if (p.coords.size() != d) continue;
        std::vector<Interval> b(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) b[j] = Interval::closed(p.coords[j], p.coords[j]);
        if (!acc) acc = b; else hull_into(*acc, b);
      }
      return acc;
    }
    case K::Box: {
      if (static_cast<int>(r.intervals().size()) != d) {
        throw StructuralError("box region arity does not match the space dimension");
      }
      std::vector<Interval> b = r.intervals();
      for (auto& iv : b) iv.lo_open = iv.hi_open = false;
      return b;
    }
    case K::Union: {
      std::optional<std::vector<Interval>> acc;
      for (const auto& c : r.children()) {
        auto b = bounding_box(c, d);
        if (!b) continue;
        if (!acc) acc = b; else hull_into(*acc, *b);
      }
      return acc;
    }
    case K::Intersection: {
      std::vector<Interval> acc = unbounded(d);
      for (const auto& c : r.children()) {
        auto b = bounding_box(c, d);
        if (!b) return std::nullopt;
        for (int j = 0; j < d; ++j) {
          acc[j].lo = std::max(acc[j].lo, (*b)[j].lo);
          acc[j].hi = std::min(acc[j].hi, (*b)[j].hi);
          if (acc[j].lo > acc[j].hi) return std::nullopt;
        }
      }
      return acc;
    }
    default:
      return unbounded(d);
  }
}

std::optional<int> region_dimension(const ParamRegion& r, int space_dim) {
  if (r.declared_dimension()) return r.declared_dimension();
  using K = ParamRegion::Kind;
  switch (r.kind()) {
    case K::Full: return space_dim;
    case K::Empty: return -1;
    case K::FiniteSet: return 0;
    case K::Box: {
      const auto n = std::count_if(r.intervals().begin(), r.intervals().end(),
                                   [](const Interval& iv) { return !iv.degenerate(); });
      return std::min(static_cast<int>(n), space_dim);
    }
    case K::Complement: {
      const auto& child = r.children().front();
      if (child.kind() == K::Complement) return region_dimension(child.children().front(), space_dim);
      auto cd = region_dimension(child, space_dim);
      if (cd && *cd < space_dim) return space_dim;
      return std::nullopt;
    }
    case K::Union: {
      int best = -1;
      for (const auto& c : r.children()) {
        auto cd = region_dimension(c, space_dim);
        if (!cd) return std::nullopt;
        best = std::max(best, *cd);
      }
      return best;
    }
    default:
      return std::nullopt;
  }
}

void check_region(const ParamRegion& r, const ParamSpace& space) {
  using K = ParamRegion::Kind;
  switch (r.kind()) {
    case K::Box:
      if (static_cast<int>(r.intervals().size()) != space.ambient_dim()) {
        throw StructuralError("box region has " + std::to_string(r.intervals().size()) +
                              " intervals, parameter space has dimension " +
                              std::to_string(space.ambient_dim()));
      }
      break;
    case K::FiniteSet:
      for (const auto& p : r.points()) {
        if (p.index) {
          if (!space.is_finite() || *p.index >= space.size()) {
            throw StructuralError("finite-set region refers to an index outside the space");
          }
        } else if (p.coords.size() != space.ambient_dim()) {
          throw StructuralError("finite-set region point has the wrong number of coordinates");
        }
      }
      break;
    default:
      break;
  }
  for (const auto& c : r.children()) check_region(c, space);
}

}  // namespace lrpossib
