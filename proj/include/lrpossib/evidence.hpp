#pragma once

#include "lrpossib/contour.hpp"
#include "lrpossib/optimize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lrpossib {

/// Tolerance for treating a computed nu as equal to one.
inline constexpr double kNuOneTol = 1e-6;

enum class Consistency { Consistent, Inconsistent };

std::string to_string(Consistency c);

struct EvidenceValue {
  double nu = 0.0;
  double log_nu = kNegInf;
  std::optional<ParamPoint> witness;
  SupResult sup;
  SupResult global;
  Consistency consistency = Consistency::Inconsistent;
};

/// nu_x(region) = exp(sup_region loglik - sup loglik), clamped to [0, 1].
/// Throws InputError when the global likelihood supremum is zero.
EvidenceValue nu(const StatModel& model, const Sample& x, const ParamRegion& region, const OptConfig& cfg = {},
                 const SupResult* global = nullptr);

/// lambda(theta, x) >= alpha, decided in the log domain.
bool lambda_level_set_membership(const StatModel& model, const Sample& x, const ParamPoint& theta, double alpha,
                                 const OptConfig& cfg = {});

/// log lambda(theta, x).
double log_lambda(const StatModel& model, const Sample& x, const ParamPoint& theta, const SupResult& global);

/// -1, 0 or 1 as nu_a is smaller than, equal to (within tol) or larger than
/// nu_b: the smaller one is the more inconsistent with the data.
int compare_consistency(double nu_a, double nu_b, double tol = 1e-12);

enum class PointProfile { AllEquallyPossible, SingleNecessary, Graded };

std::string to_string(PointProfile p);

struct PointProfileResult {
  PointProfile kind = PointProfile::Graded;
  std::vector<double> nus;
  /// Index of the only point with positive likelihood (SingleNecessary).
  std::optional<std::size_t> necessary;
};

/// nu({theta}) for every point of a finite space and its classification.
PointProfileResult point_profile(const StatModel& model, const Sample& x, const OptConfig& cfg = {});

struct ContourGrid {
  int resolution = 101;
  /// Free-coordinate extent; derived from the level set when empty.
  std::vector<Interval> box;
};

struct ContourResult {
  double alpha = 1.0;
  /// Grid axes in free coordinates (one axis for dim 1).
  std::vector<Eigen::ArrayXd> axes;
  /// Ambient coordinates of every grid node, row-major over the axes.
  std::vector<Eigen::VectorXd> points;
  std::vector<double> lambda;
  std::vector<bool> inside;
  /// Boundary of the level set (dim 2 only), in free coordinates.
  std::vector<Polyline> boundary;
};

/// Grid approximation of Lambda_alpha for continuous spaces of dimension <= 2.
ContourResult contour(const StatModel& model, const Sample& x, double alpha, const ContourGrid& grid = {},
                      const OptConfig& cfg = {});

struct RatioResult {
  double nu1 = 0.0;
  double nu2 = 0.0;
  /// nu1 / nu2; absent when nu2 = 0.
  std::optional<double> value;
};

RatioResult likelihood_ratio_R(const StatModel& model, const Sample& x, const ParamRegion& r1,
                               const ParamRegion& r2, const OptConfig& cfg = {});

enum class Regime { BothNonsharp, SharpNull, SharpAlternative };
enum class Philosophy { Fisherian, NeymanPearson };
enum class Decision { Accept, Reject, Maintain };

std::string to_string(Regime r);
std::string to_string(Philosophy p);
std::string to_string(Decision d);
Regime parse_regime(const std::string& s);
Philosophy parse_philosophy(const std::string& s);

/// Regime from dimensions: finite spaces are never sharp; a null of lower
/// dimension than the space is sharp; a null whose complement has lower
/// dimension makes the alternative sharp. A full-dimensional null whose
/// complement dimension is unknown is treated as non-sharp. Throws
/// RegimeError when the null's dimension is unknown.
Regime derive_regime(const ParamRegion& null_region, const ParamSpace& space);

struct PhiOptions {
  double a_star = 0.01;
  double b_star = 0.01;
  Philosophy philosophy = Philosophy::NeymanPearson;
  std::optional<Regime> regime;
  double one_tol = kNuOneTol;
  /// nu of the complement below 1 - gap_tol contradicts a sharp null.
  double gap_tol = 1e-3;
};

struct PhiVerdict {
  EvidenceValue null_value;
  EvidenceValue complement_value;
  double nu0 = 0.0;
  double nu0c = 0.0;
  Regime regime = Regime::BothNonsharp;
  Decision decision = Decision::Maintain;
  double a_star = 0.01;
  double b_star = 0.01;
  Philosophy philosophy = Philosophy::NeymanPearson;
  /// nu0 = 1 with a complement below b_star: the data speak strongly
  /// against the complement.
  bool strong_against_complement = false;
  /// nu0c = 1 with a null below a_star.
  bool strong_against_null = false;
};

PhiVerdict phi(const StatModel& model, const Sample& x, const ParamRegion& null_region, const PhiOptions& opts = {},
               const OptConfig& cfg = {});

}  // namespace lrpossib
