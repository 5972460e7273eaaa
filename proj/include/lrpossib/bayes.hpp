#pragma once

#include "lrpossib/evidence.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace lrpossib {

using DensityFn = std::function<double(const Eigen::VectorXd&)>;

/// Prior over a parameter space: weights on the points of a finite space, or
/// a density over a box of free coordinates (dimension 1 or 2).
class Prior {
 public:
  enum class Kind { Finite, Continuous };

  /// Weights in the order of the space's points; nonnegative, summing to 1.
  static Prior finite(std::vector<double> weights);
  /// Density in free coordinates over `support`. Normalization is checked
  /// by quadrature to within 1e-6.
  static Prior continuous(DensityFn density, std::vector<Interval> support);
  static Prior uniform(std::vector<Interval> support);

  Kind kind() const { return kind_; }
  const std::vector<double>& weights() const { return weights_; }
  const DensityFn& density() const { return density_; }
  const std::vector<Interval>& support() const { return support_; }

 private:
  Prior() = default;
  Kind kind_ = Kind::Finite;
  std::vector<double> weights_;
  DensityFn density_;
  std::vector<Interval> support_;
};

struct PosteriorSummary {
  /// Marginal likelihood m(x) and global supremum c(x), with their logs.
  double m_x = 0.0;
  double c_x = 0.0;
  double log_m_x = kNegInf;
  double log_c_x = kNegInf;
  double post_prob = 0.0;
  double prior_prob = 0.0;
  /// Integral of lambda over the region divided by its prior mass; absent
  /// when the prior mass is zero.
  std::optional<double> bound;
  /// Absolute quadrature error estimate (0 for finite priors).
  double error_estimate = 0.0;
};

PosteriorSummary posterior_prob(const StatModel& model, const Sample& x, const Prior& prior,
                                const ParamRegion& region, const OptConfig& cfg = {});

struct BoundCheck {
  bool holds = false;
  double nu = 0.0;
  double bound = 0.0;
  PosteriorSummary posterior;
};

/// nu(region) >= pi_x(region) m(x) / (pi(region) c(x)) - tol. Throws
/// InputError when the prior gives the region zero mass.
BoundCheck posterior_bound_check(const StatModel& model, const Sample& x, const Prior& prior,
                                 const ParamRegion& region, const OptConfig& cfg = {}, double tol = 1e-9);

struct ConsistencyCheck {
  /// pi(region) <= m(x) / c(x)
  bool applicable = false;
  /// pi_x(region) <= nu(region) + tol, when applicable.
  bool holds = true;
  double nu = 0.0;
  PosteriorSummary posterior;
};

ConsistencyCheck probability_possibility_check(const StatModel& model, const Sample& x, const Prior& prior,
                                               const ParamRegion& region, const OptConfig& cfg = {},
                                               double tol = 1e-9);

struct WalleyMoral {
  double upper = 0.0;
  double lower = 0.0;
  double uniform_posterior = 0.0;
};

/// Upper and lower likelihood-based probabilities on the normalized scale,
/// plus the posterior under a uniform prior. Finite spaces only.
WalleyMoral walley_moral(const StatModel& model, const Sample& x, const ParamRegion& region,
                         const OptConfig& cfg = {});

}  // namespace lrpossib
