#pragma once

#include "lrpossib/model.hpp"

#include <Eigen/Dense>

#include <span>
#include <string>
#include <vector>

namespace lrpossib {

/// Binomial(n, theta). The continuous variant lives on (0,1); the finite
/// variant on an explicit list of support points in (0,1).
/// Sample: {x}.
class BinomialModel final : public StatModel {
 public:
  explicit BinomialModel(int n);
  BinomialModel(int n, std::vector<double> support);

  std::string name() const override { return finite_ ? "binomial-finite" : "binomial"; }
  const ParamSpace& space() const override { return space_; }
  double loglik(const ParamPoint& theta, const Sample& x) const override;
  void check_sample(const Sample& x) const override;
  std::optional<std::vector<ParamPoint>> global_mle(const Sample& x) const override;

  int n() const { return n_; }

 private:
  int n_;
  bool finite_ = false;
  ParamSpace space_;
};

/// Poisson(theta), theta in (0, inf). Sample: {x}.
class PoissonModel final : public StatModel {
 public:
  PoissonModel();

  std::string name() const override { return "poisson"; }
  const ParamSpace& space() const override { return space_; }
  double loglik(const ParamPoint& theta, const Sample& x) const override;
  void check_sample(const Sample& x) const override;
  std::optional<std::vector<ParamPoint>> global_mle(const Sample& x) const override;

 private:
  ParamSpace space_;
};

/// i.i.d. Normal(mu, sigma2) sample of size n, parameter (mu, sigma2) in
/// R x (0, inf). Sample: sufficient statistics {mean, variance} with the
/// variance denominator n.
class NormalModel final : public StatModel {
 public:
  explicit NormalModel(int n);

  std::string name() const override { return "normal"; }
  const ParamSpace& space() const override { return space_; }
  double loglik(const ParamPoint& theta, const Sample& x) const override;
  void check_sample(const Sample& x) const override;
  std::optional<std::vector<ParamPoint>> global_mle(const Sample& x) const override;

  int n() const { return n_; }

 private:
  int n_;
  ParamSpace space_;
};

/// Reduces raw observations to the {mean, variance (denominator n)} sample
/// NormalModel consumes.
Sample normal_sufficient_stats(std::span<const double> data);

/// Trinomial(m; theta1, theta2, theta3) on the simplex, with free coordinates
/// (theta1, theta3). Sample: counts {y1, y2, y3}.
///
/// Recognizes the "hwe.equilibrium", "hwe.inbreeding" and "hwe.outbreeding"
/// region families and answers them in closed form.
class TrinomialModel final : public StatModel {
 public:
  TrinomialModel();

  std::string name() const override { return "trinomial"; }
  const ParamSpace& space() const override { return space_; }
  double loglik(const ParamPoint& theta, const Sample& x) const override;
  void check_sample(const Sample& x) const override;
  std::optional<std::vector<ParamPoint>> global_mle(const Sample& x) const override;
  std::optional<ClosedFormSup> restricted_max(const ParamRegion& region, const Sample& x) const override;

 private:
  ParamSpace space_;
};

/// Flat-likelihood counter-example: P_theta puts 1/3 on floor(theta/2),
/// 2 theta and 2 theta + 1. Parameter space {1, ..., theta_max}.
/// Sample: {x}, x >= 1.
class FraserModel final : public StatModel {
 public:
  explicit FraserModel(int theta_max);
  /// Cap theta_max = 10 x + 1, which covers every theta of positive
  /// likelihood for x.
  static FraserModel for_sample(int x);

  std::string name() const override { return "fraser"; }
  const ParamSpace& space() const override { return space_; }
  double loglik(const ParamPoint& theta, const Sample& x) const override;
  void check_sample(const Sample& x) const override;

  int theta_max() const { return theta_max_; }

 private:
  int theta_max_;
  ParamSpace space_;
};

/// Counter-example where the maximum-likelihood point is the least likely to
/// be correct under repeated sampling. Parameter space {1, ..., theta_max}.
/// Sample: {x}, x >= 1.
class SeveriniModel final : public StatModel {
 public:
  explicit SeveriniModel(int theta_max);
  static SeveriniModel for_sample(int x);

  std::string name() const override { return "severini"; }
  const ParamSpace& space() const override { return space_; }
  double loglik(const ParamPoint& theta, const Sample& x) const override;
  void check_sample(const Sample& x) const override;

  int theta_max() const { return theta_max_; }

 private:
  int theta_max_;
  ParamSpace space_;
};

/// Arbitrary finite model given by a likelihood table: row i is theta_i,
/// column j is outcome j. Sample: {j}.
class FiniteTableModel final : public StatModel {
 public:
  FiniteTableModel(std::vector<std::string> labels, std::vector<Eigen::VectorXd> points,
                   Eigen::MatrixXd likelihood);
  /// Labels "t0", "t1", ... and one-dimensional points 0, 1, ...
  explicit FiniteTableModel(Eigen::MatrixXd likelihood);

  std::string name() const override { return "finite-table"; }
  const ParamSpace& space() const override { return space_; }
  double loglik(const ParamPoint& theta, const Sample& x) const override;
  void check_sample(const Sample& x) const override;

  const Eigen::MatrixXd& likelihood() const { return lik_; }

 private:
  ParamSpace space_;
  Eigen::MatrixXd lik_;
};

}  // namespace lrpossib
