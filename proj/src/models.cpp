#include "lrpossib/models.hpp"

#include "lrpossib/errors.hpp"
#include "lrpossib/hwe.hpp"
#include "lrpossib/numeric.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace lrpossib {

namespace {

bool is_integer(double v) { return std::isfinite(v) && v == std::floor(v); }

double scalar_sample(const Sample& x, const char* model) {
  if (x.values.size() != 1) {
    throw InputError(std::string(model) + ": sample must hold exactly one observation");
  }
  return x.values[0];
}

std::string format_label(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

ParamSpace integer_space(int theta_max) {
  if (theta_max < 1) throw InputError("theta_max must be >= 1");
  std::vector<std::string> labels;
  std::vector<Eigen::VectorXd> points;
  labels.reserve(theta_max);
  points.reserve(theta_max);
  for (int t = 1; t <= theta_max; ++t) {
    labels.push_back(std::to_string(t));
    points.push_back(Eigen::VectorXd::Constant(1, t));
  }
  return ParamSpace::finite(std::move(labels), std::move(points));
}

ParamSpace binomial_finite_space(const std::vector<double>& support) {
  std::vector<std::string> labels;
  std::vector<Eigen::VectorXd> points;
  for (double t : support) {
    if (!(t > 0.0 && t < 1.0)) throw InputError("binomial-finite: support points must lie in (0,1)");
    labels.push_back(format_label(t));
    points.push_back(Eigen::VectorXd::Constant(1, t));
  }
  return ParamSpace::finite(std::move(labels), std::move(points));
}

int theta_of(const ParamPoint& theta) { return static_cast<int>(std::lround(theta.coords[0])); }

}  // namespace

// ---------------------------------------------------------------- Binomial

BinomialModel::BinomialModel(int n)
    : n_(n), space_(ParamSpace::continuous({Interval::open(0.0, 1.0)})) {
  if (n < 1) throw InputError("binomial: n must be >= 1");
}

BinomialModel::BinomialModel(int n, std::vector<double> support)
    : n_(n), finite_(true), space_(binomial_finite_space(support)) {
  if (n < 1) throw InputError("binomial: n must be >= 1");
}

void BinomialModel::check_sample(const Sample& x) const {
  const double v = scalar_sample(x, "binomial");
  if (!is_integer(v) || v < 0 || v > n_) {
    throw InputError("binomial: x = " + format_label(v) + " is outside the sample space {0,...," +
                     std::to_string(n_) + "}");
  }
}

double BinomialModel::loglik(const ParamPoint& theta, const Sample& x) const {
  const double k = x.values[0];
  const double t = theta.coords[0];
  return xlogy(k, t) + xlogy(n_ - k, 1.0 - t) + log_choose(n_, k);
}

std::optional<std::vector<ParamPoint>> BinomialModel::global_mle(const Sample& x) const {
  if (finite_) return std::nullopt;
  return std::vector<ParamPoint>{ParamPoint{x.values[0] / n_}};
}

// ----------------------------------------------------------------- Poisson

PoissonModel::PoissonModel() : space_(ParamSpace::continuous({Interval::open(0.0, kInf)})) {}

void PoissonModel::check_sample(const Sample& x) const {
  const double v = scalar_sample(x, "poisson");
  if (!is_integer(v) || v < 0) throw InputError("poisson: x must be a nonnegative integer");
}

double PoissonModel::loglik(const ParamPoint& theta, const Sample& x) const {
  const double k = x.values[0];
  const double t = theta.coords[0];
  if (!std::isfinite(t)) return kNegInf;
  return -t + xlogy(k, t) - log_factorial(k);
}

std::optional<std::vector<ParamPoint>> PoissonModel::global_mle(const Sample& x) const {
  return std::vector<ParamPoint>{ParamPoint{x.values[0]}};
}

// ------------------------------------------------------------------ Normal

NormalModel::NormalModel(int n)
    : n_(n),
      space_(ParamSpace::continuous({Interval::open(kNegInf, kInf), Interval::open(0.0, kInf)})) {
  if (n < 1) throw InputError("normal: n must be >= 1");
}

void NormalModel::check_sample(const Sample& x) const {
  if (x.values.size() != 2) throw InputError("normal: sample must be {mean, variance}");
  if (!std::isfinite(x.values[0])) throw InputError("normal: sample mean must be finite");
  if (!(x.values[1] > 0.0) || !std::isfinite(x.values[1])) {
    throw InputError("normal: sample variance must be positive");
  }
}

double NormalModel::loglik(const ParamPoint& theta, const Sample& x) const {
  const double mu = theta.coords[0];
  const double s2 = theta.coords[1];
  if (!(s2 > 0.0) || !std::isfinite(s2) || !std::isfinite(mu)) return kNegInf;
  const double d = x.values[0] - mu;
  const double half_n = 0.5 * n_;
  return -half_n * std::log(2.0 * std::numbers::pi * s2) - half_n / s2 * (x.values[1] + d * d);
}

std::optional<std::vector<ParamPoint>> NormalModel::global_mle(const Sample& x) const {
  return std::vector<ParamPoint>{ParamPoint{x.values[0], x.values[1]}};
}

Sample normal_sufficient_stats(std::span<const double> data) {
  if (data.empty()) throw InputError("normal: need at least one observation");
  const Eigen::Map<const Eigen::ArrayXd> a(data.data(), static_cast<Eigen::Index>(data.size()));
  const double mean = a.mean();
  const double var = (a - mean).square().mean();
  return Sample{mean, var};
}

// --------------------------------------------------------------- Trinomial

TrinomialModel::TrinomialModel()
    : space_(ParamSpace::constrained({Interval::closed(0, 1), Interval::closed(0, 1), Interval::closed(0, 1)},
                                     Eigen::RowVector3d::Ones(), Eigen::VectorXd::Ones(1), {0, 2})) {}

void TrinomialModel::check_sample(const Sample& x) const {
  if (x.values.size() != 3) throw InputError("trinomial: sample must hold three counts");
  for (Eigen::Index i = 0; i < 3; ++i) {
    if (!is_integer(x.values[i]) || x.values[i] < 0) {
      throw InputError("trinomial: counts must be nonnegative integers");
    }
  }
  if (x.values.sum() < 1) throw InputError("trinomial: total count must be >= 1");
}

double TrinomialModel::loglik(const ParamPoint& theta, const Sample& x) const {
  double ll = log_factorial(x.values.sum());
  for (Eigen::Index i = 0; i < 3; ++i) {
    ll += xlogy(x.values[i], theta.coords[i]) - log_factorial(x.values[i]);
  }
  return ll;
}

std::optional<std::vector<ParamPoint>> TrinomialModel::global_mle(const Sample& x) const {
  return std::vector<ParamPoint>{ParamPoint(x.values / x.values.sum())};
}

std::optional<ClosedFormSup> TrinomialModel::restricted_max(const ParamRegion& region, const Sample& x) const {
  const std::string& fam = region.family();
  if (fam != kHweEquilibriumFamily && fam != kHweInbreedingFamily && fam != kHweOutbreedingFamily) {
    return std::nullopt;
  }
  const HweSample s = HweSample::from_sample(x);
  const int side = hwe_mle_side(s);
  const bool mle_in_closure = (fam == kHweInbreedingFamily && side <= 0) ||
                              (fam == kHweOutbreedingFamily && side >= 0);
  if (mle_in_closure) {
    ParamPoint mle(x.values / x.values.sum());
    return ClosedFormSup{mle, loglik(mle, x)};
  }
  // Equilibrium curve, or the side not containing the MLE: by concavity of
  // the log-likelihood the supremum sits on the curve.
  const HweCurveSup c = hwe_curve_sup(s);
  return ClosedFormSup{c.tilde_theta, loglik(c.tilde_theta, x)};
}

// ------------------------------------------------------------------ Fraser

FraserModel::FraserModel(int theta_max) : theta_max_(theta_max), space_(integer_space(theta_max)) {}

FraserModel FraserModel::for_sample(int x) { return FraserModel(10 * x + 1); }

void FraserModel::check_sample(const Sample& x) const {
  const double v = scalar_sample(x, "fraser");
  if (!is_integer(v) || v < 1) throw InputError("fraser: x must be an integer >= 1");
}

double FraserModel::loglik(const ParamPoint& theta, const Sample& x) const {
  const long t = theta_of(theta);
  const long k = std::lround(x.values[0]);
  if (k == t / 2 || k == 2 * t || k == 2 * t + 1) return -std::log(3.0);
  return kNegInf;
}

// ---------------------------------------------------------------- Severini

SeveriniModel::SeveriniModel(int theta_max) : theta_max_(theta_max), space_(integer_space(theta_max)) {}

SeveriniModel SeveriniModel::for_sample(int x) { return SeveriniModel(10 * x + 1); }

void SeveriniModel::check_sample(const Sample& x) const {
  const double v = scalar_sample(x, "severini");
  if (!is_integer(v) || v < 1) throw InputError("severini: x must be an integer >= 1");
}

double SeveriniModel::loglik(const ParamPoint& theta, const Sample& x) const {
  const long t = theta_of(theta);
  const long k = std::lround(x.values[0]);
  if (t == 1 || t % 2 == 0) {
    if (k == (t + 1) / 2 || k == 2 * t || k == 2 * t + 1) return -std::log(3.0);
    return kNegInf;
  }
  if (k == (t - 1) / 2) return std::log(10.0 / 24.0);
  if (k == 2 * t || k == 2 * t + 1) return std::log(7.0 / 24.0);
  return kNegInf;
}

// ------------------------------------------------------------ FiniteTable

FiniteTableModel::FiniteTableModel(std::vector<std::string> labels, std::vector<Eigen::VectorXd> points,
                                   Eigen::MatrixXd likelihood)
    : space_(ParamSpace::finite(std::move(labels), std::move(points))), lik_(std::move(likelihood)) {
  if (static_cast<std::size_t>(lik_.rows()) != space_.size() || lik_.cols() < 1) {
    throw InputError("finite-table: likelihood must have one row per parameter point");
  }
  if (!lik_.allFinite() || (lik_.array() < 0.0).any()) {
    throw InputError("finite-table: likelihood entries must be finite and nonnegative");
  }
}

namespace {

std::vector<std::string> default_labels(Eigen::Index n) {
  std::vector<std::string> out;
  for (Eigen::Index i = 0; i < n; ++i) out.push_back("t" + std::to_string(i));
  return out;
}

std::vector<Eigen::VectorXd> default_points(Eigen::Index n) {
  std::vector<Eigen::VectorXd> out;
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(Eigen::VectorXd::Constant(1, static_cast<double>(i)));
  return out;
}

}  // namespace

FiniteTableModel::FiniteTableModel(Eigen::MatrixXd likelihood)
    : FiniteTableModel(default_labels(likelihood.rows()), default_points(likelihood.rows()), likelihood) {}

void FiniteTableModel::check_sample(const Sample& x) const {
  const double v = scalar_sample(x, "finite-table");
  if (!is_integer(v) || v < 0 || v >= lik_.cols()) {
    throw InputError("finite-table: x must index a column of the likelihood table");
  }
}

double FiniteTableModel::loglik(const ParamPoint& theta, const Sample& x) const {
  std::size_t i = 0;
  if (theta.index) {
    i = *theta.index;
  } else if (auto found = space_.find_coords(theta.coords)) {
    i = *found;
  } else {
    return kNegInf;
  }
  const double l = lik_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(x.values[0]));
  return l > 0.0 ? std::log(l) : kNegInf;
}

}  // namespace lrpossib
