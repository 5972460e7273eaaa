#pragma once

#include "lrpossib/param_space.hpp"
#include "lrpossib/region.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lrpossib {

/// Closed-form restricted maximizer returned by a model for a region family
/// it recognizes.
struct ClosedFormSup {
  ParamPoint witness;
  double loglik = 0.0;
};

/// A statistical model reduced to what evidence computations need: a
/// parameter space and a log-likelihood.
///
/// Implementations are immutable; loglik must be safe to call concurrently.
/// loglik is evaluated on the closure of the space and returns -inf exactly
/// when the likelihood is zero. It never returns NaN.
class StatModel {
 public:
  virtual ~StatModel() = default;

  virtual std::string name() const = 0;
  virtual const ParamSpace& space() const = 0;
  virtual double loglik(const ParamPoint& theta, const Sample& x) const = 0;

  /// Throws InputError when x is not a point of the sample space.
  virtual void check_sample(const Sample& x) const = 0;

  /// Maximum-likelihood set in closed form, when the model knows it.
  virtual std::optional<std::vector<ParamPoint>> global_mle(const Sample& /*x*/) const {
    return std::nullopt;
  }

  /// Closed-form supremum over a region whose family() the model recognizes.
  virtual std::optional<ClosedFormSup> restricted_max(const ParamRegion& /*region*/,
                                                      const Sample& /*x*/) const {
    return std::nullopt;
  }
};

using ModelPtr = std::shared_ptr<const StatModel>;

}  // namespace lrpossib
