#pragma once

#include "lrpossib/config.hpp"
#include "lrpossib/errors.hpp"
#include "lrpossib/model.hpp"
#include "lrpossib/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lrpossib {

enum class SupMethod { ClosedForm, Enumeration, GoldenSection, GridRefine, SimplexMultistart };

std::string to_string(SupMethod m);

struct SupResult {
  double sup_loglik = kNegInf;
  std::optional<ParamPoint> witness;
  SupMethod method = SupMethod::Enumeration;
  long evaluations = 0;
  bool converged = true;
  /// The search probed no point of the region (as opposed to a region that
  /// is empty by construction).
  bool no_feasible_point = false;
  /// Every maximizer found within tolerance, lexicographically sorted; the
  /// first one is `witness`.
  std::vector<ParamPoint> witnesses;
};

/// Raised when the likelihood grows without bound along a search direction.
class DivergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

enum class SampleStatus { Ok, NotInXStar, C1Violated };

std::string to_string(SampleStatus s);

/// Throws InputError when x is outside the sample space.
SampleStatus validate_sample(const StatModel& model, const Sample& x, const OptConfig& cfg = {});

SupResult global_sup(const StatModel& model, const Sample& x, const OptConfig& cfg = {});

/// sup{loglik(theta, x) : theta in closure(region)}. `global` may carry a
/// previously computed global_sup for the same inputs; it anchors searches
/// over unbounded directions.
SupResult restricted_sup(const StatModel& model, const Sample& x, const ParamRegion& region,
                         const OptConfig& cfg = {}, const SupResult* global = nullptr);

/// Maximum-likelihood set.
std::vector<ParamPoint> mle_set(const StatModel& model, const Sample& x, const OptConfig& cfg = {});

}  // namespace lrpossib
