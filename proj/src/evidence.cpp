#include "lrpossib/evidence.hpp"

#include "lrpossib/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace lrpossib {

std::string to_string(Consistency c) { return c == Consistency::Consistent ? "consistent" : "inconsistent"; }

std::string to_string(PointProfile p) {
  switch (p) {
    case PointProfile::AllEquallyPossible: return "all_equally_possible";
    case PointProfile::SingleNecessary: return "single_necessary";
    case PointProfile::Graded: return "graded";
  }
  return "unknown";
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::BothNonsharp: return "both_nonsharp";
    case Regime::SharpNull: return "sharp_null";
    case Regime::SharpAlternative: return "sharp_alternative";
  }
  return "unknown";
}

std::string to_string(Philosophy p) { return p == Philosophy::Fisherian ? "fisherian" : "neyman_pearson"; }

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Accept: return "accept";
    case Decision::Reject: return "reject";
    case Decision::Maintain: return "maintain";
  }
  return "unknown";
}

Regime parse_regime(const std::string& s) {
  if (s == "both_nonsharp") return Regime::BothNonsharp;
  if (s == "sharp_null") return Regime::SharpNull;
  if (s == "sharp_alternative") return Regime::SharpAlternative;
  throw InputError("unknown regime '" + s + "' (expected both_nonsharp, sharp_null or sharp_alternative)");
}

Philosophy parse_philosophy(const std::string& s) {
  if (s == "fisherian") return Philosophy::Fisherian;
  if (s == "neyman_pearson") return Philosophy::NeymanPearson;
  throw InputError("unknown philosophy '" + s + "' (expected fisherian or neyman_pearson)");
}

namespace {

SupResult checked_global(const StatModel& model, const Sample& x, const OptConfig& cfg) {
  SupResult g = global_sup(model, x, cfg);
  if (g.sup_loglik == kNegInf) {
    throw InputError("the likelihood is zero everywhere for this sample (condition C1 fails)");
  }
  return g;
}

}  // namespace

double log_lambda(const StatModel& model, const Sample& x, const ParamPoint& theta, const SupResult& global) {
  const double ll = model.loglik(theta, x);
  if (std::isnan(ll) || ll == kNegInf) return kNegInf;
  return std::min(ll - global.sup_loglik, 0.0);
}

EvidenceValue nu(const StatModel& model, const Sample& x, const ParamRegion& region, const OptConfig& cfg,
                 const SupResult* global) {
  EvidenceValue ev;
  ev.global = global ? *global : checked_global(model, x, cfg);
  if (ev.global.sup_loglik == kNegInf) {
    throw InputError("the likelihood is zero everywhere for this sample (condition C1 fails)");
  }
  if (region.kind() == ParamRegion::Kind::Empty) {
    check_region(region, model.space());
    ev.sup.sup_loglik = kNegInf;
    ev.nu = 0.0;
    return ev;
  }
  ev.sup = restricted_sup(model, x, region, cfg, &ev.global);
  ev.witness = ev.sup.witness;
  if (region.kind() == ParamRegion::Kind::Full) {
    ev.log_nu = 0.0;
    ev.nu = 1.0;
  } else if (ev.sup.sup_loglik == kNegInf) {
    ev.log_nu = kNegInf;
    ev.nu = 0.0;
  } else {
    ev.log_nu = std::min(ev.sup.sup_loglik - ev.global.sup_loglik, 0.0);
    ev.nu = std::clamp(std::exp(ev.log_nu), 0.0, 1.0);
  }
  ev.consistency = ev.nu >= 1.0 - kNuOneTol ? Consistency::Consistent : Consistency::Inconsistent;
  return ev;
}

bool lambda_level_set_membership(const StatModel& model, const Sample& x, const ParamPoint& theta, double alpha,
                                 const OptConfig& cfg) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InputError("alpha must lie in [0, 1]");
  model.space().check_point(theta);
  if (alpha == 0.0) return true;
  const SupResult g = checked_global(model, x, cfg);
  return log_lambda(model, x, theta, g) >= std::log(alpha);
}

int compare_consistency(double nu_a, double nu_b, double tol) {
  if (std::abs(nu_a - nu_b) <= tol) return 0;
  return nu_a < nu_b ? -1 : 1;
}

PointProfileResult point_profile(const StatModel& model, const Sample& x, const OptConfig& cfg) {
  const ParamSpace& sp = model.space();
  if (!sp.is_finite()) throw UnsupportedError("point profile needs a finite parameter space");
  const SupResult g = checked_global(model, x, cfg);
  PointProfileResult out;
  std::size_t ones = 0, zeros = 0;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    const double v = std::exp(log_lambda(model, x, sp.point(i), g));
    out.nus.push_back(v);
    if (v == 1.0) ++ones;
    if (v == 0.0) ++zeros;
  }
  if (ones == sp.size()) {
    out.kind = PointProfile::AllEquallyPossible;
  } else if (ones == 1 && zeros + 1 == sp.size()) {
    out.kind = PointProfile::SingleNecessary;
    out.necessary = static_cast<std::size_t>(std::find(out.nus.begin(), out.nus.end(), 1.0) - out.nus.begin());
  }
  return out;
}

ContourResult contour(const StatModel& model, const Sample& x, double alpha, const ContourGrid& grid,
                      const OptConfig& cfg) {
  const ParamSpace& sp = model.space();
  if (sp.is_finite()) throw UnsupportedError("contour needs a continuous parameter space");
  const int d = sp.dim();
  if (d > 2) throw UnsupportedError("contour is only available for spaces of dimension 1 or 2");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InputError("contour level alpha must lie in (0, 1]");
  if (grid.resolution < 3) throw InputError("contour resolution must be >= 3");
  const SupResult g = checked_global(model, x, cfg);
  const double log_alpha = std::log(alpha);

  auto log_lam_free = [&](const Eigen::VectorXd& z) {
    const Eigen::VectorXd theta = sp.to_ambient(z);
    if (!std::isfinite(theta.sum()) || sp.bound_violation(theta) > kFeasibilityTol) return kNegInf;
    return log_lambda(model, x, ParamPoint(theta), g);
  };

  std::vector<Interval> box = grid.box;
  const auto fb = sp.free_bounds();
  if (box.empty()) {
    const Eigen::VectorXd center = sp.to_free(g.witness->coords);
    for (int j = 0; j < d; ++j) {
      const Interval& b = fb[j];
      const double width = std::isfinite(b.lo) && std::isfinite(b.hi) ? b.hi - b.lo : 0.0;
      const double step = width > 0 ? 0.01 * width : 0.01 * std::max(1.0, std::abs(center[j]));
      double ext[2];
      for (int s = 0; s < 2; ++s) {
        const int dir = s == 0 ? -1 : 1;
        double t = center[j];
        for (int k = 0; k < 60; ++k) {
          t = center[j] + dir * step * std::ldexp(1.0, k);
          if (t <= b.lo || t >= b.hi) {
            t = std::clamp(t, b.lo, b.hi);
            break;
          }
          Eigen::VectorXd z = center;
          z[j] = t;
          if (log_lam_free(z) < log_alpha - 3.0) break;
        }
        ext[s] = std::clamp(center[j] + 2.0 * (t - center[j]), b.lo, b.hi);
      }
      box.push_back(Interval::closed(ext[0], ext[1]));
    }
  }
  if (static_cast<int>(box.size()) != d) throw InputError("contour box needs one interval per free coordinate");

  ContourResult out;
  out.alpha = alpha;
  for (int j = 0; j < d; ++j) {
    if (!(box[j].lo < box[j].hi) || !std::isfinite(box[j].lo) || !std::isfinite(box[j].hi)) {
      throw InputError("contour box must be finite and non-degenerate");
    }
    out.axes.push_back(Eigen::ArrayXd::LinSpaced(grid.resolution, box[j].lo, box[j].hi));
  }
  const std::size_t n = d == 1 ? grid.resolution : static_cast<std::size_t>(grid.resolution) * grid.resolution;
  out.points.resize(n);
  out.lambda.resize(n);
  std::vector<double> logs(n);
  parallel_for(n, resolve_threads(cfg), [&](std::size_t k) {
    Eigen::VectorXd z(d);
    if (d == 1) {
      z[0] = out.axes[0][static_cast<Eigen::Index>(k)];
    } else {
      z[0] = out.axes[0][static_cast<Eigen::Index>(k / grid.resolution)];
      z[1] = out.axes[1][static_cast<Eigen::Index>(k % grid.resolution)];
    }
    out.points[k] = sp.to_ambient(z);
    logs[k] = log_lam_free(z);
    out.lambda[k] = std::exp(logs[k]);
  });
  out.inside.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.inside[k] = logs[k] >= log_alpha;
  if (d == 2) {
    Eigen::ArrayXXd field(grid.resolution, grid.resolution);
    for (std::size_t k = 0; k < n; ++k) {
      field(static_cast<Eigen::Index>(k / grid.resolution), static_cast<Eigen::Index>(k % grid.resolution)) = logs[k];
    }
    out.boundary = marching_squares(field, out.axes[0], out.axes[1], log_alpha);
  }
  return out;
}

RatioResult likelihood_ratio_R(const StatModel& model, const Sample& x, const ParamRegion& r1,
                               const ParamRegion& r2, const OptConfig& cfg) {
  const SupResult g = checked_global(model, x, cfg);
  const EvidenceValue a = nu(model, x, r1, cfg, &g);
  const EvidenceValue b = nu(model, x, r2, cfg, &g);
  RatioResult out{a.nu, b.nu, std::nullopt};
  if (b.nu > 0.0) out.value = a.log_nu == b.log_nu ? 1.0 : std::exp(a.log_nu - b.log_nu);
  return out;
}

Regime derive_regime(const ParamRegion& null_region, const ParamSpace& space) {
  if (space.is_finite()) return Regime::BothNonsharp;
  const int D = space.dim();
  const auto dim0 = region_dimension(null_region, D);
  if (!dim0) {
    throw RegimeError("cannot derive the hypothesis regime: declare the null region's dimension or pass a regime");
  }
  if (*dim0 < D) return Regime::SharpNull;
  const auto dim1 = region_dimension(ParamRegion::complement(null_region), D);
  if (dim1 && *dim1 < D) return Regime::SharpAlternative;
  return Regime::BothNonsharp;
}

PhiVerdict phi(const StatModel& model, const Sample& x, const ParamRegion& null_region, const PhiOptions& opts,
               const OptConfig& cfg) {
  if (!(opts.a_star > 0.0 && opts.a_star < 1.0)) throw InputError("a_star must lie in (0, 1)");
  if (!(opts.b_star > 0.0 && opts.b_star < 1.0)) throw InputError("b_star must lie in (0, 1)");
  PhiVerdict v;
  v.a_star = opts.a_star;
  v.b_star = opts.b_star;
  v.philosophy = opts.philosophy;
  v.regime = opts.regime ? *opts.regime : derive_regime(null_region, model.space());

  const SupResult g = checked_global(model, x, cfg);
  v.null_value = nu(model, x, null_region, cfg, &g);
  v.complement_value = nu(model, x, ParamRegion::complement(null_region), cfg, &g);
  v.nu0 = v.null_value.nu;
  v.nu0c = v.complement_value.nu;

  if (v.regime == Regime::SharpNull && v.nu0c < 1.0 - opts.gap_tol) {
    throw RegimeError("declared sharp null, but nu(complement) = " + std::to_string(v.nu0c) +
                      " < 1: the closures of the null and its complement do not meet (condition C2 fails)");
  }
  if (v.regime == Regime::SharpAlternative && v.nu0 < 1.0 - opts.gap_tol) {
    throw RegimeError("declared sharp alternative, but nu(null) = " + std::to_string(v.nu0) +
                      " < 1: the closures of the null and its complement do not meet (condition C2 fails)");
  }

  const bool null_one = v.nu0 >= 1.0 - opts.one_tol;
  const bool comp_one = v.nu0c >= 1.0 - opts.one_tol;
  v.strong_against_complement = null_one && v.nu0c <= opts.b_star;
  v.strong_against_null = comp_one && v.nu0 <= opts.a_star;
  bool can_reject = v.strong_against_null;
  bool can_accept = v.strong_against_complement;
  if (v.regime == Regime::SharpNull) can_accept = false;
  if (v.regime == Regime::SharpAlternative) can_reject = false;
  if (v.philosophy == Philosophy::Fisherian) can_accept = false;
  v.decision = can_reject ? Decision::Reject : (can_accept ? Decision::Accept : Decision::Maintain);
  return v;
}

}  // namespace lrpossib
