#include "lrpossib/bayes.hpp"

#include "lrpossib/intervals.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lrpossib {

namespace {

constexpr double kQuadTol = 1e-10;
constexpr double kQuadTarget = 1e-6;

struct Integral {
  double value = 0.0;
  double error = 0.0;
};

template <typename F>
Integral integrate_pieces(F&& f, std::vector<double> cuts) {
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  Integral out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double err = 0.0;
    out.value += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, cuts[i], cuts[i + 1], 15,
                                                                              kQuadTol, &err);
    out.error += err;
  }
  return out;
}

// cut points of a region along one free coordinate
void cuts_along(const ParamRegion& r, int coord, std::vector<double>& out) {
  if (r.kind() == ParamRegion::Kind::Box) {
    const auto& iv = r.intervals()[static_cast<std::size_t>(coord)];
    for (double e : {iv.lo, iv.hi}) {
      if (std::isfinite(e)) out.push_back(e);
    }
  }
  for (const auto& c : r.children()) cuts_along(c, coord, out);
}

class Quadrature {
 public:
  Quadrature(const ParamSpace& sp, const std::vector<Interval>& support, int samples)
      : sp_(sp), support_(support), samples_(samples) {}

  // integral of f(z) over {z in support : to_ambient(z) in region}
  template <typename F>
  Integral over(const ParamRegion& region, F&& f, const std::vector<double>& hints0) const {
    const int d = static_cast<int>(support_.size());
    if (d == 1) {
      const Eigen::VectorXd o = sp_.to_ambient(Eigen::VectorXd::Zero(1));
      const Line line{o, sp_.to_ambient(Eigen::VectorXd::Ones(1)) - o};
      auto g = [&](double t) { return f(Eigen::VectorXd::Constant(1, t)); };
      return along(region, line, support_[0], g, hints0);
    }
    std::vector<double> cuts{support_[0].lo, support_[0].hi};
    const int c0 = sp_.free_coords().empty() ? 0 : sp_.free_coords()[0];
    cuts_along(region, c0, cuts);
    for (double h : hints0) cuts.push_back(h);
    std::erase_if(cuts, [&](double t) { return t < support_[0].lo || t > support_[0].hi; });
    double inner_error = 0.0;
    auto outer = [&](double z0) {
      Eigen::VectorXd a(2), b(2);
      a << z0, 0.0;
      b << z0, 1.0;
      const Eigen::VectorXd o = sp_.to_ambient(a);
      const Line line{o, sp_.to_ambient(b) - o};
      auto g = [&](double t) {
        Eigen::VectorXd z(2);
        z << z0, t;
        return f(z);
      };
      const Integral in = along(region, line, support_[1], g, {});
      inner_error = std::max(inner_error, in.error);
      return in.value;
    };
    Integral out = integrate_pieces(outer, cuts);
    out.error += inner_error * (support_[0].hi - support_[0].lo);
    return out;
  }

 private:
  const ParamSpace& sp_;
  const std::vector<Interval>& support_;
  int samples_;

  template <typename G>
  Integral along(const ParamRegion& region, const Line& line, const Interval& dom, G&& g,
                 const std::vector<double>& hints) const {
    const Interval closed_dom = Interval::closed(dom.lo, dom.hi);
    const IntervalSet set = slice(region, line, closed_dom, closed_dom, samples_);
    Integral out;
    for (const auto& part : set.parts()) {
      if (!(part.lo < part.hi)) continue;
      std::vector<double> cuts{part.lo, part.hi};
      for (double h : hints) {
        if (h > part.lo && h < part.hi) cuts.push_back(h);
      }
      const Integral piece = integrate_pieces(g, cuts);
      out.value += piece.value;
      out.error += piece.error;
    }
    return out;
  }
};

void check_support(const std::vector<Interval>& support) {
  if (support.empty() || support.size() > 2) {
    throw InputError("continuous priors are supported in dimension 1 or 2 only");
  }
  for (const auto& iv : support) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || !(iv.lo < iv.hi)) {
      throw InputError("prior support must be a finite, non-degenerate box");
    }
  }
}

}  // namespace

Prior Prior::finite(std::vector<double> weights) {
  if (weights.empty()) throw InputError("finite prior needs at least one weight");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw InputError("prior weights must be finite and nonnegative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw InputError("prior weights must sum to 1");
  Prior p;
  p.kind_ = Kind::Finite;
  p.weights_ = std::move(weights);
  return p;
}

Prior Prior::continuous(DensityFn density, std::vector<Interval> support) {
  check_support(support);
  Prior p;
  p.kind_ = Kind::Continuous;
  p.density_ = std::move(density);
  p.support_ = std::move(support);
  const ParamSpace box = ParamSpace::continuous(p.support_);
  const Quadrature q(box, p.support_, 64);
  const Integral total = q.over(ParamRegion::full(), [&](const Eigen::VectorXd& z) {
    const double v = p.density_(z);
    if (!(v >= 0.0) || !std::isfinite(v)) throw InputError("prior density must be finite and nonnegative");
    return v;
  }, {});
  if (std::abs(total.value - 1.0) > 1e-6) {
    throw InputError("prior density integrates to " + std::to_string(total.value) + ", not 1");
  }
  return p;
}

Prior Prior::uniform(std::vector<Interval> support) {
  check_support(support);
  double vol = 1.0;
  for (const auto& iv : support) vol *= iv.hi - iv.lo;
  return continuous([vol](const Eigen::VectorXd&) { return 1.0 / vol; }, std::move(support));
}

PosteriorSummary posterior_prob(const StatModel& model, const Sample& x, const Prior& prior,
                                const ParamRegion& region, const OptConfig& cfg) {
  const ParamSpace& sp = model.space();
  check_region(region, sp);
  const SupResult g = global_sup(model, x, cfg);
  if (g.sup_loglik == kNegInf) throw InputError("the likelihood is zero everywhere for this sample (condition C1 fails)");
  PosteriorSummary s;
  s.log_c_x = g.sup_loglik;
  s.c_x = std::exp(g.sup_loglik);

  double scaled_m = 0.0, scaled_region = 0.0, prior_region = 0.0;
  if (prior.kind() == Prior::Kind::Finite) {
    if (!sp.is_finite() || prior.weights().size() != sp.size()) {
      throw InputError("finite prior needs one weight per point of a finite parameter space");
    }
    for (std::size_t i = 0; i < sp.size(); ++i) {
      const ParamPoint p = sp.point(i);
      const double w = prior.weights()[i];
      const double lam = std::exp(log_lambda(model, x, p, g));
      scaled_m += w * lam;
      if (contains(region, p)) {
        scaled_region += w * lam;
        prior_region += w;
      }
    }
  } else {
    if (sp.is_finite() || sp.dim() != static_cast<int>(prior.support().size())) {
      throw InputError("continuous prior dimension does not match the parameter space");
    }
    const Quadrature q(sp, prior.support(), sp.dim() == 1 ? cfg.grid_1d : 128);
    auto weighted = [&](const Eigen::VectorXd& z) {
      const Eigen::VectorXd theta = sp.to_ambient(z);
      if (sp.bound_violation(theta) > kFeasibilityTol) return 0.0;
      return std::exp(log_lambda(model, x, ParamPoint(theta), g)) * prior.density()(z);
    };
    auto dens = [&](const Eigen::VectorXd& z) { return prior.density()(z); };
    std::vector<double> hints;
    if (g.witness) hints.push_back(sp.to_free(g.witness->coords)[0]);
    const Integral all = q.over(ParamRegion::full(), weighted, hints);
    const Integral in = q.over(region, weighted, hints);
    const Integral mass = q.over(region, dens, {});
    scaled_m = all.value;
    scaled_region = std::clamp(in.value, 0.0, all.value);
    prior_region = std::clamp(mass.value, 0.0, 1.0);
    s.error_estimate = (all.error + in.error) * s.c_x;
    const double rel = (all.error + in.error) / std::max(all.value, 1e-300);
    if (rel > kQuadTarget || mass.error > kQuadTarget) {
      throw NumericalError("quadrature did not reach the target accuracy (relative error estimate " +
                           std::to_string(rel) + ")");
    }
  }
  s.log_m_x = scaled_m > 0.0 ? s.log_c_x + std::log(scaled_m) : kNegInf;
  s.m_x = std::exp(s.log_m_x);
  s.post_prob = scaled_m > 0.0 ? std::clamp(scaled_region / scaled_m, 0.0, 1.0) : 0.0;
  s.prior_prob = prior_region;
  if (prior_region > 0.0) s.bound = scaled_region / prior_region;
  return s;
}

BoundCheck posterior_bound_check(const StatModel& model, const Sample& x, const Prior& prior,
                                 const ParamRegion& region, const OptConfig& cfg, double tol) {
  BoundCheck out;
  out.posterior = posterior_prob(model, x, prior, region, cfg);
  if (!out.posterior.bound) throw InputError("the prior gives the region zero mass; the bound is undefined");
  out.bound = *out.posterior.bound;
  out.nu = nu(model, x, region, cfg).nu;
  out.holds = out.nu >= out.bound - tol;
  return out;
}

ConsistencyCheck probability_possibility_check(const StatModel& model, const Sample& x, const Prior& prior,
                                               const ParamRegion& region, const OptConfig& cfg, double tol) {
  ConsistencyCheck out;
  out.posterior = posterior_prob(model, x, prior, region, cfg);
  out.nu = nu(model, x, region, cfg).nu;
  const double ratio = std::exp(out.posterior.log_m_x - out.posterior.log_c_x);
  out.applicable = out.posterior.prior_prob <= ratio;
  out.holds = !out.applicable || out.posterior.post_prob <= out.nu + tol;
  return out;
}

WalleyMoral walley_moral(const StatModel& model, const Sample& x, const ParamRegion& region, const OptConfig& cfg) {
  const ParamSpace& sp = model.space();
  if (!sp.is_finite()) throw UnsupportedError("Walley-Moral measures need a finite parameter space");
  const SupResult g = global_sup(model, x, cfg);
  WalleyMoral w;
  w.upper = nu(model, x, region, cfg, &g).nu;
  w.lower = 1.0 - nu(model, x, ParamRegion::complement(region), cfg, &g).nu;
  double all = 0.0, in = 0.0;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    const ParamPoint p = sp.point(i);
    const double lam = std::exp(log_lambda(model, x, p, g));
    all += lam;
    if (contains(region, p)) in += lam;
  }
  w.uniform_posterior = all > 0.0 ? in / all : 0.0;
  return w;
}

}  // namespace lrpossib
