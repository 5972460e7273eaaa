#include "lrpossib/optimize.hpp"

#include "lrpossib/golden_section.hpp"
#include "lrpossib/intervals.hpp"
#include "lrpossib/nelder_mead.hpp"
#include "lrpossib/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace lrpossib {

std::string to_string(SupMethod m) {
  switch (m) {
    case SupMethod::ClosedForm: return "closed_form";
    case SupMethod::Enumeration: return "enumeration";
    case SupMethod::GoldenSection: return "golden_section";
    case SupMethod::GridRefine: return "grid_refine";
    case SupMethod::SimplexMultistart: return "simplex_multistart";
  }
  return "unknown";
}

std::string to_string(SampleStatus s) {
  switch (s) {
    case SampleStatus::Ok: return "ok";
    case SampleStatus::NotInXStar: return "not_in_Xstar";
    case SampleStatus::C1Violated: return "c1_violated";
  }
  return "unknown";
}

namespace {

constexpr double kDedupResolution = 1e-6;
constexpr int kMaxExpansions = 64;

double safe_ll(const StatModel& m, const ParamPoint& p, const Sample& x) {
  const double v = m.loglik(p, x);
  return std::isnan(v) ? kNegInf : v;
}

bool lex_less(const ParamPoint& a, const ParamPoint& b) {
  const Eigen::Index n = std::min(a.coords.size(), b.coords.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a.coords[i] != b.coords[i]) return a.coords[i] < b.coords[i];
  }
  if (a.coords.size() != b.coords.size()) return a.coords.size() < b.coords.size();
  return a.index.value_or(0) < b.index.value_or(0);
}

double tie_tol(double v, const OptConfig& cfg) { return cfg.rel_tol * std::max(1.0, std::abs(v)); }

struct Candidate {
  ParamPoint point;
  double value;
};

// Sets sup, the lexicographically sorted witness list and the witness.
void settle(SupResult& r, std::vector<Candidate> cands, double tol, bool exact) {
  r.sup_loglik = kNegInf;
  for (const auto& c : cands) r.sup_loglik = std::max(r.sup_loglik, c.value);
  r.witnesses.clear();
  r.witness.reset();
  if (r.sup_loglik == kNegInf) return;
  std::vector<ParamPoint> top;
  for (auto& c : cands) {
    const bool tie = exact ? c.value == r.sup_loglik : c.value >= r.sup_loglik - tol;
    if (tie) top.push_back(std::move(c.point));
  }
  std::stable_sort(top.begin(), top.end(), lex_less);
  for (auto& p : top) {
    const bool dup = std::any_of(r.witnesses.begin(), r.witnesses.end(), [&](const ParamPoint& q) {
      if (p.index && q.index) return *p.index == *q.index;
      return (p.coords - q.coords).cwiseAbs().maxCoeff() <= kDedupResolution;
    });
    if (!dup) r.witnesses.push_back(std::move(p));
  }
  r.witness = r.witnesses.front();
}

SupResult enumerate(const StatModel& model, const Sample& x, const ParamRegion& region) {
  const ParamSpace& sp = model.space();
  SupResult r;
  r.method = SupMethod::Enumeration;
  std::vector<Candidate> cands;
  if (sp.is_finite()) {
    for (std::size_t i = 0; i < sp.size(); ++i) {
      ParamPoint p = sp.point(i);
      if (!contains(region, p)) continue;
      const double v = safe_ll(model, p, x);
      ++r.evaluations;
      cands.push_back({std::move(p), v});
    }
  } else {
    for (const auto& p : region.points()) {
      if (!sp.closure_contains(p)) continue;
      const double v = safe_ll(model, p, x);
      ++r.evaluations;
      cands.push_back({p, v});
    }
  }
  settle(r, std::move(cands), 0.0, true);
  return r;
}

// Geometric walk from `start` in direction `dir` until the log-likelihood
// fails to increase three times in a row.
double expand(const std::function<double(double)>& f, double start, int dir, double cap, long& evals) {
  const double s0 = std::max(1.0, std::abs(start));
  double prev = f(start);
  ++evals;
  if (prev > cap) throw DivergenceError("log-likelihood exceeds the divergence cap");
  int drops = 0;
  for (int k = 1; k <= kMaxExpansions; ++k) {
    const double t = start + dir * s0 * std::ldexp(1.0, k - 1);
    const double v = f(t);
    ++evals;
    if (v > cap) throw DivergenceError("log-likelihood exceeds the divergence cap");
    drops = (v <= prev) ? drops + 1 : 0;
    prev = v;
    if (drops >= 3) return t;
  }
  throw DivergenceError("log-likelihood does not decrease along an unbounded direction");
}

class Search {
 public:
  Search(const StatModel& model, const Sample& x, const ParamRegion& region, const OptConfig& cfg,
         const SupResult& global)
      : model_(model), x_(x), region_(region), cfg_(cfg), global_(global), sp_(model.space()),
        threads_(resolve_threads(cfg)) {}

  SupResult run() { return sp_.dim() == 1 ? one_dim() : multi_dim(); }

 private:
  const StatModel& model_;
  const Sample& x_;
  const ParamRegion& region_;
  const OptConfig& cfg_;
  const SupResult& global_;
  const ParamSpace& sp_;
  int threads_;

  Eigen::VectorXd anchor_free() const {
    if (global_.witness) return sp_.to_free(global_.witness->coords);
    const auto fb = sp_.free_bounds();
    Eigen::VectorXd a(static_cast<Eigen::Index>(fb.size()));
    for (std::size_t j = 0; j < fb.size(); ++j) {
      const auto& b = fb[j];
      if (std::isfinite(b.lo) && std::isfinite(b.hi)) {
        a[j] = 0.5 * (b.lo + b.hi);
      } else if (std::isfinite(b.lo)) {
        a[j] = b.lo + 1.0;
      } else if (std::isfinite(b.hi)) {
        a[j] = b.hi - 1.0;
      } else {
        a[j] = 0.0;
      }
    }
    return a;
  }

  // ------------------------------------------------------------------ 1-D

  void landmarks(const ParamRegion& r, const Line& line, std::vector<double>& out) const {
    using K = ParamRegion::Kind;
    if (r.kind() == K::Box) {
      for (std::size_t j = 0; j < r.intervals().size(); ++j) {
        const double d = line.direction[j];
        if (d == 0.0) continue;
        for (double e : {r.intervals()[j].lo, r.intervals()[j].hi}) {
          if (std::isfinite(e)) out.push_back((e - line.origin[j]) / d);
        }
      }
    } else if (r.kind() == K::FiniteSet) {
      const double dd = line.direction.squaredNorm();
      for (const auto& p : r.points()) {
        if (p.coords.size() == line.origin.size() && dd > 0) {
          out.push_back((p.coords - line.origin).dot(line.direction) / dd);
        }
      }
    }
    for (const auto& c : r.children()) landmarks(c, line, out);
  }

  SupResult one_dim() {
    SupResult res;
    res.method = SupMethod::GoldenSection;
    const Eigen::VectorXd o = sp_.to_ambient(Eigen::VectorXd::Zero(1));
    const Line line{o, sp_.to_ambient(Eigen::VectorXd::Ones(1)) - o};
    const Interval fb = sp_.free_bounds()[0];
    const Interval domain{fb.lo, fb.hi, false, false};
    auto f = [&](double t) { return safe_ll(model_, ParamPoint(line.at(t)), x_); };

    const double t0 = std::clamp(anchor_free()[0], fb.lo, fb.hi);
    std::vector<double> marks{t0};
    landmarks(region_, line, marks);
    std::erase_if(marks, [&](double t) { return !std::isfinite(t) || t < fb.lo || t > fb.hi; });
    const auto [mn, mx] = std::minmax_element(marks.begin(), marks.end());
    Interval range;
    range.lo = std::isfinite(fb.lo) ? fb.lo : expand(f, *mn, -1, cfg_.xstar_cap, res.evaluations);
    range.hi = std::isfinite(fb.hi) ? fb.hi : expand(f, *mx, +1, cfg_.xstar_cap, res.evaluations);

    const IntervalSet set = slice(region_, line, domain, range, cfg_.grid_1d);
    if (set.empty()) {
      res.sup_loglik = kNegInf;
      res.no_feasible_point = region_.has_implicit_nodes();
      return res;
    }
    std::vector<Candidate> cands;
    bool converged = true;
    for (const auto& part : set.parts()) {
      double a = part.lo, b = part.hi;
      if (!std::isfinite(a) && !std::isfinite(b)) {
        a = expand(f, t0, -1, cfg_.xstar_cap, res.evaluations);
        b = expand(f, t0, +1, cfg_.xstar_cap, res.evaluations);
      } else if (!std::isfinite(a)) {
        a = expand(f, std::min(b, t0), -1, cfg_.xstar_cap, res.evaluations);
      } else if (!std::isfinite(b)) {
        b = expand(f, std::max(a, t0), +1, cfg_.xstar_cap, res.evaluations);
      }
      const auto [t, v, ok] = maximize_interval(f, a, b, res.evaluations);
      converged = converged && ok;
      cands.push_back({ParamPoint(line.at(t)), v});
    }
    res.converged = converged;
    settle(res, std::move(cands), tie_tol(0.0, cfg_), false);
    return res;
  }

  struct Best1 {
    double t;
    double v;
    bool converged;
  };

  Best1 maximize_interval(const std::function<double(double)>& f, double a, double b, long& evals) const {
    if (a == b) {
      ++evals;
      return {a, f(a), true};
    }
    const int n = cfg_.grid_1d;
    std::vector<double> ts(static_cast<std::size_t>(n)), vs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ts[i] = a + (b - a) * static_cast<double>(i) / (n - 1);
    ts.back() = b;
    parallel_for(ts.size(), threads_, [&](std::size_t i) { vs[i] = f(ts[i]); });
    evals += n;

    std::vector<int> peaks;
    for (int i = 0; i < n; ++i) {
      if (!std::isfinite(vs[i])) continue;
      if ((i == 0 || vs[i] >= vs[i - 1]) && (i == n - 1 || vs[i] >= vs[i + 1])) peaks.push_back(i);
    }
    std::stable_sort(peaks.begin(), peaks.end(), [&](int p, int q) { return vs[p] > vs[q]; });
    if (static_cast<int>(peaks.size()) > cfg_.multistarts) peaks.resize(static_cast<std::size_t>(cfg_.multistarts));

    Best1 best{ts[0], vs[0], true};
    for (int i = 1; i < n; ++i) {
      if (vs[i] > best.v) best = {ts[i], vs[i], true};
    }
    std::vector<ScalarMax> runs(peaks.size());
    parallel_for(peaks.size(), threads_, [&](std::size_t k) {
      const int i = peaks[k];
      const double lo = ts[static_cast<std::size_t>(std::max(i - 1, 0))];
      const double hi = ts[static_cast<std::size_t>(std::min(i + 1, n - 1))];
      runs[k] = golden_section_max(f, lo, hi, 1e-14);
    });
    bool converged = true;
    for (const auto& r : runs) {
      evals += r.evaluations;
      converged = converged && r.converged;
      if (r.f > best.v) best = {r.x, r.f, true};
    }
    best.converged = converged;
    return best;
  }

  // ------------------------------------------------------------------ n-D

  SupResult multi_dim() {
    SupResult res;
    const int d = sp_.dim();
    const auto& free = sp_.free_coords();
    auto bbox = bounding_box(region_, sp_.ambient_dim());
    if (!bbox) {
      res.no_feasible_point = false;
      return res;
    }
    const auto fb = sp_.free_bounds();
    Eigen::VectorXd lo(d), hi(d);
    for (int j = 0; j < d; ++j) {
      const Interval& b = (*bbox)[static_cast<std::size_t>(free.empty() ? j : free[j])];
      lo[j] = std::max(b.lo, fb[j].lo);
      hi[j] = std::min(b.hi, fb[j].hi);
      if (lo[j] > hi[j]) {
        res.no_feasible_point = region_.has_implicit_nodes();
        return res;
      }
    }
    Eigen::VectorXd anchor = anchor_free();
    for (int j = 0; j < d; ++j) {
      if (std::isfinite(lo[j])) anchor[j] = std::max(anchor[j], lo[j]);
      if (std::isfinite(hi[j])) anchor[j] = std::min(anchor[j], hi[j]);
    }
    for (int j = 0; j < d; ++j) {
      if (std::isfinite(lo[j]) && std::isfinite(hi[j])) continue;
      auto along = [&](double t) {
        Eigen::VectorXd z = anchor;
        z[j] = t;
        return safe_ll(model_, ParamPoint(sp_.to_ambient(z)), x_);
      };
      if (!std::isfinite(lo[j])) lo[j] = expand(along, anchor[j], -1, cfg_.xstar_cap, res.evaluations);
      if (!std::isfinite(hi[j])) hi[j] = expand(along, anchor[j], +1, cfg_.xstar_cap, res.evaluations);
    }

    const bool predicates = has_predicate(region_);
    const bool projectable = !sp_.has_equalities() && is_box_like(region_);
    const double weight = cfg_.penalty_weight;

    // objective on free coordinates; also reports feasibility
    auto objective = [&](const Eigen::VectorXd& z, double w) {
      Eigen::VectorXd zz = projectable ? Eigen::VectorXd(z.cwiseMax(lo).cwiseMin(hi)) : z;
      const Eigen::VectorXd theta = sp_.to_ambient(zz);
      if (!std::isfinite(theta.sum()) || sp_.bound_violation(theta) > kFeasibilityTol) return kNegInf;
      const double v = violation(region_, theta);
      if (!std::isfinite(v)) return kNegInf;
      const double ll = safe_ll(model_, ParamPoint(theta), x_);
      const double drift = projectable ? (z - zz).squaredNorm() : 0.0;
      return ll - w * (v * v + drift);
    };
    auto feasible_value = [&](const Eigen::VectorXd& z) -> std::optional<double> {
      const Eigen::VectorXd theta = sp_.to_ambient(z);
      if (sp_.bound_violation(theta) > kFeasibilityTol) return std::nullopt;
      if (!closure_contains(region_, ParamPoint(theta))) return std::nullopt;
      return safe_ll(model_, ParamPoint(theta), x_);
    };

    // coarse grid
    int g = cfg_.grid_nd;
    if (d >= 3) g = std::max(5, std::min(g, static_cast<int>(std::pow(2.0e6, 1.0 / d))));
    const Eigen::VectorXd h = (hi - lo) / (g - 1);
    long total = 1;
    for (int j = 0; j < d; ++j) total *= g;
    std::vector<double> gv(static_cast<std::size_t>(total));
    auto grid_point = [&](long idx) {
      Eigen::VectorXd z(d);
      for (int j = 0; j < d; ++j) {
        const long k = idx % g;
        idx /= g;
        z[j] = (k == g - 1) ? hi[j] : lo[j] + h[j] * static_cast<double>(k);
      }
      return z;
    };
    parallel_for(gv.size(), threads_, [&](std::size_t i) { gv[i] = objective(grid_point(static_cast<long>(i)), weight); });
    res.evaluations += total;

    std::vector<long> peaks;
    for (long i = 0; i < total; ++i) {
      if (!std::isfinite(gv[i])) continue;
      bool peak = true;
      long stride = 1;
      for (int j = 0; j < d && peak; ++j) {
        const long k = (i / stride) % g;
        if (k > 0 && gv[i - stride] > gv[i]) peak = false;
        if (k < g - 1 && gv[i + stride] > gv[i]) peak = false;
        stride *= g;
      }
      if (peak) peaks.push_back(i);
    }
    std::stable_sort(peaks.begin(), peaks.end(), [&](long a, long b) { return gv[a] > gv[b]; });
    if (static_cast<int>(peaks.size()) > cfg_.multistarts) peaks.resize(static_cast<std::size_t>(cfg_.multistarts));

    // local zoom around each peak
    struct Start {
      Eigen::VectorXd z;
      double f;
      Eigen::VectorXd step;
      long evals = 0;
    };
    std::vector<Start> starts(peaks.size());
    const int rounds = cfg_.refine_rounds;
    long local_total = 1;
    for (int j = 0; j < d; ++j) local_total *= 9;
    parallel_for(peaks.size(), threads_, [&](std::size_t k) {
      Start s{grid_point(peaks[k]), gv[static_cast<std::size_t>(peaks[k])], h, 0};
      Eigen::VectorXd step = h;
      for (int r = 1; r <= rounds; ++r) {
        step /= 4.0;
        Eigen::VectorXd best_z = s.z;
        double best_f = s.f;
        for (long idx = 0; idx < local_total; ++idx) {
          Eigen::VectorXd z = s.z;
          long rem = idx;
          for (int j = 0; j < d; ++j) {
            z[j] += step[j] * static_cast<double>(rem % 9 - 4);
            rem /= 9;
          }
          z = z.cwiseMax(lo).cwiseMin(hi);
          const double f = objective(z, weight);
          ++s.evals;
          if (f > best_f) {
            best_f = f;
            best_z = z;
          }
        }
        s.z = best_z;
        s.f = best_f;
      }
      s.step = 4.0 * step;
      starts[k] = std::move(s);
    });

    std::mt19937_64 rng(cfg_.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int randoms = predicates ? 0 : std::max(1, cfg_.multistarts / 2);
    for (int k = 0; k < randoms; ++k) {
      Eigen::VectorXd z(d);
      for (int j = 0; j < d; ++j) z[j] = lo[j] + (hi[j] - lo[j]) * unit(rng);
      const double f = objective(z, weight);
      ++res.evaluations;
      if (std::isfinite(f)) starts.push_back({z, f, 0.05 * (hi - lo), 0});
    }

    std::vector<Candidate> cands;
    auto consider = [&](const Eigen::VectorXd& z) {
      if (auto v = feasible_value(z)) cands.push_back({ParamPoint(sp_.to_ambient(z)), *v});
    };
    for (const auto& s : starts) {
      res.evaluations += s.evals;
      consider(s.z);
    }

    bool converged = true;
    if (predicates) {
      res.method = SupMethod::GridRefine;
    } else {
      res.method = SupMethod::SimplexMultistart;
      struct Polish {
        Eigen::VectorXd z;
        long evals = 0;
        bool ok = false;
      };
      std::vector<Polish> out(starts.size());
      const int budget = 300 * (d + 1) * (d + 1);
      parallel_for(starts.size(), threads_, [&](std::size_t k) {
        Polish p;
        auto f1 = [&](const Eigen::VectorXd& z) { return objective(z, weight); };
        SimplexResult nm = nelder_mead_max(f1, starts[k].z, starts[k].step, 1e-15, 1e-13, budget);
        p.evals += nm.evaluations;
        Eigen::VectorXd z = projectable ? Eigen::VectorXd(nm.x.cwiseMax(lo).cwiseMin(hi)) : nm.x;
        bool ok = nm.converged;
        if (!projectable) {
          long used = 0;
          bool repaired = repair(z, used);
          p.evals += used;
          if (repaired) {
            // continuation: sharper penalty from the repaired point
            auto f2 = [&](const Eigen::VectorXd& y) { return objective(y, weight * 1e4); };
            SimplexResult nm2 = nelder_mead_max(f2, z, 1e-3 * starts[k].step, 1e-16, 1e-14, budget);
            p.evals += nm2.evaluations;
            Eigen::VectorXd z2 = nm2.x;
            used = 0;
            if (repair(z2, used)) z = z2;
            p.evals += used;
          }
          ok = ok && repaired;
        }
        p.z = z;
        p.ok = ok;
        out[k] = std::move(p);
      });
      double best = kNegInf;
      bool best_ok = true;
      for (const auto& p : out) {
        res.evaluations += p.evals;
        if (auto v = feasible_value(p.z)) {
          cands.push_back({ParamPoint(sp_.to_ambient(p.z)), *v});
          if (*v > best) {
            best = *v;
            best_ok = p.ok;
          }
        }
      }
      converged = best_ok;
    }

    if (cands.empty()) {
      res.no_feasible_point = true;
      res.converged = true;
      return res;
    }
    res.converged = converged;
    double top = kNegInf;
    for (const auto& c : cands) top = std::max(top, c.value);
    settle(res, std::move(cands), tie_tol(top, cfg_), false);
    return res;
  }

  // Newton steps on the region violation until the point is feasible.
  bool repair(Eigen::VectorXd& z, long& evals) const {
    auto viol = [&](const Eigen::VectorXd& y) {
      ++evals;
      const Eigen::VectorXd theta = sp_.to_ambient(y);
      return violation(region_, theta) + sp_.bound_violation(theta);
    };
    double v = viol(z);
    for (int it = 0; it < 60 && v > 1e-12; ++it) {
      const Eigen::Index d = z.size();
      Eigen::VectorXd grad(d);
      for (Eigen::Index j = 0; j < d; ++j) {
        const double step = std::max(1e-13, std::min(1e-7, 0.1 * v)) * std::max(1.0, std::abs(z[j]));
        Eigen::VectorXd zp = z, zm = z;
        zp[j] += step;
        zm[j] -= step;
        grad[j] = (viol(zp) - viol(zm)) / (2 * step);
      }
      const double g2 = grad.squaredNorm();
      if (!(g2 > 0) || !std::isfinite(g2)) return false;
      Eigen::VectorXd next = z - (v / g2) * (1.0 + 1e-6) * grad;
      double nv = viol(next);
      // damp when the full step overshoots badly
      for (int back = 0; back < 30 && !(nv < v); ++back) {
        next = z + 0.5 * (next - z);
        nv = viol(next);
      }
      if (!(nv < v)) return false;
      z = next;
      v = nv;
    }
    return v <= 1e-9;
  }

  static bool has_predicate(const ParamRegion& r) {
    if (r.kind() == ParamRegion::Kind::Predicate) return true;
    return std::any_of(r.children().begin(), r.children().end(), has_predicate);
  }

  static bool is_box_like(const ParamRegion& r) {
    using K = ParamRegion::Kind;
    if (r.kind() == K::Box || r.kind() == K::Full) return true;
    if (r.kind() == K::Intersection) return std::all_of(r.children().begin(), r.children().end(), is_box_like);
    return false;
  }
};

SupResult closed_form_global(const StatModel& model, const Sample& x, const std::vector<ParamPoint>& mles,
                             const OptConfig& cfg) {
  SupResult r;
  r.method = SupMethod::ClosedForm;
  std::vector<Candidate> cands;
  for (const auto& p : mles) {
    cands.push_back({p, safe_ll(model, p, x)});
    ++r.evaluations;
  }
  settle(r, std::move(cands), tie_tol(0.0, cfg), true);
  return r;
}

}  // namespace

SupResult global_sup(const StatModel& model, const Sample& x, const OptConfig& cfg) {
  cfg.validate();
  model.check_sample(x);
  const ParamSpace& sp = model.space();
  if (sp.is_finite()) return enumerate(model, x, ParamRegion::full());
  if (cfg.use_closed_form) {
    if (auto mles = model.global_mle(x); mles && !mles->empty()) {
      SupResult r = closed_form_global(model, x, *mles, cfg);
      if (r.sup_loglik > cfg.xstar_cap) throw DivergenceError("log-likelihood exceeds the divergence cap");
      return r;
    }
  }
  SupResult none;
  none.sup_loglik = kNegInf;
  SupResult r = Search(model, x, ParamRegion::full(), cfg, none).run();
  if (r.sup_loglik > cfg.xstar_cap) throw DivergenceError("log-likelihood exceeds the divergence cap");
  return r;
}

SupResult restricted_sup(const StatModel& model, const Sample& x, const ParamRegion& region, const OptConfig& cfg,
                         const SupResult* global) {
  cfg.validate();
  model.check_sample(x);
  const ParamSpace& sp = model.space();
  check_region(region, sp);

  if (region.kind() == ParamRegion::Kind::Empty) {
    SupResult r;
    r.sup_loglik = kNegInf;
    return r;
  }
  if (sp.is_finite() || region.kind() == ParamRegion::Kind::FiniteSet) return enumerate(model, x, region);

  if (cfg.use_closed_form && !region.family().empty()) {
    if (auto cf = model.restricted_max(region, x)) {
      SupResult r;
      r.method = SupMethod::ClosedForm;
      r.evaluations = 1;
      r.sup_loglik = cf->loglik;
      r.witness = cf->witness;
      r.witnesses = {cf->witness};
      return r;
    }
  }

  SupResult own;
  if (!global) {
    own = global_sup(model, x, cfg);
    global = &own;
  }
  if (region.kind() == ParamRegion::Kind::Full) return *global;
  // A global witness in the closure of the region settles it, but only away
  // from the space boundary: there closure(R) and closure(R & space) differ.
  const auto reaches = [&](const ParamPoint& q) {
    const auto& b = model.space().bounds();
    for (Eigen::Index i = 0; i < q.coords.size(); ++i) {
      if (!(q.coords[i] > b[i].lo && q.coords[i] < b[i].hi)) return false;
    }
    return closure_contains(region, q);
  };
  for (const auto& w : global->witnesses) {
    if (reaches(w)) {
      SupResult r = *global;
      r.witnesses.clear();
      for (const auto& q : global->witnesses) {
        if (reaches(q)) r.witnesses.push_back(q);
      }
      r.witness = r.witnesses.front();
      return r;
    }
  }

  if (region.kind() == ParamRegion::Kind::Union) {
    SupResult best;
    best.sup_loglik = kNegInf;
    best.no_feasible_point = true;
    long evals = 0;
    bool converged = true;
    std::vector<Candidate> cands;
    std::optional<SupMethod> method;
    for (const auto& child : region.children()) {
      SupResult r = restricted_sup(model, x, child, cfg, global);
      evals += r.evaluations;
      converged = converged && r.converged;
      best.no_feasible_point = best.no_feasible_point && r.no_feasible_point;
      if (!method || r.sup_loglik > best.sup_loglik) {
        method = r.method;
        best.sup_loglik = r.sup_loglik;
      }
      for (auto& w : r.witnesses) cands.push_back({std::move(w), r.sup_loglik});
    }
    SupResult r;
    r.method = method.value_or(SupMethod::Enumeration);
    r.evaluations = evals;
    r.converged = converged;
    r.no_feasible_point = best.sup_loglik == kNegInf && best.no_feasible_point;
    settle(r, std::move(cands), tie_tol(best.sup_loglik, cfg), false);
    r.sup_loglik = best.sup_loglik;
    return r;
  }

  return Search(model, x, region, cfg, *global).run();
}

SampleStatus validate_sample(const StatModel& model, const Sample& x, const OptConfig& cfg) {
  model.check_sample(x);
  try {
    const SupResult g = global_sup(model, x, cfg);
    if (g.sup_loglik > cfg.xstar_cap) return SampleStatus::NotInXStar;
    if (g.sup_loglik == kNegInf) return SampleStatus::C1Violated;
  } catch (const DivergenceError&) {
    return SampleStatus::NotInXStar;
  }
  return SampleStatus::Ok;
}

std::vector<ParamPoint> mle_set(const StatModel& model, const Sample& x, const OptConfig& cfg) {
  const ParamSpace& sp = model.space();
  const SupResult g = global_sup(model, x, cfg);
  if (g.sup_loglik == kNegInf) return {};
  if (!sp.is_finite()) return g.witnesses;
  const double floor = g.sup_loglik + std::log1p(-1e-9);
  std::vector<ParamPoint> out;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    ParamPoint p = sp.point(i);
    if (safe_ll(model, p, x) >= floor) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace lrpossib
