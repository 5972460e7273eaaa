#include "lrpossib/intervals.hpp"

#include "lrpossib/errors.hpp"
#include "lrpossib/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace lrpossib {

namespace {

bool nonempty(const Interval& iv) {
  if (std::isnan(iv.lo) || std::isnan(iv.hi)) return false;
  if (iv.lo < iv.hi) return true;
  return iv.lo == iv.hi && std::isfinite(iv.lo) && !iv.lo_open && !iv.hi_open;
}

Interval normalized(Interval iv) {
  if (!std::isfinite(iv.lo)) iv.lo_open = true;
  if (!std::isfinite(iv.hi)) iv.hi_open = true;
  return iv;
}

// lower end of a is strictly before lower end of b
bool starts_before(const Interval& a, const Interval& b) {
  if (a.lo != b.lo) return a.lo < b.lo;
  return !a.lo_open && b.lo_open;
}

}  // namespace

IntervalSet::IntervalSet(std::vector<Interval> parts) {
  std::vector<Interval> kept;
  for (auto iv : parts) {
    iv = normalized(iv);
    if (nonempty(iv)) kept.push_back(iv);
  }
  std::sort(kept.begin(), kept.end(), starts_before);
  for (const auto& iv : kept) {
    if (!parts_.empty()) {
      Interval& last = parts_.back();
      const bool touches = iv.lo < last.hi || (iv.lo == last.hi && !(iv.lo_open && last.hi_open));
      if (touches) {
        if (iv.hi > last.hi) {
          last.hi = iv.hi;
          last.hi_open = iv.hi_open;
        } else if (iv.hi == last.hi) {
          last.hi_open = last.hi_open && iv.hi_open;
        }
        continue;
      }
    }
    parts_.push_back(iv);
  }
}

bool IntervalSet::contains(double t) const {
  return std::any_of(parts_.begin(), parts_.end(), [t](const Interval& iv) { return iv.contains(t); });
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  for (const auto& a : parts_) {
    for (const auto& b : other.parts_) {
      Interval c;
      if (a.lo > b.lo) {
        c.lo = a.lo;
        c.lo_open = a.lo_open;
      } else if (b.lo > a.lo) {
        c.lo = b.lo;
        c.lo_open = b.lo_open;
      } else {
        c.lo = a.lo;
        c.lo_open = a.lo_open || b.lo_open;
      }
      if (a.hi < b.hi) {
        c.hi = a.hi;
        c.hi_open = a.hi_open;
      } else if (b.hi < a.hi) {
        c.hi = b.hi;
        c.hi_open = b.hi_open;
      } else {
        c.hi = a.hi;
        c.hi_open = a.hi_open || b.hi_open;
      }
      out.push_back(c);
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::complement_in(const Interval& domain) const {
  std::vector<Interval> gaps;
  double cur = kNegInf;
  bool cur_open = true;
  for (const auto& iv : parts_) {
    gaps.push_back({cur, iv.lo, cur_open, !iv.lo_open});
    cur = iv.hi;
    cur_open = !iv.hi_open;
  }
  gaps.push_back({cur, kInf, cur_open, true});
  return IntervalSet(std::move(gaps)).intersect(IntervalSet::of(domain));
}

namespace {

struct Slicer {
  const Line& line;
  Interval domain;
  Interval range;
  int samples;

  std::vector<double> grid() const {
    std::vector<double> ts(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
      ts[i] = range.lo + (range.hi - range.lo) * static_cast<double>(i) / (samples - 1);
    }
    ts.front() = range.lo;
    ts.back() = range.hi;
    return ts;
  }

  // boundary between a member point `in` and a non-member `out`
  static double bisect(const std::function<bool(double)>& member, double in, double out) {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (in + out);
      if (mid == in || mid == out) break;
      if (member(mid)) {
        in = mid;
      } else {
        out = mid;
      }
    }
    return in;
  }

  IntervalSet sampled(const std::function<bool(double)>& member) const {
    const auto ts = grid();
    std::vector<char> in(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) in[i] = member(ts[i]) ? 1 : 0;
    std::vector<Interval> runs;
    std::size_t i = 0;
    while (i < ts.size()) {
      if (!in[i]) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j + 1 < ts.size() && in[j + 1]) ++j;
      Interval iv = Interval::closed(ts[i], ts[j]);
      if (i > 0) {
        iv.lo = bisect(member, ts[i], ts[i - 1]);
      } else if (!std::isfinite(domain.lo)) {
        iv.lo = kNegInf;
      }
      if (j + 1 < ts.size()) {
        iv.hi = bisect(member, ts[j], ts[j + 1]);
      } else if (!std::isfinite(domain.hi)) {
        iv.hi = kInf;
      }
      runs.push_back(iv);
      i = j + 1;
    }
    return IntervalSet(std::move(runs));
  }

  IntervalSet roots(const std::function<double(double)>& h) const {
    const auto ts = grid();
    std::vector<double> hs(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) hs[i] = h(ts[i]);
    std::vector<Interval> pts;
    auto add = [&](double t) { pts.push_back(Interval::closed(t, t)); };
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (std::isnan(hs[i])) continue;
      if (std::abs(hs[i]) <= kFeasibilityTol) {
        add(ts[i]);
        continue;
      }
      if (i + 1 < ts.size() && !std::isnan(hs[i + 1]) && std::abs(hs[i + 1]) > kFeasibilityTol &&
          (hs[i] < 0) != (hs[i + 1] < 0)) {
        double a = ts[i], b = ts[i + 1];
        const bool a_neg = hs[i] < 0;
        for (int it = 0; it < 200; ++it) {
          const double mid = 0.5 * (a + b);
          if (mid == a || mid == b) break;
          const double hm = h(mid);
          if (std::isnan(hm)) break;
          if ((hm < 0) == a_neg) {
            a = mid;
          } else {
            b = mid;
          }
        }
        add(std::abs(h(a)) <= std::abs(h(b)) ? a : b);
      }
    }
    return IntervalSet(std::move(pts));
  }

  IntervalSet run(const ParamRegion& r) const {
    using K = ParamRegion::Kind;
    switch (r.kind()) {
      case K::Full:
        return IntervalSet::of(domain);
      case K::Empty:
        return {};
      case K::FiniteSet: {
        std::vector<Interval> pts;
        const double dd = line.direction.squaredNorm();
        for (const auto& p : r.points()) {
          if (p.coords.size() != line.origin.size() || dd == 0.0) continue;
          const double t = (p.coords - line.origin).dot(line.direction) / dd;
          if ((line.at(t) - p.coords).cwiseAbs().maxCoeff() <= 1e-9) pts.push_back(Interval::closed(t, t));
        }
        return IntervalSet(std::move(pts)).intersect(IntervalSet::of(domain));
      }
      case K::Box: {
        const auto& iv = r.intervals();
        if (static_cast<Eigen::Index>(iv.size()) != line.origin.size()) {
          throw StructuralError("box region arity does not match the parameter space");
        }
        IntervalSet acc = IntervalSet::of(domain);
        for (std::size_t j = 0; j < iv.size(); ++j) {
          const double o = line.origin[j];
          const double d = line.direction[j];
          if (d == 0.0) {
            if (!iv[j].contains(o, kFeasibilityTol)) return {};
            continue;
          }
          Interval t{(iv[j].lo - o) / d, (iv[j].hi - o) / d, iv[j].lo_open, iv[j].hi_open};
          if (d < 0) t = {t.hi, t.lo, t.hi_open, t.lo_open};
          acc = acc.intersect(IntervalSet::of(t));
        }
        return acc;
      }
      case K::Constraint: {
        const auto& g = r.function();
        const double rhs = r.rhs();
        auto h = [&](double t) { return g(line.at(t)) - rhs; };
        if (r.relation() == Relation::Eq) return roots(h);
        const Relation rel = r.relation();
        return sampled([&](double t) {
          const double v = h(t);
          if (std::isnan(v)) return false;
          switch (rel) {
            case Relation::Le: return v <= kFeasibilityTol;
            case Relation::Lt: return v < 0.0;
            case Relation::Gt: return v > 0.0;
            case Relation::Ge: return v >= -kFeasibilityTol;
            case Relation::Eq: break;
          }
          return false;
        });
      }
      case K::Predicate: {
        const auto& test = r.test();
        return sampled([&](double t) { return test(ParamPoint(line.at(t))); });
      }
      case K::Complement:
        return run(r.children().front()).complement_in(domain);
      case K::Union: {
        IntervalSet acc;
        for (const auto& c : r.children()) acc = acc.unite(run(c));
        return acc;
      }
      case K::Intersection: {
        IntervalSet acc = IntervalSet::of(domain);
        for (const auto& c : r.children()) acc = acc.intersect(run(c));
        return acc;
      }
    }
    return {};
  }
};

}  // namespace

IntervalSet slice(const ParamRegion& region, const Line& line, const Interval& domain,
                  const Interval& sample_range, int samples) {
  Slicer s{line, domain, sample_range, std::max(samples, 2)};
  if (!std::isfinite(s.range.lo) || !std::isfinite(s.range.hi) || s.range.lo > s.range.hi) {
    throw NumericalError("slice: sampling range must be finite");
  }
  return s.run(region);
}

}  // namespace lrpossib
