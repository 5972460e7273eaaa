#include "lrpossib/spec_io.hpp"

#include "lrpossib/hwe.hpp"
#include "lrpossib/models.hpp"

#include <cmath>
#include <set>

namespace lrpossib {

using nlohmann::json;

namespace {

std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw SpecError(path, "expected an object");
}

void allow_only(const json& j, std::initializer_list<const char*> keys, const std::string& path) {
  expect_object(j, path);
  const std::set<std::string> ok(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items()) {
    if (!ok.count(k)) throw SpecError(at(path, k), "unknown field");
  }
}

const json& require(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw SpecError(at(path, key), "missing required field");
  return *it;
}

double real_of(const json& v, const std::string& path) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf" || s == "+inf") return kInf;
    if (s == "-inf") return kNegInf;
  }
  if (v.is_null()) throw SpecError(path, "expected a number");
  throw SpecError(path, "expected a number (or \"inf\"/\"-inf\")");
}

double finite_of(const json& v, const std::string& path) {
  const double d = real_of(v, path);
  if (!std::isfinite(d)) throw SpecError(path, "expected a finite number");
  return d;
}

long long int_of(const json& v, const std::string& path) {
  if (v.is_number_integer()) return v.get<long long>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::isfinite(d) && d == std::floor(d) && std::abs(d) < 9e15) return static_cast<long long>(d);
  }
  throw SpecError(path, "expected an integer");
}

bool bool_of(const json& v, const std::string& path) {
  if (!v.is_boolean()) throw SpecError(path, "expected true or false");
  return v.get<bool>();
}

std::string string_of(const json& v, const std::string& path) {
  if (!v.is_string()) throw SpecError(path, "expected a string");
  return v.get<std::string>();
}

std::vector<double> reals_of(const json& v, const std::string& path) {
  if (!v.is_array()) throw SpecError(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(finite_of(v[i], at(path, i)));
  return out;
}

Eigen::VectorXd vector_of(const json& v, const std::string& path) {
  const auto r = reals_of(v, path);
  return Eigen::Map<const Eigen::VectorXd>(r.data(), static_cast<Eigen::Index>(r.size()));
}

int positive_int(const json& params, const char* key, const std::string& path) {
  const long long n = int_of(require(params, key, path), at(path, key));
  if (n < 1 || n > 100000000) throw SpecError(at(path, key), "must be a positive integer");
  return static_cast<int>(n);
}

// sample value used for the default parameter cap of counter-example models
int scalar_x(const json& sample, const std::string& path) {
  const json* v = &sample;
  if (sample.is_object() && sample.contains("x")) v = &sample.at("x");
  const long long x = int_of(*v, sample.is_object() ? at(path, "x") : path);
  if (x < 1 || x > 10000000) throw SpecError(path, "x must be a positive integer");
  return static_cast<int>(x);
}

Relation relation_of(const json& v, const std::string& path) {
  const std::string s = string_of(v, path);
  if (s == "<=") return Relation::Le;
  if (s == "<") return Relation::Lt;
  if (s == "=" || s == "==") return Relation::Eq;
  if (s == ">") return Relation::Gt;
  if (s == ">=") return Relation::Ge;
  throw SpecError(path, "unknown relation '" + s + "' (expected <=, <, =, >, >=)");
}

ScalarFn function_of(const json& j, const ParamSpace& space, const std::string& path) {
  const std::string kind = string_of(require(j, "kind", path), at(path, "kind"));
  const Eigen::Index d = space.ambient_dim();
  auto index_of = [&](const json& v, const std::string& p) {
    const long long i = int_of(v, p);
    if (i < 0 || i >= d) throw SpecError(p, "coordinate index out of range");
    return static_cast<Eigen::Index>(i);
  };
  if (kind == "coord") {
    allow_only(j, {"kind", "index"}, path);
    const Eigen::Index i = index_of(require(j, "index", path), at(path, "index"));
    return [i](const Eigen::VectorXd& t) { return t[i]; };
  }
  if (kind == "linear") {
    allow_only(j, {"kind", "coef", "offset"}, path);
    const Eigen::VectorXd coef = vector_of(require(j, "coef", path), at(path, "coef"));
    if (coef.size() != d) throw SpecError(at(path, "coef"), "needs one coefficient per coordinate");
    const double offset = j.contains("offset") ? finite_of(j.at("offset"), at(path, "offset")) : 0.0;
    return [coef, offset](const Eigen::VectorXd& t) { return coef.dot(t) + offset; };
  }
  if (kind == "sqrt_sum") {
    allow_only(j, {"kind", "indices"}, path);
    const json& idx = require(j, "indices", path);
    if (!idx.is_array() || idx.empty()) throw SpecError(at(path, "indices"), "expected a non-empty array");
    std::vector<Eigen::Index> ids;
    for (std::size_t k = 0; k < idx.size(); ++k) ids.push_back(index_of(idx[k], at(at(path, "indices"), k)));
    return [ids](const Eigen::VectorXd& t) {
      double s = 0.0;
      for (auto i : ids) s += std::sqrt(std::max(t[i], 0.0));
      return s;
    };
  }
  throw SpecError(at(path, "kind"), "unknown function kind '" + kind + "' (expected coord, linear, sqrt_sum)");
}

Interval interval_of(const json& v, const std::string& path) {
  Interval iv;
  if (v.is_array()) {
    if (v.size() != 2) throw SpecError(path, "expected [lo, hi]");
    iv = {real_of(v[0], at(path, 0)), real_of(v[1], at(path, 1)), false, false};
  } else {
    allow_only(v, {"lo", "hi", "lo_open", "hi_open"}, path);
    iv.lo = real_of(require(v, "lo", path), at(path, "lo"));
    iv.hi = real_of(require(v, "hi", path), at(path, "hi"));
    if (v.contains("lo_open")) iv.lo_open = bool_of(v.at("lo_open"), at(path, "lo_open"));
    if (v.contains("hi_open")) iv.hi_open = bool_of(v.at("hi_open"), at(path, "hi_open"));
  }
  if (!(iv.lo <= iv.hi)) throw SpecError(path, "interval needs lo <= hi");
  if (!std::isfinite(iv.lo)) iv.lo_open = true;
  if (!std::isfinite(iv.hi)) iv.hi_open = true;
  return iv;
}

}  // namespace

const NamedRegion& AnalysisSpec::region(std::size_t i) const {
  if (i >= regions.size()) {
    throw SpecError("regions", "this command needs at least " + std::to_string(i + 1) + " region(s)");
  }
  return regions[i];
}

ModelPtr make_model(const std::string& name, const json& params_in, const json& sample, const std::string& path) {
  const json params = params_in.is_null() ? json::object() : params_in;
  const std::string pp = at(path, "params");
  expect_object(params, pp);
  if (name == "binomial") {
    allow_only(params, {"n"}, pp);
    return std::make_shared<BinomialModel>(positive_int(params, "n", pp));
  }
  if (name == "binomial-finite") {
    allow_only(params, {"n", "support"}, pp);
    return std::make_shared<BinomialModel>(positive_int(params, "n", pp),
                                           reals_of(require(params, "support", pp), at(pp, "support")));
  }
  if (name == "poisson") {
    allow_only(params, {}, pp);
    return std::make_shared<PoissonModel>();
  }
  if (name == "normal") {
    allow_only(params, {"n"}, pp);
    int n = 0;
    if (params.contains("n")) {
      n = positive_int(params, "n", pp);
    } else if (sample.is_object() && sample.contains("data") && sample.at("data").is_array()) {
      n = static_cast<int>(sample.at("data").size());
    } else {
      throw SpecError(at(pp, "n"), "missing required field");
    }
    return std::make_shared<NormalModel>(n);
  }
  if (name == "trinomial") {
    allow_only(params, {}, pp);
    return std::make_shared<TrinomialModel>();
  }
  if (name == "fraser" || name == "severini") {
    allow_only(params, {"theta_max"}, pp);
    const int cap = params.contains("theta_max") ? positive_int(params, "theta_max", pp)
                                                 : 10 * scalar_x(sample, "sample") + 1;
    if (name == "fraser") return std::make_shared<FraserModel>(cap);
    return std::make_shared<SeveriniModel>(cap);
  }
  if (name == "finite-table") {
    allow_only(params, {"likelihood", "labels"}, pp);
    const json& lik = require(params, "likelihood", pp);
    const std::string lp = at(pp, "likelihood");
    if (!lik.is_array() || lik.empty()) throw SpecError(lp, "expected a non-empty array of rows");
    const std::size_t cols = lik[0].is_array() ? lik[0].size() : 0;
    Eigen::MatrixXd m(static_cast<Eigen::Index>(lik.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < lik.size(); ++i) {
      const auto row = reals_of(lik[i], at(lp, i));
      if (row.size() != cols || cols == 0) throw SpecError(at(lp, i), "rows must have equal, positive length");
      for (std::size_t c = 0; c < cols; ++c) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = row[c];
    }
    try {
      if (params.contains("labels")) {
        const json& lab = params.at("labels");
        if (!lab.is_array() || lab.size() != lik.size()) {
          throw SpecError(at(pp, "labels"), "needs one label per likelihood row");
        }
        std::vector<std::string> labels;
        std::vector<Eigen::VectorXd> points;
        for (std::size_t i = 0; i < lab.size(); ++i) {
          labels.push_back(string_of(lab[i], at(at(pp, "labels"), i)));
          points.push_back(Eigen::VectorXd::Constant(1, static_cast<double>(i)));
        }
        return std::make_shared<FiniteTableModel>(std::move(labels), std::move(points), m);
      }
      return std::make_shared<FiniteTableModel>(m);
    } catch (const SpecError&) {
      throw;
    } catch (const InputError& e) {
      throw SpecError(lp, e.what());
    }
  }
  throw SpecError(at(path, "name"), "unknown model '" + name +
                                        "' (expected binomial, binomial-finite, poisson, normal, trinomial, "
                                        "fraser, severini, finite-table)");
}

Sample parse_sample(const StatModel& model, const json& j, const std::string& path) {
  Sample s;
  const std::string name = model.name();
  if (j.is_number()) {
    s = Sample{finite_of(j, path)};
  } else if (j.is_array()) {
    s = Sample(vector_of(j, path));
  } else if (name == "normal") {
    if (j.is_object() && j.contains("data")) {
      allow_only(j, {"data"}, path);
      const auto data = reals_of(j.at("data"), at(path, "data"));
      const auto& nm = static_cast<const NormalModel&>(model);
      if (static_cast<int>(data.size()) != nm.n()) {
        throw SpecError(at(path, "data"), "has " + std::to_string(data.size()) + " observations but n = " +
                                              std::to_string(nm.n()));
      }
      s = normal_sufficient_stats(data);
    } else {
      allow_only(j, {"mean", "var"}, path);
      s = Sample{finite_of(require(j, "mean", path), at(path, "mean")),
                 finite_of(require(j, "var", path), at(path, "var"))};
    }
  } else if (name == "trinomial") {
    allow_only(j, {"counts"}, path);
    s = Sample(vector_of(require(j, "counts", path), at(path, "counts")));
  } else {
    allow_only(j, {"x"}, path);
    s = Sample{finite_of(require(j, "x", path), at(path, "x"))};
  }
  try {
    model.check_sample(s);
  } catch (const InputError& e) {
    throw SpecError(path, e.what());
  }
  return s;
}

ParamRegion parse_region(const json& j, const ParamSpace& space, const std::string& path) {
  expect_object(j, path);
  const std::string type = string_of(require(j, "type", path), at(path, "type"));
  auto with_dim = [&](ParamRegion r) {
    if (j.contains("dim")) {
      const long long d = int_of(j.at("dim"), at(path, "dim"));
      if (d < -1 || d > 64) throw SpecError(at(path, "dim"), "dimension out of range");
      r = r.with_dimension(static_cast<int>(d));
    }
    return r;
  };
  if (type == "full") {
    allow_only(j, {"type", "dim"}, path);
    return with_dim(ParamRegion::full());
  }
  if (type == "empty") {
    allow_only(j, {"type", "dim"}, path);
    return with_dim(ParamRegion::empty());
  }
  if (type == "finite") {
    allow_only(j, {"type", "dim", "points", "labels"}, path);
    std::vector<ParamPoint> pts;
    if (j.contains("labels")) {
      const json& lab = j.at("labels");
      const std::string lp = at(path, "labels");
      if (!space.is_finite()) throw SpecError(lp, "labels need a finite parameter space");
      if (!lab.is_array()) throw SpecError(lp, "expected an array of labels");
      for (std::size_t i = 0; i < lab.size(); ++i) {
        const std::string l = lab[i].is_number() ? lab[i].dump() : string_of(lab[i], at(lp, i));
        const auto idx = space.find_label(l);
        if (!idx) throw SpecError(at(lp, i), "no parameter point labelled '" + l + "'");
        pts.push_back(space.point(*idx));
      }
    }
    if (j.contains("points")) {
      const json& ps = j.at("points");
      const std::string pp = at(path, "points");
      if (!ps.is_array()) throw SpecError(pp, "expected an array of points");
      for (std::size_t i = 0; i < ps.size(); ++i) {
        Eigen::VectorXd c = ps[i].is_number() ? Eigen::VectorXd::Constant(1, finite_of(ps[i], at(pp, i)))
                                              : vector_of(ps[i], at(pp, i));
        if (c.size() != space.ambient_dim()) throw SpecError(at(pp, i), "wrong number of coordinates");
        if (space.is_finite()) {
          const auto idx = space.find_coords(c);
          if (!idx) throw SpecError(at(pp, i), "not a point of the parameter space");
          pts.push_back(space.point(*idx));
        } else {
          pts.emplace_back(std::move(c));
        }
      }
    }
    if (pts.empty()) return with_dim(ParamRegion::empty());
    return with_dim(ParamRegion::finite_set(std::move(pts)));
  }
  if (type == "box") {
    allow_only(j, {"type", "dim", "intervals"}, path);
    const json& ivs = require(j, "intervals", path);
    const std::string ip = at(path, "intervals");
    if (!ivs.is_array()) throw SpecError(ip, "expected an array of intervals");
    if (static_cast<int>(ivs.size()) != space.ambient_dim()) {
      throw SpecError(ip, "needs " + std::to_string(space.ambient_dim()) + " interval(s), one per coordinate");
    }
    std::vector<Interval> out;
    for (std::size_t i = 0; i < ivs.size(); ++i) out.push_back(interval_of(ivs[i], at(ip, i)));
    return with_dim(ParamRegion::box(std::move(out)));
  }
  if (type == "constraint") {
    allow_only(j, {"type", "dim", "fn", "rel", "rhs"}, path);
    const json& fn = require(j, "fn", path);
    expect_object(fn, at(path, "fn"));
    ScalarFn g = function_of(fn, space, at(path, "fn"));
    const Relation rel = relation_of(require(j, "rel", path), at(path, "rel"));
    const double rhs = finite_of(require(j, "rhs", path), at(path, "rhs"));
    return with_dim(ParamRegion::constraint(std::move(g), rel, rhs, fn.dump()));
  }
  if (type == "hwe") {
    allow_only(j, {"type", "dim", "which"}, path);
    if (space.is_finite() || space.ambient_dim() != 3) {
      throw SpecError(path, "hwe regions need the trinomial parameter space");
    }
    const std::string which = string_of(require(j, "which", path), at(path, "which"));
    const HweRegions r = hwe_regions();
    if (which == "equilibrium") return with_dim(r.equilibrium);
    if (which == "inbreeding") return with_dim(r.inbreeding);
    if (which == "outbreeding") return with_dim(r.outbreeding);
    throw SpecError(at(path, "which"), "expected equilibrium, inbreeding or outbreeding");
  }
  if (type == "complement") {
    allow_only(j, {"type", "dim", "child"}, path);
    return with_dim(ParamRegion::complement(parse_region(require(j, "child", path), space, at(path, "child"))));
  }
  if (type == "union" || type == "intersection") {
    allow_only(j, {"type", "dim", "children"}, path);
    const json& ch = require(j, "children", path);
    const std::string cp = at(path, "children");
    if (!ch.is_array() || ch.empty()) throw SpecError(cp, "expected a non-empty array of regions");
    std::vector<ParamRegion> kids;
    for (std::size_t i = 0; i < ch.size(); ++i) kids.push_back(parse_region(ch[i], space, at(cp, i)));
    return with_dim(type == "union" ? ParamRegion::unite(std::move(kids)) : ParamRegion::intersect(std::move(kids)));
  }
  throw SpecError(at(path, "type"), "unknown region type '" + type +
                                        "' (expected full, empty, finite, box, constraint, hwe, complement, "
                                        "union, intersection)");
}

Prior parse_prior(const json& j, const ParamSpace& space, const std::string& path) {
  expect_object(j, path);
  const std::string type = string_of(require(j, "type", path), at(path, "type"));
  try {
    if (type == "finite") {
      allow_only(j, {"type", "weights"}, path);
      const auto w = reals_of(require(j, "weights", path), at(path, "weights"));
      if (!space.is_finite() || w.size() != space.size()) {
        throw SpecError(at(path, "weights"), "needs one weight per point of a finite parameter space");
      }
      return Prior::finite(w);
    }
    if (space.is_finite()) throw SpecError(at(path, "type"), "continuous priors need a continuous space");
    auto support_of = [&]() {
      const json& s = require(j, "support", path);
      const std::string sp = at(path, "support");
      if (!s.is_array()) throw SpecError(sp, "expected an array of intervals");
      std::vector<Interval> out;
      for (std::size_t i = 0; i < s.size(); ++i) out.push_back(interval_of(s[i], at(sp, i)));
      if (static_cast<int>(out.size()) != space.dim()) {
        throw SpecError(sp, "needs one interval per free coordinate");
      }
      return out;
    };
    if (type == "uniform") {
      allow_only(j, {"type", "support"}, path);
      return Prior::uniform(support_of());
    }
    if (type == "beta") {
      allow_only(j, {"type", "a", "b"}, path);
      if (space.dim() != 1) throw SpecError(at(path, "type"), "beta priors need a one-dimensional space");
      const double a = finite_of(require(j, "a", path), at(path, "a"));
      const double b = finite_of(require(j, "b", path), at(path, "b"));
      if (!(a >= 1.0 && b >= 1.0)) throw SpecError(path, "beta prior needs a >= 1 and b >= 1");
      const double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
      return Prior::continuous(
          [a, b, log_beta](const Eigen::VectorXd& z) {
            const double t = z[0];
            if (t < 0.0 || t > 1.0) return 0.0;
            return std::exp(xlogy(a - 1.0, t) + xlogy(b - 1.0, 1.0 - t) - log_beta);
          },
          {Interval::closed(0.0, 1.0)});
    }
  } catch (const SpecError&) {
    throw;
  } catch (const InputError& e) {
    throw SpecError(path, e.what());
  }
  throw SpecError(at(path, "type"), "unknown prior type '" + type + "' (expected finite, uniform, beta)");
}

void parse_optimizer(const json& j, OptConfig& cfg, const std::string& path) {
  allow_only(j, {"tol", "grid", "grid_1d", "grid_nd", "refine_rounds", "multistarts", "seed", "threads"}, path);
  if (j.contains("tol")) cfg.rel_tol = finite_of(j.at("tol"), at(path, "tol"));
  if (j.contains("grid")) cfg.grid_1d = cfg.grid_nd = static_cast<int>(int_of(j.at("grid"), at(path, "grid")));
  if (j.contains("grid_1d")) cfg.grid_1d = static_cast<int>(int_of(j.at("grid_1d"), at(path, "grid_1d")));
  if (j.contains("grid_nd")) cfg.grid_nd = static_cast<int>(int_of(j.at("grid_nd"), at(path, "grid_nd")));
  if (j.contains("refine_rounds")) {
    cfg.refine_rounds = static_cast<int>(int_of(j.at("refine_rounds"), at(path, "refine_rounds")));
  }
  if (j.contains("multistarts")) {
    cfg.multistarts = static_cast<int>(int_of(j.at("multistarts"), at(path, "multistarts")));
  }
  if (j.contains("seed")) {
    const long long s = int_of(j.at("seed"), at(path, "seed"));
    if (s < 0) throw SpecError(at(path, "seed"), "must be nonnegative");
    cfg.seed = static_cast<std::uint64_t>(s);
  }
  if (j.contains("threads")) cfg.threads = static_cast<int>(int_of(j.at("threads"), at(path, "threads")));
  try {
    cfg.validate();
  } catch (const InputError& e) {
    throw SpecError(path, e.what());
  }
}

AnalysisSpec parse_spec(const json& j) {
  allow_only(j,
             {"model", "sample", "regions", "optimizer", "prior", "thresholds", "philosophy", "regime", "format",
              "contour"},
             "");
  AnalysisSpec spec;
  const json& m = require(j, "model", "");
  allow_only(m, {"name", "params"}, "model");
  spec.model_name = string_of(require(m, "name", "model"), "model.name");
  if (m.contains("params")) spec.model_params = m.at("params");
  const json& sample = require(j, "sample", "");
  spec.model = make_model(spec.model_name, spec.model_params, sample, "model");
  spec.sample = parse_sample(*spec.model, sample, "sample");

  if (j.contains("regions")) {
    const json& rs = j.at("regions");
    if (!rs.is_array()) throw SpecError("regions", "expected an array");
    std::set<std::string> names;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const std::string p = at("regions", i);
      allow_only(rs[i], {"name", "region"}, p);
      NamedRegion nr{string_of(require(rs[i], "name", p), at(p, "name")),
                     parse_region(require(rs[i], "region", p), spec.model->space(), at(p, "region"))};
      if (!names.insert(nr.name).second) throw SpecError(at(p, "name"), "duplicate region name");
      spec.regions.push_back(std::move(nr));
    }
  }
  if (j.contains("optimizer")) parse_optimizer(j.at("optimizer"), spec.optimizer, "optimizer");
  if (j.contains("prior")) spec.prior = parse_prior(j.at("prior"), spec.model->space(), "prior");
  if (j.contains("thresholds")) {
    const json& t = j.at("thresholds");
    allow_only(t, {"a_star", "b_star"}, "thresholds");
    if (t.contains("a_star")) spec.phi.a_star = finite_of(t.at("a_star"), "thresholds.a_star");
    if (t.contains("b_star")) spec.phi.b_star = finite_of(t.at("b_star"), "thresholds.b_star");
    if (!(spec.phi.a_star > 0 && spec.phi.a_star < 1)) throw SpecError("thresholds.a_star", "must lie in (0, 1)");
    if (!(spec.phi.b_star > 0 && spec.phi.b_star < 1)) throw SpecError("thresholds.b_star", "must lie in (0, 1)");
  }
  try {
    if (j.contains("philosophy")) spec.phi.philosophy = parse_philosophy(string_of(j.at("philosophy"), "philosophy"));
  } catch (const SpecError&) {
    throw;
  } catch (const InputError& e) {
    throw SpecError("philosophy", e.what());
  }
  try {
    if (j.contains("regime")) spec.phi.regime = parse_regime(string_of(j.at("regime"), "regime"));
  } catch (const SpecError&) {
    throw;
  } catch (const InputError& e) {
    throw SpecError("regime", e.what());
  }
  if (j.contains("format")) {
    spec.format = string_of(j.at("format"), "format");
    if (spec.format != "json" && spec.format != "csv") throw SpecError("format", "expected json or csv");
  }
  if (j.contains("contour")) {
    const json& c = j.at("contour");
    allow_only(c, {"alpha", "region", "resolution"}, "contour");
    if (c.contains("alpha")) {
      spec.contour.alpha = finite_of(c.at("alpha"), "contour.alpha");
      if (!(*spec.contour.alpha > 0 && *spec.contour.alpha <= 1)) throw SpecError("contour.alpha", "must lie in (0, 1]");
    }
    if (c.contains("region")) spec.contour.region = string_of(c.at("region"), "contour.region");
    if (c.contains("resolution")) {
      spec.contour.resolution = static_cast<int>(int_of(c.at("resolution"), "contour.resolution"));
      if (spec.contour.resolution < 3 || spec.contour.resolution > 4001) {
        throw SpecError("contour.resolution", "must lie in [3, 4001]");
      }
    }
  }
  return spec;
}

AnalysisSpec parse_spec_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError("<spec>", std::string("invalid JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  return parse_spec(j);
}

}  // namespace lrpossib
