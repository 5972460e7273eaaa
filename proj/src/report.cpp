#include "lrpossib/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace lrpossib {

Json real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

Json to_json(const ParamPoint& p, const ParamSpace& space) {
  Json j;
  if (p.index && space.is_finite() && *p.index < space.size()) j["label"] = space.labels()[*p.index];
  Json c = Json::array();
  for (Eigen::Index i = 0; i < p.coords.size(); ++i) c.push_back(real(p.coords[i]));
  j["coords"] = std::move(c);
  return j;
}

Json to_json(const SupResult& r, const ParamSpace& space) {
  Json j;
  j["sup_loglik"] = real(r.sup_loglik);
  j["witness"] = r.witness ? to_json(*r.witness, space) : Json(nullptr);
  j["method"] = to_string(r.method);
  j["evaluations"] = r.evaluations;
  j["converged"] = r.converged;
  if (r.no_feasible_point) j["no_feasible_point"] = true;
  return j;
}

Json to_json(const EvidenceValue& ev, const ParamSpace& space) {
  Json j;
  j["nu"] = real(ev.nu);
  j["log_nu"] = real(ev.log_nu);
  j["consistency"] = to_string(ev.consistency);
  j["witness"] = ev.witness ? to_json(*ev.witness, space) : Json(nullptr);
  j["provenance"] = to_json(ev.sup, space);
  return j;
}

Json to_json(const PhiVerdict& v, const ParamSpace& space) {
  Json j;
  j["nu0"] = real(v.nu0);
  j["nu0c"] = real(v.nu0c);
  j["decision"] = to_string(v.decision);
  j["regime"] = to_string(v.regime);
  j["philosophy"] = to_string(v.philosophy);
  j["a_star"] = real(v.a_star);
  j["b_star"] = real(v.b_star);
  j["strong_against_null"] = v.strong_against_null;
  j["strong_against_complement"] = v.strong_against_complement;
  j["null"] = to_json(v.null_value, space);
  j["complement"] = to_json(v.complement_value, space);
  return j;
}

Json to_json(const RatioResult& r) {
  Json j;
  j["nu1"] = real(r.nu1);
  j["nu2"] = real(r.nu2);
  j["defined"] = r.value.has_value();
  j["ratio"] = r.value ? real(*r.value) : Json(nullptr);
  return j;
}

Json to_json(const PosteriorSummary& s) {
  Json j;
  j["m_x"] = real(s.m_x);
  j["c_x"] = real(s.c_x);
  j["log_m_x"] = real(s.log_m_x);
  j["log_c_x"] = real(s.log_c_x);
  j["post_prob"] = real(s.post_prob);
  j["prior_prob"] = real(s.prior_prob);
  j["bound"] = s.bound ? real(*s.bound) : Json(nullptr);
  j["quadrature_error"] = real(s.error_estimate);
  return j;
}

Json to_json(const HweReport& r) {
  auto pt = [](const ParamPoint& p) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < p.coords.size(); ++i) a.push_back(real(p.coords[i]));
    return a;
  };
  Json j;
  j["case"] = to_string(r.mle_case);
  j["nu1"] = real(r.nu1);
  j["nu2"] = real(r.nu2);
  j["nu3"] = real(r.nu3);
  j["log_nu1"] = real(r.log_nu1);
  j["mle"] = pt(r.mle);
  j["tilde_theta"] = pt(r.tilde_theta);
  return j;
}

Json to_json(const OptConfig& cfg) {
  Json j;
  j["tol"] = real(cfg.rel_tol);
  j["grid_1d"] = cfg.grid_1d;
  j["grid_nd"] = cfg.grid_nd;
  j["refine_rounds"] = cfg.refine_rounds;
  j["multistarts"] = cfg.multistarts;
  j["seed"] = cfg.seed;
  return j;
}

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

void write(std::ostringstream& os, const Json& j, int indent, int depth) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  const char* sep = indent > 0 ? ": " : ":";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{" << nl;
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) os << "," << nl;
        first = false;
        os << pad << Json(k).dump() << sep;
        write(os, v, indent, depth + 1);
      }
      os << nl << close_pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[" << nl;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << "," << nl;
        os << pad;
        write(os, j[i], indent, depth + 1);
      }
      os << nl << close_pad << "]";
      return;
    }
    case Json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::ostringstream os;
  write(os, j, indent, 0);
  os << "\n";
  return os.str();
}

std::string contour_csv(const ContourResult& c, const ParamSpace& space) {
  std::ostringstream os;
  os << "alpha";
  for (int i = 0; i < space.ambient_dim(); ++i) os << ",coord" << (i + 1);
  os << ",lambda,inside\n";
  for (std::size_t k = 0; k < c.points.size(); ++k) {
    os << format_double(c.alpha);
    for (Eigen::Index i = 0; i < c.points[k].size(); ++i) os << "," << format_double(c.points[k][i]);
    os << "," << format_double(c.lambda[k]) << "," << (c.inside[k] ? 1 : 0) << "\n";
  }
  return os.str();
}

std::string hwe_csv(std::span<const HweFigureRow> rows) {
  std::ostringstream os;
  os << "y1,y2,y3,theta1_hat,theta3_hat,nu1,nu2,nu3,case\n";
  for (const auto& r : rows) {
    os << r.sample.y1 << "," << r.sample.y2 << "," << r.sample.y3 << "," << format_double(r.report.mle.coords[0]) << ","
       << format_double(r.report.mle.coords[2]) << "," << format_double(r.report.nu1) << ","
       << format_double(r.report.nu2) << "," << format_double(r.report.nu3) << "," << to_string(r.report.mle_case)
       << "\n";
  }
  return os.str();
}

}  // namespace lrpossib
