#include "lrpossib/hwe.hpp"

#include "lrpossib/errors.hpp"
#include "lrpossib/numeric.hpp"
#include "lrpossib/parallel.hpp"

#include <cmath>

namespace lrpossib {

HweSample::HweSample(std::int64_t aa, std::int64_t ab, std::int64_t bb) : y1(aa), y2(ab), y3(bb) {
  if (aa < 0 || ab < 0 || bb < 0) throw InputError("hwe: genotype counts must be nonnegative");
  if (aa + ab + bb < 1) throw InputError("hwe: need at least one genotype (m >= 1)");
}

Sample HweSample::as_sample() const {
  return Sample{static_cast<double>(y1), static_cast<double>(y2), static_cast<double>(y3)};
}

HweSample HweSample::from_sample(const Sample& x) {
  if (x.values.size() != 3) throw InputError("hwe: sample must hold three counts");
  std::int64_t c[3];
  for (int i = 0; i < 3; ++i) {
    const double v = x.values[i];
    if (!std::isfinite(v) || v != std::floor(v) || v < 0 || v > 9.0e15) {
      throw InputError("hwe: counts must be nonnegative integers");
    }
    c[i] = static_cast<std::int64_t>(v);
  }
  return HweSample(c[0], c[1], c[2]);
}

std::string to_string(HweCase c) {
  switch (c) {
    case HweCase::MleInInbreeding: return "mle_in_inbreeding";
    case HweCase::MleInOutbreeding: return "mle_in_outbreeding";
    case HweCase::MleOnCurve: return "mle_on_curve";
  }
  return "unknown";
}

double hwe_curve_function(const Eigen::VectorXd& theta) {
  return std::sqrt(std::max(theta[0], 0.0)) + std::sqrt(std::max(theta[2], 0.0));
}

HweRegions hwe_regions() {
  const ScalarFn g = hwe_curve_function;
  return {
      ParamRegion::constraint(g, Relation::Eq, 1.0, "sqrt(theta3) = 1 - sqrt(theta1)")
          .with_dimension(1)
          .with_family(kHweEquilibriumFamily),
      ParamRegion::constraint(g, Relation::Lt, 1.0, "sqrt(theta3) < 1 - sqrt(theta1)")
          .with_dimension(2)
          .with_family(kHweInbreedingFamily),
      ParamRegion::constraint(g, Relation::Gt, 1.0, "sqrt(theta3) > 1 - sqrt(theta1)")
          .with_dimension(2)
          .with_family(kHweOutbreedingFamily),
  };
}

int hwe_mle_side(const HweSample& s) {
  const __int128 lhs = static_cast<__int128>(4) * s.y1 * s.y3;
  const __int128 rhs = static_cast<__int128>(s.y2) * s.y2;
  return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
}

ParamPoint hwe_curve_point(double p) {
  const double q = 1.0 - p;
  return ParamPoint{p * p, 2.0 * p * q, q * q};
}

double trinomial_log_lambda(const HweSample& s, const Eigen::VectorXd& theta) {
  const double m = static_cast<double>(s.m());
  const double y[3] = {static_cast<double>(s.y1), static_cast<double>(s.y2), static_cast<double>(s.y3)};
  double acc = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double t = xlogy(y[i], theta[i]);
    if (t == kNegInf) return kNegInf;
    acc += t - xlogy(y[i], y[i] / m);
  }
  return std::min(acc, 0.0);
}

HweCurveSup hwe_curve_sup(const HweSample& s) {
  const double m = static_cast<double>(s.m());
  const double p = (m + static_cast<double>(s.y1) - static_cast<double>(s.y3)) / (2.0 * m);
  HweCurveSup out;
  out.tilde_theta = hwe_curve_point(p);
  // On the curve L = 2^y2 p^(2y1+y2) q^(2y3+y2). Both allele frequencies come
  // straight from the counts and the homozygote terms are added as a pair, so
  // swapping y1 and y3 gives a bit-identical value.
  const double q = (m + static_cast<double>(s.y3) - static_cast<double>(s.y1)) / (2.0 * m);
  const double y1 = static_cast<double>(s.y1), y2 = static_cast<double>(s.y2), y3 = static_cast<double>(s.y3);
  const double a = xlogy(2.0 * y1 + y2, p) - xlogy(y1, y1 / m);
  const double b = xlogy(2.0 * y3 + y2, q) - xlogy(y3, y3 / m);
  const double c = xlogy(y2, 2.0) - xlogy(y2, y2 / m);
  out.log_nu1 = std::min((a + b) + c, 0.0);
  out.nu1 = std::exp(out.log_nu1);
  return out;
}

HweReport hwe_report(const HweSample& s, const OptConfig& /*cfg*/) {
  HweReport r;
  const double m = static_cast<double>(s.m());
  r.mle = ParamPoint{s.y1 / m, s.y2 / m, s.y3 / m};
  const HweCurveSup c = hwe_curve_sup(s);
  r.tilde_theta = c.tilde_theta;
  const int side = hwe_mle_side(s);
  if (side == 0) {
    r.mle_case = HweCase::MleOnCurve;
    r.nu1 = r.nu2 = r.nu3 = 1.0;
    r.log_nu1 = 0.0;
    return r;
  }
  r.log_nu1 = c.log_nu1;
  r.nu1 = c.nu1;
  if (side < 0) {
    r.mle_case = HweCase::MleInInbreeding;
    r.nu2 = 1.0;
    r.nu3 = r.nu1;
  } else {
    r.mle_case = HweCase::MleInOutbreeding;
    r.nu3 = 1.0;
    r.nu2 = r.nu1;
  }
  return r;
}

std::vector<HweFigureRow> hwe_figure_data(std::span<const HweSample> samples, const OptConfig& cfg,
                                          int resolution) {
  if (resolution < 3) throw InputError("hwe: contour resolution must be >= 3");
  std::vector<HweFigureRow> rows(samples.size());
  const Eigen::ArrayXd axis = Eigen::ArrayXd::LinSpaced(resolution, 0.0, 1.0);
  const int threads = resolve_threads(cfg);
  parallel_for(samples.size(), threads, [&](std::size_t k) {
    HweFigureRow row;
    row.sample = samples[k];
    row.report = hwe_report(samples[k], cfg);
    row.cell_size = 1.0 / (resolution - 1);
    Eigen::ArrayXXd field(resolution, resolution);
    for (int i = 0; i < resolution; ++i) {
      for (int j = 0; j < resolution; ++j) {
        const double t1 = axis[i], t3 = axis[j];
        const double t2 = 1.0 - t1 - t3;
        field(i, j) = t2 < -1e-12 ? kNegInf : trinomial_log_lambda(row.sample, Eigen::Vector3d(t1, std::max(t2, 0.0), t3));
      }
    }
    row.contour = marching_squares(field, axis, axis, row.report.log_nu1);
    rows[k] = std::move(row);
  });
  return rows;
}

}  // namespace lrpossib
