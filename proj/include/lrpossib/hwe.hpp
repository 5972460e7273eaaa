#pragma once

// Hardy-Weinberg equilibrium on the trinomial simplex.
//
// Genotype frequencies theta = (theta_AA, theta_Aa, theta_aa). The
// equilibrium curve is sqrt(theta3) = 1 - sqrt(theta1); the open sides below
// and above it are the inbreeding and outbreeding regions.

#include "lrpossib/config.hpp"
#include "lrpossib/contour.hpp"
#include "lrpossib/param_space.hpp"
#include "lrpossib/region.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lrpossib {

inline constexpr const char* kHweEquilibriumFamily = "hwe.equilibrium";
inline constexpr const char* kHweInbreedingFamily = "hwe.inbreeding";
inline constexpr const char* kHweOutbreedingFamily = "hwe.outbreeding";

/// Genotype counts (AA, Aa, aa).
struct HweSample {
  std::int64_t y1 = 0;
  std::int64_t y2 = 0;
  std::int64_t y3 = 0;

  HweSample() = default;
  /// Throws InputError on negative counts or m = 0.
  HweSample(std::int64_t aa, std::int64_t ab, std::int64_t bb);

  std::int64_t m() const { return y1 + y2 + y3; }
  Sample as_sample() const;
  static HweSample from_sample(const Sample& x);
};

enum class HweCase { MleInInbreeding, MleInOutbreeding, MleOnCurve };

std::string to_string(HweCase c);

struct HweRegions {
  ParamRegion equilibrium;  // dimension 1
  ParamRegion inbreeding;   // dimension 2
  ParamRegion outbreeding;  // dimension 2
};

/// The three constraint regions on the trinomial simplex, tagged with their
/// families so the trinomial model answers them in closed form.
HweRegions hwe_regions();

/// sqrt(theta3) + sqrt(theta1) as a function of ambient coordinates.
double hwe_curve_function(const Eigen::VectorXd& theta);

/// Sign of sqrt(theta3_hat) - (1 - sqrt(theta1_hat)) at the MLE, decided in
/// exact integer arithmetic (it equals the sign of 4 y1 y3 - y2^2).
int hwe_mle_side(const HweSample& s);

/// Point on the equilibrium curve with allele frequency p (theta1 = p^2).
ParamPoint hwe_curve_point(double p);

struct HweCurveSup {
  ParamPoint tilde_theta;
  double log_nu1 = 0.0;
  double nu1 = 1.0;
};

/// Closed-form supremum of the likelihood ratio over the equilibrium curve:
/// sqrt(theta1~) = (m + y1 - y3) / (2m).
HweCurveSup hwe_curve_sup(const HweSample& s);

/// log lambda(theta, x) for the trinomial with the 0 log 0 = 0 convention.
double trinomial_log_lambda(const HweSample& s, const Eigen::VectorXd& theta);

struct HweReport {
  double nu1 = 1.0;
  double nu2 = 1.0;
  double nu3 = 1.0;
  double log_nu1 = 0.0;
  ParamPoint mle;
  ParamPoint tilde_theta;
  HweCase mle_case = HweCase::MleOnCurve;
};

HweReport hwe_report(const HweSample& s, const OptConfig& cfg = {});

struct HweFigureRow {
  HweSample sample;
  HweReport report;
  /// Boundary of Lambda_{nu1} in (theta1, theta3) coordinates.
  std::vector<Polyline> contour;
  double cell_size = 0.0;
};

/// One row per sample with the report and the contour of the smallest
/// likelihood level set touching the equilibrium curve. `resolution` is the
/// number of grid nodes per axis over the unit square of (theta1, theta3).
std::vector<HweFigureRow> hwe_figure_data(std::span<const HweSample> samples, const OptConfig& cfg = {},
                                          int resolution = 201);

}  // namespace lrpossib
