#include "lrpossib/errors.hpp"
#include "lrpossib/evidence.hpp"
#include "lrpossib/hwe.hpp"
#include "lrpossib/models.hpp"

#include <doctest.h>

#include <cmath>

using namespace lrpossib;

TEST_SUITE("evidence") {

TEST_CASE("binomial figure values") {
  BinomialModel m(8);
  const auto r = ParamRegion::box({Interval::closed(0.4, 0.6)});
  const auto v = nu(m, Sample{4}, r);
  const auto vc = nu(m, Sample{4}, ~r);
  CHECK(v.nu == doctest::Approx(1.0));
  CHECK(v.consistency == Consistency::Consistent);
  // independent: lambda(0.4 | x=4) = (0.4*0.6/0.25)^4
  CHECK(vc.nu == doctest::Approx(std::pow(0.96, 4)).epsilon(1e-9));
  CHECK(vc.consistency == Consistency::Inconsistent);
}

TEST_CASE("trivial regions") {
  PoissonModel m;
  CHECK(nu(m, Sample{3}, ParamRegion::full()).nu == 1.0);
  CHECK(nu(m, Sample{3}, ParamRegion::empty()).nu == 0.0);
}

TEST_CASE("normal variance hypothesis") {
  NormalModel m(20);
  const auto r = ParamRegion::constraint([](const Eigen::VectorXd& t) { return t[1]; }, Relation::Le, 1.5);
  const Sample x{0.0, 2.0};
  // sup over sigma2 <= 1.5 sits at sigma2 = 1.5, mu = 0
  const double expect = std::pow(2.0 / 1.5 * std::exp(1.0 - 2.0 / 1.5), 10);
  CHECK(nu(m, x, r).nu == doctest::Approx(expect).epsilon(1e-6));
  CHECK(std::abs(expect - 0.63) < 0.005);
  CHECK(nu(m, x, ~r).nu == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("level set membership") {
  BinomialModel m(8);
  CHECK(lambda_level_set_membership(m, Sample{4}, ParamPoint{0.5}, 1.0));
  CHECK_FALSE(lambda_level_set_membership(m, Sample{0}, ParamPoint{0.6}, 0.02));
  CHECK(lambda_level_set_membership(m, Sample{0}, ParamPoint{0.6}, 0.0));
}

TEST_CASE("non-implication fixture") {
  BinomialModel m(8);
  const auto r = ParamRegion::box({Interval::closed(0.0, 0.5)});
  CHECK(nu(m, Sample{4}, r).nu == doctest::Approx(1.0));
  CHECK(nu(m, Sample{4}, ~r).nu == doctest::Approx(1.0));
}

TEST_CASE("finite spaces: union is max, singletons are lambda") {
  BinomialModel m(10, {0.1, 0.3, 0.5, 0.7});
  const Sample x{6};
  std::vector<double> single;
  for (double t : {0.1, 0.3, 0.5, 0.7}) single.push_back(nu(m, x, ParamRegion::finite_set({ParamPoint{t}})).nu);
  const auto both = nu(m, x, ParamRegion::finite_set({ParamPoint{0.1}, ParamPoint{0.3}})).nu;
  CHECK(both == std::max(single[0], single[1]));
  // lambda on a 1e-4 alpha grid
  for (double s : single) {
    double best = 0;
    for (int k = 0; k <= 10000; ++k) {
      if (s >= k * 1e-4) best = k * 1e-4;
    }
    CHECK(std::abs(best - s) <= 1e-4);
  }
  CHECK(point_profile(m, x).kind == PointProfile::Graded);
}

TEST_CASE("single positive likelihood point") {
  Eigen::MatrixXd lik(3, 2);
  lik << 0.0, 1.0, 0.4, 0.6, 0.0, 1.0;
  FiniteTableModel m(lik);
  const auto p = point_profile(m, Sample{0});
  CHECK(p.kind == PointProfile::SingleNecessary);
  REQUIRE(p.necessary);
  CHECK(*p.necessary == 1);
  CHECK(p.nus == std::vector<double>{0.0, 1.0, 0.0});
  CHECK(point_profile(FraserModel::for_sample(6), Sample{6}).kind == PointProfile::Graded);
}

TEST_CASE("ratio") {
  auto s = SeveriniModel::for_sample(6);
  const auto r = likelihood_ratio_R(s, Sample{6}, ParamRegion::finite_set({ParamPoint{13}}),
                                    ParamRegion::finite_set({ParamPoint{12}}));
  REQUIRE(r.value);
  CHECK(*r.value == doctest::Approx(1.25));
  const auto r3 = likelihood_ratio_R(s, Sample{6}, ParamRegion::finite_set({ParamPoint{13}}),
                                     ParamRegion::finite_set({ParamPoint{3}}));
  CHECK(*r3.value == doctest::Approx(1.0 / 0.7));
  const auto u = likelihood_ratio_R(s, Sample{6}, ParamRegion::full(), ParamRegion::finite_set({ParamPoint{1}}));
  CHECK_FALSE(u.value);
  BinomialModel b(8);
  const auto box = ParamRegion::box({Interval::closed(0.6, 0.7)});
  const auto same = likelihood_ratio_R(b, Sample{2}, box, box);
  REQUIRE(same.value);
  CHECK(*same.value == 1.0);
}

TEST_CASE("phi: finite binomial accepts") {
  BinomialModel m(100, {0.1, 0.2, 0.9});
  const auto v = phi(m, Sample{99}, ParamRegion::finite_set({ParamPoint{0.9}}));
  CHECK(v.nu0 == 1.0);
  CHECK(std::log10(v.nu0c) == doctest::Approx(-64).epsilon(0.02));
  CHECK(v.decision == Decision::Accept);
  CHECK(v.regime == Regime::BothNonsharp);
  PhiOptions f;
  f.philosophy = Philosophy::Fisherian;
  CHECK(phi(m, Sample{99}, ParamRegion::finite_set({ParamPoint{0.9}}), f).decision == Decision::Maintain);
}

TEST_CASE("phi: full region is maximal") {
  BinomialModel m(8);
  const auto v = phi(m, Sample{3}, ParamRegion::full());
  CHECK(v.nu0 == 1.0);
  CHECK(v.nu0c == 0.0);
  CHECK(v.decision == Decision::Accept);
}

TEST_CASE("phi: poisson reject") {
  PoissonModel m;
  PhiOptions o;
  o.a_star = 0.1;
  const auto v = phi(m, Sample{8}, ParamRegion::box({Interval::closed(0, 3)}), o);
  CHECK(v.nu0 == doctest::Approx(0.0581).epsilon(1e-3));
  CHECK(v.nu0c == doctest::Approx(1.0));
  CHECK(v.decision == Decision::Reject);
}

TEST_CASE("phi: sharp null on the hwe curve") {
  TrinomialModel m;
  const auto regs = hwe_regions();
  const auto v = phi(m, Sample{5, 0, 5}, regs.equilibrium);
  CHECK(v.regime == Regime::SharpNull);
  CHECK(v.decision == Decision::Reject);
  const auto on = phi(m, Sample{2, 4, 2}, regs.equilibrium);
  CHECK(on.decision == Decision::Maintain);
}

TEST_CASE("regime derivation") {
  BinomialModel m(8);
  CHECK(derive_regime(ParamRegion::box({Interval::closed(0.4, 0.6)}), m.space()) == Regime::BothNonsharp);
  CHECK(derive_regime(ParamRegion::finite_set({ParamPoint{0.5}}), m.space()) == Regime::SharpNull);
  CHECK(derive_regime(~ParamRegion::finite_set({ParamPoint{0.5}}), m.space()) == Regime::SharpAlternative);
  CHECK_THROWS_AS(derive_regime(ParamRegion::predicate([](const ParamPoint&) { return true; }), m.space()),
                  RegimeError);
}

TEST_CASE("phi: declared regime inconsistent with the data") {
  BinomialModel m(8);
  PhiOptions o;
  o.regime = Regime::SharpNull;
  CHECK_THROWS_AS(phi(m, Sample{4}, ParamRegion::box({Interval::closed(0.4, 0.6)}), o), RegimeError);
}

TEST_CASE("contour") {
  NormalModel m(20);
  const Sample x{0.0, 2.0};
  const double alpha = std::pow(2.0 / 1.5 * std::exp(1.0 - 2.0 / 1.5), 10);
  ContourGrid g;
  g.resolution = 201;
  g.box = {Interval::closed(-1, 1), Interval::closed(0.5, 5)};
  const auto c = contour(m, x, alpha, g);
  REQUIRE_FALSE(c.boundary.empty());
  double lo = kInf;
  for (const auto& line : c.boundary) {
    for (const auto& p : line) lo = std::min(lo, p[1]);
  }
  // the smallest variance on the contour touches sigma2 = 1.5
  CHECK(lo == doctest::Approx(1.5).epsilon(0.02));
  PoissonModel pm;
  const auto one = contour(pm, Sample{4}, 0.5);
  CHECK(one.points.size() == one.lambda.size());
}

}
