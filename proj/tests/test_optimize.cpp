#include "lrpossib/errors.hpp"
#include "lrpossib/hwe.hpp"
#include "lrpossib/models.hpp"
#include "lrpossib/optimize.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace lrpossib;

namespace {

double sup_lambda(const StatModel& m, const Sample& x, const ParamRegion& r, const OptConfig& cfg = {}) {
  const auto g = global_sup(m, x, cfg);
  return std::exp(restricted_sup(m, x, r, cfg, &g).sup_loglik - g.sup_loglik);
}

}  // namespace

TEST_SUITE("optimize") {

TEST_CASE("binomial boundary optimum") {
  BinomialModel m(8);
  const auto r = ParamRegion::box({Interval::closed(0.4, 0.6)});
  const auto res = restricted_sup(m, Sample{0}, r);
  REQUIRE(res.witness);
  // lambda falls in theta when x = 0, so the maximizer is the left end
  CHECK((*res.witness)[0] == doctest::Approx(0.4).epsilon(1e-9));
  CHECK(sup_lambda(m, Sample{0}, r) == doctest::Approx(std::pow(0.6, 8)).epsilon(1e-9));
}

TEST_CASE("poisson restricted to [0,3]") {
  PoissonModel m;
  const auto r = ParamRegion::box({Interval::closed(0, 3)});
  const double expect = std::exp(-3.0 + 8 + 8 * std::log(3.0 / 8));
  CHECK(sup_lambda(m, Sample{8}, r) == doctest::Approx(expect).epsilon(1e-9));
  CHECK(expect == doctest::Approx(0.0581).epsilon(1e-3));
}

TEST_CASE("poisson on an unbounded region") {
  PoissonModel m;
  const auto r = ParamRegion::box({Interval{12, kInf, true, true}});
  const auto res = restricted_sup(m, Sample{8}, r);
  REQUIRE(res.witness);
  CHECK((*res.witness)[0] == doctest::Approx(12).epsilon(1e-9));
}

TEST_CASE("full region returns the global sup") {
  NormalModel m(20);
  const Sample x{0.0, 2.0};
  const auto g = global_sup(m, x);
  REQUIRE(g.witness);
  CHECK((*g.witness)[0] == doctest::Approx(0.0));
  CHECK((*g.witness)[1] == doctest::Approx(2.0));
  CHECK(restricted_sup(m, x, ParamRegion::full()).sup_loglik == g.sup_loglik);
}

TEST_CASE("empty region") {
  BinomialModel m(8);
  const auto res = restricted_sup(m, Sample{4}, ParamRegion::empty());
  CHECK(res.sup_loglik == kNegInf);
  CHECK_FALSE(res.witness);
}

TEST_CASE("trinomial mle") {
  TrinomialModel m;
  const auto g = global_sup(m, Sample{2, 5, 3});
  REQUIRE(g.witness);
  CHECK(g.witness->coords.isApprox(Eigen::Vector3d(0.2, 0.5, 0.3)));
}

TEST_CASE("fraser and severini mle sets") {
  auto f = FraserModel::for_sample(6);
  const auto fs = mle_set(f, Sample{6});
  REQUIRE(fs.size() == 3);
  CHECK(fs[0][0] == 3);
  CHECK(fs[1][0] == 12);
  CHECK(fs[2][0] == 13);
  CHECK(global_sup(f, Sample{6}).sup_loglik == doctest::Approx(-std::log(3.0)));
  auto s = SeveriniModel::for_sample(6);
  const auto ss = mle_set(s, Sample{6});
  REQUIRE(ss.size() == 1);
  CHECK(ss[0][0] == 13);
  BinomialModel b(8);
  const auto bs = mle_set(b, Sample{4});
  REQUIRE(bs.size() == 1);
  CHECK(bs[0][0] == doctest::Approx(0.5));
}

TEST_CASE("enumeration ties break lexicographically") {
  auto f = FraserModel::for_sample(6);
  const auto r = ParamRegion::finite_set({ParamPoint{13}, ParamPoint{12}});
  const auto res = restricted_sup(f, Sample{6}, r);
  CHECK(res.method == SupMethod::Enumeration);
  REQUIRE(res.witness);
  CHECK((*res.witness)[0] == 12);
}

TEST_CASE("normal variance constraint against grid oracle") {
  NormalModel m(20);
  const Sample x{0.0, 2.0};
  const auto r = ParamRegion::constraint([](const Eigen::VectorXd& t) { return t[1]; }, Relation::Le, 1.5);
  const auto res = restricted_sup(m, x, r);
  const double ref = oracle::grid_max_2d([](double mu, double s2) { return oracle::normal_ll(mu, s2, 0, 2, 20); },
                                         -1, 1, 0.05, 1.5, 201, 6);
  CHECK(res.sup_loglik >= ref - 1e-6 * std::abs(ref));
  CHECK(res.sup_loglik <= oracle::normal_ll(0, 1.5, 0, 2, 20) + 1e-9);
  REQUIRE(res.witness);
  CHECK((*res.witness)[1] <= 1.5 + 1e-9);
}

TEST_CASE("two disjoint peaks in one dimension") {
  BinomialModel m(8);
  const auto r = ParamRegion::box({Interval::closed(0.05, 0.2)}) | ParamRegion::box({Interval::closed(0.8, 0.9)});
  const double ref = std::max(oracle::binom_ll(0.2, 3, 8), oracle::binom_ll(0.8, 3, 8));
  CHECK(restricted_sup(m, Sample{3}, r).sup_loglik == doctest::Approx(ref).epsilon(1e-10));
}

TEST_CASE("predicate region uses the grid path") {
  BinomialModel m(8);
  const auto r = ParamRegion::predicate([](const ParamPoint& p) { return p[0] <= 0.3; });
  const auto res = restricted_sup(m, Sample{4}, r);
  CHECK(res.sup_loglik == doctest::Approx(oracle::binom_ll(0.3, 4, 8)).epsilon(1e-6));
}

TEST_CASE("hwe regions are answered in closed form") {
  TrinomialModel m;
  const auto regs = hwe_regions();
  const auto res = restricted_sup(m, Sample{5, 0, 5}, regs.equilibrium);
  CHECK(res.method == SupMethod::ClosedForm);
  const auto g = global_sup(m, Sample{5, 0, 5});
  CHECK(std::exp(res.sup_loglik - g.sup_loglik) == doctest::Approx(std::pow(0.5, 10)).epsilon(1e-10));
  OptConfig numeric;
  numeric.use_closed_form = false;
  const auto n = restricted_sup(m, Sample{5, 0, 5}, regs.equilibrium, numeric);
  CHECK(n.sup_loglik == doctest::Approx(res.sup_loglik).epsilon(1e-6));
}

TEST_CASE("thread count does not change results") {
  NormalModel m(20);
  const Sample x{0.3, 2.0};
  const auto r = ParamRegion::constraint([](const Eigen::VectorXd& t) { return t[0] * t[0] + t[1]; }, Relation::Le,
                                         1.2);
  OptConfig a, b;
  a.threads = 1;
  b.threads = 8;
  const auto ra = restricted_sup(m, x, r, a), rb = restricted_sup(m, x, r, b);
  CHECK(ra.sup_loglik == rb.sup_loglik);
  REQUIRE(ra.witness);
  REQUIRE(rb.witness);
  CHECK(ra.witness->coords == rb.witness->coords);
}

TEST_CASE("sample validation") {
  PoissonModel m;
  CHECK(validate_sample(m, Sample{3}) == SampleStatus::Ok);
  Eigen::MatrixXd lik(2, 2);
  lik << 0.0, 1.0, 0.0, 1.0;
  FiniteTableModel t(lik);
  CHECK(validate_sample(t, Sample{0}) == SampleStatus::C1Violated);
}

TEST_CASE("config validation") {
  OptConfig c;
  c.rel_tol = 0;
  CHECK_THROWS_AS(c.validate(), InputError);
  c = {};
  c.grid_1d = 2;
  CHECK_THROWS_AS(c.validate(), InputError);
}

}
