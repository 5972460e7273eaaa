#include "lrpossib/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace lrpossib;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kBox = R"({"type":"box","intervals":[[0.4,0.6]]})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("evidence for the binomial example") {
  const auto r = run({"evidence", "--model", "binomial", "--params", R"({"n":8})", "--sample", "4", "--region", kBox});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["regions"][0]["nu0"].get<double>() == doctest::Approx(1.0));
  CHECK(j["regions"][0]["nu0c"].get<double>() == doctest::Approx(0.85).epsilon(0.01));
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::string> args{"phi", "--model", "normal", "--params", R"({"n":20})", "--sample",
                                      R"({"mean":0,"var":2})", "--region",
                                      R"({"type":"constraint","fn":{"kind":"coord","index":1},"rel":"<=","rhs":1.5,"dim":2})",
                                      "--seed", "5"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["verdict"]["decision"] == "maintain");
}

TEST_CASE("malformed input exits with 2 and names the field") {
  const auto r = run({"evidence", "--model", "binomial", "--params", R"({"n":8})", "--sample", "4", "--region",
                      R"({"type":"box","intervals":[{"lo":0.4}]})"});
  CHECK(r.code == 2);
  CHECK(r.err.find("intervals[0]") != std::string::npos);
  CHECK(run({"evidence", "--bogus"}).code == 2);
  CHECK(run({"evidence", "--model", "binomial", "--params", R"({"n":8})", "--sample", "12"}).code == 2);
}

TEST_CASE("hwe counts") {
  const auto r = run({"hwe", "--counts", "2,4,2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["case"] == "mle_on_curve");
  CHECK(j["nu1"].get<double>() == 1.0);
  CHECK(j["nu2"].get<double>() == 1.0);
  CHECK(j["nu3"].get<double>() == 1.0);
  CHECK(run({"hwe", "--counts", "2,x,2"}).code == 2);
}

TEST_CASE("ratio, contour and bayes-bound") {
  const auto ratio = run({"ratio", "--model", "severini", "--sample", "6", "--region",
                          R"({"type":"finite","labels":["13"]})", "--region", R"({"type":"finite","labels":["12"]})"});
  REQUIRE(ratio.code == 0);
  CHECK(nlohmann::json::parse(ratio.out)["ratio"].get<double>() == doctest::Approx(1.25));

  const auto c = run({"contour", "--model", "poisson", "--sample", "4", "--alpha", "0.5", "--resolution", "21",
                      "--format", "csv"});
  REQUIRE(c.code == 0);
  CHECK(c.out.rfind("alpha,coord1,lambda,inside", 0) == 0);

  const auto b = run({"bayes-bound", "--model", "binomial", "--params", R"({"n":8})", "--sample", "4", "--region",
                      kBox, "--prior", R"({"type":"uniform","support":[[0,1]]})"});
  REQUIRE(b.code == 0);
  const auto j = nlohmann::json::parse(b.out);
  CHECK(j["bound_holds"] == true);
  CHECK(j["consistency_holds"] == true);
}

TEST_CASE("csv is refused for json-only commands") {
  CHECK(run({"evidence", "--model", "poisson", "--sample", "4", "--format", "csv"}).code == 2);
}

}
