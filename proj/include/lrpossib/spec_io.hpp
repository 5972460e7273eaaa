#pragma once

#include "lrpossib/bayes.hpp"
#include "lrpossib/evidence.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lrpossib {

/// Input error carrying the JSON path of the offending field.
class SpecError : public InputError {
 public:
  SpecError(const std::string& path, const std::string& what) : InputError(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct NamedRegion {
  std::string name;
  ParamRegion region;
};

struct ContourSpec {
  std::optional<double> alpha;
  /// Region whose nu sets alpha when alpha is absent.
  std::optional<std::string> region;
  int resolution = 101;
};

/// Parsed analysis request. Everything a subcommand needs is here.
struct AnalysisSpec {
  std::string model_name;
  nlohmann::json model_params = nlohmann::json::object();
  ModelPtr model;
  Sample sample;
  std::vector<NamedRegion> regions;
  OptConfig optimizer;
  std::optional<Prior> prior;
  PhiOptions phi;
  std::string format = "json";
  ContourSpec contour;

  const NamedRegion& region(std::size_t i) const;
};

/// Model from a name and parameters; `sample` is consulted only for the
/// default parameter cap of the counter-example models.
ModelPtr make_model(const std::string& name, const nlohmann::json& params, const nlohmann::json& sample,
                    const std::string& path = "model");
Sample parse_sample(const StatModel& model, const nlohmann::json& j, const std::string& path = "sample");
ParamRegion parse_region(const nlohmann::json& j, const ParamSpace& space, const std::string& path = "region");
Prior parse_prior(const nlohmann::json& j, const ParamSpace& space, const std::string& path = "prior");
void parse_optimizer(const nlohmann::json& j, OptConfig& cfg, const std::string& path = "optimizer");

AnalysisSpec parse_spec(const nlohmann::json& j);
/// Parses JSON text; syntax errors report the byte offset.
AnalysisSpec parse_spec_text(const std::string& text);

}  // namespace lrpossib
