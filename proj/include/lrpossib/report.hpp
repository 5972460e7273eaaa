#pragma once

#include "lrpossib/bayes.hpp"
#include "lrpossib/evidence.hpp"
#include "lrpossib/hwe.hpp"

#include <json.hpp>

#include <span>
#include <string>

namespace lrpossib {

using Json = nlohmann::ordered_json;

/// Real number for JSON: finite values as numbers, others as "inf", "-inf"
/// or "nan".
Json real(double v);

Json to_json(const ParamPoint& p, const ParamSpace& space);
Json to_json(const SupResult& r, const ParamSpace& space);
Json to_json(const EvidenceValue& ev, const ParamSpace& space);
Json to_json(const PhiVerdict& v, const ParamSpace& space);
Json to_json(const RatioResult& r);
Json to_json(const PosteriorSummary& s);
Json to_json(const HweReport& r);
Json to_json(const OptConfig& cfg);

/// Serializes with fixed key order and 17 significant digits for floats.
std::string dump_json(const Json& j, int indent = 2);

/// Long-format CSV: alpha, one column per ambient coordinate, lambda, inside.
std::string contour_csv(const ContourResult& c, const ParamSpace& space);
/// y1,y2,y3,theta1_hat,theta3_hat,nu1,nu2,nu3,case
std::string hwe_csv(std::span<const HweFigureRow> rows);

}  // namespace lrpossib
