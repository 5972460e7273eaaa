#pragma once

// Exact repeated-sampling quantities for the flat-likelihood (Fraser) and
// Severini counter-example models.

#include <boost/rational.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace lrpossib {

using Rational = boost::rational<std::int64_t>;

/// Support of P_theta as (x, probability) pairs. Fraser's P_1 places mass on
/// x = 0, which lies outside the sample space {1, 2, ...}; it is kept so the
/// probabilities sum to one.
std::vector<std::pair<std::int64_t, Rational>> fraser_pmf(std::int64_t theta);
std::vector<std::pair<std::int64_t, Rational>> severini_pmf(std::int64_t theta);

/// P_theta(floor(X / 2) = theta) by enumeration of the support.
Rational fraser_coverage(std::int64_t theta);

/// T(x) = (x - 1) / 2 for odd x > 1, ceil(x / 2) otherwise.
std::int64_t severini_T(std::int64_t x);

enum class SeveriniStatistic { T, TwoXPlusOne };

/// P_theta(stat(X) = theta) by enumeration of the support.
Rational severini_coverage(std::int64_t theta, SeveriniStatistic stat);

}  // namespace lrpossib
