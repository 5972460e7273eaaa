#include "lrpossib/counterexamples.hpp"

#include "lrpossib/errors.hpp"

namespace lrpossib {

std::vector<std::pair<std::int64_t, Rational>> fraser_pmf(std::int64_t theta) {
  if (theta < 1) throw InputError("fraser: theta must be >= 1");
  const Rational third(1, 3);
  return {{theta / 2, third}, {2 * theta, third}, {2 * theta + 1, third}};
}

std::vector<std::pair<std::int64_t, Rational>> severini_pmf(std::int64_t theta) {
  if (theta < 1) throw InputError("severini: theta must be >= 1");
  if (theta == 1 || theta % 2 == 0) {
    const Rational third(1, 3);
    return {{(theta + 1) / 2, third}, {2 * theta, third}, {2 * theta + 1, third}};
  }
  return {{(theta - 1) / 2, Rational(10, 24)}, {2 * theta, Rational(7, 24)}, {2 * theta + 1, Rational(7, 24)}};
}

Rational fraser_coverage(std::int64_t theta) {
  Rational p(0);
  for (const auto& [x, prob] : fraser_pmf(theta)) {
    if (x / 2 == theta) p += prob;
  }
  return p;
}

std::int64_t severini_T(std::int64_t x) {
  if (x < 1) throw InputError("severini: x must be >= 1");
  if (x % 2 == 1 && x > 1) return (x - 1) / 2;
  return (x + 1) / 2;
}

Rational severini_coverage(std::int64_t theta, SeveriniStatistic stat) {
  Rational p(0);
  for (const auto& [x, prob] : severini_pmf(theta)) {
    const std::int64_t value = stat == SeveriniStatistic::T ? severini_T(x) : 2 * x + 1;
    if (value == theta) p += prob;
  }
  return p;
}

}  // namespace lrpossib
