#pragma once

#include <cmath>
#include <limits>

namespace lrpossib {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// count * log(p) with the convention 0 * log(0) = 0.
template <typename Scalar>
inline Scalar xlogy(Scalar count, Scalar p) {
  if (count == Scalar(0)) return Scalar(0);
  if (p <= Scalar(0)) return -std::numeric_limits<Scalar>::infinity();
  return count * std::log(p);
}

inline double log_factorial(double k) { return std::lgamma(k + 1.0); }

inline double log_choose(double n, double k) {
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

/// exp(a - b) with exp(-inf - finite) = 0; clamps to [0, 1] when a <= b.
inline double ratio_from_logs(double log_num, double log_den) {
  if (log_num == kNegInf) return 0.0;
  return std::exp(log_num - log_den);
}

}  // namespace lrpossib
