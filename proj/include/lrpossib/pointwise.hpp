#pragma once

// Closed-form pointwise likelihood ratios lambda(theta, x) for the builtin
// models, written against a generic scalar so they also serve as oracles.

#include "lrpossib/errors.hpp"
#include "lrpossib/numeric.hpp"

#include <cmath>

namespace lrpossib {

template <typename Scalar>
Scalar binom_log_nu(Scalar theta, int x, int n) {
  if (n < 1 || x < 0 || x > n) throw InputError("binomial: x must lie in {0,...,n}");
  if (!(theta > Scalar(0) && theta < Scalar(1))) throw InputError("binomial: theta must lie in (0,1)");
  const Scalar xs(x), fs(n - x);
  const Scalar p_hat = xs / Scalar(n);
  return xlogy(xs, theta) + xlogy(fs, Scalar(1) - theta) - xlogy(xs, p_hat) - xlogy(fs, Scalar(1) - p_hat);
}

/// lambda for Binomial(n, theta) at count x. For x in {0, n} the denominator
/// is the boundary supremum 1.
template <typename Scalar>
Scalar binom_nu(Scalar theta, int x, int n) {
  return std::exp(binom_log_nu(theta, x, n));
}

template <typename Scalar>
Scalar poisson_log_nu(Scalar theta, int x) {
  if (x < 0) throw InputError("poisson: x must be a nonnegative integer");
  if (!(theta > Scalar(0)) || !std::isfinite(theta)) throw InputError("poisson: theta must be positive");
  if (x == 0) return -theta;
  const Scalar xs(x);
  return xs - theta + xs * std::log(theta / xs);
}

template <typename Scalar>
Scalar poisson_nu(Scalar theta, int x) {
  return std::exp(poisson_log_nu(theta, x));
}

/// Log of the normal likelihood ratio from sufficient statistics (mean m,
/// variance s2 with denominator n). The variance ratio enters with exponent
/// n/2.
template <typename Scalar>
Scalar normal_log_nu(Scalar mu, Scalar sigma2, Scalar m, Scalar s2, int n) {
  if (n < 1) throw InputError("normal: n must be >= 1");
  if (!(sigma2 > Scalar(0)) || !(s2 > Scalar(0))) throw InputError("normal: variances must be positive");
  const Scalar half_n = Scalar(n) / Scalar(2);
  const Scalar d = m - mu;
  return half_n * std::log(s2 / sigma2) - half_n / sigma2 * (s2 + d * d) + half_n;
}

template <typename Scalar>
Scalar normal_nu(Scalar mu, Scalar sigma2, Scalar m, Scalar s2, int n) {
  return std::exp(normal_log_nu(mu, sigma2, m, s2, n));
}

}  // namespace lrpossib
