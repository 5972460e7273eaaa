#pragma once

#include <cstdint>

namespace lrpossib {

/// Knobs of the supremum engine. Results are a deterministic function of the
/// inputs and this configuration; the thread count never changes results.
struct OptConfig {
  /// Relative tolerance on the log-likelihood supremum.
  double rel_tol = 1e-8;
  /// Coarse grid points per dimension for one-dimensional searches.
  int grid_1d = 512;
  /// Coarse grid points per dimension for multi-dimensional searches.
  int grid_nd = 96;
  int refine_rounds = 4;
  int multistarts = 16;
  std::uint64_t seed = 0;
  /// 0 means: LRPOSSIB_THREADS if set, otherwise the hardware concurrency.
  int threads = 0;
  /// Weight of the squared constraint violation in the penalized objective.
  double penalty_weight = 1e6;
  /// A global log-likelihood supremum above this value is treated as
  /// divergence (x outside X*).
  double xstar_cap = 700.0;
  /// Use model-declared closed forms when available.
  bool use_closed_form = true;

  /// Throws InputError unless every field is in range.
  void validate() const;
};

/// Resolves the effective worker count for a configuration.
int resolve_threads(const OptConfig& cfg);

}  // namespace lrpossib
