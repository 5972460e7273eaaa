#include "lrpossib/config.hpp"
#include "lrpossib/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

namespace lrpossib {

void OptConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw InputError(std::string("optimizer: ") + what);
  };
  require(rel_tol > 0.0 && rel_tol < 1.0, "tol must lie in (0, 1)");
  require(grid_1d >= 3, "1-D grid needs at least 3 points");
  require(grid_nd >= 3, "n-D grid needs at least 3 points per dimension");
  require(refine_rounds >= 0, "refine_rounds must be >= 0");
  require(multistarts >= 1, "multistarts must be >= 1");
  require(threads >= 0, "threads must be >= 0");
  require(penalty_weight > 0.0 && std::isfinite(penalty_weight), "penalty weight must be positive");
  require(xstar_cap > 0.0, "divergence cap must be positive");
}

int resolve_threads(const OptConfig& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  if (const char* env = std::getenv("LRPOSSIB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace lrpossib
