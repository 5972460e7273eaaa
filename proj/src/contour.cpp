#include "lrpossib/contour.hpp"

#include "lrpossib/errors.hpp"

#include <cmath>
#include <map>
#include <tuple>

namespace lrpossib {

namespace {

// crossing point on a grid edge: (orientation, i, j)
using EdgeId = std::tuple<int, Eigen::Index, Eigen::Index>;

}  // namespace

std::vector<Polyline> marching_squares(const Eigen::ArrayXXd& values, const Eigen::ArrayXd& xs,
                                       const Eigen::ArrayXd& ys, double level) {
  const Eigen::Index nx = values.rows(), ny = values.cols();
  if (xs.size() != nx || ys.size() != ny) throw InputError("contour: grid axes do not match the field");
  if (nx < 2 || ny < 2) return {};

  auto above = [&](Eigen::Index i, Eigen::Index j) {
    const double v = values(i, j);
    return std::isfinite(v) && v >= level;
  };
  auto frac = [&](double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || a == b) return 0.5;
    return std::clamp((level - a) / (b - a), 0.0, 1.0);
  };
  std::map<EdgeId, Eigen::Vector2d> where;
  auto point = [&](const EdgeId& e) {
    auto it = where.find(e);
    if (it != where.end()) return;
    const auto [o, i, j] = e;
    Eigen::Vector2d p;
    if (o == 0) {  // (i,j)-(i+1,j)
      const double t = frac(values(i, j), values(i + 1, j));
      p = {xs[i] + t * (xs[i + 1] - xs[i]), ys[j]};
    } else {  // (i,j)-(i,j+1)
      const double t = frac(values(i, j), values(i, j + 1));
      p = {xs[i], ys[j] + t * (ys[j + 1] - ys[j])};
    }
    where.emplace(e, p);
  };

  std::map<EdgeId, std::vector<EdgeId>> adj;
  auto link = [&](const EdgeId& a, const EdgeId& b) {
    point(a);
    point(b);
    adj[a].push_back(b);
    adj[b].push_back(a);
  };

  for (Eigen::Index i = 0; i + 1 < nx; ++i) {
    for (Eigen::Index j = 0; j + 1 < ny; ++j) {
      // corners counter-clockwise: (i,j) (i+1,j) (i+1,j+1) (i,j+1)
      const int code = (above(i, j) ? 1 : 0) | (above(i + 1, j) ? 2 : 0) | (above(i + 1, j + 1) ? 4 : 0) |
                       (above(i, j + 1) ? 8 : 0);
      if (code == 0 || code == 15) continue;
      const EdgeId bottom{0, i, j}, right{1, i + 1, j}, top{0, i, j + 1}, left{1, i, j};
      switch (code) {
        case 1: case 14: link(left, bottom); break;
        case 2: case 13: link(bottom, right); break;
        case 3: case 12: link(left, right); break;
        case 4: case 11: link(right, top); break;
        case 6: case 9: link(bottom, top); break;
        case 7: case 8: link(left, top); break;
        case 5: case 10: {
          double sum = 0.0;
          int n = 0;
          for (double v : {values(i, j), values(i + 1, j), values(i + 1, j + 1), values(i, j + 1)}) {
            if (std::isfinite(v)) {
              sum += v;
              ++n;
            }
          }
          const bool center_above = n > 0 && sum / n >= level;
          if ((code == 5) == center_above) {
            link(left, top);
            link(bottom, right);
          } else {
            link(left, bottom);
            link(right, top);
          }
          break;
        }
        default: break;
      }
    }
  }

  std::vector<Polyline> out;
  std::map<EdgeId, bool> used;
  auto walk = [&](EdgeId start) {
    Polyline line{where[start]};
    used[start] = true;
    EdgeId prev = start, cur = start;
    bool moved = true;
    while (moved) {
      moved = false;
      for (const auto& nb : adj[cur]) {
        if (nb == prev && adj[cur].size() > 1 && line.size() > 1) continue;
        if (used[nb]) {
          if (nb == start && line.size() > 2) line.push_back(where[nb]);
          continue;
        }
        used[nb] = true;
        line.push_back(where[nb]);
        prev = cur;
        cur = nb;
        moved = true;
        break;
      }
    }
    out.push_back(std::move(line));
  };
  for (const auto& [e, nbs] : adj) {
    if (nbs.size() == 1 && !used[e]) walk(e);
  }
  for (const auto& [e, nbs] : adj) {
    if (!used[e]) walk(e);
  }
  return out;
}

}  // namespace lrpossib
