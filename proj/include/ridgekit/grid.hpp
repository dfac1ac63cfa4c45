#pragma once

// Uniform cell grid over the query window shared by the skeleton detector and
// the marching solver.  Cell (0,0) is the lower-left center.

#include <cstdint>
#include <vector>

#include "ridgekit/domain.hpp"
#include "ridgekit/errors.hpp"
#include "ridgekit/geometry.hpp"

namespace ridgekit {

struct GridGeom {
  Vec2 origin;  // center of cell (0,0)
  double h = 0.0;
  int nx = 0, ny = 0;

  Vec2 center(int i, int j) const { return {origin.x + i * h, origin.y + j * h}; }
  std::size_t index(int i, int j) const {
    return std::size_t(j) * std::size_t(nx) + std::size_t(i);
  }
  std::size_t cells() const { return std::size_t(nx) * std::size_t(ny); }
  bool in_bounds(int i, int j) const { return i >= 0 && i < nx && j >= 0 && j < ny; }
};

struct InteriorGrid {
  GridGeom geom;
  std::vector<std::uint8_t> interior;  // cell center in the open set
  std::size_t n_interior = 0;
};

inline InteriorGrid make_grid(const Domain& dom, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidRequest, "grid step must be positive");
  const Box w = dom.query_window();
  InteriorGrid g;
  g.geom.h = h;
  g.geom.nx = int(w.width() / h + 1e-9);
  g.geom.ny = int(w.height() / h + 1e-9);
  g.geom.origin = {w.lo.x + 0.5 * h, w.lo.y + 0.5 * h};
  if (g.geom.nx < 1 || g.geom.ny < 1)
    throw Error(ErrorCode::GridTooCoarse, "grid step exceeds the query window");
  g.interior.assign(g.geom.cells(), 0);
  for (int j = 0; j < g.geom.ny; ++j)
    for (int i = 0; i < g.geom.nx; ++i)
      if (dom.contains(g.geom.center(i, j))) {
        g.interior[g.geom.index(i, j)] = 1;
        ++g.n_interior;
      }
  if (g.n_interior < 32 * 32)
    throw Error(ErrorCode::GridTooCoarse, "fewer than 32x32 interior cells");
  return g;
}

}  // namespace ridgekit
