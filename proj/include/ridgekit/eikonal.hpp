#pragma once

// First-order fast marching for |grad u| = 1 with u = 0 on the boundary.
// Cells adjacent to the boundary are initialized with the exact projection
// distance; the front is advanced by smallest tentative value with the
// classical two-axis quadratic update and a one-axis fallback.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "ridgekit/cutlocus.hpp"
#include "ridgekit/errors.hpp"
#include "ridgekit/geometry.hpp"
#include "ridgekit/grid.hpp"
#include "ridgekit/projection.hpp"

namespace ridgekit {

enum class CellState : std::uint8_t { Far, Narrow, Accepted, Exterior };

struct ScalarField {
  GridGeom geom;
  std::vector<double> value;
  std::vector<CellState> state;
  bool acceptance_monotone = true;
  bool disconnected_interior = false;  // interior cells the front never reached

  double at(int i, int j) const { return value[geom.index(i, j)]; }
};

inline ScalarField solve_eikonal(const Workspace& ws, double h) {
  const InteriorGrid grid = make_grid(ws.dom(), h);
  const GridGeom& geom = grid.geom;

  ScalarField f;
  f.geom = geom;
  f.value.assign(geom.cells(), std::numeric_limits<double>::infinity());
  f.state.assign(geom.cells(), CellState::Far);
  for (std::size_t k = 0; k < geom.cells(); ++k)
    if (!grid.interior[k]) f.state[k] = CellState::Exterior;

  auto exterior_adjacent = [&](int i, int j) {
    for (int dj = -1; dj <= 1; ++dj)
      for (int di = -1; di <= 1; ++di) {
        if (!di && !dj) continue;
        const int ii = i + di, jj = j + dj;
        if (!geom.in_bounds(ii, jj) || f.state[geom.index(ii, jj)] == CellState::Exterior)
          return true;
      }
    return false;
  };

  using HeapItem = std::pair<double, std::size_t>;
  std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>> heap;

  // Seed band: cells whose center lies within one step of the boundary carry
  // the exact distance, so no O(h) initialization bias enters the march.
  for (int j = 0; j < geom.ny; ++j)
    for (int i = 0; i < geom.nx; ++i) {
      const std::size_t idx = geom.index(i, j);
      if (f.state[idx] == CellState::Exterior) continue;
      bool candidate = exterior_adjacent(i, j);
      if (!candidate) {  // interior pocket: only worth projecting near the rim
        for (int dj = -2; dj <= 2 && !candidate; ++dj)
          for (int di = -2; di <= 2; ++di) {
            const int ii = i + di, jj = j + dj;
            if (geom.in_bounds(ii, jj) &&
                f.state[geom.index(ii, jj)] == CellState::Exterior) {
              candidate = true;
              break;
            }
          }
      }
      if (!candidate) continue;
      const double d = project_point(ws, geom.center(i, j)).distance;
      if (d <= h || exterior_adjacent(i, j)) {
        f.value[idx] = d;
        f.state[idx] = CellState::Narrow;
        heap.emplace(d, idx);
      }
    }

  auto tentative = [&](int i, int j) {
    double ax = std::numeric_limits<double>::infinity();
    double ay = ax;
    if (geom.in_bounds(i - 1, j) && f.state[geom.index(i - 1, j)] == CellState::Accepted)
      ax = f.value[geom.index(i - 1, j)];
    if (geom.in_bounds(i + 1, j) && f.state[geom.index(i + 1, j)] == CellState::Accepted)
      ax = std::min(ax, f.value[geom.index(i + 1, j)]);
    if (geom.in_bounds(i, j - 1) && f.state[geom.index(i, j - 1)] == CellState::Accepted)
      ay = f.value[geom.index(i, j - 1)];
    if (geom.in_bounds(i, j + 1) && f.state[geom.index(i, j + 1)] == CellState::Accepted)
      ay = std::min(ay, f.value[geom.index(i, j + 1)]);
    const double a = std::min(ax, ay), b = std::max(ax, ay);
    if (b == std::numeric_limits<double>::infinity()) {
      if (a == std::numeric_limits<double>::infinity()) return a;
      return a + h;  // one-axis fallback
    }
    if (b - a >= h) return a + h;
    return 0.5 * (a + b + std::sqrt(2.0 * h * h - sq(a - b)));
  };

  double last_accepted = 0.0;
  while (!heap.empty()) {
    const auto [v, idx] = heap.top();
    heap.pop();
    if (f.state[idx] == CellState::Accepted || v > f.value[idx]) continue;  // stale entry
    f.state[idx] = CellState::Accepted;
    if (v < last_accepted - 1e-12) f.acceptance_monotone = false;
    last_accepted = v;

    const int i = int(idx % std::size_t(geom.nx));
    const int j = int(idx / std::size_t(geom.nx));
    const int di[4] = {-1, 1, 0, 0}, dj[4] = {0, 0, -1, 1};
    for (int k = 0; k < 4; ++k) {
      const int ii = i + di[k], jj = j + dj[k];
      if (!geom.in_bounds(ii, jj)) continue;
      const std::size_t nidx = geom.index(ii, jj);
      if (f.state[nidx] == CellState::Exterior || f.state[nidx] == CellState::Accepted)
        continue;
      const double t = tentative(ii, jj);
      if (t < f.value[nidx]) {
        f.value[nidx] = t;
        f.state[nidx] = CellState::Narrow;
        heap.emplace(t, nidx);
      }
    }
  }

  for (std::size_t k = 0; k < geom.cells(); ++k)
    if (f.state[k] != CellState::Exterior && f.state[k] != CellState::Accepted)
      f.disconnected_interior = true;
  return f;
}

inline ScalarField solve_eikonal(const DomainSpec& spec, double h) {
  return solve_eikonal(Workspace::make(spec), h);
}

// --- error report ------------------------------------------------------------

struct EikonalErrorReport {
  double far_max = 0.0, far_mean = 0.0;
  long far_n = 0;
  double near_max = 0.0, near_mean = 0.0;
  long near_n = 0;
  double residual_median = 0.0;  // | |grad u|_h - 1 | over far accepted cells
  double u_min = 0.0;
};

// Compares u against the exact distance, split into the band within 3h of the
// detected skeleton (where the distance gradient is discontinuous and only
// O(1) error is promised) and the far region (first-order accurate).
inline EikonalErrorReport eikonal_error_report(const ScalarField& f, const Workspace& ws,
                                               const SkeletonMask* mask_in = nullptr) {
  const GridGeom& geom = f.geom;
  SkeletonMask local_mask;
  const SkeletonMask* mask = mask_in;
  if (!mask) {
    local_mask = detect_skeleton(ws, geom.h);
    mask = &local_mask;
  }

  // near band: within 3 cells (chebyshev) of a flagged cell
  std::vector<std::uint8_t> near(geom.cells(), 0);
  for (int j = 0; j < geom.ny; ++j)
    for (int i = 0; i < geom.nx; ++i) {
      if (!mask->flagged(i, j)) continue;
      for (int dj = -3; dj <= 3; ++dj)
        for (int di = -3; di <= 3; ++di)
          if (geom.in_bounds(i + di, j + dj)) near[geom.index(i + di, j + dj)] = 1;
    }

  EikonalErrorReport rep;
  rep.u_min = std::numeric_limits<double>::infinity();
  std::vector<double> errs(geom.cells(), 0.0);
  parallel_for(std::size_t(geom.ny), [&](std::size_t jj) {
    const int j = int(jj);
    for (int i = 0; i < geom.nx; ++i) {
      const std::size_t idx = geom.index(i, j);
      if (f.state[idx] != CellState::Accepted) continue;
      errs[idx] = std::fabs(f.value[idx] - project_point(ws, geom.center(i, j)).distance);
    }
  });

  std::vector<double> residuals;
  for (int j = 0; j < geom.ny; ++j)
    for (int i = 0; i < geom.nx; ++i) {
      const std::size_t idx = geom.index(i, j);
      if (f.state[idx] != CellState::Accepted) continue;
      rep.u_min = std::min(rep.u_min, f.value[idx]);
      if (near[idx]) {
        ++rep.near_n;
        rep.near_mean += errs[idx];
        rep.near_max = std::max(rep.near_max, errs[idx]);
      } else {
        ++rep.far_n;
        rep.far_mean += errs[idx];
        rep.far_max = std::max(rep.far_max, errs[idx]);

        // Godunov upwind gradient from whatever neighbours carry values
        const double u = f.value[idx];
        auto val = [&](int ii, int jj) {
          return geom.in_bounds(ii, jj) && f.state[geom.index(ii, jj)] == CellState::Accepted
                     ? f.value[geom.index(ii, jj)]
                     : std::numeric_limits<double>::infinity();
        };
        const double gx = std::max({(u - val(i - 1, j)) / geom.h,
                                    (u - val(i + 1, j)) / geom.h, 0.0});
        const double gy = std::max({(u - val(i, j - 1)) / geom.h,
                                    (u - val(i, j + 1)) / geom.h, 0.0});
        if (std::isfinite(gx) && std::isfinite(gy))
          residuals.push_back(std::fabs(std::hypot(gx, gy) - 1.0));
      }
    }
  if (rep.near_n) rep.near_mean /= double(rep.near_n);
  if (rep.far_n) rep.far_mean /= double(rep.far_n);
  if (!residuals.empty()) {
    auto mid = residuals.begin() + std::ptrdiff_t(residuals.size() / 2);
    std::nth_element(residuals.begin(), mid, residuals.end());
    rep.residual_median = *mid;
  }
  if (!std::isfinite(rep.u_min)) rep.u_min = 0.0;
  return rep;
}

}  // namespace ridgekit
