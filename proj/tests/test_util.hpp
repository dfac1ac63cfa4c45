#pragma once

// Shared helpers for the unit suites.

#include <random>

#include "ridgekit/domain.hpp"
#include "ridgekit/errors.hpp"
#include "ridgekit/projection.hpp"

namespace test_util {

// Runs f and reports which library error (if any) it raised.
template <typename F>
std::optional<ridgekit::ErrorCode> thrown_code(F&& f) {
  try {
    f();
  } catch (const ridgekit::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Uniform draw of interior points by rejection inside the query window.
inline std::vector<ridgekit::Vec2> interior_points(const ridgekit::Workspace& ws,
                                                   std::size_t n, unsigned seed) {
  const ridgekit::Domain& dom = ws.dom();
  const ridgekit::Box w = dom.query_window();
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> ux(w.lo.x, w.hi.x), uy(w.lo.y, w.hi.y);
  std::vector<ridgekit::Vec2> pts;
  while (pts.size() < n) {
    const ridgekit::Vec2 p{ux(rng), uy(rng)};
    if (dom.contains(p)) pts.push_back(p);
  }
  return pts;
}

}  // namespace test_util
