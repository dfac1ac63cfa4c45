#include <catch2/catch_amalgamated.hpp>

#include "ridgekit/domain.hpp"
#include "ridgekit/eikonal.hpp"
#include "test_util.hpp"

using namespace ridgekit;

TEST_CASE("disc solve is nonnegative, monotone, and first-order accurate") {
  const Workspace ws = Workspace::make(builtin_spec("disc"));
  const double h = 1.0 / 32.0;
  const ScalarField f = solve_eikonal(ws, h);
  CHECK(f.acceptance_monotone);
  CHECK_FALSE(f.disconnected_interior);
  std::size_t accepted = 0;
  for (std::size_t k = 0; k < f.value.size(); ++k) {
    if (f.state[k] == CellState::Exterior) continue;
    REQUIRE(f.state[k] == CellState::Accepted);
    CHECK(f.value[k] >= 0.0);
    ++accepted;
  }
  CHECK(accepted >= 1024);

  const EikonalErrorReport rep = eikonal_error_report(f, ws);
  CHECK(rep.far_max <= 2.0 * h);
  CHECK(rep.u_min >= 0.0);

  // cell closest to the center carries u close to the inradius
  const GridGeom& g = f.geom;
  const int ic = int(std::lround((0.0 - g.origin.x) / g.h));
  const int jc = int(std::lround((0.0 - g.origin.y) / g.h));
  const Vec2 cc = g.center(ic, jc);
  CHECK(std::fabs(f.at(ic, jc) - (1.0 - cc.norm())) <= 3.0 * h);
}

TEST_CASE("strip solve matches the rectangle distance") {
  const Workspace ws = Workspace::make(builtin_spec("polyline"));
  const double h = 1.0 / 64.0;
  const ScalarField f = solve_eikonal(ws, h);
  const GridGeom& g = f.geom;
  // exact distance to the rectangle [-3,3] x [-1/4,1/4]
  const auto exact = [](Vec2 p) {
    return std::min(3.0 - std::fabs(p.x), 0.25 - std::fabs(p.y));
  };
  double worst = 0.0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      if (f.state[g.index(i, j)] != CellState::Accepted) continue;
      const Vec2 c = g.center(i, j);
      worst = std::max(worst, std::fabs(f.at(i, j) - exact(c)));
    }
  // kinks on the midline cap accuracy at O(h) with a modest constant
  CHECK(worst <= 4.0 * h);

  const EikonalErrorReport rep = eikonal_error_report(f, ws);
  CHECK(rep.far_max <= 2.0 * h);
}

TEST_CASE("coarse grids are rejected") {
  const Workspace ws = Workspace::make(builtin_spec("disc"));
  CHECK(test_util::thrown_code([&] { solve_eikonal(ws, 0.25); }) ==
        ErrorCode::GridTooCoarse);
}
