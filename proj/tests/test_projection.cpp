#include <catch2/catch_amalgamated.hpp>

#include "ridgekit/domain.hpp"
#include "ridgekit/projection.hpp"
#include "test_util.hpp"

using namespace ridgekit;

TEST_CASE("disc distance and foot match the radial formula") {
  const Workspace ws = Workspace::make(builtin_spec("disc"));
  const Vec2 pts[] = {{0.3, 0.4}, {-0.6, 0.0}, {0.0, 0.05}, {0.69, -0.69}};
  for (const Vec2 x : pts) {
    INFO("x=(" << x.x << "," << x.y << ")");
    const ProjectionResult pr = project(ws, x);
    const double r = x.norm();
    CHECK(pr.distance == Catch::Approx(1.0 - r).margin(1e-9));
    REQUIRE(pr.is_singleton);
    REQUIRE(pr.projections.size() == 1);
    const Vec2 foot = x * (1.0 / r);
    CHECK(dist(pr.projections.front().point, foot) <= 1e-9);
  }
}

TEST_CASE("ellipse feet solve the closed-form normal equation") {
  const Workspace ws = Workspace::make(builtin_spec("ellipse"));  // a=2, b=1

  SECTION("two symmetric feet inside the evolute") {
    // at (x0, 0) with |x0| < a - b^2/a the stationarity condition gives
    // cos t = 2 x0 / 3; for x0 = 1.4 the feet are (28/15, ±sqrt(29)/15)
    const ProjectionResult pr = project(ws, {1.4, 0.0});
    CHECK_FALSE(pr.is_singleton);
    REQUIRE(pr.projections.size() == 2);
    CHECK(pr.distance == Catch::Approx(std::sqrt(0.34666666666667)).margin(1e-8));
    const double fx = 28.0 / 15.0, fy = std::sqrt(29.0) / 15.0;
    double lo = 1e9, hi = 1e9;
    for (const auto& h : pr.projections) {
      lo = std::min(lo, dist(h.point, {fx, fy}));
      hi = std::min(hi, dist(h.point, {fx, -fy}));
    }
    CHECK(lo <= 1e-6);
    CHECK(hi <= 1e-6);
  }

  SECTION("vertex foot beyond the evolute") {
    const ProjectionResult pr = project(ws, {1.6, 0.0});
    REQUIRE(pr.is_singleton);
    CHECK(pr.distance == Catch::Approx(0.4).margin(1e-9));
    CHECK(dist(pr.projections.front().point, {2.0, 0.0}) <= 1e-7);
  }

  SECTION("feet satisfy stationarity and realize the distance") {
    for (const Vec2 x : test_util::interior_points(ws, 50, 902)) {
      const ProjectionResult pr = project(ws, x);
      for (const auto& h : pr.projections) {
        CHECK(std::fabs(dist(h.point, x) - pr.distance) <= 1e-7);
        const Piece& pc = ws.dom().pieces[std::size_t(h.piece)];
        const Vec2 tangent = pc.deriv(h.t).normalized();
        CHECK(std::fabs((h.point - x).dot(tangent)) <= 1e-6 * ws.dom().diameter());
      }
    }
  }
}

TEST_CASE("distance is 1-Lipschitz on interior pairs") {
  for (const char* name : {"ellipse", "disc_halfplane", "graph_power"}) {
    INFO("builtin: " << name);
    const Workspace ws = Workspace::make(builtin_spec(name));
    const auto pts = test_util::interior_points(ws, 120, 7101);
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
      const double da = distance(ws, pts[i]);
      const double db = distance(ws, pts[i + 1]);
      CHECK(std::fabs(da - db) <= dist(pts[i], pts[i + 1]) + 1e-9);
    }
  }
}

TEST_CASE("equidistant sets are reported as multiple clusters") {
  SECTION("disc center sees the whole circle") {
    const Workspace ws = Workspace::make(builtin_spec("disc"));
    const ProjectionResult pr = project(ws, {0.0, 0.0});
    CHECK(pr.distance == Catch::Approx(1.0).margin(1e-9));
    CHECK_FALSE(pr.is_singleton);
    CHECK(pr.projections.size() >= 8);
    CHECK(pr.cluster_gap >= 1.9);  // antipodal representatives
  }

  SECTION("strip midline sees both edges") {
    const Workspace ws = Workspace::make(builtin_spec("polyline"));
    const ProjectionResult pr = project(ws, {0.0, 0.0});
    CHECK(pr.distance == Catch::Approx(0.25).margin(1e-12));
    CHECK_FALSE(pr.is_singleton);
    REQUIRE(pr.projections.size() == 2);
    CHECK(pr.cluster_gap == Catch::Approx(0.5).margin(0.02));
    CHECK(is_skeleton_point(ws, {0.0, 0.0}));
    CHECK_FALSE(is_skeleton_point(ws, {0.0, 0.1}));
  }
}

TEST_CASE("interior preconditions are enforced") {
  using test_util::thrown_code;
  const Workspace ws = Workspace::make(builtin_spec("disc"));
  CHECK(thrown_code([&] { distance(ws, {1.2, 0.0}); }) == ErrorCode::NotInteriorPoint);
  CHECK(thrown_code([&] { distance(ws, {1.0, 0.0}); }) == ErrorCode::NotInteriorPoint);
  CHECK(thrown_code([&] { project(ws, {5.0, 5.0}); }) == ErrorCode::QueryOutsideClipBox);
  CHECK(thrown_code([&] { distance(ws, {0.0, 0.0}); }) == std::nullopt);
}

TEST_CASE("projections deviate less as the probe circle shrinks") {
  const Workspace ws = Workspace::make(builtin_spec("disc"));
  const UscReport rep = usc_probe(ws, {0.5, 0.0}, {0.2, 0.02, 0.002}, 0.05);
  CHECK(rep.pass);
  REQUIRE(rep.deviations.size() == 3);
  CHECK(rep.deviations.back() <= 0.01);
  CHECK(rep.deviations[1] <= rep.deviations[0] + 1e-9);
  CHECK(rep.deviations[2] <= rep.deviations[1] + 1e-9);

  using test_util::thrown_code;
  CHECK(thrown_code([&] { usc_probe(ws, {0.5, 0.0}, {0.3}, 0.05); }) ==
        ErrorCode::InvalidRequest);  // radius above d/2
  CHECK(thrown_code([&] { usc_probe(ws, {0.5, 0.0}, {0.01, 0.02}, 0.05); }) ==
        ErrorCode::InvalidRequest);  // not decreasing
}
