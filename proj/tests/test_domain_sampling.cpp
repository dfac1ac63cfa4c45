#include <catch2/catch_amalgamated.hpp>

#include "ridgekit/domain.hpp"
#include "ridgekit/projection.hpp"
#include "ridgekit/sampling.hpp"
#include "test_util.hpp"

using namespace ridgekit;

namespace {
const char* kBuiltins[] = {"disc",        "ellipse",          "disc_halfplane",
                           "graph_power", "graph_piecewise_parabola", "polyline"};
}

TEST_CASE("builtin domains construct with sane geometry") {
  for (const char* name : kBuiltins) {
    INFO("builtin: " << name);
    const Domain dom = build_domain(builtin_spec(name));
    CHECK(!dom.pieces.empty());
    CHECK(dom.diameter() > 0.0);
    const Box w = dom.query_window();
    CHECK(w.width() > 0.0);
    CHECK(w.height() > 0.0);
  }
}

TEST_CASE("inside tests match the shape definitions") {
  const Domain disc = build_domain(builtin_spec("disc"));
  CHECK(disc.contains({0.0, 0.0}));
  CHECK(disc.contains({0.9, 0.0}));
  CHECK_FALSE(disc.contains({1.0, 0.0}));  // boundary point, open set
  CHECK_FALSE(disc.contains({1.2, 0.0}));

  const Domain ell = build_domain(builtin_spec("ellipse"));
  CHECK(ell.contains({1.9, 0.0}));
  CHECK(ell.contains({0.0, 0.9}));
  CHECK_FALSE(ell.contains({0.0, 1.1}));
  CHECK_FALSE(ell.contains({2.1, 0.0}));

  // union of the unit disc and the upper half plane
  const Domain hp = build_domain(builtin_spec("disc_halfplane"));
  CHECK(hp.contains({0.0, 0.0}));
  CHECK(hp.contains({0.0, -0.9}));
  CHECK(hp.contains({3.0, 0.5}));
  CHECK_FALSE(hp.contains({3.0, -0.5}));
  CHECK_FALSE(hp.contains({0.0, -1.1}));

  // region above the power graph y = |x|^1.5
  const Domain pw = build_domain(builtin_spec("graph_power"));
  CHECK(pw.contains({0.0, 0.5}));
  CHECK(pw.contains({1.0, 1.5}));
  CHECK_FALSE(pw.contains({1.0, 0.5}));

  // rectangle strip
  const Domain strip = build_domain(builtin_spec("polyline"));
  CHECK(strip.contains({0.0, 0.0}));
  CHECK(strip.contains({2.9, 0.2}));
  CHECK_FALSE(strip.contains({0.0, 0.3}));
  CHECK_FALSE(strip.contains({3.1, 0.0}));
}

TEST_CASE("corner inventory per builtin") {
  CHECK(build_domain(builtin_spec("disc")).is_c1());
  CHECK(build_domain(builtin_spec("ellipse")).is_c1());
  CHECK(build_domain(builtin_spec("graph_piecewise_parabola")).is_c1());

  const Domain hp = build_domain(builtin_spec("disc_halfplane"));
  REQUIRE(hp.corners.size() == 2);
  for (const Corner& c : hp.corners) {
    CHECK(std::fabs(std::fabs(c.point.x) - 1.0) < 1e-12);
    CHECK(std::fabs(c.point.y) < 1e-12);
    CHECK(dist(c.normal_prev, c.normal_next) > 1e-6);  // genuine tangent jump
  }

  CHECK(build_domain(builtin_spec("polyline")).corners.size() == 4);
}

TEST_CASE("boundary samples sit on their pieces with unit inner normals") {
  for (const char* name : kBuiltins) {
    INFO("builtin: " << name);
    const Workspace ws = Workspace::make(builtin_spec(name));
    const Domain& dom = ws.dom();
    const double tol = 1e-9 * dom.diameter();
    REQUIRE(!ws.boundary.samples.empty());
    const std::size_t stride = std::max<std::size_t>(1, ws.boundary.samples.size() / 400);
    for (std::size_t i = 0; i < ws.boundary.samples.size(); i += stride) {
      const BoundarySample& s = ws.boundary.samples[i];
      REQUIRE(s.piece >= 0);
      REQUIRE(std::size_t(s.piece) < dom.pieces.size());
      const Piece& pc = dom.pieces[std::size_t(s.piece)];
      CHECK(dist(pc.eval(s.t), s.point) <= tol);
      CHECK(std::fabs(s.inner_normal.norm() - 1.0) <= 1e-9);
      // per-piece spacing snaps to a whole number of intervals, never wider
      // than the nominal spacing
      CHECK(s.arc_spacing <= ws.boundary.spacing * (1.0 + 1e-9));
      CHECK(s.arc_spacing >= 0.5 * ws.boundary.spacing);
      if (!s.at_corner) {
        // the inner normal points into the open set
        const double step = 1e-6 * dom.diameter();
        CHECK(dom.contains(s.point + s.inner_normal * step));
      }
    }
  }
}

TEST_CASE("sample count tracks the perimeter") {
  const Workspace ws = Workspace::make(builtin_spec("disc"));
  const double expected = 2.0 * kPi / ws.boundary.spacing;
  CHECK(std::fabs(double(ws.boundary.samples.size()) - expected) <= 0.02 * expected);
}

TEST_CASE("radius queries around a boundary point return the local patch") {
  const Workspace ws = Workspace::make(builtin_spec("disc"));
  const double r = 0.1;
  const auto hits = ws.boundary.samples_within({1.0, 0.0}, r);
  // chord radius 0.1 on the unit circle spans an arc of 2*2*asin(r/2)
  const double arc = 4.0 * std::asin(0.5 * r);
  const double expected = arc / ws.boundary.spacing;
  CHECK(std::fabs(double(hits.size()) - expected) <= 0.1 * expected + 3.0);
  for (const int idx : hits)
    CHECK(dist(ws.boundary.samples[std::size_t(idx)].point, {1.0, 0.0}) <=
          r + ws.boundary.spacing);
  const int nearest = ws.boundary.nearest_sample({1.0, 0.0});
  REQUIRE(nearest >= 0);
  CHECK(dist(ws.boundary.samples[std::size_t(nearest)].point, {1.0, 0.0}) <=
        ws.boundary.spacing);
}

TEST_CASE("corner duplicates carry one-sided normals") {
  const Workspace ws = Workspace::make(builtin_spec("disc_halfplane"));
  std::size_t corner_samples = 0;
  for (const auto& s : ws.boundary.samples)
    if (s.at_corner) ++corner_samples;
  CHECK(corner_samples >= 4);  // two corners, at least two one-sided samples each
}

TEST_CASE("degenerate specs are rejected") {
  using test_util::thrown_code;
  CHECK(thrown_code([] { builtin_spec("nosuch"); }) == ErrorCode::InvalidSpec);
  CHECK(thrown_code([] {
          DomainSpec s = builtin_spec("polyline");
          s.vertices = {{0.0, 0.0}, {1.0, 0.0}};
          Workspace::make(s);
        }) == ErrorCode::InvalidSpec);
  CHECK(thrown_code([] { Workspace::make(builtin_spec("ellipse", {{"b", 0.0}})); }) ==
        ErrorCode::InvalidSpec);
  CHECK(thrown_code([] { Workspace::make(builtin_spec("disc", {{"R", -1.0}})); }) ==
        ErrorCode::InvalidSpec);
}
