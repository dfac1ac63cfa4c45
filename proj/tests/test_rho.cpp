#include <catch2/catch_amalgamated.hpp>

#include "ridgekit/curvature.hpp"
#include "ridgekit/domain.hpp"
#include "test_util.hpp"

using namespace ridgekit;

namespace {

// Analytic curvature radius of the ellipse (a cos t, b sin t).
double ellipse_curvature_radius(double a, double b, double t) {
  const double s = std::sin(t), c = std::cos(t);
  const double q = a * a * s * s + b * b * c * c;
  return q * std::sqrt(q) / (a * b);
}

}  // namespace

TEST_CASE("touching radius equals the radius on circles") {
  for (const double R : {1.0, 2.0}) {
    INFO("R=" << R);
    const Workspace ws = Workspace::make(builtin_spec("disc", {{"R", R}}));
    const std::size_t stride = ws.boundary.samples.size() / 12;
    for (std::size_t i = 0; i < ws.boundary.samples.size(); i += stride) {
      const Radius r = rho(ws, ws.boundary.samples[i]);
      REQUIRE_FALSE(r.unbounded);
      CHECK(r.value == Catch::Approx(R).epsilon(2e-3));
    }
  }
}

TEST_CASE("touching radius tracks the curvature radius on the ellipse") {
  const Workspace ws = Workspace::make(builtin_spec("ellipse"));  // a=2, b=1
  const std::size_t stride = ws.boundary.samples.size() / 36;
  for (std::size_t i = 0; i < ws.boundary.samples.size(); i += stride) {
    const BoundarySample& s = ws.boundary.samples[i];
    const Radius r = rho(ws, s);
    REQUIRE_FALSE(r.unbounded);
    const double oracle = ellipse_curvature_radius(2.0, 1.0, s.t);
    INFO("t=" << s.t << " oracle=" << oracle);
    CHECK(r.value == Catch::Approx(oracle).epsilon(0.01));
  }
}

TEST_CASE("curvature shortcut matches the analytic radius and rejects corners") {
  const Workspace ws = Workspace::make(builtin_spec("ellipse"));
  const BoundarySample vertex = boundary_samples_at(ws, {2.0, 0.0}).front();
  CHECK(rho_from_curvature(ws, vertex).value == Catch::Approx(0.5).margin(1e-9));
  const BoundarySample covertex = boundary_samples_at(ws, {0.0, 1.0}).front();
  CHECK(rho_from_curvature(ws, covertex).value == Catch::Approx(4.0).margin(1e-9));

  const Workspace hp = Workspace::make(builtin_spec("disc_halfplane"));
  const auto sides = boundary_samples_at(hp, {1.0, 0.0});
  REQUIRE(sides.size() == 2);
  CHECK(test_util::thrown_code([&] { rho_from_curvature(hp, sides.front()); }) ==
        ErrorCode::NotC2At);
}

TEST_CASE("cusp of the power graph forces radius zero") {
  const Workspace ws = Workspace::make(builtin_spec("graph_power"));
  const Radius r = rho_at_point(ws, {0.0, 0.0});
  REQUIRE_FALSE(r.unbounded);
  CHECK(r.value <= 0.01);
}

TEST_CASE("envelope value stays below the pointwise radius") {
  const Workspace ws = Workspace::make(builtin_spec("ellipse"));
  const Radius at_covertex = rho_at_point(ws, {0.0, 1.0});
  CHECK(at_covertex.value == Catch::Approx(4.0).epsilon(0.01));

  const RhoStarResult star = rho_star_at_point(ws, {0.0, 1.0}, {0.4, 0.2, 0.1, 0.05});
  REQUIRE(star.trace.size() == 4);
  // neighborhood infimum grows back toward the pointwise value as the window
  // shrinks, and never exceeds it
  for (std::size_t i = 1; i < star.trace.size(); ++i)
    CHECK(star.trace[i].value + 1e-9 >= star.trace[i - 1].value);
  CHECK(star.value.value <= at_covertex.value + at_covertex.uncertainty + 1e-9);
  CHECK(star.value.value == Catch::Approx(4.0).epsilon(0.02));
}

TEST_CASE("corner radius takes the smaller one-sided value") {
  const Workspace ws = Workspace::make(builtin_spec("disc_halfplane"));
  const auto sides = boundary_samples_at(ws, {1.0, 0.0});
  REQUIRE(sides.size() == 2);
  const Radius r = rho_at_point(ws, {1.0, 0.0});
  REQUIRE_FALSE(r.unbounded);
  CHECK(r.value == Catch::Approx(1.0).margin(2e-3));
}

TEST_CASE("ball verdicts bracket the bisected radius") {
  const Workspace ws = Workspace::make(builtin_spec("disc"));
  const BoundarySample s = boundary_samples_at(ws, {1.0, 0.0}).front();
  const double half_diam = 0.5 * ws.dom().diameter();
  CHECK(is_touching_ball(ws, s, 0.5, std::min(0.5, half_diam)));
  CHECK_FALSE(is_touching_ball(ws, s, 1.5, std::min(1.5, half_diam)));
}

TEST_CASE("envelope schedule validation") {
  using test_util::thrown_code;
  const Workspace ws = Workspace::make(builtin_spec("disc"));
  const BoundarySample s = boundary_samples_at(ws, {1.0, 0.0}).front();
  CHECK(thrown_code([&] { rho_star(ws, s, {0.1, 0.2}); }) == ErrorCode::InvalidRequest);
  CHECK(thrown_code([&] { rho_star(ws, s, {ws.boundary.spacing}); }) ==
        ErrorCode::EnvelopeRadiusBelowSampling);
  CHECK(thrown_code([&] { rho_star(ws, s, {}); }) == ErrorCode::InvalidRequest);
}
