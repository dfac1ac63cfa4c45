#include <catch2/catch_amalgamated.hpp>

#include "ridgekit/curvature.hpp"
#include "ridgekit/cutlocus.hpp"
#include "ridgekit/domain.hpp"
#include "test_util.hpp"

using namespace ridgekit;

TEST_CASE("strip skeleton cells are equidistant from two rectangle edges") {
  const Workspace ws = Workspace::make(builtin_spec("polyline"));
  const double h = 1.0 / 32.0;
  const SkeletonMask mask = detect_skeleton(ws, h);
  const auto centers = mask.flagged_centers();
  REQUIRE(centers.size() >= 50);
  std::size_t on_midline = 0;
  for (const Vec2 c : centers) {
    // medial axis of the rectangle: midline plus the four corner bisector
    // diagonals; every flagged cell is near-equidistant from two edges
    double e[4] = {3.0 - c.x, 3.0 + c.x, 0.25 - c.y, 0.25 + c.y};
    std::sort(e, e + 4);
    CHECK(e[1] - e[0] <= 1.5 * h);
    if (std::fabs(c.y) <= h && std::fabs(c.x) <= 2.75) ++on_midline;
  }
  CHECK(on_midline >= 50);
}

TEST_CASE("halfplane-with-disc skeleton sits on the vertical axis above the disc") {
  const Workspace ws = Workspace::make(builtin_spec("disc_halfplane"));
  const double h = 1.0 / 32.0;
  const SkeletonMask mask = detect_skeleton(ws, h);
  const auto centers = mask.flagged_centers();
  REQUIRE(centers.size() >= 50);
  double ymin = 1e9, ymax = -1e9;
  for (const Vec2 c : centers) {
    CHECK(std::fabs(c.x) <= 1.5 * h);
    ymin = std::min(ymin, c.y);
    ymax = std::max(ymax, c.y);
  }
  // every axis point (0, y), y >= 0 is equidistant from the two corners
  // (+-1, 0), so the detected set covers the nonnegative axis end to end
  CHECK(ymin >= -h);
  CHECK(ymin <= 2.0 * h);
  CHECK(ymax >= ws.dom().query_window().hi.y - 3.0 * h);
}

TEST_CASE("classifier closed forms on disc and ellipse") {
  SECTION("disc regular point") {
    const auto res = classify(builtin_spec("disc"), {0.5, 0.0});
    CHECK(res.cls == Classification::RegularPoint);
    CHECK(res.d == Catch::Approx(0.5).margin(1e-9));
    CHECK(res.singleton);
    CHECK(dist(res.foot, {1.0, 0.0}) <= 1e-7);
  }

  SECTION("ellipse skeleton segment and regular flank") {
    const Workspace ws = Workspace::make(builtin_spec("ellipse"));
    const RhoTable table = RhoTable::build(ws);
    CHECK(classify(ws, table, {0.5, 0.0}).cls == Classification::CutLocusPoint);
    CHECK(classify(ws, table, {0.0, 0.0}).cls == Classification::CutLocusPoint);
    CHECK(classify(ws, table, {1.7, 0.0}).cls == Classification::RegularPoint);
    CHECK(classify(ws, table, {0.0, 0.5}).cls == Classification::RegularPoint);
    // the skeleton endpoint (a - b^2/a, 0): d equals the envelope there
    CHECK(classify(ws, table, {1.5, 0.0}).cls == Classification::BoundaryCase);
  }
}

TEST_CASE("corner domain stays boundary-case above the corner at every resolution") {
  const Workspace ws = Workspace::make(builtin_spec("disc_halfplane"));
  const RhoTable table = RhoTable::build(ws);
  for (const double res : {1e-2, 1e-3, 1e-4}) {
    INFO("resolution=" << res);
    const auto out = classify(ws, table, {1.0, 1.0}, res);
    CHECK(out.cls == Classification::BoundaryCase);
    CHECK(out.d == Catch::Approx(1.0).margin(1e-9));
    CHECK(out.singleton);
  }
}

TEST_CASE("pull-back collinearity diagnostic") {
  SECTION("smooth disc point passes with a radial pull-back") {
    const Workspace ws = Workspace::make(builtin_spec("disc"));
    const auto rep = nonspreading_diagnostic(ws, boundary_samples_at(ws, {1.0, 0.0}).front());
    CHECK(rep.verdict == NonspreadingReport::Verdict::Pass);
    CHECK(rep.graph_ok);
    for (const Vec2 y : rep.pullback) CHECK(std::fabs(y.y) <= 0.03 * std::fabs(1.0 - y.x));
  }

  SECTION("generic smooth ellipse point passes") {
    const Workspace ws = Workspace::make(builtin_spec("ellipse"));
    const Vec2 q{2.0 * std::cos(0.66), std::sin(0.66)};
    const auto rep = nonspreading_diagnostic(ws, boundary_samples_at(ws, q).front());
    CHECK(rep.verdict == NonspreadingReport::Verdict::Pass);
  }

  SECTION("corner of the disc-halfplane union spreads") {
    const Workspace ws = Workspace::make(builtin_spec("disc_halfplane"));
    const auto sides = boundary_samples_at(ws, {1.0, 0.0});
    const auto rep = nonspreading_diagnostic(ws, sides.front());
    REQUIRE(rep.verdict == NonspreadingReport::Verdict::Fail);
    // witnesses live on two perpendicular branches through the corner
    const Vec2 va = (rep.witness_a - Vec2{1.0, 0.0}).normalized();
    const Vec2 vb = (rep.witness_b - Vec2{1.0, 0.0}).normalized();
    CHECK(std::fabs(va.dot(vb)) <= 0.2);
  }

  SECTION("power-graph cusp does not spread") {
    const Workspace ws = Workspace::make(builtin_spec("graph_power"));
    const auto rep = nonspreading_diagnostic(ws, boundary_samples_at(ws, {0.0, 0.0}).front());
    CHECK(rep.verdict != NonspreadingReport::Verdict::Fail);
  }
}

TEST_CASE("grid classification agrees with the detected mask on smooth domains") {
  SECTION("disc is all-regular away from the center point") {
    const Workspace ws = Workspace::make(builtin_spec("disc"));
    const AgreementReport rep = agreement_report(ws, 1.0 / 32.0, 2.0 / 32.0);
    CHECK(rep.n_cells >= 1000);
    CHECK(rep.agreement == 1.0);
  }

  SECTION("ellipse major-axis segment") {
    const Workspace ws = Workspace::make(builtin_spec("ellipse"));
    const AgreementReport rep = agreement_report(ws, 1.0 / 32.0, 2.0 / 32.0);
    CHECK(rep.n_cells >= 1000);
    CHECK(rep.agreement >= 0.99);
  }

  SECTION("corner domains are rejected") {
    const Workspace ws = Workspace::make(builtin_spec("disc_halfplane"));
    CHECK(test_util::thrown_code([&] { agreement_report(ws, 1.0 / 32.0, 2.0 / 32.0); }) ==
          ErrorCode::InvalidRequest);
  }
}
