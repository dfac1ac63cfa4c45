#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "ridgekit/cutlocus.hpp"
#include "ridgekit/domain.hpp"
#include "ridgekit/eikonal.hpp"
#include "ridgekit/io.hpp"
#include "ridgekit/threads.hpp"

using namespace ridgekit;

namespace {

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("domain specs survive a JSON round trip") {
  for (const char* name : {"disc", "ellipse", "disc_halfplane", "graph_power",
                           "graph_piecewise_parabola", "polyline"}) {
    INFO("builtin: " << name);
    const DomainSpec a = builtin_spec(name);
    const DomainSpec b = spec_from_json(spec_to_json(a));
    CHECK(a.kind == b.kind);
    CHECK(a.params == b.params);
    REQUIRE(a.vertices.size() == b.vertices.size());
    for (std::size_t i = 0; i < a.vertices.size(); ++i)
      CHECK(dist(a.vertices[i], b.vertices[i]) == 0.0);
    CHECK(a.clip_box.lo.x == b.clip_box.lo.x);
    CHECK(a.clip_box.hi.y == b.clip_box.hi.y);
    CHECK(a.margin == b.margin);
  }
  // identical behavior through the round trip
  const Workspace w1 = Workspace::make(builtin_spec("ellipse"));
  const Workspace w2 = Workspace::make(spec_from_json(spec_to_json(builtin_spec("ellipse"))));
  CHECK(distance(w1, {0.3, 0.2}) == distance(w2, {0.3, 0.2}));
}

TEST_CASE("numeric formatting is stable") {
  CHECK(fmt12(0.1) == "0.1");
  CHECK(fmt12(1.0 / 3.0) == "0.333333333333");
  CHECK(fmt12(-2.0) == "-2");
  CHECK(fmt12(1.25e-7) == "1.25e-07");
}

TEST_CASE("csv and pgm writers emit the documented layout") {
  const Workspace ws = Workspace::make(builtin_spec("polyline"), 0.01);
  const double h = 1.0 / 32.0;

  SECTION("skeleton mask") {
    const SkeletonMask mask = detect_skeleton(ws, h);
    std::ostringstream csv;
    write_mask_csv(csv, mask);
    const std::string s = csv.str();
    CHECK(s.rfind("x,y\n", 0) == 0);
    CHECK(count_lines(s) == mask.flagged_centers().size() + 1);

    std::ostringstream pgm;
    write_mask_pgm(pgm, mask);
    int nx = 0, ny = 0;
    std::istringstream head(pgm.str());
    std::string magic;
    head >> magic >> nx >> ny;
    CHECK(magic == "P5");
    CHECK(nx == mask.geom.nx);
    CHECK(ny == mask.geom.ny);
  }

  SECTION("scalar field") {
    const ScalarField f = solve_eikonal(ws, h);
    std::ostringstream csv;
    write_field_csv(csv, f);
    CHECK(csv.str().rfind("x,y,u,state\n", 0) == 0);
    // one row per grid cell, exterior cells included with their state tag
    CHECK(count_lines(csv.str()) == f.geom.cells() + 1);
  }

  SECTION("distance field") {
    const InteriorGrid grid = make_grid(ws.dom(), h);
    std::vector<ProjectionResult> results(grid.interior.size());
    parallel_for(grid.interior.size(), [&](std::size_t k) {
      if (!grid.interior[k]) return;
      const int i = int(k) % grid.geom.nx, j = int(k) / grid.geom.nx;
      results[k] = project(ws, grid.geom.center(i, j));
    });
    std::ostringstream csv;
    write_distfield_csv(csv, ws, grid, results);
    CHECK(csv.str().rfind("x,y,d,n_clusters,proj_x_i,proj_y_i\n", 0) == 0);
    CHECK(count_lines(csv.str()) == grid.n_interior + 1);
  }

  SECTION("classification grid") {
    const RhoTable table = RhoTable::build(ws);
    const InteriorGrid grid = make_grid(ws.dom(), h);
    std::vector<ClassifyResult> cells(grid.interior.size());
    parallel_for(grid.interior.size(), [&](std::size_t k) {
      if (!grid.interior[k]) return;
      const int i = int(k) % grid.geom.nx, j = int(k) / grid.geom.nx;
      cells[k] = classify_with(ws, table, grid.geom.center(i, j), kDefaultResolution);
    });
    std::ostringstream csv;
    write_classify_csv(csv, grid, cells);
    CHECK(csv.str().rfind("x,y,classification,d,rho_star\n", 0) == 0);
    CHECK(count_lines(csv.str()) == grid.n_interior + 1);
    CHECK(csv.str().find("CutLocusPoint") != std::string::npos);
    CHECK(csv.str().find("RegularPoint") != std::string::npos);
  }

  SECTION("svg render") {
    const SkeletonMask mask = detect_skeleton(ws, h);
    const RhoTable table = RhoTable::build(ws);
    const std::string svg = render_svg(ws, mask, table, nullptr, nullptr);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
  }
}

TEST_CASE("structured json shapes") {
  const json err = error_json("NotInteriorPoint", "nope");
  CHECK(err.at("error") == "NotInteriorPoint");
  CHECK(err.at("message") == "nope");

  const auto res = classify(builtin_spec("disc"), {0.5, 0.0});
  const json cj = classify_json({0.5, 0.0}, res, kDefaultResolution);
  CHECK(cj.at("classification") == "RegularPoint");
  CHECK(cj.at("singleton") == true);
  CHECK(cj.at("d").get<double>() == Catch::Approx(0.5).margin(1e-9));

  const Workspace ws = Workspace::make(builtin_spec("disc"));
  const json pj = projection_json({0.5, 0.0}, project(ws, {0.5, 0.0}));
  CHECK(pj.contains("d"));
  CHECK(pj.contains("projections"));
  CHECK(pj.at("projections").size() == 1);
}
