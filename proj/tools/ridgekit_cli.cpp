// ridgekit command-line front end: distance fields, skeleton detection,
// touching-ball radii, cut-locus classification, Eikonal solves, the
// verification suites, and SVG rendering.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ridgekit/curvature.hpp"
#include "ridgekit/cutlocus.hpp"
#include "ridgekit/domain.hpp"
#include "ridgekit/eikonal.hpp"
#include "ridgekit/errors.hpp"
#include "ridgekit/grid.hpp"
#include "ridgekit/io.hpp"
#include "ridgekit/projection.hpp"
#include "ridgekit/sampling.hpp"
#include "ridgekit/threads.hpp"
#include "ridgekit/verify.hpp"

namespace {

using ridgekit::Vec2;

struct Options {
  std::string builtin;
  std::string domain_file;
  double grid_res = 1.0 / 64.0;
  std::string point_str;
  std::string at_str;
  std::string out = "-";
  std::string format;  // empty = per-command default
  std::vector<std::string> tol_kv;
  std::string param_str;
  unsigned seed = 1234;
};

void add_common(CLI::App* cmd, Options& o, bool needs_grid) {
  auto* b = cmd->add_option("--builtin", o.builtin,
                            "builtin domain name: disc, ellipse, disc_halfplane, graph_power, "
                            "graph_piecewise_parabola, polyline");
  auto* d = cmd->add_option("--domain", o.domain_file, "DomainSpec JSON file");
  b->excludes(d);
  cmd->add_option("--param", o.param_str,
                  "builtin parameter overrides, e.g. a=2,b=1 (comma-separated)");
  if (needs_grid)
    cmd->add_option("--grid-res", o.grid_res, "grid step h (default 1/64)");
  cmd->add_option("--out", o.out, "output path, '-' for stdout (default)");
  cmd->add_option("--format", o.format, "output format: csv, json, svg, pgm");
  cmd->add_option("--tol", o.tol_kv,
                  "tolerance override KEY=VAL (repeatable); keys: spacing, resolution, "
                  "env_radius, env_radii=a:b:c");
  cmd->add_option("--seed", o.seed, "seed for randomized property suites (default 1234)");
}

std::map<std::string, double> parse_kv(const std::string& s, char sep) {
  std::map<std::string, double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ridgekit::Error(ridgekit::ErrorCode::InvalidRequest,
                            "expected KEY=VAL, got '" + item + "'");
    char* end = nullptr;
    const std::string val = item.substr(eq + 1);
    const double v = std::strtod(val.c_str(), &end);
    if (end == val.c_str())
      throw ridgekit::Error(ridgekit::ErrorCode::InvalidRequest,
                            "non-numeric value in '" + item + "'");
    out[item.substr(0, eq)] = v;
  }
  return out;
}

struct Tolerances {
  std::optional<double> spacing;
  double resolution = ridgekit::kDefaultResolution;
  std::optional<double> env_radius;
  std::vector<double> env_radii{0.4, 0.2, 0.1};
};

Tolerances parse_tols(const std::vector<std::string>& kvs) {
  Tolerances t;
  for (const auto& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw ridgekit::Error(ridgekit::ErrorCode::InvalidRequest,
                            "--tol expects KEY=VAL, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    const std::string val = kv.substr(eq + 1);
    if (key == "env_radii") {
      std::vector<double> radii;
      std::stringstream ss(val);
      std::string item;
      while (std::getline(ss, item, ':'))
        if (!item.empty()) radii.push_back(std::strtod(item.c_str(), nullptr));
      if (radii.empty())
        throw ridgekit::Error(ridgekit::ErrorCode::InvalidRequest,
                              "--tol env_radii needs a colon-separated list");
      t.env_radii = radii;
      continue;
    }
    char* end = nullptr;
    const double v = std::strtod(val.c_str(), &end);
    if (end == val.c_str())
      throw ridgekit::Error(ridgekit::ErrorCode::InvalidRequest,
                            "--tol " + key + " needs a numeric value");
    if (key == "spacing") t.spacing = v;
    else if (key == "resolution") t.resolution = v;
    else if (key == "env_radius") t.env_radius = v;
    else
      throw ridgekit::Error(ridgekit::ErrorCode::InvalidRequest,
                            "unsupported tolerance key '" + key + "'");
  }
  return t;
}

ridgekit::DomainSpec resolve_spec(const Options& o) {
  if (!o.domain_file.empty()) {
    std::ifstream in(o.domain_file);
    if (!in)
      throw ridgekit::Error(ridgekit::ErrorCode::InvalidRequest,
                            "cannot open domain file '" + o.domain_file + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw ridgekit::Error(ridgekit::ErrorCode::InvalidSpec,
                            std::string("domain file is not valid JSON: ") + e.what());
    }
    return ridgekit::spec_from_json(j);
  }
  if (o.builtin.empty())
    throw ridgekit::Error(ridgekit::ErrorCode::InvalidRequest,
                          "one of --builtin or --domain is required");
  return ridgekit::builtin_spec(o.builtin, o.param_str.empty()
                                               ? std::map<std::string, double>{}
                                               : parse_kv(o.param_str, ','));
}

Vec2 parse_point(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw ridgekit::Error(ridgekit::ErrorCode::InvalidRequest,
                          "--point expects X,Y, got '" + s + "'");
  char* e1 = nullptr;
  char* e2 = nullptr;
  const std::string xs = s.substr(0, comma), ys = s.substr(comma + 1);
  const double x = std::strtod(xs.c_str(), &e1);
  const double y = std::strtod(ys.c_str(), &e2);
  if (e1 == xs.c_str() || e2 == ys.c_str())
    throw ridgekit::Error(ridgekit::ErrorCode::InvalidRequest,
                          "--point expects numeric X,Y, got '" + s + "'");
  return {x, y};
}

// Named boundary anchors for `rho --at`; anything else parses as X,Y.
Vec2 resolve_at(const std::string& s, const ridgekit::DomainSpec& spec) {
  using ridgekit::DomainKind;
  if (s == "vertex" || s == "covertex") {
    if (spec.kind != DomainKind::Ellipse)
      throw ridgekit::Error(ridgekit::ErrorCode::InvalidRequest,
                            "--at " + s + " is only defined for the ellipse");
    const double a = ridgekit::get_param(spec, "a", 2.0);
    const double b = ridgekit::get_param(spec, "b", 1.0);
    return s == "vertex" ? Vec2{a, 0.0} : Vec2{0.0, b};
  }
  if (s == "corner") {
    if (spec.kind != DomainKind::DiscHalfplane)
      throw ridgekit::Error(ridgekit::ErrorCode::InvalidRequest,
                            "--at corner is only defined for disc_halfplane");
    return {1.0, 0.0};
  }
  if (s == "cusp") {
    if (spec.kind != DomainKind::GraphPower)
      throw ridgekit::Error(ridgekit::ErrorCode::InvalidRequest,
                            "--at cusp is only defined for graph_power");
    return {0.0, 0.0};
  }
  return parse_point(s);
}

// Output sink: stdout or a file (binary-safe for PGM).
class Sink {
 public:
  explicit Sink(const std::string& path) : path_(path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_)
        throw ridgekit::Error(ridgekit::ErrorCode::InvalidRequest,
                              "cannot open output path '" + path + "'");
    }
  }
  std::ostream& stream() { return path_ == "-" ? std::cout : file_; }

 private:
  std::string path_;
  std::ofstream file_;
};

std::string pick_format(const std::string& given, const std::string& fallback,
                        std::initializer_list<const char*> allowed) {
  const std::string f = given.empty() ? fallback : given;
  for (const char* a : allowed)
    if (f == a) return f;
  std::string msg = "unsupported format '" + f + "' here; allowed:";
  for (const char* a : allowed) msg += std::string(" ") + a;
  throw ridgekit::Error(ridgekit::ErrorCode::InvalidRequest, msg);
}

ridgekit::Workspace make_workspace(const Options& o, const Tolerances& t) {
  return ridgekit::Workspace::make(resolve_spec(o), t.spacing.value_or(0.0));
}

int cmd_distfield(const Options& o) {
  const Tolerances t = parse_tols(o.tol_kv);
  const std::string fmt = pick_format(o.format, "csv", {"csv", "pgm"});
  const ridgekit::Workspace ws = make_workspace(o, t);
  const ridgekit::InteriorGrid grid = ridgekit::make_grid(ws.dom(), o.grid_res);
  std::vector<ridgekit::ProjectionResult> results(grid.interior.size());
  ridgekit::parallel_for(grid.interior.size(), [&](std::size_t k) {
    if (!grid.interior[k]) return;
    const int i = int(k) % grid.geom.nx, j = int(k) / grid.geom.nx;
    results[k] = ridgekit::project(ws, grid.geom.center(i, j));
  });
  Sink sink(o.out);
  if (fmt == "csv") {
    ridgekit::write_distfield_csv(sink.stream(), ws, grid, results);
  } else {
    ridgekit::ScalarField f;
    f.geom = grid.geom;
    f.value.assign(grid.interior.size(), 0.0);
    f.state.assign(grid.interior.size(), ridgekit::CellState::Exterior);
    for (std::size_t k = 0; k < grid.interior.size(); ++k)
      if (grid.interior[k]) {
        f.value[k] = results[k].distance;
        f.state[k] = ridgekit::CellState::Accepted;
      }
    ridgekit::write_field_pgm(sink.stream(), f);
  }
  return 0;
}

int cmd_skeleton(const Options& o) {
  const Tolerances t = parse_tols(o.tol_kv);
  const std::string fmt = pick_format(o.format, "csv", {"csv", "pgm"});
  const ridgekit::Workspace ws = make_workspace(o, t);
  const ridgekit::SkeletonMask mask = ridgekit::detect_skeleton(ws, o.grid_res);
  Sink sink(o.out);
  if (fmt == "csv")
    ridgekit::write_mask_csv(sink.stream(), mask);
  else
    ridgekit::write_mask_pgm(sink.stream(), mask);
  return 0;
}

int cmd_rho(const Options& o) {
  const Tolerances t = parse_tols(o.tol_kv);
  const ridgekit::Workspace ws = make_workspace(o, t);
  Sink sink(o.out);

  if (!o.at_str.empty()) {
    const std::string fmt = pick_format(o.format, "json", {"json"});
    const Vec2 q = resolve_at(o.at_str, ws.dom().spec);
    const auto duplicates = ridgekit::boundary_samples_at(ws, q);
    nlohmann::json sides = nlohmann::json::array();
    for (const auto& smp : duplicates) {
      const ridgekit::Radius r = ridgekit::rho(ws, smp);
      nlohmann::json side{{"normal_x", ridgekit::num12(smp.inner_normal.x)},
                          {"normal_y", ridgekit::num12(smp.inner_normal.y)},
                          {"rho", ridgekit::radius_json(r)}};
      try {
        side["rho_from_curvature"] =
            ridgekit::radius_json(ridgekit::rho_from_curvature(ws, smp));
      } catch (const ridgekit::Error&) {
        side["rho_from_curvature"] = nullptr;  // corner / curvature jump
      }
      sides.push_back(side);
    }
    const ridgekit::Radius point_rho = ridgekit::rho_at_point(ws, q);
    const auto star = ridgekit::rho_star_at_point(ws, q, t.env_radii);
    nlohmann::json out{{"x", ridgekit::num12(q.x)},
                       {"y", ridgekit::num12(q.y)},
                       {"rho", ridgekit::radius_json(point_rho)},
                       {"rho_star", ridgekit::radius_json(star.value)},
                       {"sides", sides}};
    sink.stream() << out.dump(2) << '\n';
    return 0;
  }

  const std::string fmt = pick_format(o.format, "csv", {"csv"});
  (void)fmt;
  const ridgekit::RhoTable table = ridgekit::RhoTable::build(ws);
  std::vector<ridgekit::RhoRow> rows(ws.boundary.samples.size());
  ridgekit::parallel_for(rows.size(), [&](std::size_t i) {
    const auto& smp = ws.boundary.samples[i];
    rows[i].arc_param = double(i) * ws.boundary.spacing;
    rows[i].point = smp.point;
    rows[i].rho = table.values[i];
    rows[i].rho_star = ridgekit::rho_star(ws, smp, t.env_radii, &table).value;
  });
  ridgekit::write_rho_csv(sink.stream(), rows);
  return 0;
}

int cmd_classify(const Options& o) {
  const Tolerances t = parse_tols(o.tol_kv);
  const ridgekit::Workspace ws = make_workspace(o, t);
  Sink sink(o.out);
  if (!o.point_str.empty()) {
    const std::string fmt = pick_format(o.format, "json", {"json"});
    (void)fmt;
    const Vec2 x = parse_point(o.point_str);
    const ridgekit::RhoTable table = ridgekit::RhoTable::build(ws);
    const auto res = ridgekit::classify(ws, table, x, t.resolution);
    sink.stream() << ridgekit::classify_json(x, res, t.resolution).dump(2) << '\n';
    return 0;
  }
  const std::string fmt = pick_format(o.format, "csv", {"csv"});
  (void)fmt;
  const ridgekit::RhoTable table = ridgekit::RhoTable::build(ws);
  const ridgekit::InteriorGrid grid = ridgekit::make_grid(ws.dom(), o.grid_res);
  std::vector<ridgekit::ClassifyResult> cells(grid.interior.size());
  ridgekit::parallel_for(grid.interior.size(), [&](std::size_t k) {
    if (!grid.interior[k]) return;
    const int i = int(k) % grid.geom.nx, j = int(k) / grid.geom.nx;
    cells[k] = ridgekit::classify_with(ws, table, grid.geom.center(i, j), t.resolution);
  });
  ridgekit::write_classify_csv(sink.stream(), grid, cells);
  return 0;
}

int cmd_eikonal(const Options& o) {
  const Tolerances t = parse_tols(o.tol_kv);
  const std::string fmt = pick_format(o.format, "csv", {"csv", "pgm", "json"});
  const ridgekit::Workspace ws = make_workspace(o, t);
  const ridgekit::ScalarField f = ridgekit::solve_eikonal(ws, o.grid_res);
  Sink sink(o.out);
  if (fmt == "csv")
    ridgekit::write_field_csv(sink.stream(), f);
  else if (fmt == "pgm")
    ridgekit::write_field_pgm(sink.stream(), f);
  else
    sink.stream() << ridgekit::eikonal_stats_json(ridgekit::eikonal_error_report(f, ws)).dump(2)
                  << '\n';
  return 0;
}

int cmd_verify(const Options& o) {
  Sink sink(o.out);
  std::vector<ridgekit::CheckResult> results;
  if (o.builtin.empty())
    results = ridgekit::run_full_battery(o.seed);
  else
    results = ridgekit::run_builtin_checks(o.builtin, o.seed);
  bool all_pass = true;
  int i = 0;
  for (const auto& r : results) {
    ++i;
    char line[640];
    std::snprintf(line, sizeof line, "%s [%d/%d] %s — %s (%.1fs)\n",
                  r.pass ? "PASS" : "FAIL", i, int(results.size()), r.name.c_str(),
                  r.detail.c_str(), r.seconds);
    sink.stream() << line;
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}

int cmd_render(const Options& o) {
  const Tolerances t = parse_tols(o.tol_kv);
  const std::string fmt = pick_format(o.format, "svg", {"svg"});
  (void)fmt;
  const ridgekit::Workspace ws = make_workspace(o, t);
  const ridgekit::SkeletonMask mask = ridgekit::detect_skeleton(ws, o.grid_res);
  const ridgekit::RhoTable table = ridgekit::RhoTable::build(ws);
  const ridgekit::InteriorGrid grid = ridgekit::make_grid(ws.dom(), o.grid_res);
  std::vector<ridgekit::ClassifyResult> cells(grid.interior.size());
  ridgekit::parallel_for(grid.interior.size(), [&](std::size_t k) {
    if (!grid.interior[k]) return;
    const int i = int(k) % grid.geom.nx, j = int(k) / grid.geom.nx;
    cells[k] = ridgekit::classify_with(ws, table, grid.geom.center(i, j), t.resolution);
  });
  ridgekit::SvgOptions opt;
  opt.draw_classification = true;
  Sink sink(o.out);
  sink.stream() << ridgekit::render_svg(ws, mask, table, &cells, &grid, opt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar distance / medial-axis / cut-locus toolkit"};
  app.require_subcommand(1);

  Options o;
  auto* c_dist = app.add_subcommand("distfield", "distance + projections on a grid");
  add_common(c_dist, o, true);
  auto* c_skel = app.add_subcommand("skeleton", "detect the medial-axis cell mask");
  add_common(c_skel, o, true);
  auto* c_rho = app.add_subcommand("rho", "touching-ball radii along the boundary");
  add_common(c_rho, o, false);
  c_rho->add_option("--at", o.at_str,
                    "single boundary point: X,Y or vertex|covertex|corner|cusp");
  auto* c_cls = app.add_subcommand("classify", "cut-locus classification");
  add_common(c_cls, o, true);
  c_cls->add_option("--point", o.point_str, "classify one interior point X,Y");
  auto* c_eik = app.add_subcommand("eikonal", "first-order fast-marching solve");
  add_common(c_eik, o, true);
  auto* c_ver = app.add_subcommand("verify", "run the verification suites");
  add_common(c_ver, o, false);
  auto* c_ren = app.add_subcommand("render", "SVG overlay of boundary, mask, classes");
  add_common(c_ren, o, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << ridgekit::error_json("InvalidRequest", e.what()).dump() << '\n';
    return 2;
  }

  try {
    if (c_dist->parsed()) return cmd_distfield(o);
    if (c_skel->parsed()) return cmd_skeleton(o);
    if (c_rho->parsed()) return cmd_rho(o);
    if (c_cls->parsed()) return cmd_classify(o);
    if (c_eik->parsed()) return cmd_eikonal(o);
    if (c_ver->parsed()) return cmd_verify(o);
    if (c_ren->parsed()) return cmd_render(o);
  } catch (const ridgekit::Error& e) {
    std::cerr << ridgekit::error_json(ridgekit::error_code_name(e.code()), e.what()).dump()
              << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << ridgekit::error_json("Internal", e.what()).dump() << '\n';
    return 2;
  }
  return 0;
}
