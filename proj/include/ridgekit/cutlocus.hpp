#pragma once

// Grid detection of the skeleton and its closure, the distance-vs-envelope
// classifier, the non-spreading-perpendicular diagnostic, and the
// two-direction agreement report between the classifier and the detector.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "ridgekit/curvature.hpp"
#include "ridgekit/domain.hpp"
#include "ridgekit/errors.hpp"
#include "ridgekit/geometry.hpp"
#include "ridgekit/grid.hpp"
#include "ridgekit/projection.hpp"
#include "ridgekit/sampling.hpp"
#include "ridgekit/threads.hpp"

namespace ridgekit {

enum class Classification { RegularPoint, CutLocusPoint, BoundaryCase };

inline const char* classification_name(Classification c) {
  switch (c) {
    case Classification::RegularPoint: return "RegularPoint";
    case Classification::CutLocusPoint: return "CutLocusPoint";
    case Classification::BoundaryCase: return "BoundaryCase";
  }
  return "unknown";
}

constexpr double kDefaultResolution = 1e-3;

// Absolute value-gap admission for the grid detector: one cell of distance
// spread still counts as genuine two-sided competition, otherwise the
// measure-zero equidistant set slips between cell centers.
constexpr double kDetectGapCells = 1.0;

struct SkeletonMask {
  GridGeom geom;
  std::vector<std::uint8_t> flags;
  double dilation_radius = 0.0;  // closure approximation: one-cell dilation

  bool flagged(int i, int j) const {
    return geom.in_bounds(i, j) && flags[geom.index(i, j)] != 0;
  }

  SkeletonMask dilated() const {
    SkeletonMask out = *this;
    for (int j = 0; j < geom.ny; ++j)
      for (int i = 0; i < geom.nx; ++i) {
        if (flags[geom.index(i, j)]) continue;
        for (int dj = -1; dj <= 1 && !out.flags[geom.index(i, j)]; ++dj)
          for (int di = -1; di <= 1; ++di)
            if (flagged(i + di, j + dj)) {
              out.flags[geom.index(i, j)] = 1;
              break;
            }
      }
    return out;
  }

  std::vector<Vec2> flagged_centers() const {
    std::vector<Vec2> out;
    for (int j = 0; j < geom.ny; ++j)
      for (int i = 0; i < geom.nx; ++i)
        if (flags[geom.index(i, j)]) out.push_back(geom.center(i, j));
    return out;
  }
};

inline SkeletonMask detect_skeleton(const Workspace& ws, double h) {
  const InteriorGrid grid = make_grid(ws.dom(), h);
  SkeletonMask mask;
  mask.geom = grid.geom;
  mask.flags.assign(grid.geom.cells(), 0);
  mask.dilation_radius = h;
  const double gap = kDetectGapCells * h;
  parallel_for(std::size_t(grid.geom.ny), [&](std::size_t j) {
    for (int i = 0; i < grid.geom.nx; ++i) {
      const std::size_t idx = grid.geom.index(i, int(j));
      if (!grid.interior[idx]) continue;
      const auto pr = project_point(ws, grid.geom.center(i, int(j)), gap);
      if (!pr.is_singleton) mask.flags[idx] = 1;
    }
  });
  return mask;
}

inline SkeletonMask detect_skeleton(const DomainSpec& spec, double h) {
  return detect_skeleton(Workspace::make(spec), h);
}

// --- classifier -------------------------------------------------------------

struct ClassifyResult {
  Classification cls = Classification::RegularPoint;
  double d = 0.0;
  bool singleton = true;
  Vec2 foot;             // witness projection when singleton
  Radius rho_star_val;   // envelope at the witness
};

// Envelope radius for classification: small enough that the envelope min does
// not smear distant curvature into the witness, large enough to stay well
// above the sampling floor.
inline double classify_env_radius(const Domain& dom, double spacing) {
  return std::max(0.015 * std::max(1.0, dom.spec.clip_box.diameter() / 12.0),
                  2.5 * spacing);
}

// Envelope lookup against a precomputed table around a point already known to
// lie on the boundary.
inline Radius rho_star_from_table(const Workspace& ws, const RhoTable& table,
                                  Vec2 boundary_point, double env_r) {
  Radius inf = Radius::infinite();
  bool any = false;
  for (const int idx : ws.boundary.samples_within(boundary_point, env_r)) {
    inf = radius_min(inf, table.values[std::size_t(idx)]);
    any = true;
  }
  if (!any) {
    const int idx = ws.boundary.nearest_sample(boundary_point);
    if (idx >= 0) inf = table.values[std::size_t(idx)];
  }
  return inf;
}

inline ClassifyResult classify_with(const Workspace& ws, const RhoTable& table,
                                    Vec2 x, double resolution) {
  ClassifyResult res;
  const auto pr = project_point(ws, x);
  res.d = pr.distance;
  res.singleton = pr.is_singleton;
  if (!pr.is_singleton) {
    res.cls = Classification::CutLocusPoint;
    return res;
  }
  res.foot = pr.projections.front().point;
  const double env_r = classify_env_radius(ws.dom(), ws.boundary.spacing);
  res.rho_star_val = rho_star_from_table(ws, table, res.foot, env_r);
  if (res.rho_star_val.unbounded) {
    res.cls = Classification::RegularPoint;
  } else if (res.d < res.rho_star_val.value - resolution) {
    res.cls = Classification::RegularPoint;
  } else if (res.d > res.rho_star_val.value + resolution) {
    res.cls = Classification::CutLocusPoint;
  } else {
    res.cls = Classification::BoundaryCase;
  }
  return res;
}

inline ClassifyResult classify(const Workspace& ws, const RhoTable& table, Vec2 x,
                               double resolution = kDefaultResolution) {
  require_interior(ws, x);
  return classify_with(ws, table, x, resolution);
}

inline ClassifyResult classify(const DomainSpec& spec, Vec2 x,
                               double resolution = kDefaultResolution) {
  const Workspace ws = Workspace::make(spec);
  require_interior(ws, x);
  const RhoTable table = RhoTable::build(ws);
  return classify_with(ws, table, x, resolution);
}

// --- non-spreading perpendicular diagnostic ---------------------------------

struct NonspreadingReport {
  enum class Verdict { Pass, Fail, Vacuous };
  Verdict verdict = Verdict::Vacuous;
  std::vector<Vec2> pullback;  // interior points that project onto xi
  Vec2 witness_a, witness_b;   // non-collinear pair when Fail
  bool graph_ok = false;
};

inline const char* nonspreading_verdict_name(NonspreadingReport::Verdict v) {
  switch (v) {
    case NonspreadingReport::Verdict::Pass: return "PASS";
    case NonspreadingReport::Verdict::Fail: return "FAIL";
    case NonspreadingReport::Verdict::Vacuous: return "VACUOUS";
  }
  return "unknown";
}

constexpr double kSpreadAngleTol = 5.0 * kPi / 180.0;

// Samples candidate interior points on 64 directions x 16 radii, keeps those
// whose projection set contains xi, and checks that the kept points line up
// through xi along a direction in which the nearby boundary is a graph.
inline NonspreadingReport nonspreading_diagnostic(const Workspace& ws,
                                                  const BoundarySample& xi,
                                                  int probe_count = 1024) {
  const Domain& dom = ws.dom();
  const Box window = dom.query_window();
  const double s_max = 0.45 * dom.diameter();
  // A probe at distance s from xi counts as pull-back only if one of its
  // feet lands within an s-proportional window of xi: a fixed window would
  // dwarf the smallest probe shells and admit feet several degrees off the
  // probe line, turning angular smear into spurious non-collinear witnesses.
  const double match_floor = 1e-9 * dom.diameter();
  const auto match_tol = [&](double s) { return std::max(match_floor, 0.02 * s); };

  NonspreadingReport rep;
  // 64 uniform directions plus the inner normal: the normal is the one
  // direction guaranteed to carry pull-back points at a smooth boundary
  // point, and it generally falls between the uniform rays.
  std::vector<Vec2> dirs;
  dirs.reserve(65);
  dirs.push_back(xi.inner_normal);
  for (int k = 0; k < 64; ++k) {
    const double a = 2.0 * kPi * k / 64.0;
    dirs.push_back({std::cos(a), std::sin(a)});
  }
  for (const Vec2& u : dirs) {
    if (int(rep.pullback.size()) >= probe_count) break;
    for (int m = 0; m < 16 && int(rep.pullback.size()) < probe_count; ++m) {
      const double s = s_max * std::pow(0.62, m);
      const Vec2 y = xi.point + u * s;
      if (!window.contains(y) || !dom.contains(y)) continue;
      const auto pr = project_point(ws, y);
      bool hit = false;
      for (const auto& hrep : pr.projections)
        if (dist(hrep.point, xi.point) <= match_tol(s)) { hit = true; break; }
      if (hit) rep.pullback.push_back(y);
    }
  }

  if (rep.pullback.empty()) {
    rep.verdict = NonspreadingReport::Verdict::Vacuous;
    return rep;
  }

  // collinearity of the pull-back through xi
  for (std::size_t i = 0; i < rep.pullback.size(); ++i)
    for (std::size_t j = i + 1; j < rep.pullback.size(); ++j) {
      const Vec2 va = rep.pullback[i] - xi.point;
      const Vec2 vb = rep.pullback[j] - xi.point;
      if (line_angle_between(va, vb) >= kSpreadAngleTol) {
        rep.verdict = NonspreadingReport::Verdict::Fail;
        rep.witness_a = rep.pullback[i];
        rep.witness_b = rep.pullback[j];
        return rep;
      }
    }

  // graph representability: nearby boundary must be a graph over the axis
  // orthogonal to the pull-back line
  const Vec2 line_dir = (rep.pullback.front() - xi.point).normalized();
  const Vec2 axis = line_dir.perp();
  const double w_g = 8.0 * ws.boundary.spacing;
  const auto hits = ws.boundary.samples_within(xi.point, w_g);
  rep.graph_ok = true;
  for (std::size_t i = 0; i < hits.size() && rep.graph_ok; ++i)
    for (std::size_t j = i + 1; j < hits.size(); ++j) {
      const Vec2 qa = ws.boundary.samples[std::size_t(hits[i])].point;
      const Vec2 qb = ws.boundary.samples[std::size_t(hits[j])].point;
      const double sep = dist(qa, qb);
      if (sep < 0.25 * ws.boundary.spacing) continue;  // same node / corner twin
      if (std::fabs((qa - qb).dot(axis)) < 0.05 * sep) {  // fold stacked along the line
        rep.graph_ok = false;
        break;
      }
    }
  rep.verdict = rep.graph_ok ? NonspreadingReport::Verdict::Pass
                             : NonspreadingReport::Verdict::Fail;
  return rep;
}

inline NonspreadingReport nonspreading_diagnostic(const DomainSpec& spec,
                                                  const BoundarySample& xi,
                                                  int probe_count = 1024) {
  return nonspreading_diagnostic(Workspace::make(spec), xi, probe_count);
}

// --- agreement report --------------------------------------------------------

struct Disagreement {
  Vec2 cell;
  bool expected_skeleton = false;
  Classification got = Classification::RegularPoint;
};

struct AgreementReport {
  double agreement = 1.0;
  long n_cells = 0;  // cells in scope (uniform mask neighborhood)
  std::vector<Disagreement> disagreements;  // capped at 256
  // Largest rho* - d over cells classified cut locus with singleton
  // projection; the one-sided inequality of the characterization predicts
  // this never exceeds the classifier resolution.
  double max_envelope_excess = -std::numeric_limits<double>::infinity();
  long n_singleton_cutlocus = 0;
  GridGeom geom;
};

inline AgreementReport agreement_report(const Workspace& ws, double h, double band,
                                        double resolution = kDefaultResolution) {
  const Domain& dom = ws.dom();
  if (!dom.is_c1())
    throw Error(ErrorCode::InvalidRequest,
                "agreement report requires a C1 boundary (no corners)");
  const InteriorGrid grid = make_grid(dom, h);
  const SkeletonMask mask = detect_skeleton(ws, h);
  const RhoTable table = RhoTable::build(ws);

  const GridGeom& geom = grid.geom;
  const int reach = int(std::ceil(band / h - 1e-9));

  struct CellOut {
    std::uint8_t in_scope = 0, agree = 0, singleton_cut = 0;
    float excess = 0.0f;
    Classification cls = Classification::RegularPoint;
  };
  std::vector<CellOut> cells(geom.cells());

  parallel_for(std::size_t(geom.ny), [&](std::size_t jj) {
    const int j = int(jj);
    for (int i = 0; i < geom.nx; ++i) {
      const std::size_t idx = geom.index(i, j);
      if (!grid.interior[idx]) continue;
      CellOut& out = cells[idx];

      const bool member = mask.flags[idx] != 0;
      bool uniform = true;
      for (int dj = -reach; dj <= reach && uniform; ++dj)
        for (int di = -reach; di <= reach; ++di) {
          if (!geom.in_bounds(i + di, j + dj)) continue;
          if ((mask.flags[geom.index(i + di, j + dj)] != 0) != member) {
            uniform = false;
            break;
          }
        }

      const ClassifyResult cr = classify_with(ws, table, geom.center(i, j), resolution);
      out.cls = cr.cls;
      if (cr.singleton && cr.cls == Classification::CutLocusPoint &&
          !cr.rho_star_val.unbounded) {
        out.singleton_cut = 1;
        out.excess = float(cr.rho_star_val.value - cr.d);
      }
      if (uniform) {
        out.in_scope = 1;
        const bool says_skeleton = cr.cls != Classification::RegularPoint;
        out.agree = (says_skeleton == member) ? 1 : 0;
      }
    }
  });

  AgreementReport rep;
  rep.geom = geom;
  long agree = 0;
  for (int j = 0; j < geom.ny; ++j)
    for (int i = 0; i < geom.nx; ++i) {
      const CellOut& out = cells[geom.index(i, j)];
      if (out.singleton_cut) {
        ++rep.n_singleton_cutlocus;
        rep.max_envelope_excess = std::max(rep.max_envelope_excess, double(out.excess));
      }
      if (!out.in_scope) continue;
      ++rep.n_cells;
      if (out.agree) ++agree;
      else if (rep.disagreements.size() < 256)
        rep.disagreements.push_back({geom.center(i, j),
                                     mask.flags[geom.index(i, j)] != 0, out.cls});
    }
  rep.agreement = rep.n_cells ? double(agree) / double(rep.n_cells) : 1.0;
  return rep;
}

inline AgreementReport agreement_report(const DomainSpec& spec, double h, double band,
                                        double resolution = kDefaultResolution) {
  return agreement_report(Workspace::make(spec), h, band, resolution);
}

}  // namespace ridgekit
