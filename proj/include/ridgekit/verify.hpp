#pragma once

// Verification suites: named end-to-end checks with pinned tolerances.
//
// Each check returns a CheckResult with a measured-detail string so a failing
// run says what was computed, not just that it failed.  The CLI `verify`
// command runs the subset relevant to one builtin domain; the acceptance
// binary runs the whole battery.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ridgekit/cutlocus.hpp"
#include "ridgekit/curvature.hpp"
#include "ridgekit/domain.hpp"
#include "ridgekit/eikonal.hpp"
#include "ridgekit/projection.hpp"
#include "ridgekit/sampling.hpp"
#include "ridgekit/threads.hpp"

namespace ridgekit {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

inline std::string strfmt(const char* fmt, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  return buf;
}

class Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

// Uniform random point in the query window (not necessarily interior).
inline Vec2 random_window_point(std::mt19937& rng, const Domain& dom) {
  const Box w = dom.query_window();
  std::uniform_real_distribution<double> ux(w.lo.x, w.hi.x), uy(w.lo.y, w.hi.y);
  return {ux(rng), uy(rng)};
}

inline Vec2 random_interior_point(std::mt19937& rng, const Workspace& ws,
                                  double min_clearance = 0.0) {
  for (int tries = 0; tries < 100000; ++tries) {
    const Vec2 p = random_window_point(rng, ws.dom());
    if (!ws.dom().contains(p)) continue;
    if (min_clearance > 0.0 && distance(ws, p) < min_clearance) continue;
    return p;
  }
  throw Error(ErrorCode::InvalidRequest, "could not sample an interior point");
}

// Largest probe radius around x that keeps the whole probe circle inside the
// query window (projection queries are rejected outside it).
inline double window_headroom(const Domain& dom, Vec2 x) {
  const Box w = dom.query_window();
  return std::min(std::min(x.x - w.lo.x, w.hi.x - x.x),
                  std::min(x.y - w.lo.y, w.hi.y - x.y));
}

// Dense arc-uniform boundary point cloud for brute-force distance oracles.
inline std::vector<Vec2> brute_cloud(const Domain& dom, std::size_t total,
                                     double* max_ds = nullptr) {
  std::vector<double> lengths(dom.pieces.size());
  double L = 0.0;
  std::vector<ArcTable> tables;
  tables.reserve(dom.pieces.size());
  for (std::size_t i = 0; i < dom.pieces.size(); ++i) {
    tables.push_back(fine_arc_table(dom.pieces[i], 4096));
    lengths[i] = tables.back().length();
    L += lengths[i];
  }
  std::vector<Vec2> cloud;
  cloud.reserve(total + dom.pieces.size());
  if (max_ds) *max_ds = 0.0;
  for (std::size_t i = 0; i < dom.pieces.size(); ++i) {
    const std::size_t n = std::max<std::size_t>(2, std::size_t(double(total) * lengths[i] / L));
    const double ds = lengths[i] / double(n);
    if (max_ds) *max_ds = std::max(*max_ds, ds);
    for (std::size_t j = 0; j < n; ++j)
      cloud.push_back(dom.pieces[i].eval(tables[i].t_at_s(ds * (double(j) + 0.5))));
    // Piece endpoints exactly: at a corner minimizer the nearest mid-arc
    // sample is off by first order in the spacing, not second.
    cloud.push_back(dom.pieces[i].eval(dom.pieces[i].t0));
    cloud.push_back(dom.pieces[i].eval(dom.pieces[i].t1));
  }
  return cloud;
}

inline double brute_distance(const std::vector<Vec2>& cloud, Vec2 x) {
  double best = std::numeric_limits<double>::infinity();
  for (const Vec2& p : cloud) best = std::min(best, dist2(p, x));
  return std::sqrt(best);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Corner values on the disc-with-halfplane domain: distance, unique
// projection, touching radius and its lower envelope at the corner, and the
// equality case d((1,1)) = rho*((1,0)) = 1 classified as BoundaryCase.
inline CheckResult check_halfplane_corner_values() {
  detail::Stopwatch sw;
  CheckResult res{"halfplane-corner-values", false, "", 0.0};
  const Workspace ws = Workspace::make(builtin_spec("disc_halfplane"));

  const Vec2 x{1.0, 1.0};
  const double d = distance(ws, x);
  const auto pr = project(ws, x);
  const Vec2 foot = pr.projections.front().point;
  const Radius rc = rho_at_point(ws, {1.0, 0.0});
  const auto rs = rho_star_at_point(ws, {1.0, 0.0}, {0.4, 0.2, 0.1});
  const RhoTable table = RhoTable::build(ws);
  const auto cls = classify(ws, table, x, 1e-3);

  const bool ok_d = std::fabs(d - 1.0) <= 1e-6;
  const bool ok_foot = pr.is_singleton && dist(foot, {1.0, 0.0}) <= 1e-3;
  const bool ok_rho = !rc.unbounded && std::fabs(rc.value - 1.0) <= 1e-2;
  const bool ok_rs = !rs.value.unbounded && std::fabs(rs.value.value - 1.0) <= 5e-2;
  const bool ok_cls = cls.cls == Classification::BoundaryCase;
  res.pass = ok_d && ok_foot && ok_rho && ok_rs && ok_cls;
  res.detail = detail::strfmt(
      "d(1,1)=%.9f foot=(%.6f,%.6f) singleton=%d rho(corner)=%.6f rho*=%.6f classify=%s",
      d, foot.x, foot.y, int(pr.is_singleton), rc.value, rs.value.value,
      classification_name(cls.cls));
  res.seconds = sw.seconds();
  res.pass = res.pass && res.seconds < 10.0;
  return res;
}

// ---------------------------------------------------------------------------
// Detected cut locus of the disc-with-halfplane domain hugs the nonnegative
// vertical axis: one-sided Hausdorff (detected -> axis) within two cells.
inline CheckResult check_halfplane_skeleton_axis() {
  detail::Stopwatch sw;
  CheckResult res{"halfplane-skeleton-axis", false, "", 0.0};
  const double h = 1.0 / 64.0;
  const Workspace ws = Workspace::make(builtin_spec("disc_halfplane"));
  const auto mask = detect_skeleton(ws, h);
  const auto cells = mask.flagged_centers();
  double worst = 0.0;
  for (const Vec2 c : cells)
    worst = std::max(worst, c.y >= 0.0 ? std::fabs(c.x) : c.norm());
  res.pass = !cells.empty() && worst <= 2.0 * h;
  res.detail = detail::strfmt("flagged=%zu hausdorff_to_axis=%.6f bound=%.6f", cells.size(),
                              worst, 2.0 * h);
  res.seconds = sw.seconds();
  res.pass = res.pass && res.seconds < 60.0;
  return res;
}

// ---------------------------------------------------------------------------
// Classifier vs detector agreement on domains with known skeletons, plus the
// equality-case endpoint of the ellipse skeleton.
inline CheckResult check_classifier_agreement() {
  detail::Stopwatch sw;
  CheckResult res{"classifier-agreement", false, "", 0.0};
  const double h = 1.0 / 64.0;

  const auto rep_disc = agreement_report(builtin_spec("disc"), h, 2.0 * h);

  const Workspace ws = Workspace::make(builtin_spec("ellipse"));
  const auto rep_ell = agreement_report(ws, h, 2.0 * h);
  const RhoTable table = RhoTable::build(ws);
  const auto end = classify(ws, table, {1.5, 0.0}, 1e-3);
  const double end_gap = end.rho_star_val.unbounded
                             ? std::numeric_limits<double>::infinity()
                             : std::fabs(end.d - end.rho_star_val.value);

  const bool ok_disc = rep_disc.agreement >= 0.99;
  const bool ok_ell = rep_ell.agreement >= 0.99;
  const bool ok_end = end.cls == Classification::BoundaryCase && end_gap <= 1e-3;
  res.pass = ok_disc && ok_ell && ok_end;
  res.detail = detail::strfmt(
      "disc=%.6f (%ld cells) ellipse=%.6f (%ld cells) endpoint=%s |d-rho*|=%.2e",
      rep_disc.agreement, rep_disc.n_cells, rep_ell.agreement, rep_ell.n_cells,
      classification_name(end.cls), end_gap);
  res.seconds = sw.seconds();
  res.pass = res.pass && res.seconds < 240.0;
  return res;
}

// ---------------------------------------------------------------------------
// Regularity inequality next to the detected skeleton: every unflagged cell
// adjacent to a flagged cell with singleton projection must satisfy
// d >= rho*(foot) - tol, tol = max(2 * bisection uncertainty, 4h).
inline CheckResult check_ridge_adjacency_inequality() {
  detail::Stopwatch sw;
  CheckResult res{"ridge-adjacency-inequality", false, "", 0.0};
  const double h = 1.0 / 64.0;
  long checked_total = 0, violations = 0;
  double worst = -std::numeric_limits<double>::infinity();
  std::string worst_at = "none";

  for (const char* name : {"ellipse", "graph_piecewise_parabola"}) {
    const Workspace ws = Workspace::make(builtin_spec(name));
    const auto mask = detect_skeleton(ws, h);
    const RhoTable table = RhoTable::build(ws);
    const double env_r = classify_env_radius(ws.dom(), ws.boundary.spacing);

    for (int j = 0; j < mask.geom.ny; ++j)
      for (int i = 0; i < mask.geom.nx; ++i) {
        if (mask.flagged(i, j)) continue;
        bool adj = false;
        for (int dj = -1; dj <= 1 && !adj; ++dj)
          for (int di = -1; di <= 1; ++di)
            if (mask.flagged(i + di, j + dj)) { adj = true; break; }
        if (!adj) continue;
        const Vec2 c = mask.geom.center(i, j);
        if (!ws.dom().contains(c)) continue;
        const auto pr = project_point(ws, c);
        if (!pr.is_singleton) continue;
        ++checked_total;
        const Radius rs = rho_star_from_table(ws, table, pr.projections.front().point, env_r);
        if (rs.unbounded) { ++violations; continue; }  // flat boundary next to a ridge cell
        const double tol = std::max(2.0 * rs.uncertainty, 4.0 * h);
        const double excess = rs.value - pr.distance;
        if (excess > worst) {
          worst = excess;
          worst_at = detail::strfmt("%s(%.4f,%.4f)", name, c.x, c.y);
        }
        if (excess > tol) ++violations;
      }
  }
  res.pass = violations == 0 && checked_total > 0;
  res.detail = detail::strfmt("checked=%ld violations=%ld max_excess=%.5f (at %s) tol=%.5f",
                              checked_total, violations, worst, worst_at.c_str(), 4.0 * h);
  res.seconds = sw.seconds();
  res.pass = res.pass && res.seconds < 120.0;
  return res;
}

// ---------------------------------------------------------------------------
// Touching-ball radius vs analytic curvature radius on the ellipse.
inline CheckResult check_ellipse_curvature_match() {
  detail::Stopwatch sw;
  CheckResult res{"ellipse-curvature-match", false, "", 0.0};
  const Workspace ws = Workspace::make(builtin_spec("ellipse"));
  const int n = 200;
  std::vector<double> rel(std::size_t(n), 0.0);
  std::vector<BoundarySample> picks{std::size_t(n)};
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * kPi * (double(k) + 0.5) / double(n);
    const Piece& pc = ws.dom().pieces.front();
    BoundarySample s;
    s.point = pc.eval(t);
    s.inner_normal = pc.inner_normal(t);
    s.piece = 0;
    s.t = t;
    s.arc_spacing = ws.boundary.spacing;
    picks[std::size_t(k)] = s;
  }
  parallel_for(std::size_t(n), [&](std::size_t k) {
    const Radius r_ball = rho(ws, picks[k]);
    const Radius r_curv = rho_from_curvature(ws, picks[k]);
    rel[k] = (r_ball.unbounded || r_curv.unbounded)
                 ? 1.0
                 : std::fabs(r_ball.value - r_curv.value) / r_curv.value;
  });
  double worst = 0.0;
  for (double v : rel) worst = std::max(worst, v);
  res.pass = worst <= 0.01;
  res.detail = detail::strfmt("samples=%d max_rel_dev=%.5f bound=0.01", n, worst);
  res.seconds = sw.seconds();
  res.pass = res.pass && res.seconds < 60.0;
  return res;
}

// ---------------------------------------------------------------------------
// Upper semicontinuity of the projection map: probe circles shrinking toward
// random interior points keep their projections near the base projections.
inline CheckResult check_projection_semicontinuity(unsigned seed) {
  detail::Stopwatch sw;
  CheckResult res{"projection-semicontinuity", false, "", 0.0};
  std::mt19937 rng(seed);
  int n_pass = 0, n_total = 0;
  double worst_dev = 0.0;
  for (const char* name : {"disc", "ellipse", "disc_halfplane"}) {
    const Workspace ws = Workspace::make(builtin_spec(name));
    for (int k = 0; k < 20; ++k) {
      Vec2 x;
      double d = 0.0, r0 = 0.0;
      do {  // need headroom so probe circles stay inside the query window
        x = detail::random_interior_point(rng, ws, 0.05);
        d = distance(ws, x);
        r0 = std::min(0.4 * d, 0.9 * detail::window_headroom(ws.dom(), x));
      } while (!(r0 > 0.0));
      // Six decades: a point that happens to sit very close to the skeleton
      // needs probe circles well below its skeleton distance before the far
      // projection branch stops being sampled.
      std::vector<double> radii(6);
      for (int e = 0; e < 6; ++e) radii[std::size_t(e)] = r0 * std::pow(10.0, -e);
      const auto rep = usc_probe(ws, x, radii, 0.05);
      ++n_total;
      if (rep.pass) ++n_pass;
      worst_dev = std::max(worst_dev, rep.deviations.back());
    }
  }
  res.pass = n_pass == n_total;
  res.detail = detail::strfmt("points=%d passed=%d worst_final_deviation=%.5f eps=0.05",
                              n_total, n_pass, worst_dev);
  res.seconds = sw.seconds();
  res.pass = res.pass && res.seconds < 30.0;
  return res;
}

// ---------------------------------------------------------------------------
// Projection distance vs brute-force minimization over a dense boundary cloud.
inline CheckResult check_projection_brute_force(unsigned seed) {
  detail::Stopwatch sw;
  CheckResult res{"projection-brute-force", true, "", 0.0};
  double worst_margin = -std::numeric_limits<double>::infinity();
  double worst_dev = 0.0, worst_bound = 0.0;
  std::string worst_dom = "none";
  long n_total = 0;
  for (const char* name : {"disc", "ellipse", "disc_halfplane", "graph_power",
                           "graph_piecewise_parabola", "polyline"}) {
    const Workspace ws = Workspace::make(builtin_spec(name));
    double max_ds = 0.0;
    const auto cloud = detail::brute_cloud(ws.dom(), 1000000, &max_ds);
    std::mt19937 rng(seed);
    const int n = 1000;
    std::vector<Vec2> pts;
    pts.resize(std::size_t(n));
    for (int k = 0; k < n; ++k) pts[std::size_t(k)] = detail::random_interior_point(rng, ws);
    std::vector<double> devs(std::size_t(n), 0.0), allowances(std::size_t(n), 0.0);
    parallel_for(std::size_t(n), [&](std::size_t k) {
      const double d = distance(ws, pts[k]);
      devs[k] = std::fabs(d - detail::brute_distance(cloud, pts[k]));
      // The cloud itself overestimates d: the nearest sample can sit ds/2
      // along the boundary from the true foot, which costs (ds/2)^2/(2d)
      // in distance — material only for draws that land very near ∂Ω.
      allowances[k] = max_ds * max_ds / std::max(d, 0.5 * max_ds);
    });
    const double bound = 2.0 * 1e-9 * ws.dom().spec.clip_box.diameter();
    for (int k = 0; k < n; ++k) {
      const double v = devs[std::size_t(k)];
      const double lim = bound + allowances[std::size_t(k)];
      if (v - lim > worst_margin) {
        worst_margin = v - lim;
        worst_dev = v;
        worst_bound = lim;
        worst_dom = name;
      }
      if (v > lim) res.pass = false;
    }
    n_total += n;
  }
  res.detail = detail::strfmt("points=%ld worst |d - brute|=%.3e vs bound=%.3e (on %s)",
                              n_total, worst_dev, worst_bound, worst_dom.c_str());
  res.seconds = sw.seconds();
  res.pass = res.pass && res.seconds < 60.0;
  return res;
}

// ---------------------------------------------------------------------------
// Fast-marching first-order convergence on the disc.
inline CheckResult check_eikonal_convergence() {
  detail::Stopwatch sw;
  CheckResult res{"eikonal-convergence", false, "", 0.0};
  const Workspace ws = Workspace::make(builtin_spec("disc"));
  const double h1 = 1.0 / 64.0, h2 = 1.0 / 128.0;
  const auto f1 = solve_eikonal(ws, h1);
  const auto r1 = eikonal_error_report(f1, ws);
  const auto f2 = solve_eikonal(ws, h2);
  const auto r2 = eikonal_error_report(f2, ws);
  const double ratio = r2.far_max / r1.far_max;
  res.pass = r1.far_max <= 2.0 * h1 && ratio >= 0.4 && ratio <= 0.7;
  res.detail = detail::strfmt("far_max(h=1/64)=%.6f bound=%.6f far_max(h=1/128)=%.6f ratio=%.3f",
                              r1.far_max, 2.0 * h1, r2.far_max, ratio);
  res.seconds = sw.seconds();
  res.pass = res.pass && res.seconds < 60.0;
  return res;
}

// ---------------------------------------------------------------------------
// Degenerate tangency on the power-graph cusp: zero touching radius, zero
// envelope, and detected skeleton cells marching into the cusp as the grid
// refines.
inline CheckResult check_cusp_degeneracy() {
  detail::Stopwatch sw;
  CheckResult res{"cusp-touching-radius", false, "", 0.0};
  const Workspace ws = Workspace::make(builtin_spec("graph_power"));
  const Radius r0 = rho_at_point(ws, {0.0, 0.0});
  const auto rs = rho_star_at_point(ws, {0.0, 0.0}, {0.4, 0.2, 0.1});

  const double h1 = 1.0 / 64.0, h2 = 1.0 / 128.0;
  auto closest = [&](double h) {
    const auto mask = detect_skeleton(ws, h);
    double best = std::numeric_limits<double>::infinity();
    for (const Vec2 c : mask.flagged_centers()) best = std::min(best, c.norm());
    return best;
  };
  const double c1 = closest(h1), c2 = closest(h2);

  const bool ok_rho = !r0.unbounded && r0.value == 0.0;
  const bool ok_rs = !rs.value.unbounded && rs.value.value == 0.0;
  const bool ok_approach = c1 <= 12.0 * h1 && c2 < c1;
  res.pass = ok_rho && ok_rs && ok_approach;
  res.detail = detail::strfmt(
      "rho(cusp)=%.3g rho*(cusp)=%.3g closest(h=1/64)=%.4f (bound %.4f) closest(h=1/128)=%.4f",
      r0.value, rs.value.value, c1, 12.0 * h1, c2);
  res.seconds = sw.seconds();
  res.pass = res.pass && res.seconds < 120.0;
  return res;
}

// ---------------------------------------------------------------------------
// Cross-cutting invariants on one builtin: Lipschitz distance, envelope below
// touching radius, bisection bracket soundness, marching monotonicity.
inline CheckResult check_invariants(const std::string& builtin, unsigned seed) {
  detail::Stopwatch sw;
  CheckResult res{"invariants-" + builtin, false, "", 0.0};
  const Workspace ws = Workspace::make(builtin_spec(builtin));
  std::mt19937 rng(seed);
  long violations = 0;
  std::string first_violation = "none";
  auto fail = [&](const std::string& what) {
    if (violations++ == 0) first_violation = what;
  };

  // 1-Lipschitz distance over interior point pairs
  const double lip_eps = 1e-9;
  for (int k = 0; k < 1000; ++k) {
    const Vec2 a = detail::random_interior_point(rng, ws);
    const Vec2 b = detail::random_interior_point(rng, ws);
    const double lhs = std::fabs(distance(ws, a) - distance(ws, b));
    if (lhs > dist(a, b) + lip_eps)
      fail(detail::strfmt("lipschitz at (%.4f,%.4f)-(%.4f,%.4f)", a.x, a.y, b.x, b.y));
  }

  // envelope <= touching radius, via the memoized table
  const RhoTable table = RhoTable::build(ws);
  const std::vector<double> radii{0.4, 0.2, 0.1};
  const std::size_t n = ws.boundary.samples.size();
  const std::size_t stride = std::max<std::size_t>(1, n / 150);
  for (std::size_t i = 0; i < n; i += stride) {
    const auto& smp = ws.boundary.samples[i];
    const auto rs = rho_star(ws, smp, radii, &table);
    const Radius& r = table.values[i];
    if (rs.value.unbounded && !r.unbounded)
      fail(detail::strfmt("envelope unbounded above finite rho at sample %zu", i));
    if (!rs.value.unbounded && !r.unbounded &&
        rs.value.value > r.value + 1e-9 * std::max(1.0, r.value))
      fail(detail::strfmt("envelope %.6g above rho %.6g at sample %zu", rs.value.value,
                          r.value, i));
    // envelope trace is nondecreasing as the radius shrinks (up to 2x uncertainty)
    for (std::size_t k = 1; k < rs.trace.size(); ++k) {
      const Radius &a = rs.trace[k - 1], &b = rs.trace[k];
      if (a.unbounded || b.unbounded) continue;
      if (b.value < a.value - 2.0 * (a.uncertainty + b.uncertainty) - 1e-12)
        fail(detail::strfmt("envelope trace decreasing at sample %zu stage %zu", i, k));
    }
  }

  // bracket soundness on a strided subset
  const double half_diam = 0.5 * ws.dom().diameter();
  const std::size_t bstride = std::max<std::size_t>(1, n / 40);
  for (std::size_t i = 0; i < n; i += bstride) {
    const Radius& r = table.values[i];
    if (r.unbounded || r.value <= 0.0) continue;
    const auto& smp = ws.boundary.samples[i];
    const double lo = r.value - 2.0 * r.uncertainty;
    const double hi = r.value + 2.0 * r.uncertainty;
    if (lo > 0.0 && !is_touching_ball(ws, smp, lo, std::min(lo, half_diam)))
      fail(detail::strfmt("bracket low side open at sample %zu (r=%.6g)", i, r.value));
    if (is_touching_ball(ws, smp, hi, std::min(hi, half_diam)))
      fail(detail::strfmt("bracket high side closed at sample %zu (r=%.6g)", i, r.value));
  }

  // marching monotonicity and positivity
  const auto f = solve_eikonal(ws, 1.0 / 64.0);
  const auto er = eikonal_error_report(f, ws);
  if (!f.acceptance_monotone) fail("non-monotone acceptance order");
  if (er.u_min < 0.0) fail(detail::strfmt("negative field value %.3g", er.u_min));
  if (f.disconnected_interior) fail("unreached interior cells");

  res.pass = violations == 0;
  res.detail = detail::strfmt("violations=%ld first=%s", violations, first_violation.c_str());
  res.seconds = sw.seconds();
  return res;
}

// ---------------------------------------------------------------------------
// Battery assembly

inline std::vector<CheckResult> run_full_battery(unsigned seed) {
  std::vector<CheckResult> out;
  out.push_back(check_halfplane_corner_values());
  out.push_back(check_halfplane_skeleton_axis());
  out.push_back(check_classifier_agreement());
  out.push_back(check_ridge_adjacency_inequality());
  out.push_back(check_ellipse_curvature_match());
  out.push_back(check_projection_semicontinuity(seed));
  out.push_back(check_projection_brute_force(seed));
  out.push_back(check_eikonal_convergence());
  out.push_back(check_cusp_degeneracy());
  {
    detail::Stopwatch sw;
    CheckResult agg{"invariant-suite", true, "", 0.0};
    std::string parts;
    for (const char* name : {"disc", "ellipse", "disc_halfplane", "graph_power",
                             "graph_piecewise_parabola", "polyline"}) {
      const CheckResult r = check_invariants(name, seed);
      agg.pass = agg.pass && r.pass;
      if (!r.pass) parts += (parts.empty() ? "" : "; ") + r.name + ": " + r.detail;
    }
    agg.detail = agg.pass ? "zero violations on all six builtin domains" : parts;
    agg.seconds = sw.seconds();
    out.push_back(agg);
  }
  return out;
}

inline std::vector<CheckResult> run_builtin_checks(const std::string& builtin, unsigned seed) {
  std::vector<CheckResult> out;
  if (builtin == "disc_halfplane") {
    out.push_back(check_halfplane_corner_values());
    out.push_back(check_halfplane_skeleton_axis());
  }
  if (builtin == "disc" || builtin == "ellipse") out.push_back(check_classifier_agreement());
  if (builtin == "ellipse" || builtin == "graph_piecewise_parabola")
    out.push_back(check_ridge_adjacency_inequality());
  if (builtin == "ellipse") out.push_back(check_ellipse_curvature_match());
  if (builtin == "disc" || builtin == "ellipse" || builtin == "disc_halfplane")
    out.push_back(check_projection_semicontinuity(seed));
  out.push_back(check_projection_brute_force(seed));
  if (builtin == "disc") out.push_back(check_eikonal_convergence());
  if (builtin == "graph_power") out.push_back(check_cusp_degeneracy());
  out.push_back(check_invariants(builtin, seed));
  return out;
}

}  // namespace ridgekit
