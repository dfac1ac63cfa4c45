#pragma once

// Metric projection onto the boundary: distance to the boundary, the full set
// of nearest boundary points (clustered), skeleton membership, and a probe
// for upper semicontinuity of the projection map.

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>
#include <vector>

#include "ridgekit/domain.hpp"
#include "ridgekit/errors.hpp"
#include "ridgekit/geometry.hpp"
#include "ridgekit/sampling.hpp"

namespace ridgekit {

// Relative admission tolerance separating true co-minimizers from refinement
// noise at double precision.
constexpr double kTauRel = 1e-7;
constexpr int kClusterCap = 64;
constexpr int kSeedCap = 256;

inline double eps_proj(const Domain& dom) { return 1e-9 * dom.spec.clip_box.diameter(); }

struct ProjectionHit {
  Vec2 point;
  int piece = 0;
  double t = 0.0;
  double distance = 0.0;
};

struct ProjectionResult {
  double distance = 0.0;
  std::vector<ProjectionHit> projections;  // one representative per cluster
  bool is_singleton = true;
  double cluster_gap = 0.0;    // max pairwise separation of representatives
  double value_spread = 0.0;   // admitted-distance spread (grid detector diagnostics)
};

// Domain plus its dense boundary, built once and shared by all queries.
// The Domain sits behind a shared_ptr so the sampling structure's back
// pointer stays valid when the workspace is moved around.
class Workspace {
 public:
  std::shared_ptr<const Domain> domain_ptr;
  DenseBoundary boundary;

  const Domain& dom() const { return *domain_ptr; }

  static Workspace make(const DomainSpec& spec, double spacing = 0.0) {
    Workspace ws;
    ws.domain_ptr = std::make_shared<const Domain>(build_domain(spec));
    const double ds = spacing > 0.0 ? spacing : default_spacing(*ws.domain_ptr);
    ws.boundary = DenseBoundary::build(*ws.domain_ptr, ds);
    return ws;
  }
};

namespace detail {

// Nearest parameter on one piece near a seed, by guarded Newton on the
// stationarity condition <p(t)-x, p'(t)> = 0, with a ternary-search fallback
// when Newton stalls or walks out of the bracket.
inline double refine_foot(const Piece& pc, Vec2 x, double t_seed, double lo, double hi) {
  if (pc.type == Piece::Type::Segment) {
    const Vec2 ab = pc.seg_b - pc.seg_a;
    const double u = (x - pc.seg_a).dot(ab) / ab.norm2();
    return std::clamp(u, lo, hi);
  }

  auto f = [&](double t) { return dist2(pc.eval(t), x); };
  double t = std::clamp(t_seed, lo, hi);
  const double t_scale = std::max(1.0, std::fabs(lo) + std::fabs(hi));
  bool converged = false;
  for (int it = 0; it < 30; ++it) {
    const Vec2 p = pc.eval(t);
    const Vec2 d1 = pc.deriv(t);
    const double g = (p - x).dot(d1);
    const double gp = d1.norm2() + (p - x).dot(pc.deriv2(t));
    if (!(gp > 0.0)) break;
    const double step = -g / gp;
    const double tn = std::clamp(t + step, lo, hi);
    const bool done = std::fabs(tn - t) < 1e-14 * t_scale;
    t = tn;
    if (done) { converged = true; break; }
  }
  if (converged && f(t) <= f(std::clamp(t_seed, lo, hi)) + 1e-300) return t;

  // ternary search (robust on the locally unimodal bracket around a seed)
  double a = lo, b = hi;
  for (int it = 0; it < 80 && b - a > 1e-15 * t_scale; ++it) {
    const double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
    if (f(m1) <= f(m2)) b = m2; else a = m1;
  }
  const double tt = 0.5 * (a + b);
  return f(tt) < f(t) ? tt : t;
}

struct SeedRange {
  int piece;
  double t_seed, lo, hi;
};

}  // namespace detail

// Core projection. tau_abs widens the admission band for near-co-minimizers;
// point queries use 0, the grid skeleton detector passes its cell size so a
// one-cell value gap still counts as a genuine two-sided competition.
inline ProjectionResult project_point(const Workspace& ws, Vec2 x, double tau_abs = 0.0) {
  const DenseBoundary& db = ws.boundary;
  const Domain& dom = ws.dom();

  double d0sq = std::numeric_limits<double>::infinity();
  for (const auto& pn : db.nodes)
    for (const Vec2 q : pn.pt) d0sq = std::min(d0sq, dist2(q, x));
  const double d0 = std::sqrt(d0sq);

  // Discrete local minima within the admission band seed the refinement.
  // A node can overestimate the in-between continuous minimum by at most
  // half a sample step (1-Lipschitz along arc length), hence the slack.
  const double seed_thresh = d0 + std::max(tau_abs, kTauRel * d0) + 0.6 * db.spacing;

  // Chain adjacency: a piece-end node is only a minimizer candidate if the
  // distance does not keep falling into the neighbouring piece, otherwise
  // clamping at the joint manufactures phantom projections (e.g. a corner
  // "competing" with the true foot just around it).
  const int npc = int(db.nodes.size());
  auto chain_prev = [&](int i) { return i > 0 ? i - 1 : (dom.closed_chain && npc > 1 ? npc - 1 : -1); };
  auto chain_next = [&](int i) { return i + 1 < npc ? i + 1 : (dom.closed_chain && npc > 1 ? 0 : -1); };

  std::vector<detail::SeedRange> seeds;
  for (std::size_t i = 0; i < db.nodes.size(); ++i) {
    const auto& pn = db.nodes[i];
    const Piece& pc = dom.pieces[i];
    const int n = int(pn.t.size());
    const double period = pc.t1 - pc.t0;
    for (int j = 0; j < n; ++j) {
      const double dj = dist(pn.pt[std::size_t(j)], x);
      if (dj > seed_thresh) continue;
      double d_prev = std::numeric_limits<double>::infinity();
      double d_next = d_prev;
      double t_lo = pn.t[std::size_t(j)], t_hi = pn.t[std::size_t(j)];
      if (j > 0) { d_prev = dist(pn.pt[std::size_t(j) - 1], x); t_lo = pn.t[std::size_t(j) - 1]; }
      if (j + 1 < n) { d_next = dist(pn.pt[std::size_t(j) + 1], x); t_hi = pn.t[std::size_t(j) + 1]; }
      if (pc.closed_loop) {  // wrap neighbours; trig pieces evaluate fine beyond [t0,t1]
        if (j == 0) { d_prev = dist(pn.pt[std::size_t(n) - 2], x); t_lo = pn.t[std::size_t(n) - 2] - period; }
        if (j + 1 == n) { d_next = dist(pn.pt[1], x); t_hi = pn.t[1] + period; }
      } else {
        if (j == 0) {
          const int p = chain_prev(int(i));
          if (p >= 0 && db.nodes[std::size_t(p)].pt.size() >= 2)
            d_prev = dist(db.nodes[std::size_t(p)].pt[db.nodes[std::size_t(p)].pt.size() - 2], x);
        }
        if (j + 1 == n) {
          const int q = chain_next(int(i));
          if (q >= 0 && db.nodes[std::size_t(q)].pt.size() >= 2)
            d_next = dist(db.nodes[std::size_t(q)].pt[1], x);
        }
      }
      if (dj <= d_prev && dj <= d_next)
        seeds.push_back({int(i), pn.t[std::size_t(j)], t_lo, t_hi});
    }
  }
  if (seeds.size() > std::size_t(kSeedCap)) {  // degenerate equidistant case
    std::vector<detail::SeedRange> kept;
    kept.reserve(std::size_t(kSeedCap));
    for (int k = 0; k < kSeedCap; ++k)
      kept.push_back(seeds[std::size_t(k) * seeds.size() / std::size_t(kSeedCap)]);
    seeds.swap(kept);
  }

  std::vector<ProjectionHit> hits;
  hits.reserve(seeds.size());
  double d_best = std::numeric_limits<double>::infinity();
  for (const auto& s : seeds) {
    const Piece& pc = dom.pieces[std::size_t(s.piece)];
    const double t = detail::refine_foot(pc, x, s.t_seed, s.lo, s.hi);
    ProjectionHit h;
    h.piece = s.piece;
    h.t = t;
    h.point = pc.eval(t);
    h.distance = dist(h.point, x);
    d_best = std::min(d_best, h.distance);
    hits.push_back(h);
  }

  const double admit = d_best + std::max(tau_abs, kTauRel * d_best);
  std::vector<ProjectionHit> adm;
  double value_max = d_best;
  for (const auto& h : hits)
    if (h.distance <= admit) { adm.push_back(h); value_max = std::max(value_max, h.distance); }

  // Single-linkage clustering at 3 sample steps: discretization splits one
  // true minimizer into neighbouring refined copies, never farther apart.
  const double link = 3.0 * db.spacing;
  std::vector<int> parent(adm.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int a) {
    while (parent[std::size_t(a)] != a) { parent[std::size_t(a)] = parent[std::size_t(parent[std::size_t(a)])]; a = parent[std::size_t(a)]; }
    return a;
  };
  for (std::size_t i = 0; i < adm.size(); ++i)
    for (std::size_t j = i + 1; j < adm.size(); ++j)
      if (dist(adm[i].point, adm[j].point) <= link) {
        const int ra = find(int(i)), rb = find(int(j));
        if (ra != rb) parent[std::size_t(rb)] = ra;
      }

  std::vector<int> roots;
  std::vector<ProjectionHit> reps;
  for (std::size_t i = 0; i < adm.size(); ++i) {
    const int r = find(int(i));
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) {
      roots.push_back(r);
      reps.push_back(adm[i]);
    } else {
      auto& rep = reps[std::size_t(it - roots.begin())];
      if (adm[i].distance < rep.distance) rep = adm[i];
    }
  }
  std::sort(reps.begin(), reps.end(), [](const ProjectionHit& a, const ProjectionHit& b) {
    return a.piece != b.piece ? a.piece < b.piece : a.t < b.t;
  });
  if (reps.size() > std::size_t(kClusterCap)) {
    std::vector<ProjectionHit> kept;
    kept.reserve(std::size_t(kClusterCap));
    for (int k = 0; k < kClusterCap; ++k)
      kept.push_back(reps[std::size_t(k) * reps.size() / std::size_t(kClusterCap)]);
    reps.swap(kept);
  }

  ProjectionResult res;
  res.distance = d_best;
  res.is_singleton = reps.size() == 1;
  res.cluster_gap = 0.0;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      res.cluster_gap = std::max(res.cluster_gap, dist(reps[i].point, reps[j].point));
  res.value_spread = value_max - d_best;
  res.projections = std::move(reps);
  return res;
}

inline void require_interior(const Workspace& ws, Vec2 x) {
  if (!inside(ws.dom(), x))
    throw Error(ErrorCode::NotInteriorPoint, "point is not in the open domain");
}

inline double distance(const Workspace& ws, Vec2 x) {
  require_interior(ws, x);
  return project_point(ws, x).distance;
}

inline ProjectionResult project(const Workspace& ws, Vec2 x) {
  require_interior(ws, x);
  return project_point(ws, x);
}

inline bool is_skeleton_point(const Workspace& ws, Vec2 x) {
  return !project(ws, x).is_singleton;
}

// --- upper-semicontinuity probe -------------------------------------------

struct UscReport {
  std::vector<double> radii;
  std::vector<double> deviations;  // max one-sided deviation of nearby projections
  bool pass = false;
};

// For each probe radius, measures how far projections of nearby points can
// stray from the projection set of x; upper semicontinuity predicts the
// deviation falls below eps as the radius shrinks.
inline UscReport usc_probe(const Workspace& ws, Vec2 x,
                           const std::vector<double>& radii, double eps) {
  require_interior(ws, x);
  const double dx = project_point(ws, x).distance;
  if (radii.empty()) throw Error(ErrorCode::InvalidRequest, "usc_probe: empty radius list");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] < 0.5 * dx))
      throw Error(ErrorCode::InvalidRequest, "usc_probe: radius must be below d(x)/2");
    if (i && !(radii[i] < radii[i - 1]))
      throw Error(ErrorCode::InvalidRequest, "usc_probe: radii must decrease");
  }

  const auto base = project_point(ws, x).projections;
  UscReport rep;
  rep.radii = radii;
  for (const double r : radii) {
    double dev = 0.0;
    for (int k = 0; k < 64; ++k) {
      const double a = 2.0 * kPi * k / 64.0;
      const Vec2 y = x + Vec2{std::cos(a), std::sin(a)} * r;
      for (const auto& h : project_point(ws, y).projections) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& b : base) nearest = std::min(nearest, dist(h.point, b.point));
        dev = std::max(dev, nearest);
      }
    }
    rep.deviations.push_back(dev);
  }
  rep.pass = rep.deviations.back() <= eps;
  return rep;
}

// --- one-shot wrappers over a DomainSpec -----------------------------------

inline double distance(const DomainSpec& spec, Vec2 x) {
  return distance(Workspace::make(spec), x);
}
inline ProjectionResult project(const DomainSpec& spec, Vec2 x) {
  return project(Workspace::make(spec), x);
}
inline bool is_skeleton_point(const DomainSpec& spec, Vec2 x) {
  return is_skeleton_point(Workspace::make(spec), x);
}
inline UscReport usc_probe(const DomainSpec& spec, Vec2 x,
                           const std::vector<double>& radii, double eps) {
  return usc_probe(Workspace::make(spec), x, radii, eps);
}

}  // namespace ridgekit
