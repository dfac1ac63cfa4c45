#pragma once

// Radius of inner curvature via locally inner touching balls, its lower
// semicontinuous envelope, and the cross-check against 1/curvature where the
// boundary is C².
//
// The ball test minimizes the clearance g(p) = |p-c|² − r² over the boundary
// inside a small Euclidean window around the tangency point.  Penetration is
// monotone in the window size, so testing the smallest window the sampling
// can resolve accepts exactly the balls accepted by *some* neighborhood —
// which is what the touching-ball definition quantifies over.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <vector>

#include "ridgekit/domain.hpp"
#include "ridgekit/errors.hpp"
#include "ridgekit/geometry.hpp"
#include "ridgekit/projection.hpp"
#include "ridgekit/sampling.hpp"
#include "ridgekit/threads.hpp"

namespace ridgekit {

struct Radius {
  double value = 0.0;
  bool unbounded = false;
  double uncertainty = 0.0;
  bool warning = false;  // margin-thin clearance verdict somewhere in the bracket

  static Radius infinite() {
    Radius r;
    r.unbounded = true;
    return r;
  }
  static Radius finite(double v, double unc) {
    Radius r;
    r.value = v;
    r.uncertainty = unc;
    return r;
  }
};

inline bool radius_less(const Radius& a, const Radius& b) {
  if (a.unbounded) return false;
  if (b.unbounded) return true;
  return a.value < b.value;
}

inline Radius radius_min(const Radius& a, const Radius& b) {
  Radius out = radius_less(b, a) ? b : a;
  out.warning = a.warning || b.warning;
  return out;
}

namespace detail {

// Clearance threshold: far above double-precision cancellation noise of
// |p-c|² − r² at scale r, far below every geometric penetration we must see.
inline double clearance_eps(double r) { return 1e-13 * std::max(1.0, r * r); }

// Smallest window the refinement resolves comfortably at the default
// sampling density; scales mildly with the domain so the builtin shapes all
// land between 0.005 and 0.04.
inline double pen_window(const Domain& dom) {
  return 0.01 * std::clamp(0.5 * dom.diameter() / 2.83, 0.5, 4.0);
}

struct ClearanceQuery {
  Vec2 xi;
  int xi_piece = 0;
  double xi_t = 0.0;
  int corner_id = -1;
  Vec2 center;
  double r = 1.0;
  double window = 0.01;
};

// Shrink bracket [a,b] (param space, seed inside) so every point stays within
// the Euclidean window; the in-window region is an interval around the seed
// for the short boundary sections this is applied to.
inline void clamp_to_window(const Piece& pc, Vec2 xi, double w, double seed,
                            double& a, double& b) {
  auto out = [&](double t) { return dist(pc.eval(t), xi) > w; };
  if (out(a)) {
    double lo = a, hi = seed;
    for (int k = 0; k < 20; ++k) {
      const double m = 0.5 * (lo + hi);
      (out(m) ? lo : hi) = m;
    }
    a = hi;
  }
  if (out(b)) {
    double lo = seed, hi = b;
    for (int k = 0; k < 20; ++k) {
      const double m = 0.5 * (lo + hi);
      (out(m) ? hi : lo) = m;
    }
    b = lo;
  }
}

// Minimum clearance over the boundary restricted to the window.  Returns as
// soon as a violation is certain (min below -4·eps).
inline double min_clearance(const Workspace& ws, const ClearanceQuery& q) {
  const Domain& dom = ws.dom();
  const DenseBoundary& db = ws.boundary;
  const double w = q.window;
  const double rr = q.r * q.r;
  const double exit_at = -4.0 * clearance_eps(q.r);
  double gmin = std::numeric_limits<double>::infinity();

  std::vector<std::vector<double>> seeds(dom.pieces.size());
  for (int idx : db.samples_within(q.xi, w)) {
    const BoundarySample& s = db.samples[std::size_t(idx)];
    seeds[std::size_t(s.piece)].push_back(s.t);
  }
  auto add_ladder = [&](int piece, double t_center) {
    const Piece& pc = dom.pieces[std::size_t(piece)];
    const double speed = std::max(pc.deriv(t_center).norm(), 1e-12);
    static constexpr double frac[] = {0.0, 1e-6, 1e-4, 3e-3, 0.03, 0.3, 0.7, 1.0};
    for (const double f : frac) {
      const double dt = f * w / speed;
      for (const double s : {t_center - dt, t_center + dt}) {
        const double sc = pc.closed_loop ? s : std::clamp(s, pc.t0, pc.t1);
        seeds[std::size_t(piece)].push_back(sc);
      }
    }
  };
  add_ladder(q.xi_piece, q.xi_t);
  if (q.corner_id >= 0) {
    const Corner& c = dom.corners[std::size_t(q.corner_id)];
    if (c.piece_prev != q.xi_piece)
      add_ladder(c.piece_prev, dom.pieces[std::size_t(c.piece_prev)].t1);
    if (c.piece_next != q.xi_piece)
      add_ladder(c.piece_next, dom.pieces[std::size_t(c.piece_next)].t0);
  }

  for (std::size_t pi = 0; pi < dom.pieces.size(); ++pi) {
    auto& sv = seeds[pi];
    if (sv.empty()) continue;
    const Piece& pc = dom.pieces[pi];

    if (pc.closed_loop) {
      // re-center params across the wrap seam so neighbours stay neighbours
      const double period = pc.t1 - pc.t0;
      const double ref = sv.front();
      for (double& t : sv) {
        while (t - ref > 0.5 * period) t -= period;
        while (ref - t > 0.5 * period) t += period;
      }
    }
    std::sort(sv.begin(), sv.end());
    const double t_span = 1.0 + std::fabs(sv.front()) + std::fabs(sv.back());
    sv.erase(std::unique(sv.begin(), sv.end(),
                         [&](double a, double b) { return std::fabs(a - b) < 1e-13 * t_span; }),
             sv.end());

    auto eval_g = [&](double t) {
      const Vec2 p = pc.eval(t);
      const double g = dist2(p, q.center) - rr;
      if (dist(p, q.xi) <= w) gmin = std::min(gmin, g);
      return g;
    };

    for (std::size_t k = 0; k < sv.size(); ++k) {
      const double seed = sv[k];
      const double speed = std::max(pc.deriv(seed).norm(), 1e-12);
      const double pad = 1.2 * db.spacing / speed;
      double a = k > 0 ? 0.5 * (sv[k - 1] + seed) : seed - pad;
      double b = k + 1 < sv.size() ? 0.5 * (seed + sv[k + 1]) : seed + pad;
      if (!pc.closed_loop) {
        a = std::max(a, pc.t0);
        b = std::min(b, pc.t1);
      }
      clamp_to_window(pc, q.xi, w, seed, a, b);
      if (!(b > a)) {
        eval_g(std::clamp(seed, a, b));
        if (gmin < exit_at) return gmin;
        continue;
      }

      double lo = a, hi = b;
      for (int it = 0; it < 20 && hi - lo > 1e-15 * t_span; ++it) {
        const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (eval_g(m1) <= eval_g(m2)) hi = m2; else lo = m1;
      }
      double t = 0.5 * (lo + hi);
      for (int it = 0; it < 6; ++it) {  // polish the stationary point of g
        const Vec2 p = pc.eval(t);
        const Vec2 d1 = pc.deriv(t);
        const double dg = 2.0 * (p - q.center).dot(d1);
        const double d2g = 2.0 * (d1.norm2() + (p - q.center).dot(pc.deriv2(t)));
        if (!(d2g > 0.0)) break;
        const double tn = std::clamp(t - dg / d2g, a, b);
        if (std::fabs(tn - t) < 1e-15 * t_span) { t = tn; break; }
        t = tn;
      }
      eval_g(t);
      eval_g(a);
      eval_g(b);
      if (gmin < exit_at) return gmin;
    }
  }
  return gmin;
}

// Membership spot-checks deep inside small balls: catches a ball poking
// through the complement in ways the curve-clearance scan cannot represent.
inline bool deep_probes_ok(const Domain& dom, const ClearanceQuery& q) {
  if (q.r > 6.0 * q.window) return true;
  const Vec2 u0 = (q.xi - q.center) / q.r;
  static constexpr double angles[] = {0.0, 0.35, -0.35, 0.7, -0.7, 1.05, -1.05, 1.4, -1.4};
  for (const double a : angles) {
    const double ca = std::cos(a), sa = std::sin(a);
    const Vec2 u{u0.x * ca - u0.y * sa, u0.x * sa + u0.y * ca};
    const Vec2 probe = q.center + u * (0.85 * q.r);
    if (dist(probe, q.xi) > 0.9 * q.window) continue;
    if (!dom.contains(probe)) return false;
  }
  return true;
}

struct BallVerdict {
  bool touching = false;
  bool margin_thin = false;
};

inline BallVerdict touching_ball_verdict(const Workspace& ws, const BoundarySample& xi,
                                         double r, double locality) {
  ClearanceQuery q;
  q.xi = xi.point;
  q.xi_piece = xi.piece;
  q.xi_t = xi.t;
  q.corner_id = xi.corner_id;
  q.center = xi.point + xi.inner_normal * r;
  q.r = r;
  q.window = std::min(locality, pen_window(ws.dom()));

  const double eps = clearance_eps(r);
  const double gmin = min_clearance(ws, q);
  BallVerdict v;
  v.margin_thin = gmin < -0.25 * eps && gmin > -4.0 * eps;
  v.touching = gmin >= -eps && deep_probes_ok(ws.dom(), q);
  return v;
}

}  // namespace detail

inline bool is_touching_ball(const Workspace& ws, const BoundarySample& xi,
                             double r, double locality) {
  if (!(r > 0.0) || !(locality > 0.0))
    throw Error(ErrorCode::InvalidRequest, "is_touching_ball: r and locality must be positive");
  return detail::touching_ball_verdict(ws, xi, r, locality).touching;
}

// Largest touching-ball radius at one boundary sample (with its one-sided
// normal), by bisection between a resolution floor and a desk-scale cap.
inline Radius rho(const Workspace& ws, const BoundarySample& xi) {
  const Domain& dom = ws.dom();
  const double r_min = 2.0 * ws.boundary.spacing;
  const double r_max = 4.0 * dom.spec.clip_box.diameter();
  const double half_diam = 0.5 * dom.diameter();

  bool warn = false;
  auto touching = [&](double r) {
    const auto v = detail::touching_ball_verdict(ws, xi, r, std::min(r, half_diam));
    warn = warn || v.margin_thin;
    return v.touching;
  };

  if (!touching(r_min)) {  // resolution-limited zero
    Radius z = Radius::finite(0.0, r_min);
    z.warning = warn;
    return z;
  }
  if (touching(r_max)) {
    Radius inf = Radius::infinite();
    inf.warning = warn;
    return inf;
  }
  double lo = r_min, hi = r_max;
  for (int i = 0; i < 40; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (touching(mid)) lo = mid; else hi = mid;
  }
  const double r_hat = 0.5 * (lo + hi);
  // Detection-resolution floor: the r-shift needed to swing the clearance
  // minimum across the threshold through a window of this size.
  const double w_eff = std::min({r_hat, half_diam, detail::pen_window(dom)});
  const double floor_unc = 8.0 * detail::clearance_eps(r_hat) * r_hat / (w_eff * w_eff);
  Radius out = Radius::finite(r_hat, std::max(0.5 * (hi - lo), floor_unc));
  out.warning = warn;
  return out;
}

// 1/curvature where the parametrization is C²; the cross-check of the
// touching-ball machinery on smooth boundaries.
inline Radius rho_from_curvature(const Workspace& ws, const BoundarySample& xi) {
  const Domain& dom = ws.dom();
  if (xi.at_corner)
    throw Error(ErrorCode::NotC2At, "curvature undefined at a corner");
  const Piece& pc = dom.pieces[std::size_t(xi.piece)];
  if (!pc.c2_at(xi.t))
    throw Error(ErrorCode::NotC2At, "second derivative unbounded at this parameter");
  const bool multi = dom.pieces.size() > 1;
  const double t_tol = 1e-9 * (pc.t1 - pc.t0);
  const bool at_start = std::fabs(xi.t - pc.t0) <= t_tol;
  const bool at_end = std::fabs(xi.t - pc.t1) <= t_tol;
  if (multi && ((at_start && (xi.piece > 0 || dom.closed_chain)) ||
                (at_end && (std::size_t(xi.piece) + 1 < dom.pieces.size() || dom.closed_chain))))
    throw Error(ErrorCode::NotC2At, "curvature may jump across a piece joint");

  const double kappa = pc.curvature_inward(xi.t);
  if (!(kappa > 0.0)) return Radius::infinite();
  return Radius::finite(1.0 / kappa, 0.0);
}

// Touching-ball radii for every dense boundary sample (corner duplicates get
// their own one-sided values).  Rows are independent; computed data-parallel.
struct RhoTable {
  std::vector<Radius> values;

  static RhoTable build(const Workspace& ws) {
    RhoTable t;
    t.values.resize(ws.boundary.samples.size());
    parallel_for(t.values.size(),
                 [&](std::size_t i) { t.values[i] = rho(ws, ws.boundary.samples[i]); });
    return t;
  }
};

struct RhoStarResult {
  Radius value;  // envelope at the smallest radius
  std::vector<double> env_radii;
  std::vector<Radius> trace;
};

// Lower envelope of rho over shrinking boundary neighborhoods of xi.  The
// trace exposes the limit trend; with a precomputed table the per-sample
// values are looked up instead of re-bisected.
inline RhoStarResult rho_star(const Workspace& ws, const BoundarySample& xi,
                              const std::vector<double>& env_radii,
                              const RhoTable* table = nullptr) {
  if (env_radii.empty())
    throw Error(ErrorCode::InvalidRequest, "rho_star: empty envelope schedule");
  for (std::size_t i = 0; i < env_radii.size(); ++i) {
    if (env_radii[i] <= 2.0 * ws.boundary.spacing)
      throw Error(ErrorCode::EnvelopeRadiusBelowSampling,
                  "envelope radius does not exceed twice the sample spacing");
    if (i && !(env_radii[i] < env_radii[i - 1]))
      throw Error(ErrorCode::InvalidRequest, "rho_star: radii must decrease");
  }

  std::map<int, Radius> memo;
  auto sample_rho = [&](int idx) {
    if (table) return table->values[std::size_t(idx)];
    auto it = memo.find(idx);
    if (it == memo.end())
      it = memo.emplace(idx, rho(ws, ws.boundary.samples[std::size_t(idx)])).first;
    return it->second;
  };
  const Radius at_xi = rho(ws, xi);

  RhoStarResult res;
  res.env_radii = env_radii;
  for (const double r : env_radii) {
    Radius inf = at_xi;
    for (const int idx : ws.boundary.samples_within(xi.point, r))
      inf = radius_min(inf, sample_rho(idx));
    res.trace.push_back(inf);
  }
  res.value = res.trace.back();
  return res;
}

// The sample(s) sitting at an exact boundary point: corners produce one per
// one-sided normal, smooth points exactly one.
inline std::vector<BoundarySample> boundary_samples_at(const Workspace& ws, Vec2 q) {
  const Domain& dom = ws.dom();
  const double diam = dom.spec.clip_box.diameter();
  std::vector<BoundarySample> out;
  for (std::size_t ci = 0; ci < dom.corners.size(); ++ci) {
    const Corner& c = dom.corners[ci];
    if (dist(c.point, q) > 1e-7 * diam) continue;
    BoundarySample a;
    a.point = c.point;
    a.inner_normal = c.normal_prev;
    a.piece = c.piece_prev;
    a.t = dom.pieces[std::size_t(c.piece_prev)].t1;
    a.arc_spacing = ws.boundary.spacing;
    a.at_corner = true;
    a.corner_id = int(ci);
    BoundarySample b = a;
    b.inner_normal = c.normal_next;
    b.piece = c.piece_next;
    b.t = dom.pieces[std::size_t(c.piece_next)].t0;
    out.push_back(a);
    out.push_back(b);
    return out;
  }
  const ProjectionResult pr = project_point(ws, q);
  if (pr.distance > 1e-6 * diam)
    throw Error(ErrorCode::InvalidRequest, "point does not lie on the boundary");
  const ProjectionHit& h = pr.projections.front();
  BoundarySample s;
  s.piece = h.piece;
  s.t = h.t;
  s.point = dom.pieces[std::size_t(h.piece)].eval(h.t);
  s.inner_normal = dom.pieces[std::size_t(h.piece)].inner_normal(h.t);
  s.arc_spacing = ws.boundary.spacing;
  out.push_back(s);
  return out;
}

// Point-level radius: corner points report the smallest one-sided value, so
// the number quoted for a corner is the radius that actually constrains the
// nearby skeleton (the larger one-sided ball is blind to the other side).
inline Radius rho_at_point(const Workspace& ws, Vec2 q) {
  const auto sams = boundary_samples_at(ws, q);
  Radius best = rho(ws, sams.front());
  for (std::size_t i = 1; i < sams.size(); ++i) best = radius_min(best, rho(ws, sams[i]));
  return best;
}

inline RhoStarResult rho_star_at_point(const Workspace& ws, Vec2 q,
                                       const std::vector<double>& env_radii,
                                       const RhoTable* table = nullptr) {
  const auto sams = boundary_samples_at(ws, q);
  RhoStarResult best = rho_star(ws, sams.front(), env_radii, table);
  for (std::size_t i = 1; i < sams.size(); ++i) {
    RhoStarResult cand = rho_star(ws, sams[i], env_radii, table);
    if (radius_less(cand.value, best.value)) best = cand;
  }
  return best;
}

// --- one-shot wrappers over a DomainSpec -----------------------------------

inline bool is_touching_ball(const DomainSpec& spec, const BoundarySample& xi,
                             double r, double locality) {
  return is_touching_ball(Workspace::make(spec), xi, r, locality);
}
inline Radius rho(const DomainSpec& spec, const BoundarySample& xi) {
  return rho(Workspace::make(spec), xi);
}
inline Radius rho_from_curvature(const DomainSpec& spec, const BoundarySample& xi) {
  return rho_from_curvature(Workspace::make(spec), xi);
}
inline RhoStarResult rho_star(const DomainSpec& spec, const BoundarySample& xi,
                              const std::vector<double>& env_radii) {
  return rho_star(Workspace::make(spec), xi, env_radii);
}

}  // namespace ridgekit
