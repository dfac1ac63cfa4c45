#pragma once

// Domain model: a planar open set described by oriented boundary pieces.
//
// Every builtin lowers to a chain of parametric pieces traversed with the
// domain on the LEFT of the tangent, so the inner normal is always the left
// perpendicular.  Unbounded shapes are truncated to a clip box; a margin band
// along the clip edge is excluded from queries.

#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ridgekit/errors.hpp"
#include "ridgekit/geometry.hpp"

namespace ridgekit {

enum class DomainKind {
  Disc,
  Ellipse,
  DiscHalfplane,
  GraphPower,
  GraphPiecewiseParabola,
  Polyline,
  Parametric,  // API-only: caller supplies pieces directly
};

inline const char* domain_kind_name(DomainKind k) {
  switch (k) {
    case DomainKind::Disc: return "disc";
    case DomainKind::Ellipse: return "ellipse";
    case DomainKind::DiscHalfplane: return "disc_halfplane";
    case DomainKind::GraphPower: return "graph_power";
    case DomainKind::GraphPiecewiseParabola: return "graph_piecewise_parabola";
    case DomainKind::Polyline: return "polyline";
    case DomainKind::Parametric: return "parametric";
  }
  return "unknown";
}

struct DomainSpec {
  DomainKind kind = DomainKind::Disc;
  std::map<std::string, double> params;
  std::vector<Vec2> vertices;  // polyline only
  Box clip_box{{-2.0, -2.0}, {2.0, 2.0}};
  double margin = 0.25;
};

inline double get_param(const DomainSpec& spec, const std::string& key, double fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

// One oriented boundary piece.  Parameter increases along the traversal
// direction; the inner normal is the left perpendicular of the tangent.
struct Piece {
  enum class Type { Segment, Arc, EllipseArc, PowerGraph, ParabolaGraph, Custom };

  Type type = Type::Segment;
  double t0 = 0.0;
  double t1 = 1.0;
  bool closed_loop = false;  // param wraps (full circle / full ellipse)

  // Segment
  Vec2 seg_a, seg_b;
  // Arc: center + radius * (cos t, sin t)
  Vec2 arc_center;
  double arc_radius = 1.0;
  // EllipseArc: (ell_a cos t, ell_b sin t)
  double ell_a = 2.0, ell_b = 1.0;
  // PowerGraph: (t, |t|^power);  ParabolaGraph: (t, par_c * t^2)
  double power = 1.5;
  double par_c = 0.5;
  // Custom parametric curve
  std::function<Vec2(double)> fn, dfn, d2fn;
  bool custom_c2 = false;

  Vec2 eval(double t) const {
    switch (type) {
      case Type::Segment: return seg_a + (seg_b - seg_a) * t;
      case Type::Arc: return arc_center + Vec2{std::cos(t), std::sin(t)} * arc_radius;
      case Type::EllipseArc: return {ell_a * std::cos(t), ell_b * std::sin(t)};
      case Type::PowerGraph: return {t, std::pow(std::fabs(t), power)};
      case Type::ParabolaGraph: return {t, par_c * t * t};
      case Type::Custom: return fn(t);
    }
    return {};
  }

  Vec2 deriv(double t) const {
    switch (type) {
      case Type::Segment: return seg_b - seg_a;
      case Type::Arc: return Vec2{-std::sin(t), std::cos(t)} * arc_radius;
      case Type::EllipseArc: return {-ell_a * std::sin(t), ell_b * std::cos(t)};
      case Type::PowerGraph: {
        if (t == 0.0) return {1.0, 0.0};
        const double s = t < 0.0 ? -1.0 : 1.0;
        return {1.0, s * power * std::pow(std::fabs(t), power - 1.0)};
      }
      case Type::ParabolaGraph: return {1.0, 2.0 * par_c * t};
      case Type::Custom: return dfn(t);
    }
    return {};
  }

  Vec2 deriv2(double t) const {
    switch (type) {
      case Type::Segment: return {0.0, 0.0};
      case Type::Arc: return Vec2{-std::cos(t), -std::sin(t)} * arc_radius;
      case Type::EllipseArc: return {-ell_a * std::cos(t), -ell_b * std::sin(t)};
      case Type::PowerGraph: {
        if (t == 0.0) return {0.0, 0.0};  // unbounded for power < 2; caller checks c2_at
        return {0.0, power * (power - 1.0) * std::pow(std::fabs(t), power - 2.0)};
      }
      case Type::ParabolaGraph: return {0.0, 2.0 * par_c};
      case Type::Custom: return d2fn ? d2fn(t) : Vec2{0.0, 0.0};
    }
    return {};
  }

  // True when the curvature is defined and finite at parameter t.
  bool c2_at(double t) const {
    if (type == Type::PowerGraph) return t != 0.0 || power >= 2.0;
    if (type == Type::Custom) return custom_c2;
    return true;
  }

  Vec2 inner_normal(double t) const { return deriv(t).perp().normalized(); }

  // Signed curvature with the convention that bending toward the domain
  // (toward the inner normal) is positive.
  double curvature_inward(double t) const {
    const Vec2 d1 = deriv(t);
    const Vec2 d2 = deriv2(t);
    const double sp = d1.norm();
    return d1.cross(d2) / (sp * sp * sp);
  }
};

// Joint between consecutive pieces where the tangent direction jumps.
struct Corner {
  Vec2 point;
  Vec2 normal_prev;  // inner normal of the incoming piece at the joint
  Vec2 normal_next;  // inner normal of the outgoing piece
  int piece_prev = -1;
  int piece_next = -1;
};

constexpr double kCornerAngleTol = 1e-6;  // radians

class Domain {
 public:
  DomainSpec spec;
  std::vector<Piece> pieces;
  std::vector<Corner> corners;
  bool closed_chain = false;

  double eps_bd() const { return 1e-9 * spec.clip_box.diameter(); }
  Box query_window() const { return spec.clip_box.shrunk(spec.margin); }
  bool is_c1() const { return corners.empty(); }

  // Diameter of the (possibly truncated) domain; used as the locality scale.
  double diameter() const {
    switch (spec.kind) {
      case DomainKind::Disc: return 2.0 * get_param(spec, "R", 1.0);
      case DomainKind::Ellipse: return 2.0 * get_param(spec, "a", 2.0);
      default: return spec.clip_box.diameter();
    }
  }

  // Membership in the open set itself, with no clip-window precondition.
  // Internal helpers (probe points, grid setup) use this directly.
  bool contains(Vec2 p) const {
    switch (spec.kind) {
      case DomainKind::Disc:
        return p.norm2() < sq(get_param(spec, "R", 1.0));
      case DomainKind::Ellipse: {
        const double a = get_param(spec, "a", 2.0), b = get_param(spec, "b", 1.0);
        return sq(p.x / a) + sq(p.y / b) < 1.0;
      }
      case DomainKind::DiscHalfplane:
        return p.y > 0.0 || p.norm2() < 1.0;
      case DomainKind::GraphPower:
        return p.y > std::pow(std::fabs(p.x), get_param(spec, "p", 1.5));
      case DomainKind::GraphPiecewiseParabola: {
        const double c = p.x <= 0.0 ? get_param(spec, "c_left", 0.25)
                                    : get_param(spec, "c_right", 0.5);
        return p.y > c * p.x * p.x;
      }
      case DomainKind::Polyline:
        return winding_inside(p);
      case DomainKind::Parametric:
        return inside_fn_ ? inside_fn_(p) : winding_inside(p);
    }
    return false;
  }

  void set_inside_fn(std::function<bool(Vec2)> fn) { inside_fn_ = std::move(fn); }

 private:
  std::function<bool(Vec2)> inside_fn_;

  // Even-odd crossing test against the polyline edges.
  bool winding_inside(Vec2 p) const {
    bool in = false;
    const auto& vs = spec.vertices;
    const std::size_t n = vs.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
      const Vec2 a = vs[j], b = vs[i];
      if ((b.y > p.y) != (a.y > p.y)) {
        const double xc = b.x + (p.y - b.y) * (a.x - b.x) / (a.y - b.y);
        if (p.x < xc) in = !in;
      }
    }
    return in;
  }
};

// Checked membership test: the query must lie inside the clip box minus the
// margin band, otherwise the point is outside the supported region.
inline bool inside(const Domain& dom, Vec2 p) {
  if (!dom.query_window().contains(p))
    throw Error(ErrorCode::QueryOutsideClipBox,
                "query point outside clip box minus margin band");
  return dom.contains(p);
}

namespace detail {

inline void link_pieces(Domain& dom) {
  auto& ps = dom.pieces;
  if (ps.empty()) throw Error(ErrorCode::DegenerateBoundary, "no boundary pieces");
  const double join_tol = 10.0 * dom.eps_bd();

  auto add_joint = [&](int i, int j) {
    const Piece& a = ps[i];
    const Piece& b = ps[j];
    const Vec2 pa = a.eval(a.t1), pb = b.eval(b.t0);
    if (dist(pa, pb) > join_tol)
      throw Error(ErrorCode::DegenerateBoundary, "boundary pieces do not join");
    const Vec2 ta = a.deriv(a.t1), tb = b.deriv(b.t0);
    if (angle_between(ta, tb) > kCornerAngleTol) {
      Corner c;
      c.point = pa;
      c.normal_prev = a.inner_normal(a.t1);
      c.normal_next = b.inner_normal(b.t0);
      c.piece_prev = i;
      c.piece_next = j;
      dom.corners.push_back(c);
    }
  };

  for (std::size_t i = 0; i + 1 < ps.size(); ++i) add_joint(int(i), int(i + 1));

  const Piece& first = ps.front();
  const Piece& last = ps.back();
  if (ps.size() == 1 && first.closed_loop) {
    dom.closed_chain = true;
    // wrap joint of a closed loop: tangent must be continuous
    if (angle_between(first.deriv(first.t1), first.deriv(first.t0)) > kCornerAngleTol)
      throw Error(ErrorCode::DegenerateBoundary, "closed loop with tangent jump");
  } else if (dist(last.eval(last.t1), first.eval(first.t0)) <= join_tol) {
    dom.closed_chain = true;
    add_joint(int(ps.size()) - 1, 0);
  }
}

inline void require(bool ok, ErrorCode code, const std::string& msg) {
  if (!ok) throw Error(code, msg);
}

}  // namespace detail

inline Domain build_domain(const DomainSpec& spec_in) {
  DomainSpec spec = spec_in;
  detail::require(spec.clip_box.width() > 0.0 && spec.clip_box.height() > 0.0,
                  ErrorCode::InvalidSpec, "clip box is empty");
  detail::require(spec.margin >= 0.0, ErrorCode::InvalidSpec, "negative margin");
  const Box window = spec.clip_box.shrunk(spec.margin);
  detail::require(window.width() > 0.0 && window.height() > 0.0,
                  ErrorCode::InvalidSpec, "margin band swallows the clip box");

  Domain dom;
  dom.spec = spec;

  switch (spec.kind) {
    case DomainKind::Disc: {
      const double R = get_param(spec, "R", 1.0);
      detail::require(R > 0.0, ErrorCode::InvalidSpec, "disc radius must be positive");
      Piece p;
      p.type = Piece::Type::Arc;
      p.arc_center = {0.0, 0.0};
      p.arc_radius = R;
      p.t0 = 0.0;
      p.t1 = 2.0 * kPi;
      p.closed_loop = true;
      dom.pieces.push_back(p);
      break;
    }
    case DomainKind::Ellipse: {
      const double a = get_param(spec, "a", 2.0);
      const double b = get_param(spec, "b", 1.0);
      detail::require(a >= b && b > 0.0, ErrorCode::InvalidSpec,
                      "ellipse requires a >= b > 0");
      Piece p;
      p.type = Piece::Type::EllipseArc;
      p.ell_a = a;
      p.ell_b = b;
      p.t0 = 0.0;
      p.t1 = 2.0 * kPi;
      p.closed_loop = true;
      dom.pieces.push_back(p);
      break;
    }
    case DomainKind::DiscHalfplane: {
      // Unit disc united with the upper half plane.  Boundary: two horizontal
      // rays at height 0 plus the lower unit semicircle, with corners at
      // (-1,0) and (1,0).  Traversal keeps the domain on the left.
      const double xl = spec.clip_box.lo.x, xr = spec.clip_box.hi.x;
      detail::require(xl < -1.0 && xr > 1.0, ErrorCode::InvalidSpec,
                      "clip box must contain the unit disc");
      Piece left;
      left.type = Piece::Type::Segment;
      left.seg_a = {xl, 0.0};
      left.seg_b = {-1.0, 0.0};
      Piece arc;
      arc.type = Piece::Type::Arc;
      arc.arc_center = {0.0, 0.0};
      arc.arc_radius = 1.0;
      arc.t0 = kPi;
      arc.t1 = 2.0 * kPi;
      Piece right;
      right.type = Piece::Type::Segment;
      right.seg_a = {1.0, 0.0};
      right.seg_b = {xr, 0.0};
      dom.pieces = {left, arc, right};
      break;
    }
    case DomainKind::GraphPower: {
      const double p = get_param(spec, "p", 1.5);
      detail::require(p > 1.0 && p <= 4.0, ErrorCode::InvalidSpec,
                      "graph_power exponent must be in (1, 4]");
      const double xmax = std::min({-spec.clip_box.lo.x, spec.clip_box.hi.x,
                                    std::pow(spec.clip_box.hi.y, 1.0 / p)});
      detail::require(xmax > 0.0, ErrorCode::InvalidSpec, "clip box misses the graph");
      Piece g;
      g.type = Piece::Type::PowerGraph;
      g.power = p;
      g.t0 = -xmax;
      g.t1 = xmax;
      dom.pieces.push_back(g);
      break;
    }
    case DomainKind::GraphPiecewiseParabola: {
      const double cl = get_param(spec, "c_left", 0.25);
      const double cr = get_param(spec, "c_right", 0.5);
      detail::require(cl > 0.0 && cr > 0.0, ErrorCode::InvalidSpec,
                      "parabola coefficients must be positive");
      const double xl = std::min(-spec.clip_box.lo.x,
                                 std::sqrt(spec.clip_box.hi.y / cl));
      const double xr = std::min(spec.clip_box.hi.x,
                                 std::sqrt(spec.clip_box.hi.y / cr));
      Piece l;
      l.type = Piece::Type::ParabolaGraph;
      l.par_c = cl;
      l.t0 = -xl;
      l.t1 = 0.0;
      Piece r;
      r.type = Piece::Type::ParabolaGraph;
      r.par_c = cr;
      r.t0 = 0.0;
      r.t1 = xr;
      dom.pieces = {l, r};
      break;
    }
    case DomainKind::Polyline: {
      auto vs = spec.vertices;
      detail::require(vs.size() >= 3, ErrorCode::InvalidSpec,
                      "polyline needs at least 3 vertices");
      double area2 = 0.0;
      for (std::size_t i = 0, j = vs.size() - 1; i < vs.size(); j = i++)
        area2 += vs[j].cross(vs[i]);
      detail::require(std::fabs(area2) > 0.0, ErrorCode::DegenerateBoundary,
                      "polyline has zero area");
      if (area2 < 0.0) {  // make counter-clockwise so the interior is on the left
        std::vector<Vec2> rev(vs.rbegin(), vs.rend());
        vs = rev;
        dom.spec.vertices = vs;
      }
      for (std::size_t i = 0; i < vs.size(); ++i) {
        const Vec2 a = vs[i], b = vs[(i + 1) % vs.size()];
        detail::require(dist(a, b) > 0.0, ErrorCode::DegenerateBoundary,
                        "zero-length polyline edge");
        Piece s;
        s.type = Piece::Type::Segment;
        s.seg_a = a;
        s.seg_b = b;
        dom.pieces.push_back(s);
      }
      break;
    }
    case DomainKind::Parametric:
      throw Error(ErrorCode::InvalidSpec,
                  "parametric domains are built from pieces via make_parametric_domain");
  }

  detail::link_pieces(dom);
  return dom;
}

// API entry for caller-supplied piece chains.  inside_fn decides membership in
// the open set; joints are checked exactly like the builtins.
inline Domain make_parametric_domain(std::vector<Piece> pieces,
                                     std::function<bool(Vec2)> inside_fn,
                                     Box clip_box, double margin) {
  Domain dom;
  dom.spec.kind = DomainKind::Parametric;
  dom.spec.clip_box = clip_box;
  dom.spec.margin = margin;
  dom.pieces = std::move(pieces);
  dom.set_inside_fn(std::move(inside_fn));
  detail::link_pieces(dom);
  return dom;
}

// Builtin spec by CLI name, with per-kind default clip boxes.
inline DomainSpec builtin_spec(const std::string& name,
                               const std::map<std::string, double>& overrides = {}) {
  DomainSpec spec;
  auto set_defaults = [&spec](std::initializer_list<std::pair<const char*, double>> kv) {
    for (const auto& [k, v] : kv)
      if (!spec.params.count(k)) spec.params[k] = v;
  };
  spec.params = std::map<std::string, double>(overrides.begin(), overrides.end());

  if (name == "disc") {
    spec.kind = DomainKind::Disc;
    set_defaults({{"R", 1.0}});
    const double R = spec.params["R"];
    spec.clip_box = {{-R - 0.5, -R - 0.5}, {R + 0.5, R + 0.5}};
    spec.margin = 0.25;
  } else if (name == "ellipse") {
    spec.kind = DomainKind::Ellipse;
    set_defaults({{"a", 2.0}, {"b", 1.0}});
    const double a = spec.params["a"], b = spec.params["b"];
    spec.clip_box = {{-a - 0.5, -b - 0.5}, {a + 0.5, b + 0.5}};
    spec.margin = 0.25;
  } else if (name == "disc_halfplane") {
    spec.kind = DomainKind::DiscHalfplane;
    spec.clip_box = {{-4.0, -4.0}, {4.0, 4.0}};
    spec.margin = 0.5;
  } else if (name == "graph_power") {
    spec.kind = DomainKind::GraphPower;
    set_defaults({{"p", 1.5}});
    spec.clip_box = {{-4.0, -4.0}, {4.0, 4.0}};
    spec.margin = 0.5;
  } else if (name == "graph_piecewise_parabola") {
    spec.kind = DomainKind::GraphPiecewiseParabola;
    set_defaults({{"c_left", 0.25}, {"c_right", 0.5}});
    spec.clip_box = {{-4.0, -4.0}, {4.0, 4.0}};
    spec.margin = 0.5;
  } else if (name == "polyline") {
    spec.kind = DomainKind::Polyline;
    // default: long thin rectangle (a useful 1-D stress shape)
    spec.vertices = {{-3.0, -0.25}, {3.0, -0.25}, {3.0, 0.25}, {-3.0, 0.25}};
    spec.clip_box = {{-3.75, -1.0}, {3.75, 1.0}};
    spec.margin = 0.25;
  } else {
    throw Error(ErrorCode::InvalidSpec, "unknown builtin domain: " + name);
  }
  return spec;
}

}  // namespace ridgekit
