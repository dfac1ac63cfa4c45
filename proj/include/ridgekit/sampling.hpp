#pragma once

// Dense boundary sampling with near-uniform arc-length spacing.
//
// DenseBoundary is the workhorse structure behind projection, touching-ball
// radii and skeleton detection: a flat list of samples (corners appear twice,
// once per one-sided normal), per-piece node tables for parameter-local
// scans, and a uniform bucket index for radius queries.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "ridgekit/domain.hpp"
#include "ridgekit/errors.hpp"
#include "ridgekit/geometry.hpp"

namespace ridgekit {

struct BoundarySample {
  Vec2 point;
  Vec2 inner_normal;
  int piece = 0;
  double t = 0.0;
  double arc_spacing = 0.0;
  bool at_corner = false;
  int corner_id = -1;
};

// Scale-aware default: 0.004 for every builtin clip box, growing only for
// very large user boxes so sample counts stay bounded.
inline double default_spacing(const Domain& dom) {
  return 0.004 * std::max(1.0, dom.spec.clip_box.diameter() / 12.0);
}

namespace detail {

// Cumulative arc length on a fine parameter grid, linearly invertible.
struct ArcTable {
  std::vector<double> t, s;
  double length() const { return s.back(); }

  double t_at_s(double target) const {
    auto it = std::lower_bound(s.begin(), s.end(), target);
    if (it == s.begin()) return t.front();
    if (it == s.end()) return t.back();
    const std::size_t k = std::size_t(it - s.begin());
    const double ds = s[k] - s[k - 1];
    const double f = ds > 0.0 ? (target - s[k - 1]) / ds : 0.0;
    return t[k - 1] + f * (t[k] - t[k - 1]);
  }
};

inline ArcTable fine_arc_table(const Piece& p, int m) {
  ArcTable tab;
  tab.t.resize(std::size_t(m) + 1);
  tab.s.resize(std::size_t(m) + 1);
  tab.t[0] = p.t0;
  tab.s[0] = 0.0;
  const double dt = (p.t1 - p.t0) / m;
  double prev_speed = p.deriv(p.t0).norm();
  for (int k = 1; k <= m; ++k) {
    const double tk = p.t0 + dt * k;
    const double sp = p.deriv(tk).norm();
    tab.t[std::size_t(k)] = tk;
    tab.s[std::size_t(k)] = tab.s[std::size_t(k) - 1] + 0.5 * (prev_speed + sp) * dt;
    prev_speed = sp;
  }
  tab.t[std::size_t(m)] = p.t1;
  return tab;
}

}  // namespace detail

// Node params of one piece plus the flat sample index representing each node
// (smooth-joint duplicates point at the sample emitted by the neighbour).
struct PieceNodes {
  std::vector<double> t;
  std::vector<Vec2> pt;  // eval cache, hot path of projection scans
  std::vector<int> flat;
  double length = 0.0;
};

class DenseBoundary {
 public:
  const Domain* dom = nullptr;
  double spacing = 0.0;
  std::vector<BoundarySample> samples;
  std::vector<PieceNodes> nodes;

  static DenseBoundary build(const Domain& d, double target_spacing) {
    if (!(target_spacing > 0.0) || target_spacing >= d.spec.clip_box.diameter())
      throw Error(ErrorCode::InvalidRequest, "sample spacing out of range");

    DenseBoundary db;
    db.dom = &d;
    db.spacing = target_spacing;

    // corner lookups by adjacent piece
    std::vector<int> corner_at_end(d.pieces.size(), -1);
    std::vector<int> corner_at_start(d.pieces.size(), -1);
    for (std::size_t c = 0; c < d.corners.size(); ++c) {
      corner_at_end[std::size_t(d.corners[c].piece_prev)] = int(c);
      corner_at_start[std::size_t(d.corners[c].piece_next)] = int(c);
    }

    const bool multi = d.pieces.size() > 1;
    db.nodes.resize(d.pieces.size());

    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
      const Piece& p = d.pieces[i];
      const auto tab = detail::fine_arc_table(p, 4096);
      const double L = tab.length();
      if (!(L > 10.0 * d.eps_bd()))
        throw Error(ErrorCode::DegenerateBoundary, "boundary piece has near-zero length");
      const int count = std::max(1, int(std::ceil(L / target_spacing)));
      const double ds = L / count;

      PieceNodes& pn = db.nodes[i];
      pn.length = L;
      pn.t.resize(std::size_t(count) + 1);
      pn.flat.assign(std::size_t(count) + 1, -1);
      for (int j = 1; j < count; ++j) pn.t[std::size_t(j)] = tab.t_at_s(ds * j);
      pn.t.front() = p.t0;
      pn.t.back() = p.t1;
      pn.pt.resize(pn.t.size());
      for (std::size_t j = 0; j < pn.t.size(); ++j) pn.pt[j] = p.eval(pn.t[j]);

      for (int j = 0; j <= count; ++j) {
        bool drop = false;
        int corner_id = -1;
        if (j == 0) {
          if (i > 0) {
            corner_id = corner_at_start[i];
            if (corner_id < 0) drop = true;  // smooth joint: previous end node stands in
          }
        }
        if (j == count) {
          if (p.closed_loop) {
            drop = true;  // wrap duplicate of node 0
          } else if (d.closed_chain && i + 1 == d.pieces.size() && multi) {
            corner_id = corner_at_end[i];
            if (corner_id < 0) drop = true;  // smooth wrap: first piece's start stands in
          } else {
            corner_id = corner_at_end[i];
          }
        }

        if (drop) {
          int repr;
          if (j == 0) repr = db.nodes[i - 1].flat.back();
          else if (p.closed_loop) repr = pn.flat.front();
          else repr = db.nodes[0].flat.front();  // smooth closed-chain wrap
          pn.flat[std::size_t(j)] = repr;
          continue;
        }

        BoundarySample smp;
        smp.t = pn.t[std::size_t(j)];
        smp.point = p.eval(smp.t);
        smp.inner_normal = p.inner_normal(smp.t);
        smp.piece = int(i);
        smp.arc_spacing = ds;
        smp.at_corner = corner_id >= 0;
        smp.corner_id = corner_id;
        pn.flat[std::size_t(j)] = int(db.samples.size());
        db.samples.push_back(smp);
      }
      if (p.closed_loop) pn.flat.back() = pn.flat.front();
    }

    db.build_index();
    return db;
  }

  // Flat indices of all samples within Euclidean distance r of c.
  std::vector<int> samples_within(Vec2 c, double r) const {
    std::vector<int> out;
    const int cx0 = cell_x(c.x - r), cx1 = cell_x(c.x + r);
    const int cy0 = cell_y(c.y - r), cy1 = cell_y(c.y + r);
    const double r2 = r * r;
    for (int cy = cy0; cy <= cy1; ++cy)
      for (int cx = cx0; cx <= cx1; ++cx)
        for (int idx : buckets_[std::size_t(cy) * std::size_t(nx_) + std::size_t(cx)])
          if (dist2(samples[std::size_t(idx)].point, c) <= r2) out.push_back(idx);
    return out;
  }

  int nearest_sample(Vec2 p) const {
    double r = cell_;
    const double rmax = 2.0 * dom->spec.clip_box.diameter();
    while (r <= rmax) {
      auto hits = samples_within(p, r);
      if (!hits.empty()) {
        int best = hits.front();
        double bd = dist2(samples[std::size_t(best)].point, p);
        for (int idx : hits) {
          const double dd = dist2(samples[std::size_t(idx)].point, p);
          if (dd < bd) { bd = dd; best = idx; }
        }
        return best;
      }
      r *= 2.0;
    }
    return samples.empty() ? -1 : 0;
  }

 private:
  Box bbox_;
  double cell_ = 1.0;
  int nx_ = 0, ny_ = 0;
  std::vector<std::vector<int>> buckets_;

  int cell_x(double x) const {
    return std::clamp(int((x - bbox_.lo.x) / cell_), 0, nx_ - 1);
  }
  int cell_y(double y) const {
    return std::clamp(int((y - bbox_.lo.y) / cell_), 0, ny_ - 1);
  }

  void build_index() {
    bbox_ = dom->spec.clip_box;
    cell_ = std::max(4.0 * spacing, bbox_.diameter() / 256.0);
    nx_ = std::max(1, int(std::ceil(bbox_.width() / cell_)));
    ny_ = std::max(1, int(std::ceil(bbox_.height() / cell_)));
    buckets_.assign(std::size_t(nx_) * std::size_t(ny_), {});
    for (std::size_t k = 0; k < samples.size(); ++k) {
      const Vec2 q = samples[k].point;
      buckets_[std::size_t(cell_y(q.y)) * std::size_t(nx_) + std::size_t(cell_x(q.x))]
          .push_back(int(k));
    }
  }
};

// Public sampling entry point: samples restricted to the query window.
inline std::vector<BoundarySample> sample_boundary(const DomainSpec& spec,
                                                   double target_spacing) {
  const Domain dom = build_domain(spec);
  const DenseBoundary db = DenseBoundary::build(dom, target_spacing);
  const Box window = dom.query_window();
  std::vector<BoundarySample> out;
  out.reserve(db.samples.size());
  for (const auto& s : db.samples)
    if (window.contains(s.point)) out.push_back(s);
  return out;
}

}  // namespace ridgekit
