#pragma once

// Serialization: deterministic CSV / JSON / PGM / SVG emission.
//
// Everything here is pure formatting — no geometry is computed.  All float
// output goes through fmt12() (12 significant digits, "-0" normalized) so
// identical inputs produce byte-identical artifacts.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ridgekit/cutlocus.hpp"
#include "ridgekit/curvature.hpp"
#include "ridgekit/domain.hpp"
#include "ridgekit/eikonal.hpp"
#include "ridgekit/errors.hpp"
#include "ridgekit/projection.hpp"
#include "ridgekit/sampling.hpp"

namespace ridgekit {

using json = nlohmann::json;

inline std::string fmt12(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  if (v == 0.0) v = 0.0;  // flush -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string fmt6(double v) {  // screen-precision variant for SVG coords
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Round-trip a value through its 12-digit decimal form so JSON numbers carry
// the same precision as the CSV artifacts.
inline double num12(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(fmt12(v).c_str(), nullptr);
}

inline std::string radius_str(const Radius& r) {
  return r.unbounded ? "inf" : fmt12(r.value);
}

inline json radius_json(const Radius& r) {
  if (r.unbounded) return json("inf");
  return json(num12(r.value));
}

// ---------------------------------------------------------------------------
// DomainSpec <-> JSON

inline json spec_to_json(const DomainSpec& spec) {
  json j;
  j["kind"] = domain_kind_name(spec.kind);
  json p = json::object();
  for (const auto& [k, v] : spec.params) p[k] = num12(v);
  j["params"] = p;
  if (!spec.vertices.empty()) {
    json vs = json::array();
    for (const auto& v : spec.vertices) vs.push_back({num12(v.x), num12(v.y)});
    j["vertices"] = vs;
  }
  j["clip_box"] = {num12(spec.clip_box.lo.x), num12(spec.clip_box.lo.y),
                   num12(spec.clip_box.hi.x), num12(spec.clip_box.hi.y)};
  j["margin"] = num12(spec.margin);
  return j;
}

inline DomainSpec spec_from_json(const json& j) {
  DomainSpec spec;
  const std::string kind = j.value("kind", "");
  bool found = false;
  for (DomainKind k : {DomainKind::Disc, DomainKind::Ellipse, DomainKind::DiscHalfplane,
                       DomainKind::GraphPower, DomainKind::GraphPiecewiseParabola,
                       DomainKind::Polyline}) {
    if (domain_kind_name(k) == kind) { spec.kind = k; found = true; break; }
  }
  if (!found)
    throw Error(ErrorCode::InvalidSpec, "unknown domain kind in JSON: '" + kind + "'");
  if (j.contains("params"))
    for (auto it = j["params"].begin(); it != j["params"].end(); ++it)
      spec.params[it.key()] = it.value().get<double>();
  if (j.contains("vertices"))
    for (const auto& v : j["vertices"])
      spec.vertices.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
  if (j.contains("clip_box")) {
    const auto& b = j["clip_box"];
    if (!b.is_array() || b.size() != 4)
      throw Error(ErrorCode::InvalidSpec, "clip_box must be [x0, y0, x1, y1]");
    spec.clip_box = {{b[0].get<double>(), b[1].get<double>()},
                     {b[2].get<double>(), b[3].get<double>()}};
  } else {
    // keep the builtin default box for this kind
    spec.clip_box = builtin_spec(kind).clip_box;
    spec.margin = builtin_spec(kind).margin;
  }
  if (j.contains("margin")) spec.margin = j["margin"].get<double>();
  return spec;
}

// ---------------------------------------------------------------------------
// CSV writers

inline void write_projection_row(std::ostream& os, Vec2 x, const ProjectionResult& r) {
  os << fmt12(x.x) << ',' << fmt12(x.y) << ',' << fmt12(r.distance) << ','
     << r.projections.size();
  for (const auto& p : r.projections)
    os << ',' << fmt12(p.point.x) << ',' << fmt12(p.point.y);
  os << '\n';
}

inline void write_projection_csv_header(std::ostream& os) {
  os << "x,y,d,n_clusters,proj_x_i,proj_y_i\n";
}

struct RhoRow {
  double arc_param = 0.0;
  Vec2 point;
  Radius rho;
  Radius rho_star;
};

inline void write_rho_csv(std::ostream& os, const std::vector<RhoRow>& rows) {
  os << "arc_param,x,y,rho,rho_uncertainty,rho_star\n";
  for (const auto& r : rows) {
    os << fmt12(r.arc_param) << ',' << fmt12(r.point.x) << ',' << fmt12(r.point.y) << ','
       << radius_str(r.rho) << ','
       << (r.rho.unbounded ? std::string("inf") : fmt12(r.rho.uncertainty)) << ','
       << radius_str(r.rho_star) << '\n';
  }
}

inline void write_mask_csv(std::ostream& os, const SkeletonMask& mask) {
  os << "x,y\n";
  for (const auto& c : mask.flagged_centers())
    os << fmt12(c.x) << ',' << fmt12(c.y) << '\n';
}

inline const char* cell_state_name(CellState s) {
  switch (s) {
    case CellState::Far: return "far";
    case CellState::Narrow: return "narrow";
    case CellState::Accepted: return "accepted";
    case CellState::Exterior: return "exterior";
  }
  return "unknown";
}

inline void write_field_csv(std::ostream& os, const ScalarField& f) {
  os << "x,y,u,state\n";
  for (int j = 0; j < f.geom.ny; ++j)
    for (int i = 0; i < f.geom.nx; ++i) {
      const Vec2 c = f.geom.center(i, j);
      const std::size_t k = f.geom.index(i, j);
      os << fmt12(c.x) << ',' << fmt12(c.y) << ','
         << (f.state[k] == CellState::Exterior ? "" : fmt12(f.value[k])) << ','
         << cell_state_name(f.state[k]) << '\n';
    }
}

// Classifier verdict per interior cell.
inline void write_classify_csv(std::ostream& os, const InteriorGrid& grid,
                               const std::vector<ClassifyResult>& cells) {
  os << "x,y,classification,d,rho_star\n";
  for (int j = 0; j < grid.geom.ny; ++j)
    for (int i = 0; i < grid.geom.nx; ++i) {
      const std::size_t k = grid.geom.index(i, j);
      if (!grid.interior[k]) continue;
      const Vec2 c = grid.geom.center(i, j);
      os << fmt12(c.x) << ',' << fmt12(c.y) << ','
         << classification_name(cells[k].cls) << ',' << fmt12(cells[k].d) << ','
         << radius_str(cells[k].rho_star_val) << '\n';
    }
}

// Distance-field rows over a grid (d + cluster representatives per cell).
inline void write_distfield_csv(std::ostream& os, const Workspace& ws,
                                const InteriorGrid& grid,
                                const std::vector<ProjectionResult>& results) {
  write_projection_csv_header(os);
  for (int j = 0; j < grid.geom.ny; ++j)
    for (int i = 0; i < grid.geom.nx; ++i) {
      const std::size_t k = grid.geom.index(i, j);
      if (!grid.interior[k]) continue;
      write_projection_row(os, grid.geom.center(i, j), results[k]);
    }
  (void)ws;
}

// ---------------------------------------------------------------------------
// JSON reports

inline json projection_json(Vec2 x, const ProjectionResult& r) {
  json feet = json::array();
  for (const auto& p : r.projections)
    feet.push_back({{"x", num12(p.point.x)},
                    {"y", num12(p.point.y)},
                    {"piece", p.piece},
                    {"t", num12(p.t)}});
  return json{{"x", num12(x.x)},
              {"y", num12(x.y)},
              {"d", num12(r.distance)},
              {"n_clusters", r.projections.size()},
              {"singleton", r.is_singleton},
              {"cluster_gap", num12(r.cluster_gap)},
              {"projections", feet}};
}

inline json classify_json(Vec2 x, const ClassifyResult& c, double resolution) {
  json j{{"x", num12(x.x)},
         {"y", num12(x.y)},
         {"classification", classification_name(c.cls)},
         {"d", num12(c.d)},
         {"singleton", c.singleton},
         {"resolution", num12(resolution)}};
  j["rho_star"] = radius_json(c.rho_star_val);
  j["foot"] = {num12(c.foot.x), num12(c.foot.y)};
  return j;
}

inline json agreement_json(const AgreementReport& rep) {
  json dis = json::array();
  for (const auto& d : rep.disagreements)
    dis.push_back({{"x", num12(d.cell.x)},
                   {"y", num12(d.cell.y)},
                   {"expected", d.expected_skeleton ? "skeleton" : "regular"},
                   {"got", classification_name(d.got)}});
  json j{{"agreement", num12(rep.agreement)},
         {"n_cells", rep.n_cells},
         {"disagreements", dis}};
  j["n_singleton_cutlocus"] = rep.n_singleton_cutlocus;
  j["max_envelope_excess"] = std::isfinite(rep.max_envelope_excess)
                                 ? json(num12(rep.max_envelope_excess))
                                 : json(nullptr);
  return j;
}

inline json eikonal_stats_json(const EikonalErrorReport& rep) {
  return json{{"far_max_error", num12(rep.far_max)},
              {"far_mean_error", num12(rep.far_mean)},
              {"n_far", rep.far_n},
              {"near_max_error", num12(rep.near_max)},
              {"near_mean_error", num12(rep.near_mean)},
              {"n_near", rep.near_n},
              {"residual_median", num12(rep.residual_median)},
              {"u_min", num12(rep.u_min)}};
}

inline json usc_json(const UscReport& rep) {
  json rr = json::array(), dd = json::array();
  for (double r : rep.radii) rr.push_back(num12(r));
  for (double d : rep.deviations) dd.push_back(num12(d));
  return json{{"radii", rr}, {"deviations", dd}, {"pass", rep.pass}};
}

inline json error_json(const std::string& error, const std::string& message) {
  return json{{"error", error}, {"message", message}};
}

// ---------------------------------------------------------------------------
// PGM (P5 binary, 8-bit)

inline void write_pgm(std::ostream& os, int w, int h, const std::vector<unsigned char>& px) {
  os << "P5\n" << w << ' ' << h << "\n255\n";
  os.write(reinterpret_cast<const char*>(px.data()), std::streamsize(px.size()));
}

inline void write_mask_pgm(std::ostream& os, const SkeletonMask& mask) {
  const auto dil = mask.dilated();
  std::vector<unsigned char> px(std::size_t(mask.geom.cells()), 0);
  for (int j = 0; j < mask.geom.ny; ++j)
    for (int i = 0; i < mask.geom.nx; ++i) {
      // PGM rows run top-to-bottom; grid rows bottom-to-top.
      const std::size_t out = std::size_t(mask.geom.ny - 1 - j) * std::size_t(mask.geom.nx) +
                              std::size_t(i);
      if (mask.flagged(i, j)) px[out] = 255;
      else if (dil.flagged(i, j)) px[out] = 128;
    }
  write_pgm(os, mask.geom.nx, mask.geom.ny, px);
}

inline void write_field_pgm(std::ostream& os, const ScalarField& f) {
  double umax = 0.0;
  for (std::size_t k = 0; k < f.value.size(); ++k)
    if (f.state[k] != CellState::Exterior && std::isfinite(f.value[k]))
      umax = std::max(umax, f.value[k]);
  if (umax <= 0.0) umax = 1.0;
  std::vector<unsigned char> px(std::size_t(f.geom.cells()), 0);
  for (int j = 0; j < f.geom.ny; ++j)
    for (int i = 0; i < f.geom.nx; ++i) {
      const std::size_t k = f.geom.index(i, j);
      if (f.state[k] == CellState::Exterior) continue;
      const std::size_t out = std::size_t(f.geom.ny - 1 - j) * std::size_t(f.geom.nx) +
                              std::size_t(i);
      const double s = std::clamp(f.value[k] / umax, 0.0, 1.0);
      px[out] = static_cast<unsigned char>(16.5 + 239.0 * s);
    }
  write_pgm(os, f.geom.nx, f.geom.ny, px);
}

// ---------------------------------------------------------------------------
// SVG rendering

namespace detail {

struct Rgb { double r, g, b; };

// Compact perceptual ramp (dark blue -> teal -> green -> yellow).
inline Rgb ramp(double s) {
  static const Rgb stops[] = {{0.267, 0.005, 0.329},
                              {0.229, 0.322, 0.546},
                              {0.128, 0.567, 0.551},
                              {0.369, 0.789, 0.383},
                              {0.993, 0.906, 0.144}};
  s = std::clamp(s, 0.0, 1.0) * 4.0;
  const int k = std::min(3, int(s));
  const double f = s - k;
  return {stops[k].r + f * (stops[k + 1].r - stops[k].r),
          stops[k].g + f * (stops[k + 1].g - stops[k].g),
          stops[k].b + f * (stops[k + 1].b - stops[k].b)};
}

inline std::string rgb_hex(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", int(c.r * 255.0 + 0.5),
                int(c.g * 255.0 + 0.5), int(c.b * 255.0 + 0.5));
  return buf;
}

}  // namespace detail

struct SvgOptions {
  double width_px = 800.0;
  bool draw_classification = false;  // cell fill by classifier verdict
};

// Overlay: boundary polyline colored by rho* (log scale, unbounded distinct),
// detected cut-locus mask cells, optional per-cell classification fill.
inline std::string render_svg(const Workspace& ws, const SkeletonMask& mask,
                              const RhoTable& table,
                              const std::vector<ClassifyResult>* cells,
                              const InteriorGrid* grid, SvgOptions opt = {}) {
  const Box box = ws.dom().spec.clip_box;
  const double sc = opt.width_px / std::max(box.width(), box.height());
  const double W = box.width() * sc, H = box.height() * sc;
  auto X = [&](double x) { return (x - box.lo.x) * sc; };
  auto Y = [&](double y) { return (box.hi.y - y) * sc; };

  // log-scale range over finite rho* values
  double lo = 0.0, hi = 0.0;
  bool any_finite = false;
  for (const auto& r : table.values) {
    if (r.unbounded || !(r.value > 0.0)) continue;
    const double lg = std::log10(r.value);
    if (!any_finite) { lo = hi = lg; any_finite = true; }
    lo = std::min(lo, lg);
    hi = std::max(hi, lg);
  }
  if (!any_finite) { lo = -1.0; hi = 1.0; }
  if (hi - lo < 1e-9) { lo -= 0.5; hi += 0.5; }
  const std::string inf_color = "#9aa5b1";

  std::string s;
  s.reserve(1 << 20);
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt6(W) + "\" height=\"" +
       fmt6(H + 46.0) + "\" viewBox=\"0 0 " + fmt6(W) + " " + fmt6(H + 46.0) + "\">\n";
  s += "<rect width=\"" + fmt6(W) + "\" height=\"" + fmt6(H + 46.0) + "\" fill=\"#ffffff\"/>\n";

  if (opt.draw_classification && cells && grid) {
    const double ch = grid->geom.h * sc;
    s += "<g stroke=\"none\">\n";
    for (int j = 0; j < grid->geom.ny; ++j)
      for (int i = 0; i < grid->geom.nx; ++i) {
        const std::size_t k = grid->geom.index(i, j);
        if (!grid->interior[k]) continue;
        const char* fill = nullptr;
        switch ((*cells)[k].cls) {
          case Classification::RegularPoint: fill = "#eef4fb"; break;
          case Classification::CutLocusPoint: fill = "#f6c9c9"; break;
          case Classification::BoundaryCase: fill = "#fbe3b5"; break;
        }
        const Vec2 c = grid->geom.center(i, j);
        s += "<rect x=\"" + fmt6(X(c.x) - ch / 2) + "\" y=\"" + fmt6(Y(c.y) - ch / 2) +
             "\" width=\"" + fmt6(ch) + "\" height=\"" + fmt6(ch) + "\" fill=\"" + fill +
             "\"/>\n";
      }
    s += "</g>\n";
  }

  {  // cut-locus mask
    const double ch = mask.geom.h * sc;
    s += "<g fill=\"#c0392b\" stroke=\"none\">\n";
    for (const auto& c : mask.flagged_centers())
      s += "<rect x=\"" + fmt6(X(c.x) - ch / 2) + "\" y=\"" + fmt6(Y(c.y) - ch / 2) +
           "\" width=\"" + fmt6(ch) + "\" height=\"" + fmt6(ch) + "\"/>\n";
    s += "</g>\n";
  }

  {  // boundary colored by rho* (segment color from its first endpoint sample)
    const auto& db = ws.boundary;
    s += "<g fill=\"none\" stroke-width=\"2.5\" stroke-linecap=\"round\">\n";
    for (std::size_t i = 0; i < db.nodes.size(); ++i) {
      const auto& fl = db.nodes[i].flat;
      const auto& pt = db.nodes[i].pt;
      for (std::size_t j = 0; j + 1 < pt.size(); ++j) {
        const int smp = fl[j] >= 0 ? fl[j] : fl[j + 1];
        std::string color = inf_color;
        if (smp >= 0 && std::size_t(smp) < table.values.size()) {
          const Radius& r = table.values[std::size_t(smp)];
          if (!r.unbounded && r.value > 0.0)
            color = detail::rgb_hex(detail::ramp((std::log10(r.value) - lo) / (hi - lo)));
        }
        s += "<path d=\"M" + fmt6(X(pt[j].x)) + " " + fmt6(Y(pt[j].y)) + " L" +
             fmt6(X(pt[j + 1].x)) + " " + fmt6(Y(pt[j + 1].y)) + "\" stroke=\"" + color +
             "\"/>\n";
      }
    }
    s += "</g>\n";
  }

  {  // legend: gradient bar + inf swatch
    const double bw = W * 0.5, bx = 10.0, by = H + 12.0, bh = 12.0;
    const int steps = 64;
    for (int k = 0; k < steps; ++k) {
      const std::string c = detail::rgb_hex(detail::ramp((k + 0.5) / steps));
      s += "<rect x=\"" + fmt6(bx + bw * k / steps) + "\" y=\"" + fmt6(by) + "\" width=\"" +
           fmt6(bw / steps + 0.5) + "\" height=\"" + fmt6(bh) + "\" fill=\"" + c + "\"/>\n";
    }
    s += "<text x=\"" + fmt6(bx) + "\" y=\"" + fmt6(by + 26.0) +
         "\" font-family=\"sans-serif\" font-size=\"11\">rho* = " + fmt6(std::pow(10.0, lo)) +
         "</text>\n";
    s += "<text x=\"" + fmt6(bx + bw) + "\" y=\"" + fmt6(by + 26.0) +
         "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" +
         fmt6(std::pow(10.0, hi)) + "</text>\n";
    s += "<rect x=\"" + fmt6(bx + bw + 24.0) + "\" y=\"" + fmt6(by) +
         "\" width=\"18\" height=\"" + fmt6(bh) + "\" fill=\"" + inf_color + "\"/>\n";
    s += "<text x=\"" + fmt6(bx + bw + 46.0) + "\" y=\"" + fmt6(by + 10.0) +
         "\" font-family=\"sans-serif\" font-size=\"11\">inf</text>\n";
  }

  s += "</svg>\n";
  return s;
}

}  // namespace ridgekit
