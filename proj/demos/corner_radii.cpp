// Walks the boundary of a builtin domain and prints the touching-ball radius
// next to the curvature radius wherever the latter exists — showing where the
// two agree (smooth convex arcs) and where the global obstruction wins.
//
//   ./demo_corner_radii [builtin] [n_stops]
#include <cstdio>
#include <cstdlib>
#include <string>

#include "ridgekit/curvature.hpp"
#include "ridgekit/domain.hpp"

int main(int argc, char** argv) {
  const std::string builtin = argc > 1 ? argv[1] : "ellipse";
  const std::size_t stops = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 16;

  using namespace ridgekit;
  try {
    const Workspace ws = Workspace::make(builtin_spec(builtin));
    const std::size_t n = ws.boundary.samples.size();
    const std::size_t stride = n / stops ? n / stops : 1;
    std::printf("%-22s %-12s %-12s %s\n", "boundary point", "rho", "rho*", "curvature radius");
    for (std::size_t i = 0; i < n; i += stride) {
      const BoundarySample& s = ws.boundary.samples[i];
      const Radius r = rho(ws, s);
      const Radius rs = rho_star(ws, s, {0.4, 0.2, 0.1}).value;
      char pt[32], rv[16], rsv[16];
      std::snprintf(pt, sizeof pt, "(%+.4f, %+.4f)", s.point.x, s.point.y);
      std::snprintf(rv, sizeof rv, r.unbounded ? "inf" : "%.6f", r.value);
      std::snprintf(rsv, sizeof rsv, rs.unbounded ? "inf" : "%.6f", rs.value);
      std::printf("%-22s %-12s %-12s ", pt, rv, rsv);
      try {
        const Radius rc = rho_from_curvature(ws, s);
        std::printf(rc.unbounded ? "inf\n" : "%.6f\n", rc.value);
      } catch (const Error&) {
        std::printf("n/a (corner or curvature jump)\n");
      }
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error [%s]: %s\n", error_code_name(e.code()), e.what());
    return 1;
  }
  return 0;
}
