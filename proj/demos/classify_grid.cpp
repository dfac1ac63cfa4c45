// Classifies every grid cell of a builtin domain and prints a compact text
// map: '.' regular, '#' cut locus, 'o' boundary case, ' ' exterior — a quick
// visual of where the skeleton sits.
//
//   ./demo_classify_grid [builtin] [grid_res]
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "ridgekit/curvature.hpp"
#include "ridgekit/cutlocus.hpp"
#include "ridgekit/domain.hpp"
#include "ridgekit/grid.hpp"
#include "ridgekit/threads.hpp"

int main(int argc, char** argv) {
  const std::string builtin = argc > 1 ? argv[1] : "ellipse";
  const double h = argc > 2 ? std::strtod(argv[2], nullptr) : 1.0 / 24.0;

  using namespace ridgekit;
  try {
    const Workspace ws = Workspace::make(builtin_spec(builtin));
    const RhoTable table = RhoTable::build(ws);
    const InteriorGrid grid = make_grid(ws.dom(), h);
    std::vector<char> glyph(grid.geom.cells(), ' ');
    parallel_for(grid.geom.cells(), [&](std::size_t k) {
      if (!grid.interior[k]) return;
      const int i = int(k) % grid.geom.nx, j = int(k) / grid.geom.nx;
      const auto res = classify_with(ws, table, grid.geom.center(i, j), kDefaultResolution);
      glyph[k] = res.cls == Classification::CutLocusPoint  ? '#'
                 : res.cls == Classification::BoundaryCase ? 'o'
                                                           : '.';
    });
    std::printf("%s at h=%g (%dx%d cells)\n", builtin.c_str(), h, grid.geom.nx,
                grid.geom.ny);
    for (int j = grid.geom.ny - 1; j >= 0; --j) {
      for (int i = 0; i < grid.geom.nx; ++i)
        std::putchar(glyph[grid.geom.index(i, j)]);
      std::putchar('\n');
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error [%s]: %s\n", error_code_name(e.code()), e.what());
    return 1;
  }
  return 0;
}
