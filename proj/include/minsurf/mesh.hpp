#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "minsurf/periods.hpp"
#include "minsurf/weier.hpp"

namespace minsurf {

struct MeshOptions {
  int nu = 10;
  int nv = 10;
  real_t x0 = real_t("-0.6"), x1 = real_t("0.6");
  real_t y0 = real_t("-0.6"), y1 = real_t("0.6");
  std::vector<int> sheets = {0, 1, 2};
  real_t theta = 0;
  real_t drop_radius = real_t("0.05");  // cells with a corner this close to a root are dropped
};

struct Mesh {
  std::vector<std::array<real_t, 3>> vertices;
  std::vector<std::array<int, 3>> faces;  // 0-based indices
  int dropped_cells = 0;
};

// Grid over the z-plane box, one copy per sheet; each vertex is the
// immersion integrated along the straight path from the basepoint and
// reduced into the fundamental parallelepiped of the attached lattice.
// Vertex count is nu * nv * |sheets| regardless of dropped cells.
Mesh build_mesh(const WeierstrassData& data, const MeshOptions& opts, const real_t& precision,
                Exec exec = Exec::parallel);

void write_obj(std::ostream& os, const Mesh& mesh);
void write_mesh_csv(std::ostream& os, const Mesh& mesh);

}  // namespace minsurf
