#include "minsurf/mesh.hpp"

#include <ostream>
#include <sstream>

namespace minsurf {

Mesh build_mesh(const WeierstrassData& data, const MeshOptions& opts, const real_t& precision,
                Exec exec) {
  if (!data.lattice) throw Error("mesh generation needs a lattice on the Weierstrass data");
  if (data.diffs.size() != 3) throw Error("mesh export expects a 3-dimensional immersion");
  if (opts.nu < 2 || opts.nv < 2) throw ConfigError("mesh grid must be at least 2x2");

  const int nu = opts.nu, nv = opts.nv;
  const int per_sheet = nu * nv;
  const int n_sheets = static_cast<int>(opts.sheets.size());

  Mesh mesh;
  mesh.vertices.resize(static_cast<size_t>(per_sheet) * n_sheets);

  // sheet s over the basepoint z = 0: w = -omega^s (cube roots of p(0) = -1)
  const auto grid_z = [&](int iu, int iv) {
    const real_t fu = real_t(iu) / (nu - 1);
    const real_t fv = real_t(iv) / (nv - 1);
    return complex_t(opts.x0 + fu * (opts.x1 - opts.x0), opts.y0 + fv * (opts.y1 - opts.y0));
  };

  bool failed = false;
  std::string first_error;

#ifdef _OPENMP
  const bool parallel = (exec == Exec::parallel);
#pragma omp parallel for schedule(dynamic) collapse(2) if (parallel)
#else
  (void)exec;
#endif
  for (int s = 0; s < n_sheets; ++s) {
    for (int k = 0; k < per_sheet; ++k) {
      try {
        const int iu = k / nv;
        const int iv = k % nv;
        const complex_t w0 = -unit_root3(opts.sheets[s]);
        WeierstrassData local = data;
        local.basepoint = SurfacePoint{complex_t(0), w0};
        const complex_t z = grid_z(iu, iv);
        std::vector<SurfacePoint> path = lift_path(local.curve, {complex_t(0), z}, w0);
        const auto v = immerse(local, opts.theta, path, precision, true);
        mesh.vertices[static_cast<size_t>(s) * per_sheet + k] = {v[0], v[1], v[2]};
      } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
        {
          if (!failed) first_error = e.what();
          failed = true;
        }
      }
    }
  }
  if (failed) throw Error("mesh vertex integration failed: " + first_error);

  // faces per quad cell; skip cells whose corners touch a branch point
  for (int s = 0; s < n_sheets; ++s) {
    const int base = s * per_sheet;
    for (int iu = 0; iu + 1 < nu; ++iu) {
      for (int iv = 0; iv + 1 < nv; ++iv) {
        const complex_t corners[4] = {grid_z(iu, iv), grid_z(iu + 1, iv), grid_z(iu, iv + 1),
                                      grid_z(iu + 1, iv + 1)};
        bool near_root = false;
        for (const auto& c : corners) {
          if (data.curve.distance_to_roots(c) < opts.drop_radius) near_root = true;
        }
        if (near_root) {
          ++mesh.dropped_cells;
          continue;
        }
        const int v00 = base + iu * nv + iv;
        const int v10 = base + (iu + 1) * nv + iv;
        const int v01 = base + iu * nv + iv + 1;
        const int v11 = base + (iu + 1) * nv + iv + 1;
        mesh.faces.push_back({v00, v10, v11});
        mesh.faces.push_back({v00, v11, v01});
      }
    }
  }
  return mesh;
}

void write_obj(std::ostream& os, const Mesh& mesh) {
  for (const auto& v : mesh.vertices) {
    os << "v " << to_string(v[0], 17) << " " << to_string(v[1], 17) << " "
       << to_string(v[2], 17) << "\n";
  }
  for (const auto& f : mesh.faces) {
    os << "f " << f[0] + 1 << " " << f[1] + 1 << " " << f[2] + 1 << "\n";
  }
}

void write_mesh_csv(std::ostream& os, const Mesh& mesh) {
  os << "x,y,z\n";
  for (const auto& v : mesh.vertices) {
    os << to_string(v[0], 17) << "," << to_string(v[1], 17) << "," << to_string(v[2], 17)
       << "\n";
  }
}

}  // namespace minsurf
