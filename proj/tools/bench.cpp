// Wall-clock comparison of the serial reference paths against the OpenMP
// kernels: period matrix assembly, the coprime-pair sweep, and mesh
// integration.

#include <chrono>
#include <iostream>

#include "minsurf/anglefam.hpp"
#include "minsurf/builtin.hpp"
#include "minsurf/mesh.hpp"

using namespace minsurf;

namespace {

template <class F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

void row(const char* name, double serial, double parallel) {
  std::cout << name << ": serial " << serial << " ms, parallel " << parallel << " ms, speedup "
            << serial / parallel << "x\n";
}

}  // namespace

int main() {
  const TrigonalCurve curve = builtin::curve();
  const auto phi = builtin::phi();
  const auto cycles = builtin_cycles(curve);
  const real_t prec = default_period_precision();

  PeriodMatrix om, om_p;
  const double pm_serial = time_ms([&] {
    om = period_matrix(curve, phi, cycles, prec, Exec::serial);
  });
  const double pm_parallel = time_ms([&] {
    om = period_matrix(curve, phi, cycles, prec, Exec::parallel);
  });
  row("period_matrix 3x8", pm_serial, pm_parallel);

  std::vector<Differential> rot;
  for (const auto& d : phi) rot.push_back(d.scaled(complex_t(0, 1)));
  om_p = period_matrix(curve, rot, cycles, prec, Exec::parallel);

  const real_t tol("1e-8");
  const bigint_t height = 1000000;
  const double sw_serial = time_ms([&] {
    property_p_sweep(om, om_p, 10, 10, tol, height, Exec::serial);
  });
  const double sw_parallel = time_ms([&] {
    property_p_sweep(om, om_p, 10, 10, tol, height, Exec::parallel);
  });
  row("property sweep n,m <= 10", sw_serial, sw_parallel);

  const auto rc = reference_constants(prec);
  WeierstrassData data{curve, phi, builtin::basepoint(),
                       builtin::lambda_basis(rc.a, rc.b, rc.c)};
  MeshOptions mo;
  mo.nu = 6;
  mo.nv = 6;
  const double mesh_serial = time_ms([&] { build_mesh(data, mo, prec, Exec::serial); });
  const double mesh_parallel = time_ms([&] { build_mesh(data, mo, prec, Exec::parallel); });
  row("mesh 6x6x3", mesh_serial, mesh_parallel);

  return 0;
}
