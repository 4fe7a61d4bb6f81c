#pragma once

#include <array>
#include <optional>
#include <vector>

#include "minsurf/curve.hpp"
#include "minsurf/cycles.hpp"
#include "minsurf/lattice.hpp"

namespace minsurf {

// Weierstrass data of a conformal minimal immersion: curve, n >= 3
// differentials, basepoint, and (once periodicity is certified) a lattice.
struct WeierstrassData {
  TrigonalCurve curve;
  std::vector<Differential> diffs;
  SurfacePoint basepoint;
  std::optional<LatticeBasis> lattice;
};

struct CheckResult {
  bool pass = false;
  real_t max_residual = 0;
};

// Sum of squared densities at each sample; pass iff the largest residual is
// within tol * max |density|^2.
CheckResult check_conformality(const WeierstrassData& data,
                               const std::vector<SurfacePoint>& samples, const real_t& tol);

// Finite candidate z values where a common zero could occur: the roots of
// every numerator. Points over z = infinity are always checked internally by
// check_common_zeros via the chart zeta = 1/z, w scaled by zeta^2.
std::vector<complex_t> common_zero_candidates(const WeierstrassData& data);

struct CommonZeroReport {
  bool pass = false;
  real_t min_peak_density = 0;  // smallest over candidates of the largest |density|
};

CommonZeroReport check_common_zeros(const WeierstrassData& data,
                                    const std::vector<complex_t>& candidates,
                                    const real_t& threshold);

// Re(e^{i theta} * path integral) from the basepoint along a polyline of
// surface points; straight z segments, branch-tracked. With reduce = true and
// a lattice attached, returns the representative in the fundamental
// parallelepiped.
std::vector<real_t> immerse(const WeierstrassData& data, const real_t& theta,
                            const std::vector<SurfacePoint>& path, const real_t& precision,
                            bool reduce_mod_lattice_flag = false);

// Same integral over a branch-tracked cycle (closed-loop periods).
std::vector<real_t> immerse_cycle(const WeierstrassData& data, const real_t& theta,
                                  const Cycle& cycle, const real_t& precision);

// Lift a polyline of z values to surface points, continuing from seed_w.
std::vector<SurfacePoint> lift_path(const TrigonalCurve& curve,
                                    const std::vector<complex_t>& zs, const complex_t& seed_w);

std::vector<real_t> reduce_mod_lattice(const LatticeBasis& basis, const std::vector<real_t>& x);

// Polynomial function on the curve: sum over (j, k) of c_{jk} z^j w^k.
class CurvePoly {
 public:
  CurvePoly() = default;
  // coeffs[k] is the z-polynomial multiplying w^k.
  explicit CurvePoly(std::vector<Poly> coeffs) : by_w_(std::move(coeffs)) {}
  static CurvePoly in_z(Poly p) { return CurvePoly({std::move(p)}); }

  complex_t eval(const SurfacePoint& pt) const {
    complex_t acc(0), wk(1);
    for (const auto& p : by_w_) {
      acc += p.eval(pt.z) * wk;
      wk *= pt.w;
    }
    return acc;
  }

  bool is_zero() const {
    for (const auto& p : by_w_)
      if (!p.is_zero()) return false;
    return true;
  }

 private:
  std::vector<Poly> by_w_;
};

// Section pair ((s1, s2), (t1, t2)) of the two line-bundle factors.
struct SectionPair {
  CurvePoly s1, s2, t1, t2;
};

// The quadric parametrization: (s1 t1 - s2 t2, s1 t2 + s2 t1,
// i (s1 t1 + s2 t2), i (s1 t2 - s2 t1)); the squared sum vanishes
// identically and the forms are invariant under (s, t) -> (ls, l^-1 t).
class VeroneseForms {
 public:
  explicit VeroneseForms(SectionPair sections) : sec_(std::move(sections)) {}

  std::array<complex_t, 4> eval(const SurfacePoint& pt) const;
  complex_t eval_component(int i, const SurfacePoint& pt) const { return eval(pt)[i]; }

 private:
  SectionPair sec_;
};

VeroneseForms veronese(const SectionPair& sections);

// True iff M^T M (complex bilinear) vanishes to tol in max norm: the
// immersion is holomorphic for some complex structure on the torus.
bool holomorphy_test(const ComplexMat& M, const real_t& tol, real_t* max_entry = nullptr);

}  // namespace minsurf
