#pragma once

#include <array>
#include <string>
#include <vector>

#include "minsurf/errors.hpp"
#include "minsurf/poly.hpp"
#include "minsurf/scalar.hpp"

namespace minsurf {

// A point (z, w) on the surface, with the sheet pinned by the explicit w.
struct SurfacePoint {
  complex_t z;
  complex_t w;
};

// Order-3 automorphisms of w^3 = p(z): psi rotates the sheet, phi rotates the
// base plane (the latter only when the root set is invariant under z -> wz).
enum class Deck { psi, phi };

// The trigonal curve w^3 = (z - a_1)...(z - a_6), genus 4.
class TrigonalCurve {
 public:
  explicit TrigonalCurve(std::array<complex_t, 6> roots, const real_t& separation_threshold);

  const std::array<complex_t, 6>& roots() const { return roots_; }
  int genus() const { return 4; }

  complex_t p(const complex_t& z) const;

  // p evaluated at z_ref + delta with each linear factor formed around z_ref,
  // so the factor for a root equal to z_ref keeps full relative accuracy even
  // for |delta| far below |z_ref| * eps.
  complex_t p_shifted(const complex_t& z_ref, const complex_t& delta) const;

  bool on_curve(const SurfacePoint& pt, const real_t& tol) const;
  real_t curve_residual(const SurfacePoint& pt) const;  // |w^3 - p(z)| / (1 + |p(z)|)

  real_t min_root_gap() const { return min_gap_; }
  bool rotation_symmetric_roots(const real_t& tol) const;  // z -> wz permutes roots
  real_t distance_to_roots(const complex_t& z) const;

 private:
  std::array<complex_t, 6> roots_;
  real_t min_gap_;
};

TrigonalCurve curve_from_roots(const std::vector<complex_t>& roots);

// c(z) dz / w^k with k in {1, 2}.
struct Differential {
  Poly numerator;
  int w_power = 2;
  std::string label;

  // Member of the holomorphic basis family: deg <= 2 for k = 2, deg = 0 for k = 1.
  bool abelian_first_kind() const {
    if (w_power == 2) return numerator.degree() <= 2;
    if (w_power == 1) return numerator.degree() <= 0;
    return false;
  }

  Differential scaled(const complex_t& s) const { return {numerator.scaled(s), w_power, label}; }
};

// Density of the differential against dz; caller guarantees w != 0.
complex_t eval_density(const Differential& d, const complex_t& z, const complex_t& w);

// Guarded evaluation; throws AtBranchPoint when |w|^3 falls below threshold.
complex_t eval_differential(const Differential& d, const SurfacePoint& pt,
                            const real_t& branch_threshold);
complex_t eval_differential(const Differential& d, const SurfacePoint& pt);

SurfacePoint deck_transform(const TrigonalCurve& curve, const SurfacePoint& pt, Deck kind);

// Default |p(z)| threshold below which a point counts as a branch point.
inline const real_t& branch_point_threshold() {
  static const real_t v("1e-8");
  return v;
}

inline const real_t& default_root_separation() {
  static const real_t v("1e-9");
  return v;
}

}  // namespace minsurf
