#include "minsurf/curve.hpp"

#include <sstream>

namespace minsurf {

TrigonalCurve::TrigonalCurve(std::array<complex_t, 6> roots, const real_t& separation_threshold)
    : roots_(std::move(roots)) {
  min_gap_ = -1;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      const real_t d = cabs(roots_[i] - roots_[j]);
      if (min_gap_ < 0 || d < min_gap_) min_gap_ = d;
    }
  }
  if (min_gap_ <= separation_threshold) {
    std::ostringstream os;
    os << "roots closer than separation threshold (gap " << min_gap_ << ")";
    throw DuplicateRoots(os.str());
  }
}

complex_t TrigonalCurve::p(const complex_t& z) const {
  complex_t acc(1);
  for (const auto& a : roots_) acc *= (z - a);
  return acc;
}

complex_t TrigonalCurve::p_shifted(const complex_t& z_ref, const complex_t& delta) const {
  complex_t acc(1);
  for (const auto& a : roots_) acc *= ((z_ref - a) + delta);
  return acc;
}

real_t TrigonalCurve::curve_residual(const SurfacePoint& pt) const {
  const complex_t pz = p(pt.z);
  return cabs(pt.w * pt.w * pt.w - pz) / (1 + cabs(pz));
}

bool TrigonalCurve::on_curve(const SurfacePoint& pt, const real_t& tol) const {
  return curve_residual(pt) <= tol;
}

bool TrigonalCurve::rotation_symmetric_roots(const real_t& tol) const {
  const complex_t om = unit_root3(1);
  for (const auto& a : roots_) {
    const complex_t b = om * a;
    real_t best = -1;
    for (const auto& c : roots_) {
      const real_t d = cabs(b - c);
      if (best < 0 || d < best) best = d;
    }
    if (best > tol) return false;
  }
  return true;
}

real_t TrigonalCurve::distance_to_roots(const complex_t& z) const {
  real_t best = -1;
  for (const auto& a : roots_) {
    const real_t d = cabs(z - a);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

TrigonalCurve curve_from_roots(const std::vector<complex_t>& roots) {
  if (roots.size() != 6) throw DuplicateRoots("exactly 6 roots required");
  std::array<complex_t, 6> arr;
  for (int i = 0; i < 6; ++i) arr[i] = roots[i];
  return TrigonalCurve(arr, default_root_separation());
}

complex_t eval_density(const Differential& d, const complex_t& z, const complex_t& w) {
  const complex_t num = d.numerator.eval(z);
  if (d.w_power == 1) return num / w;
  return num / (w * w);
}

complex_t eval_differential(const Differential& d, const SurfacePoint& pt,
                            const real_t& branch_threshold) {
  const real_t w3 = cabs(pt.w);
  if (w3 * w3 * w3 < branch_threshold) {
    throw AtBranchPoint("differential evaluated at a branch point (|w| too small)");
  }
  return eval_density(d, pt.z, pt.w);
}

complex_t eval_differential(const Differential& d, const SurfacePoint& pt) {
  return eval_differential(d, pt, branch_point_threshold());
}

SurfacePoint deck_transform(const TrigonalCurve& curve, const SurfacePoint& pt, Deck kind) {
  const complex_t om = unit_root3(1);
  if (kind == Deck::psi) return {pt.z, om * pt.w};
  if (!curve.rotation_symmetric_roots(real_t("1e-10"))) {
    throw CurveNotSymmetric("plane rotation needs a root set invariant under z -> wz");
  }
  return {om * pt.z, pt.w};
}

}  // namespace minsurf
