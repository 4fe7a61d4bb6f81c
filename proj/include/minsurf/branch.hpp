#pragma once

#include <vector>

#include "minsurf/arc.hpp"
#include "minsurf/curve.hpp"

namespace minsurf {

struct BranchOptions {
  real_t interior_threshold = branch_point_threshold();  // |p| below this on the interior is fatal
  real_t end_margin_frac = real_t("1e-5");               // anchor cutoff near branch-point endpoints
  int max_halvings = 60;
};

// Continuous lift t -> (z(t), w(t)) of an arc to the surface, seeded at an
// interior parameter. Anchors are laid down adaptively so that consecutive
// w values stay within a third of the cube-root separation; queries decode
// the correct sheet from the nearest anchor.
//
// Arcs may terminate at branch points (where all sheets meet and w -> 0);
// anchors then stop at a small margin and endpoint-adjacent queries go
// through w_near_end, which evaluates p in shifted form to keep relative
// accuracy at distances far below machine granularity of t.
class BranchLift {
 public:
  BranchLift(const TrigonalCurve& curve, const Arc& arc, const real_t& seed_t,
             const complex_t& seed_w, const BranchOptions& opts = {});

  const Arc& arc() const { return arc_; }

  // Generic interior query (t within the anchored span).
  complex_t w_at(const real_t& t) const;

  // Query at parameter distance `dist` from endpoint `which` (0 = t0, 1 = t1).
  complex_t w_near_end(int which, const real_t& dist) const;

  SurfacePoint at(const real_t& t) const { return {arc_.z(t), w_at(t)}; }

  bool end_is_branch_point(int which) const { return end_branch_[which]; }
  real_t end_margin() const { return margin_; }

  // Largest |w^3 - p(z)| / (1 + |p|) over all anchors (diagnostic).
  real_t max_anchor_residual(const TrigonalCurve& curve) const;

  const std::vector<real_t>& anchor_params() const { return ts_; }
  const std::vector<complex_t>& anchor_values() const { return ws_; }

 private:
  void walk(int sign, const real_t& bound, const BranchOptions& opts);

  TrigonalCurve curve_;
  Arc arc_;
  std::vector<real_t> ts_;  // ascending
  std::vector<complex_t> ws_;
  bool end_branch_[2] = {false, false};
  real_t margin_ = 0;
};

}  // namespace minsurf
