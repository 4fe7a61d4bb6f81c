#include "minsurf/branch.hpp"

#include <algorithm>
#include <sstream>

namespace minsurf {

namespace {

// Step acceptance: the jump from w_prev to w_next must stay within a third of
// the cube-root separation sqrt3 * |w|, so the nearest-root decode cannot
// swap sheets.
bool step_ok(const complex_t& w_prev, const complex_t& w_next) {
  const real_t lim = sqrt3() / 3 * std::min(cabs(w_prev), cabs(w_next));
  return cabs(w_next - w_prev) <= lim;
}

}  // namespace

BranchLift::BranchLift(const TrigonalCurve& curve, const Arc& arc, const real_t& seed_t,
                       const complex_t& seed_w, const BranchOptions& opts)
    : curve_(curve), arc_(arc) {
  if (!(seed_t > arc.t0() && seed_t < arc.t1())) {
    throw SeedInconsistent("seed parameter must be interior to the arc");
  }
  const complex_t pz = curve.p(arc.z(seed_t));
  if (cabs(pz) < opts.interior_threshold) {
    throw BranchPointOnInterior("seed sits on a branch point");
  }
  if (cabs(seed_w * seed_w * seed_w - pz) > real_t("1e-8") * (1 + cabs(pz))) {
    throw SeedInconsistent("seed w does not satisfy w^3 = p(z) at the seed parameter");
  }
  const complex_t w0 = nearest_cube_root(pz, seed_w);

  end_branch_[0] = cabs(curve.p(arc.z(arc.t0()))) < opts.interior_threshold;
  end_branch_[1] = cabs(curve.p(arc.z(arc.t1()))) < opts.interior_threshold;
  margin_ = opts.end_margin_frac * arc.param_length();

  ts_.push_back(seed_t);
  ws_.push_back(w0);
  const real_t hi = arc.t1() - (end_branch_[1] ? margin_ : real_t(0));
  const real_t lo = arc.t0() + (end_branch_[0] ? margin_ : real_t(0));
  walk(+1, hi, opts);
  std::reverse(ts_.begin(), ts_.end());
  std::reverse(ws_.begin(), ws_.end());
  walk(-1, lo, opts);
  std::reverse(ts_.begin(), ts_.end());
  std::reverse(ws_.begin(), ws_.end());
}

void BranchLift::walk(int sign, const real_t& bound, const BranchOptions& opts) {
  // anchors are ordered so that the walk start is at the back
  real_t t = ts_.back();
  complex_t w = ws_.back();
  real_t h = arc_.param_length() / 16;
  const real_t h_cap = h;
  while ((sign > 0 && t < bound) || (sign < 0 && t > bound)) {
    real_t t_next = t + sign * h;
    bool clipped = false;
    if ((sign > 0 && t_next >= bound) || (sign < 0 && t_next <= bound)) {
      t_next = bound;
      clipped = true;
    }
    const complex_t p_next = curve_.p(arc_.z(t_next));
    if (cabs(p_next) < opts.interior_threshold && !clipped) {
      std::ostringstream os;
      os << "|p(z(t))| below threshold at interior parameter t = " << t_next;
      throw BranchPointOnInterior(os.str());
    }
    complex_t w_next = nearest_cube_root(p_next, w);
    bool accept = false;
    if (step_ok(w, w_next)) {
      // midpoint consistency: decoding the midpoint from either side must agree
      const real_t t_mid = (t + t_next) / 2;
      const complex_t w_mid = nearest_cube_root(curve_.p(arc_.z(t_mid)), w);
      accept = step_ok(w, w_mid) && step_ok(w_mid, w_next) &&
               cabs(nearest_cube_root(p_next, w_mid) - w_next) == 0;
    }
    if (!accept) {
      int halvings = 0;
      while (!accept) {
        if (++halvings > opts.max_halvings) {
          throw PrecisionNotReached("branch continuation stalled (step underflow)");
        }
        h /= 2;
        t_next = t + sign * h;
        const complex_t pn = curve_.p(arc_.z(t_next));
        if (cabs(pn) < opts.interior_threshold) {
          throw BranchPointOnInterior("branch point reached while halving the step");
        }
        w_next = nearest_cube_root(pn, w);
        accept = step_ok(w, w_next);
      }
    }
    if (t_next == t) {
      throw PrecisionNotReached("branch continuation stalled (parameter underflow)");
    }
    ts_.push_back(t_next);
    ws_.push_back(w_next);
    t = t_next;
    w = w_next;
    h = std::min(h * 2, h_cap);
  }
}

complex_t BranchLift::w_at(const real_t& t) const {
  const auto it = std::lower_bound(ts_.begin(), ts_.end(), t);
  size_t i;
  if (it == ts_.begin()) {
    i = 0;
  } else if (it == ts_.end()) {
    i = ts_.size() - 1;
  } else {
    const size_t hi = static_cast<size_t>(it - ts_.begin());
    i = (abs(ts_[hi] - t) < abs(ts_[hi - 1] - t)) ? hi : hi - 1;
  }
  return nearest_cube_root(curve_.p(arc_.z(t)), ws_[i]);
}

complex_t BranchLift::w_near_end(int which, const real_t& dist) const {
  const real_t t_end = which == 0 ? arc_.t0() : arc_.t1();
  const real_t delta = which == 0 ? dist : -dist;
  const complex_t z_ref = arc_.z(t_end);
  const complex_t pz = curve_.p_shifted(z_ref, arc_.z_delta(t_end, delta));
  const complex_t& anchor = which == 0 ? ws_.front() : ws_.back();
  return nearest_cube_root(pz, anchor);
}

real_t BranchLift::max_anchor_residual(const TrigonalCurve& curve) const {
  real_t worst = 0;
  for (size_t i = 0; i < ts_.size(); ++i) {
    worst = std::max(worst, curve.curve_residual({arc_.z(ts_[i]), ws_[i]}));
  }
  return worst;
}

}  // namespace minsurf
