#include "minsurf/weier.hpp"

#include <sstream>

#include "minsurf/branch.hpp"
#include "minsurf/periods.hpp"
#include "minsurf/quadrature.hpp"

namespace minsurf {

namespace {

// Lift of a straight segment, seeded just past the start so the sheet is the
// continuation of w_from; the declared start value is re-checked by callers.
BranchLift line_lift(const TrigonalCurve& curve, const Arc& seg, const complex_t& w_from) {
  const real_t eps("0.001");
  const complex_t w_seed = nearest_cube_root(curve.p(seg.z(eps)), w_from);
  return BranchLift(curve, seg, eps, w_seed);
}

}  // namespace

CheckResult check_conformality(const WeierstrassData& data,
                               const std::vector<SurfacePoint>& samples, const real_t& tol) {
  CheckResult res;
  real_t max_sq = 0;
  for (const auto& pt : samples) {
    complex_t sum(0);
    real_t peak = 0;
    for (const auto& d : data.diffs) {
      const complex_t v = eval_differential(d, pt);
      sum += v * v;
      peak = std::max(peak, cabs(v));
    }
    res.max_residual = std::max(res.max_residual, cabs(sum));
    max_sq = std::max(max_sq, peak * peak);
  }
  res.pass = res.max_residual <= tol * std::max(real_t(1), max_sq);
  return res;
}

std::vector<complex_t> common_zero_candidates(const WeierstrassData& data) {
  std::vector<complex_t> out;
  for (const auto& d : data.diffs) {
    for (const auto& z : poly_roots(d.numerator)) out.push_back(z);
  }
  return out;
}

CommonZeroReport check_common_zeros(const WeierstrassData& data,
                                    const std::vector<complex_t>& candidates,
                                    const real_t& threshold) {
  CommonZeroReport rep;
  rep.pass = true;
  rep.min_peak_density = -1;

  const auto consider = [&](const real_t& peak) {
    if (rep.min_peak_density < 0 || peak < rep.min_peak_density) rep.min_peak_density = peak;
    if (peak <= threshold) rep.pass = false;
  };

  for (const auto& z : candidates) {
    // branch points are poles of the densities, never common zeros
    if (cabs(data.curve.p(z)) < branch_point_threshold()) continue;
    const complex_t w = cube_roots(data.curve.p(z))[0];
    real_t peak = 0;
    for (const auto& d : data.diffs) {
      peak = std::max(peak, cabs(eval_density(d, z, w)));
    }
    consider(peak);
  }

  // the three points over z = infinity, chart zeta = 1/z with w scaled by
  // zeta^2: the density of c(z) dz/w^2 becomes -(c0 zeta^2 + c1 zeta + c2)/w~^2
  // which at zeta = 0 is -c2/w~^2; for c(z) dz/w it becomes -c0/w~ (degree 0).
  // |w~| = |1 - zeta^6|^{1/3} = 1 there, so only numerator data matters.
  {
    real_t peak = 0;
    for (const auto& d : data.diffs) {
      const int deg_cap = d.w_power == 2 ? 2 : 0;
      if (d.numerator.degree() > deg_cap) {
        // pole at infinity: dominates every sheet, certainly not a zero
        peak = real_t("1e30");
        break;
      }
      peak = std::max(peak, cabs(d.numerator.coeff(deg_cap)));
    }
    consider(peak);
  }
  return rep;
}

std::vector<SurfacePoint> lift_path(const TrigonalCurve& curve,
                                    const std::vector<complex_t>& zs, const complex_t& seed_w) {
  if (zs.empty()) return {};
  std::vector<SurfacePoint> out;
  out.reserve(zs.size());
  complex_t w = nearest_cube_root(curve.p(zs.front()), seed_w);
  out.push_back({zs.front(), w});
  for (size_t i = 1; i < zs.size(); ++i) {
    const Arc seg = Arc::line(zs[i - 1], zs[i]);
    const BranchLift lift = line_lift(curve, seg, w);
    w = lift.w_at(real_t(1));
    out.push_back({zs[i], w});
  }
  return out;
}

namespace {

// Integral of all densities along one straight segment between consecutive
// surface points (no endpoint singularities; the path must keep away from
// branch points).
std::vector<complex_t> segment_integrals(const WeierstrassData& data, const SurfacePoint& from,
                                         const SurfacePoint& to, const real_t& target) {
  const Arc seg = Arc::line(from.z, to.z);
  const BranchLift lift = line_lift(data.curve, seg, from.w);

  // the lift must connect the declared sheets at both ends
  const real_t rel = real_t("1e-6");
  if (cabs(lift.w_at(real_t(0)) - from.w) > rel * std::max(real_t(1), cabs(from.w)) ||
      cabs(lift.w_at(real_t(1)) - to.w) > rel * std::max(real_t(1), cabs(to.w))) {
    throw SeedInconsistent("path point is not on the branch continued from the previous point");
  }

  std::vector<complex_t> out(data.diffs.size());
  for (size_t i = 0; i < data.diffs.size(); ++i) {
    const auto& diff = data.diffs[i];
    const auto integrand = [&](const real_t& t, const real_t&, const real_t&) -> complex_t {
      const complex_t z = seg.z(t);
      return eval_density(diff, z, lift.w_at(t)) * seg.dzdt(t);
    };
    QuadratureOptions opts;
    opts.target_abs_error = target;
    const auto r = tanh_sinh<complex_t>(integrand, real_t(0), real_t(1), opts);
    if (!r.converged) {
      throw PrecisionNotReached("path segment integral did not reach target accuracy");
    }
    out[i] = r.value;
  }
  return out;
}

}  // namespace

std::vector<real_t> immerse(const WeierstrassData& data, const real_t& theta,
                            const std::vector<SurfacePoint>& path, const real_t& precision,
                            bool reduce_mod_lattice_flag) {
  if (path.empty()) throw Error("immersion path is empty");
  if (cabs(path.front().z - data.basepoint.z) > real_t("1e-12") ||
      cabs(path.front().w - data.basepoint.w) > real_t("1e-8")) {
    throw SeedInconsistent("immersion path must start at the basepoint");
  }
  const size_t n = data.diffs.size();
  std::vector<complex_t> acc(n, complex_t(0));
  if (path.size() > 1) {
    const real_t per_seg = precision / static_cast<int>(path.size() - 1);
    for (size_t s = 0; s + 1 < path.size(); ++s) {
      const auto vals = segment_integrals(data, path[s], path[s + 1], per_seg);
      for (size_t i = 0; i < n; ++i) acc[i] += vals[i];
    }
  }
  const complex_t rot = expi(theta);
  std::vector<real_t> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = (rot * acc[i]).real();
  if (reduce_mod_lattice_flag) {
    if (!data.lattice) throw Error("no lattice attached to the Weierstrass data");
    out = reduce_mod_lattice(*data.lattice, out);
  }
  return out;
}

std::vector<real_t> immerse_cycle(const WeierstrassData& data, const real_t& theta,
                                  const Cycle& cycle, const real_t& precision) {
  std::vector<real_t> out(data.diffs.size());
  const complex_t rot = expi(theta);
  for (size_t i = 0; i < data.diffs.size(); ++i) {
    out[i] = (rot * integrate_along(data.curve, data.diffs[i], cycle, precision)).real();
  }
  return out;
}

std::vector<real_t> reduce_mod_lattice(const LatticeBasis& basis, const std::vector<real_t>& x) {
  const int n = basis.dimension();
  if (static_cast<int>(x.size()) != n) throw DimensionMismatch("point/lattice dimension mismatch");
  const RealMat inv = inverse(basis.columns, real_t("1e-45"));
  std::vector<real_t> coords(n, real_t(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) coords[i] += inv(i, j) * x[j];
  for (auto& c : coords) {
    c -= floor(c);  // into [0, 1)
  }
  std::vector<real_t> out(n, real_t(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += basis.columns(i, j) * coords[j];
  return out;
}

std::array<complex_t, 4> VeroneseForms::eval(const SurfacePoint& pt) const {
  const complex_t s1 = sec_.s1.eval(pt), s2 = sec_.s2.eval(pt);
  const complex_t t1 = sec_.t1.eval(pt), t2 = sec_.t2.eval(pt);
  const complex_t i(0, 1);
  return {s1 * t1 - s2 * t2, s1 * t2 + s2 * t1, i * (s1 * t1 + s2 * t2), i * (s1 * t2 - s2 * t1)};
}

VeroneseForms veronese(const SectionPair& sections) {
  if (sections.s1.is_zero() && sections.s2.is_zero()) {
    throw Error("both s-sections vanish identically");
  }
  if (sections.t1.is_zero() && sections.t2.is_zero()) {
    throw Error("both t-sections vanish identically");
  }
  return VeroneseForms(sections);
}

bool holomorphy_test(const ComplexMat& M, const real_t& tol, real_t* max_entry) {
  const ComplexMat mtm = M.transposed() * M;
  const real_t worst = max_abs(mtm);
  if (max_entry) *max_entry = worst;
  return worst <= tol;
}

}  // namespace minsurf
