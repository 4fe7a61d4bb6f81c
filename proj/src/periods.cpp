#include "minsurf/periods.hpp"

#include <sstream>

#include "minsurf/branch.hpp"
#include "minsurf/quadrature.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace minsurf {

namespace {

// Integral over one seeded segment (without the multiplier factor).
// Endpoint singularities are of type s^{-2/3}; nodes close to a branch-point
// endpoint are evaluated through the shifted form of p so the integrand keeps
// full relative accuracy at distances below eps * |t|.
QuadratureResult<complex_t> segment_integral(const Differential& diff, const BranchLift& lift,
                                             const real_t& target) {
  const Arc& arc = lift.arc();
  const real_t margin = lift.end_margin();
  const auto integrand = [&](const real_t& t, const real_t& dist_a,
                             const real_t& dist_b) -> complex_t {
    complex_t z, w;
    if (lift.end_is_branch_point(0) && dist_a < margin) {
      z = arc.z(arc.t0()) + arc.z_delta(arc.t0(), dist_a);
      w = lift.w_near_end(0, dist_a);
    } else if (lift.end_is_branch_point(1) && dist_b < margin) {
      z = arc.z(arc.t1()) + arc.z_delta(arc.t1(), -dist_b);
      w = lift.w_near_end(1, dist_b);
    } else {
      z = arc.z(t);
      w = lift.w_at(t);
    }
    return eval_density(diff, z, w) * arc.dzdt(t);
  };
  QuadratureOptions opts;
  opts.target_abs_error = target;
  return tanh_sinh<complex_t>(integrand, arc.t0(), arc.t1(), opts);
}

}  // namespace

complex_t integrate_along(const TrigonalCurve& curve, const Differential& diff,
                          const Cycle& cycle, const real_t& precision) {
  if (cycle.segments.empty()) throw Error("cycle has no segments");
  if (diff.numerator.is_zero()) return complex_t(0);
  const real_t per_segment = precision / static_cast<int>(cycle.segments.size());
  complex_t total(0);
  for (const auto& seg : cycle.segments) {
    BranchLift lift(curve, seg.arc, seg.seed_t, seg.seed_w);
    const auto r = segment_integral(diff, lift, per_segment);
    if (!r.converged) {
      std::ostringstream os;
      os << "segment integral of " << diff.label << " over " << cycle.name
         << " stalled at estimate " << r.error_estimate << " (target " << per_segment << ")";
      throw PrecisionNotReached(os.str());
    }
    // the multiplier scales the seeded branch: density picks up mult^{-w_power}
    total += seg.multiplier.power(diff.w_power).inverse().value() * r.value;
  }
  return total;
}

PeriodMatrix period_matrix(const TrigonalCurve& curve, const std::vector<Differential>& diffs,
                           const std::vector<Cycle>& cycles, const real_t& precision,
                           Exec exec) {
  if (diffs.empty()) throw Error("period matrix needs at least one differential");
  if (cycles.empty()) throw Error("period matrix needs at least one cycle");
  const int n = static_cast<int>(diffs.size());
  const int w = static_cast<int>(cycles.size());

  PeriodMatrix pm;
  pm.entries = RealMat(n, w);
  pm.complex_entries = ComplexMat(n, w);
  for (const auto& d : diffs) pm.row_labels.push_back(d.label);
  for (const auto& c : cycles) pm.col_labels.push_back(c.name);

  const int total = n * w;
  bool failed = false;
  std::string first_error;

#ifdef _OPENMP
  const bool parallel = (exec == Exec::parallel);
#pragma omp parallel for schedule(dynamic) if (parallel)
#else
  (void)exec;
#endif
  for (int idx = 0; idx < total; ++idx) {
    const int i = idx / w;
    const int j = idx % w;
    try {
      pm.complex_entries(i, j) = integrate_along(curve, diffs[i], cycles[j], precision);
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
  if (failed) throw PrecisionNotReached(first_error);

  pm.entries = real_part(pm.complex_entries);
  return pm;
}

namespace {

real_t one_third() { return real_t(1) / 3; }

template <class F>
real_t constant_integral(F&& f, const real_t& a, const real_t& b, const real_t& target,
                         real_t* err, const char* name) {
  QuadratureOptions opts;
  opts.target_abs_error = target;
  const auto r = tanh_sinh<real_t>(f, a, b, opts);
  if (!r.converged) {
    std::ostringstream os;
    os << "reference constant " << name << " stalled at estimate " << r.error_estimate;
    throw PrecisionNotReached(os.str());
  }
  if (err) *err = r.error_estimate;
  return r.value;
}

}  // namespace

ReferenceConstants reference_constants(const real_t& precision) {
  if (precision < real_t("1e-40")) {
    throw PrecisionNotReached("requested precision exceeds the working precision budget");
  }
  ReferenceConstants rc;
  rc.precision = precision;
  const real_t third = one_third();
  const real_t s3 = sqrt3();

  // integral over [1, 2] of ((t^2-1)^2 (4-t^2))^( -1/3 )
  rc.a = constant_integral(
      [&](const real_t& t, const real_t& sa, const real_t& sb) {
        return pow(sa * (t + 1), -2 * third) * pow(sb * (2 + t), -third);
      },
      real_t(1), real_t(2), precision, &rc.err_a, "A");

  // integral over [0, sqrt3] of 2^{1/3} (t^2 (3-t^2)^2)^(-1/3) / sqrt(1+t^2)
  const real_t two_third_pow = cbrt(real_t(2));
  rc.b = constant_integral(
      [&](const real_t& t, const real_t& sa, const real_t& sb) {
        return two_third_pow * pow(sa, -2 * third) * pow(sb * (s3 + t), -2 * third) /
               sqrt(1 + t * t);
      },
      real_t(0), s3, precision, &rc.err_b, "B");

  // integral over [0, sqrt3] of 2 (t^2 (3-t^2)^2)^(-1/3) / sqrt(4-t^2)
  rc.c = constant_integral(
      [&](const real_t& t, const real_t& sa, const real_t& sb) {
        return 2 * pow(sa, -2 * third) * pow(sb * (s3 + t), -2 * third) / sqrt(4 - t * t);
      },
      real_t(0), s3, precision, &rc.err_c, "C");

  return rc;
}

}  // namespace minsurf
