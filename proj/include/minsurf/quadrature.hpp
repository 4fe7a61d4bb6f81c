#pragma once

#include <cstddef>

#include "minsurf/scalar.hpp"

namespace minsurf {

struct QuadratureOptions {
  real_t target_abs_error = real_t("1e-12");
  int min_level = 3;
  int max_level = 11;
};

template <class T>
struct QuadratureResult {
  T value{};
  real_t error_estimate{};
  int levels = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

namespace detail {
inline real_t magnitude(const real_t& v) { return abs(v); }
inline real_t magnitude(const complex_t& v) { return cabs(v); }
}  // namespace detail

// Tanh-sinh (double exponential) quadrature over [a, b]. The integrand is
// called as f(t, dist_a, dist_b) where dist_a = t - a and dist_b = b - t are
// supplied exactly; integrands with endpoint singularities of integrable
// type (|s|^alpha, alpha > -1) must evaluate through those distances, since
// the deepest nodes sit closer to the endpoints than eps * |a|.
//
// The reported error estimate is the last inter-level difference, which for
// double exponential convergence overestimates the remaining error once the
// asymptotic regime is reached.
template <class T, class F>
QuadratureResult<T> tanh_sinh(F&& f, const real_t& a, const real_t& b,
                              const QuadratureOptions& opts = {}) {
  QuadratureResult<T> res;
  const real_t half = (b - a) / 2;
  const real_t mid = (a + b) / 2;
  const real_t pi_half = pi() / 2;
  // Truncation threshold for individual weighted terms.
  const real_t term_floor = opts.target_abs_error / 1024;

  // One weighted evaluation at u (node of the transformed axis).
  // x = mid + half*tanh(v), v = (pi/2) sinh(u); weight = half*(pi/2)cosh(u)/cosh(v)^2.
  const auto eval_at = [&](const real_t& u) -> T {
    const real_t v = pi_half * sinh(u);
    const real_t av = abs(v);
    const real_t e2 = exp(-2 * av);           // e^{-2|v|} in (0, 1]
    const real_t denom = 1 + e2;
    const real_t near_dist = half * 2 * e2 / denom;  // distance to nearest endpoint
    const real_t far_dist = half * 2 / denom;        // distance to far endpoint
    real_t dist_a, dist_b, x;
    if (v >= 0) {
      dist_b = near_dist;
      dist_a = far_dist;
      x = b - near_dist;
    } else {
      dist_a = near_dist;
      dist_b = far_dist;
      x = a + near_dist;
    }
    // sech(v)^2 = 4 e^{-2|v|} / (1 + e^{-2|v|})^2
    const real_t sech2 = 4 * e2 / (denom * denom);
    const real_t weight = half * pi_half * cosh(u) * sech2;
    ++res.evaluations;
    return weight * f(x, dist_a, dist_b);
  };

  T total{};          // running sum of weighted terms at spacing h
  T prev_integral{};  // h * total from the previous level
  bool have_prev = false;

  for (int level = 0; level <= opts.max_level; ++level) {
    const real_t h = ldexp(real_t(1), -level);  // 2^-level
    if (level == 0) {
      total = eval_at(real_t(0));
      // k = 1, 2, ... both signs
      for (int k = 1;; ++k) {
        const real_t u = h * k;
        const T tp = eval_at(u);
        const T tm = eval_at(-u);
        total += tp + tm;
        const real_t m = detail::magnitude(tp) + detail::magnitude(tm);
        if (k >= 3 && m < term_floor) break;
        if (k > 400) break;  // defensive; double-exponential decay hits term_floor long before
      }
    } else {
      // refine: add odd multiples of h
      T add{};
      for (int k = 1;; k += 2) {
        const real_t u = h * k;
        const T tp = eval_at(u);
        const T tm = eval_at(-u);
        add += tp + tm;
        const real_t m = detail::magnitude(tp) + detail::magnitude(tm);
        if (k >= 5 && m < term_floor) break;
        if (k > 1600 << level) break;  // defensive
      }
      total += add;
    }
    const T integral = h * total;
    res.levels = level;
    if (have_prev) {
      res.error_estimate = detail::magnitude(integral - prev_integral);
      if (level >= opts.min_level && res.error_estimate <= opts.target_abs_error) {
        res.value = integral;
        res.converged = true;
        return res;
      }
    }
    prev_integral = integral;
    have_prev = true;
  }
  res.value = prev_integral;
  res.converged = false;
  return res;
}

}  // namespace minsurf
