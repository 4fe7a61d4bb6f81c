#pragma once

#include <string>
#include <vector>

#include "minsurf/cycles.hpp"
#include "minsurf/mat.hpp"

namespace minsurf {

enum class Exec { serial, parallel };

// Real period matrix Re(integral) with the underlying complex periods kept
// alongside; rows are differentials, columns are cycles.
struct PeriodMatrix {
  RealMat entries;
  ComplexMat complex_entries;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
};

// Integral of the differential over the cycle to the given absolute error
// target. Each segment integrates the seeded branch with tanh-sinh
// quadrature and scales by multiplier^{-w_power}.
complex_t integrate_along(const TrigonalCurve& curve, const Differential& diff,
                          const Cycle& cycle, const real_t& precision);

PeriodMatrix period_matrix(const TrigonalCurve& curve,
                           const std::vector<Differential>& diffs,
                           const std::vector<Cycle>& cycles, const real_t& precision,
                           Exec exec = Exec::parallel);

struct ReferenceConstants {
  real_t a, b, c;
  real_t err_a, err_b, err_c;
  real_t precision;
};

// The three real 1-D integrals pinning the period entries; evaluated by
// tanh-sinh with endpoint factors in stable split form. Serves as the desk
// oracle that cycle integration is cross-checked against.
ReferenceConstants reference_constants(const real_t& precision);

inline const real_t& default_period_precision() {
  static const real_t v("1e-12");
  return v;
}

}  // namespace minsurf
