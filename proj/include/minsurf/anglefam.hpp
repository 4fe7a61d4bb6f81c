#pragma once

#include <vector>

#include "minsurf/lattice.hpp"
#include "minsurf/periods.hpp"

namespace minsurf {

// Admissible associate-surface angle picked by a coprime pair (n, m) through
// 2 sqrt3 sin(t) m = (3 cos(t) + sqrt3 sin(t)) n, i.e. tan(t) = sqrt3/(2m/n - 1),
// together with a Bezout pair n x + m y = 1.
struct AngleFamily {
  bigint_t n, m;
  bigint_t x, y;
  real_t theta;
};

struct PropertyPCertificate {
  AngleFamily family;
  IntMat f1;  // 8x8
  IntMat f2;  // 8x8
};

// Assembles theta, (x, y) and the two integer matrices. Throws NotCoprime or
// DegenerateAngle (2m = n belongs to the conjugate surface, certified by the
// primed factorization instead).
PropertyPCertificate property_p_certificate(const bigint_t& n, const bigint_t& m);

// cos(theta) * Om + sin(theta) * OmPrime.
RealMat associate_period_matrix(const RealMat& om, const RealMat& om_prime, const real_t& theta);

// The 3x8 target with columns 5..8 zero, entries in multiples of
// sqrt3 sin(t) A / n, sqrt3 sin(t) B / n and sqrt3 cos(t) C.
RealMat associate_target_matrix(const bigint_t& n, const bigint_t& m, const real_t& theta,
                                const real_t& A, const real_t& B, const real_t& C);

struct PropertyPReport {
  AngleFamily family;
  bool identities_pass = false;
  bool rank_pass = false;
  real_t resid_f1 = 0;
  real_t resid_f2 = 0;
  real_t resid_entry34 = 0;
  int rank = 0;

  bool pass() const { return identities_pass && rank_pass; }
};

// Checks Om_theta F1 = Om'_theta, Om'_theta F2 = Om_theta (max-norm scaled
// by the target's largest entry), the closed form of entry (3,4), and
// rational_rank(Om_theta) = 3. A and B are read off the stored pattern
// entries of Om, C off OmPrime, so the inputs must be period matrices of the
// builtin example shape.
PropertyPReport verify_property_p(const PeriodMatrix& om, const PeriodMatrix& om_prime,
                                  const bigint_t& n, const bigint_t& m, const real_t& tol,
                                  const bigint_t& max_height);

// All coprime pairs 1 <= n <= n_max, |m| <= m_max, 2m != n.
std::vector<PropertyPReport> property_p_sweep(const PeriodMatrix& om,
                                              const PeriodMatrix& om_prime, int n_max,
                                              int m_max, const real_t& tol,
                                              const bigint_t& max_height,
                                              Exec exec = Exec::parallel);

}  // namespace minsurf
