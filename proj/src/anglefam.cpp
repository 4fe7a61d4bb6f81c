#include "minsurf/anglefam.hpp"

#include <sstream>

#include "minsurf/builtin.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace minsurf {

namespace {

bigint_t gcd_abs(bigint_t a, bigint_t b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    const bigint_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

PropertyPCertificate property_p_certificate(const bigint_t& n, const bigint_t& m) {
  if (n == 0) throw DegenerateAngle("n = 0 leaves the angle equation without a solution");
  if (gcd_abs(n, m) != 1) throw NotCoprime("(n, m) must be coprime");
  if (2 * m == n) {
    throw DegenerateAngle("2m = n is the conjugate surface (theta = pi/2), certified separately");
  }

  PropertyPCertificate cert;
  cert.family.n = n;
  cert.family.m = m;
  // tan(theta) = sqrt3 * n / (2m - n)
  cert.family.theta = atan2(sqrt3() * real_t(n), real_t(2 * m - n));
  const auto [x, y] = extended_gcd(n, m);
  cert.family.x = x;
  cert.family.y = y;

  const bigint_t z = 0, one = 1;
  const bigint_t mn = m - n, xy = -x - y;
  cert.f1 = IntMat(8, 8,
                   {-x, z, z, z, m, one, -one, z,     //
                    y, z, z, z, n, one, z, z,         //
                    z, z, z, z, z, one, z, z,         //
                    z, z, z, z, z, z, one, z,         //
                    z, -x, z, z, z, z, -one, m,       //
                    -x, xy, one, z, m, one, -one, mn, //
                    y, xy, z, one, n, one, -one, mn,  //
                    z, -y, z, z, z, one, z, -n});
  cert.f2 = IntMat(8, 8,
                   {-n, m, n - m, -n, z, z, z, z,  //
                    z, z, m, -n, -n, z, z, -m,     //
                    -one, z, one, -one, -one, one, z, -one,  //
                    z, -one, one, z, -one, z, one, -one,     //
                    z, z, x, y, y, z, z, -x,       //
                    z, z, one, z, z, z, z, z,      //
                    z, z, z, one, z, z, z, z,      //
                    y, x, xy, y, z, z, z, z});
  return cert;
}

RealMat associate_period_matrix(const RealMat& om, const RealMat& om_prime,
                                const real_t& theta) {
  return cos(theta) * om + sin(theta) * om_prime;
}

RealMat associate_target_matrix(const bigint_t& n, const bigint_t& m, const real_t& theta,
                                const real_t& A, const real_t& B, const real_t& C) {
  const real_t st = sin(theta), ct = cos(theta);
  const real_t rn = real_t(n), rm = real_t(m);
  RealMat t(3, 8);
  t(0, 0) = 2 * sqrt3() * st * A / rn;
  t(0, 2) = -sqrt3() * st * A;
  t(0, 3) = rm / rn * sqrt3() * st * A;
  t(1, 1) = 2 * sqrt3() * st * B / rn;
  t(1, 2) = -sqrt3() * st * B;
  t(1, 3) = -rm / rn * sqrt3() * st * B;
  t(2, 2) = sqrt3() * ct * C;
  t(2, 3) = (-sqrt3() / 2 * ct + real_t(3) / 2 * st) * C;
  return t;
}

PropertyPReport verify_property_p(const PeriodMatrix& om, const PeriodMatrix& om_prime,
                                  const bigint_t& n, const bigint_t& m, const real_t& tol,
                                  const bigint_t& max_height) {
  if (om.entries.rows() != 3 || om.entries.cols() != 8 || om_prime.entries.rows() != 3 ||
      om_prime.entries.cols() != 8) {
    throw DimensionMismatch("property check expects 3x8 period matrices");
  }
  const auto cert = property_p_certificate(n, m);
  const real_t theta = cert.family.theta;

  // pattern positions pin the constants: Om(1,2) = 3A/2, Om(2,2) = 3B/2,
  // Om'(3,2) = -3C/2
  const real_t A = 2 * om.entries(0, 1) / 3;
  const real_t B = 2 * om.entries(1, 1) / 3;
  const real_t C = -2 * om_prime.entries(2, 1) / 3;

  const RealMat om_theta = associate_period_matrix(om.entries, om_prime.entries, theta);
  const RealMat target = associate_target_matrix(n, m, theta, A, B, C);

  PropertyPReport rep;
  rep.family = cert.family;
  const real_t scale_t = std::max(real_t(1), max_abs(target));
  const real_t scale_o = std::max(real_t(1), max_abs(om_theta));
  rep.resid_f1 = max_abs(om_theta * to_real(cert.f1) - target) / scale_t;
  rep.resid_f2 = max_abs(target * to_real(cert.f2) - om_theta) / scale_o;

  // closed form of entry (3,4) after substituting the angle equation
  const real_t entry34 = real_t(2 * n - m) / real_t(2 * m - n) * sqrt3() * cos(theta) * C;
  rep.resid_entry34 = abs(target(2, 3) - entry34) / scale_t;

  rep.identities_pass =
      rep.resid_f1 <= tol && rep.resid_f2 <= tol && rep.resid_entry34 <= tol;
  rep.rank = rational_rank(om_theta, tol, max_height);
  rep.rank_pass = (rep.rank == 3);
  return rep;
}

std::vector<PropertyPReport> property_p_sweep(const PeriodMatrix& om,
                                              const PeriodMatrix& om_prime, int n_max,
                                              int m_max, const real_t& tol,
                                              const bigint_t& max_height, Exec exec) {
  std::vector<std::pair<int, int>> pairs;
  for (int n = 1; n <= n_max; ++n) {
    for (int m = -m_max; m <= m_max; ++m) {
      if (2 * m == n) continue;
      if (gcd_abs(n, m) != 1) continue;
      pairs.emplace_back(n, m);
    }
  }
  std::vector<PropertyPReport> out(pairs.size());

#ifdef _OPENMP
  const bool parallel = (exec == Exec::parallel);
#pragma omp parallel for schedule(dynamic) if (parallel)
#else
  (void)exec;
#endif
  for (long i = 0; i < static_cast<long>(pairs.size()); ++i) {
    out[i] = verify_property_p(om, om_prime, pairs[i].first, pairs[i].second, tol, max_height);
  }
  return out;
}

}  // namespace minsurf
