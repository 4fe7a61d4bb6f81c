#include "minsurf/poly.hpp"

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

std::vector<complex_t> roots_closed_form(const Poly& p) {
  const int deg = p.degree();
  if (deg == 1) {
    return {-p.coeff(0) / p.coeff(1)};
  }
  // quadratic: numerically stable pairing via the larger root
  const complex_t a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
  const complex_t disc = sqrt(b * b - 4 * a * c);
  const complex_t q = cabs(b + disc) >= cabs(b - disc) ? -(b + disc) / 2 : -(b - disc) / 2;
  if (cabs(q) == 0) return {complex_t(0), complex_t(0)};
  return {q / a, c / q};
}

}  // namespace

std::vector<complex_t> poly_roots(const Poly& p) {
  const int deg = p.degree();
  if (deg <= 0) return {};
  if (deg <= 2) return roots_closed_form(p);

  // Durand-Kerner from staggered points on a circle enclosing all roots.
  const complex_t lead = p.coeff(deg);
  real_t radius = 0;
  for (int k = 0; k < deg; ++k) radius = std::max(radius, cabs(p.coeff(k) / lead));
  radius += 1;

  std::vector<complex_t> x(deg);
  for (int i = 0; i < deg; ++i) {
    const real_t ang = (2 * pi() * i) / deg + real_t(1) / 2;  // avoid symmetry lock
    x[i] = radius * expi(ang);
  }
  const real_t tol = real_t("1e-40") * std::max(real_t(1), radius);
  for (int iter = 0; iter < 400; ++iter) {
    real_t moved = 0;
    for (int i = 0; i < deg; ++i) {
      complex_t denom = lead;
      for (int j = 0; j < deg; ++j) {
        if (j != i) denom *= (x[i] - x[j]);
      }
      if (cabs(denom) == 0) continue;
      const complex_t delta = p.eval(x[i]) / denom;
      x[i] -= delta;
      moved = std::max(moved, cabs(delta));
    }
    if (moved < tol) break;
  }
  return x;
}

}  // namespace minsurf
