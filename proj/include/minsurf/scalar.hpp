#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/math/constants/constants.hpp>

#include <array>
#include <string>

namespace minsurf {

// Working scalars: 50 significant decimal digits throughout the numeric
// layer. Exact integer/rational types back the lattice arithmetic.
using real_t = boost::multiprecision::cpp_bin_float_50;
using complex_t = boost::multiprecision::cpp_complex_50;
using bigint_t = boost::multiprecision::cpp_int;
using bigrat_t = boost::multiprecision::cpp_rational;

inline const real_t& pi() {
  static const real_t v = boost::math::constants::pi<real_t>();
  return v;
}

inline const real_t& sqrt3() {
  static const real_t v = sqrt(real_t(3));
  return v;
}

inline real_t cabs(const complex_t& z) { return abs(z); }

inline real_t carg(const complex_t& z) { return atan2(z.imag(), z.real()); }

inline complex_t expi(const real_t& t) { return complex_t(cos(t), sin(t)); }

// omega^k for omega = e^{2 pi i / 3}, k normalized mod 3.
inline complex_t unit_root3(int k) {
  static const complex_t table[3] = {
      complex_t(1, 0),
      complex_t(real_t(-1) / 2, sqrt3() / 2),
      complex_t(real_t(-1) / 2, -sqrt3() / 2),
  };
  return table[((k % 3) + 3) % 3];
}

// The three cube roots of v, ordered starting from the principal one.
inline std::array<complex_t, 3> cube_roots(const complex_t& v) {
  const real_t r = cbrt(cabs(v));
  const real_t ph = carg(v) / 3;
  std::array<complex_t, 3> out;
  for (int k = 0; k < 3; ++k) {
    out[k] = r * expi(ph + 2 * pi() * k / 3);
  }
  return out;
}

inline complex_t nearest_cube_root(const complex_t& v, const complex_t& target) {
  const auto roots = cube_roots(v);
  complex_t best = roots[0];
  real_t best_d = cabs(roots[0] - target);
  for (int k = 1; k < 3; ++k) {
    const real_t d = cabs(roots[k] - target);
    if (d < best_d) {
      best_d = d;
      best = roots[k];
    }
  }
  return best;
}

inline real_t nearest_integer(const real_t& x) { return round(x); }

// Distance from x to the nearest integer.
inline real_t integer_distance(const real_t& x) { return abs(x - round(x)); }

// e^{i d} - 1 without cancellation for small d.
inline complex_t expi_minus_one(const real_t& d) {
  const real_t s = sin(d / 2);
  return complex_t(-2 * s * s, sin(d));
}

inline std::string to_string(const real_t& x, unsigned digits = 40) {
  return x.str(digits);
}

}  // namespace minsurf
