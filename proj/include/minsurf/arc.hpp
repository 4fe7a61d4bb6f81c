#pragma once

#include "minsurf/scalar.hpp"

namespace minsurf {

// Parametrized path in the z-plane: circular arc z = c + r e^{i d t} on
// [t0, t1], or straight segment z0 -> z1 on [0, 1].
class Arc {
 public:
  enum class Kind { circle, line };

  static Arc circle(const complex_t& center, const real_t& radius, int direction,
                    const real_t& t0, const real_t& t1) {
    Arc a;
    a.kind_ = Kind::circle;
    a.center_ = center;
    a.radius_ = radius;
    a.dir_ = direction;
    a.t0_ = t0;
    a.t1_ = t1;
    return a;
  }

  static Arc unit_circle(int direction, const real_t& t0, const real_t& t1) {
    return circle(complex_t(0), real_t(1), direction, t0, t1);
  }

  static Arc line(const complex_t& z0, const complex_t& z1) {
    Arc a;
    a.kind_ = Kind::line;
    a.center_ = z0;
    a.span_ = z1 - z0;
    a.t0_ = 0;
    a.t1_ = 1;
    return a;
  }

  Kind kind() const { return kind_; }
  const real_t& t0() const { return t0_; }
  const real_t& t1() const { return t1_; }
  real_t param_length() const { return t1_ - t0_; }
  int direction() const { return dir_; }
  const complex_t& center() const { return center_; }
  const real_t& radius() const { return radius_; }

  complex_t z(const real_t& t) const {
    if (kind_ == Kind::circle) return center_ + radius_ * expi(real_t(dir_) * t);
    return center_ + t * span_;
  }

  complex_t dzdt(const real_t& t) const {
    if (kind_ == Kind::circle)
      return complex_t(0, real_t(dir_)) * radius_ * expi(real_t(dir_) * t);
    return span_;
  }

  // z(t_ref + delta) - z(t_ref), stable for |delta| far below eps * |t_ref|.
  complex_t z_delta(const real_t& t_ref, const real_t& delta) const {
    if (kind_ == Kind::circle)
      return radius_ * expi(real_t(dir_) * t_ref) * expi_minus_one(real_t(dir_) * delta);
    return delta * span_;
  }

 private:
  Kind kind_ = Kind::line;
  complex_t center_;
  complex_t span_;
  real_t radius_ = 1;
  int dir_ = 1;
  real_t t0_ = 0;
  real_t t1_ = 1;
};

}  // namespace minsurf
