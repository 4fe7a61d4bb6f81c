#pragma once

#include <vector>

#include "minsurf/scalar.hpp"

namespace minsurf {

// Univariate polynomial with complex coefficients, c[0] + c[1] z + ...
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<complex_t> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const complex_t& v) { return Poly({v}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
  bool is_zero() const { return c_.empty(); }
  const std::vector<complex_t>& coeffs() const { return c_; }

  complex_t coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : complex_t(0);
  }

  complex_t eval(const complex_t& z) const {
    complex_t acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<complex_t> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = real_t(static_cast<int>(k)) * c_[k];
    return Poly(std::move(d));
  }

  Poly scaled(const complex_t& s) const {
    std::vector<complex_t> d(c_);
    for (auto& x : d) x = s * x;
    return Poly(std::move(d));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<complex_t> d(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(d));
  }

 private:
  void trim() {
    while (!c_.empty() && cabs(c_.back()) == 0) c_.pop_back();
  }
  std::vector<complex_t> c_;
};

// All complex roots (with multiplicity) by Durand-Kerner; degrees 1 and 2 are
// solved in closed form.
std::vector<complex_t> poly_roots(const Poly& p);

}  // namespace minsurf
