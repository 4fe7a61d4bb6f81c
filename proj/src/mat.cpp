#include "minsurf/mat.hpp"

#include <utility>

namespace minsurf {

RealMat inverse(const RealMat& m, const real_t& pivot_floor) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  const int n = m.rows();
  RealMat a = m;
  RealMat inv = RealMat::identity(n);
  const real_t scale = std::max(real_t(1), max_abs(m));
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (abs(a(r, col)) > abs(a(piv, col))) piv = r;
    if (abs(a(piv, col)) <= pivot_floor * scale)
      throw SingularBasis("matrix is singular to working tolerance");
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const real_t d = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const real_t f = a(r, col);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace minsurf
