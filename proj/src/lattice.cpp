#include "minsurf/lattice.hpp"

#include "minsurf/lll.hpp"

namespace minsurf {

LatticeBasis make_lattice_basis(RealMat columns, std::string provenance) {
  if (columns.rows() != columns.cols()) {
    throw DimensionMismatch("lattice basis matrix must be square");
  }
  LatticeBasis b{std::move(columns), std::move(provenance)};
  // crude condition estimate: ||B||_max * ||B^-1||_max * n^2 < 1e10
  const RealMat inv = inverse(b.columns, real_t("1e-45"));  // throws SingularBasis if singular
  const real_t cond = max_abs(b.columns) * max_abs(inv) * b.columns.rows() * b.columns.rows();
  if (cond > real_t("1e10")) {
    throw SingularBasis("lattice basis condition number above 1e10");
  }
  return b;
}

bool verify_factorization(const RealMat& U, const IntMat& G1, const IntMat& G2,
                          const LatticeBasis& V, const real_t& tol, real_t* max_residual) {
  if (U.rows() != V.columns.rows() || U.cols() != G1.rows() || G1.cols() != V.columns.cols() ||
      G2.rows() != V.columns.cols() || G2.cols() != U.cols()) {
    throw DimensionMismatch("factorization shapes are inconsistent");
  }
  const RealMat lhs1 = U * to_real(G1) - V.columns;
  const RealMat lhs2 = V.columns * to_real(G2) - U;
  const real_t scale1 = std::max(real_t(1), max_abs(V.columns));
  const real_t scale2 = std::max(real_t(1), max_abs(U));
  const real_t r1 = max_abs(lhs1) / scale1;
  const real_t r2 = max_abs(lhs2) / scale2;
  const real_t worst = std::max(r1, r2);
  if (max_residual) *max_residual = worst;
  return worst <= tol;
}

int rational_rank(const RealMat& P, const real_t& tol, const bigint_t& max_height) {
  const auto relations = find_column_relations(P, tol, max_height);
  return P.cols() - static_cast<int>(relations.size());
}

std::pair<bigint_t, bigint_t> extended_gcd(const bigint_t& n, const bigint_t& m) {
  // iterative extended Euclid
  bigint_t old_r = n, r = m;
  bigint_t old_s = 1, s = 0;
  bigint_t old_t = 0, t = 1;
  while (r != 0) {
    const bigint_t q = old_r / r;
    bigint_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r == -1) {
    old_r = 1;
    old_s = -old_s;
    old_t = -old_t;
  }
  if (old_r != 1) throw NotCoprime("extended_gcd requires gcd(n, m) = 1");
  bigint_t x = old_s, y = old_t;
  // normalize to the minimal-|y| representative, ties toward y > 0;
  // the general solution is (x + m k, y - n k)
  if (n != 0) {
    const bigint_t an = abs(n);
    bigint_t k = y / n;  // bring y near 0
    y -= n * k;
    x += m * k;
    // y is now in (-|n|, |n|); check the neighbor on the other side
    for (const bigint_t cand_k : {bigint_t(1), bigint_t(-1)}) {
      const bigint_t y2 = y - n * cand_k;
      if (abs(y2) < abs(y) || (abs(y2) == abs(y) && y2 > y)) {
        y = y2;
        x += m * cand_k;
      }
    }
    (void)an;
  }
  return {x, y};
}

bool lattice_invariant_under(const LatticeBasis& V, const RatMat& R, real_t* max_int_distance) {
  if (R.rows() != V.dimension() || R.cols() != V.dimension()) {
    throw DimensionMismatch("symmetry candidate has wrong shape");
  }
  const RealMat inv = inverse(V.columns, real_t("1e-45"));
  const RealMat M = inv * (to_real(R) * V.columns);
  real_t worst = 0;
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) worst = std::max(worst, integer_distance(M(i, j)));
  if (max_int_distance) *max_int_distance = worst;
  return worst <= lattice_integrality_tol();
}

}  // namespace minsurf
