#pragma once

#include <string>
#include <utility>

#include "minsurf/mat.hpp"

namespace minsurf {

// Full-rank lattice in R^n given by a basis matrix (columns are the basis
// vectors).
struct LatticeBasis {
  RealMat columns;  // n x n
  std::string provenance;

  int dimension() const { return columns.rows(); }
};

// Throws SingularBasis if the columns are dependent beyond a crude
// condition-number bound of 1e10.
LatticeBasis make_lattice_basis(RealMat columns, std::string provenance);

// Certifies that the columns of U are vectors of the lattice spanned by V:
// ||U G1 - V|| and ||V G2 - U|| both within tol, max-norm scaled by the
// largest entry of the respective target.
bool verify_factorization(const RealMat& U, const IntMat& G1, const IntMat& G2,
                          const LatticeBasis& V, const real_t& tol,
                          real_t* max_residual = nullptr);

// 2g - r where r is the number of independent integer relations among the
// columns of P with height <= max_height and residual <= tol * max|P|.
// Heuristic by nature: a clean answer of n certifies nothing beyond the
// failure to find further relations; certified statements come from explicit
// integer factorizations.
int rational_rank(const RealMat& P, const real_t& tol, const bigint_t& max_height);

// Bezout pair with n x + m y = 1; the representative with minimal |y|
// (ties broken toward y > 0). Throws NotCoprime.
std::pair<bigint_t, bigint_t> extended_gcd(const bigint_t& n, const bigint_t& m);

// Necessary lattice condition for R to be the linear part of a space-group
// symmetry: V^-1 R V integral to int_tol (per entry). Reports the largest
// distance from an integer if requested.
bool lattice_invariant_under(const LatticeBasis& V, const RatMat& R,
                             real_t* max_int_distance = nullptr);

inline const real_t& lattice_integrality_tol() {
  static const real_t v("1e-8");
  return v;
}

}  // namespace minsurf
