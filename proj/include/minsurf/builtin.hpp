#pragma once

#include <vector>

#include "minsurf/curve.hpp"
#include "minsurf/lattice.hpp"
#include "minsurf/mat.hpp"

namespace minsurf::builtin {

// The worked example: w^3 = z^6 - 1 with the immersion triple
// Phi = ((1-z^2)/w^2, i(1+z^2)/w^2, 2z/w^2) dz and the fourth basis form dz/w.

TrigonalCurve curve();

std::vector<Differential> phi();              // 3 forms
std::vector<Differential> canonical_basis();  // dz/w^2, z dz/w^2, z^2 dz/w^2, dz/w
Differential dz_over_w();

SurfacePoint basepoint();  // (0, -1), the real sheet over z = 0

// Expected real period matrices as exact rational patterns scaled by the
// reference constants: row weights (A, B, sqrt3 C) for the Phi matrix and
// (sqrt3 A, sqrt3 B, C) for its conjugate.
RealMat omega_pattern(const real_t& A, const real_t& B, const real_t& C);
RealMat omega_conj_pattern(const real_t& A, const real_t& B, const real_t& C);

// Complex periods (the X|Y block matrix) built from symbolic cube roots.
ComplexMat complex_period_pattern(const real_t& A, const real_t& B, const real_t& C);

// Lattice bases certified by the integer factorizations.
LatticeBasis lambda_basis(const real_t& A, const real_t& B, const real_t& C);
LatticeBasis lambda_conj_basis(const real_t& A, const real_t& B, const real_t& C);

IntMat g1();       // 8x3,  Omega  g1  = Lambda
IntMat g2();       // 3x8,  Lambda g2  = Omega
IntMat g1_conj();  // 8x3,  Omega' g1' = Lambda'
IntMat g2_conj();  // 3x8,  Lambda' g2' = Omega'

// Cube symmetry candidates (linear parts) and the inversion.
RatMat cyclic_rotation();   // coordinate 3-cycle
RatMat diagonal_flip();     // diag(1, -1, -1)
RatMat minus_identity();

// The 4x4 immersion matrix of the 4-torus lift; (b1, b2) free.
ComplexMat lift_matrix(const complex_t& b1, const complex_t& b2);

}  // namespace minsurf::builtin
