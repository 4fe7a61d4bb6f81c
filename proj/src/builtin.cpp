#include "minsurf/builtin.hpp"

namespace minsurf::builtin {

TrigonalCurve curve() {
  std::vector<complex_t> roots;
  roots.reserve(6);
  for (int k = 0; k < 6; ++k) roots.push_back(expi(k * pi() / 3));
  return curve_from_roots(roots);
}

std::vector<Differential> phi() {
  const complex_t i(0, 1);
  return {
      {Poly({complex_t(1), complex_t(0), complex_t(-1)}), 2, "phi1"},  // (1 - z^2)/w^2
      {Poly({i, complex_t(0), i}), 2, "phi2"},                         // i (1 + z^2)/w^2
      {Poly({complex_t(0), complex_t(2)}), 2, "phi3"},                 // 2 z / w^2
  };
}

Differential dz_over_w() { return {Poly({complex_t(1)}), 1, "dz/w"}; }

std::vector<Differential> canonical_basis() {
  return {
      {Poly({complex_t(1)}), 2, "dz/w^2"},
      {Poly({complex_t(0), complex_t(1)}), 2, "z dz/w^2"},
      {Poly({complex_t(0), complex_t(0), complex_t(1)}), 2, "z^2 dz/w^2"},
      dz_over_w(),
  };
}

SurfacePoint basepoint() { return {complex_t(0), complex_t(-1)}; }

namespace {

// rational pattern matrices scaled per-row by the constant weights
RealMat pattern_scaled(const int num[3][8], const int den[3][8], const real_t w_row[3]) {
  RealMat m(3, 8);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 8; ++j) m(i, j) = w_row[i] * num[i][j] / den[i][j];
  return m;
}

}  // namespace

RealMat omega_pattern(const real_t& A, const real_t& B, const real_t& C) {
  static const int num[3][8] = {
      {0, 3, -3, 0, -3, 0, 3, -3},
      {0, 3, 3, 0, 3, 0, -3, -3},
      {-1, 1, 1, -1, -1, 1, -1, -1},
  };
  static const int den[3][8] = {
      {1, 2, 2, 1, 2, 1, 2, 2},
      {1, 2, 2, 1, 2, 1, 2, 2},
      {1, 2, 2, 1, 2, 1, 2, 2},
  };
  const real_t w_row[3] = {A, B, sqrt3() * C};
  return pattern_scaled(num, den, w_row);
}

RealMat omega_conj_pattern(const real_t& A, const real_t& B, const real_t& C) {
  static const int num[3][8] = {
      {-1, 1, 1, -1, 1, -1, 1, 1},
      {1, 1, -1, -1, -1, -1, -1, 1},
      {0, -3, 3, 0, -3, 0, 3, -3},
  };
  static const int den[3][8] = {
      {1, 2, 2, 1, 2, 1, 2, 2},
      {1, 2, 2, 1, 2, 1, 2, 2},
      {1, 2, 2, 1, 2, 1, 2, 2},
  };
  const real_t w_row[3] = {sqrt3() * A, sqrt3() * B, C};
  return pattern_scaled(num, den, w_row);
}

ComplexMat complex_period_pattern(const real_t& A, const real_t& B, const real_t& C) {
  const complex_t one(1), i(0, 1);
  const complex_t w1 = unit_root3(1), w2 = unit_root3(2);
  // building blocks appearing in the X|Y columns
  const complex_t p = -w2 + w1;   // i sqrt3
  const complex_t q = one - w1;   // 3/2 - i sqrt3/2
  const complex_t r = -one + w2;  // -3/2 - i sqrt3/2
  ComplexMat m(3, 8);
  const complex_t rowA[8] = {p, q, r, p, r, p, q, r};
  const complex_t rowB[8] = {-p, q, -r, p, -r, p, -q, r};
  const complex_t rowC[8] = {i * p, i * q, i * r, i * p, -i * r, -i * p, -i * q, -i * r};
  for (int j = 0; j < 8; ++j) {
    m(0, j) = rowA[j] * A;
    m(1, j) = rowB[j] * B;
    m(2, j) = rowC[j] * C;
  }
  return m;
}

LatticeBasis lambda_basis(const real_t& A, const real_t& B, const real_t& C) {
  RealMat m(3, 3);
  m(0, 0) = 3 * A;
  m(0, 2) = 3 * A / 2;
  m(1, 1) = 3 * B;
  m(1, 2) = 3 * B / 2;
  m(2, 2) = sqrt3() * C / 2;
  return make_lattice_basis(std::move(m), "lattice of the builtin immersion");
}

LatticeBasis lambda_conj_basis(const real_t& A, const real_t& B, const real_t& C) {
  RealMat m(3, 3);
  m(0, 0) = sqrt3() * A;
  m(0, 2) = sqrt3() * A / 2;
  m(1, 1) = sqrt3() * B;
  m(1, 2) = sqrt3() * B / 2;
  m(2, 2) = 3 * C / 2;
  return make_lattice_basis(std::move(m), "lattice of the conjugate immersion");
}

IntMat g1() {
  return IntMat(8, 3,
                {0, 0, 0,  //
                 1, 0, 1,  //
                 0, 0, 0,  //
                 0, 0, 0,  //
                 0, 1, 0,  //
                 0, 0, 0,  //
                 1, 0, 0,  //
                 0, -1, 0});
}

IntMat g2() {
  return IntMat(3, 8,
                {1, 0, -1, 1, 0, -1, 1, 0,  //
                 1, 0, 0, 1, 1, -1, 0, 0,   //
                 -2, 1, 1, -2, -1, 2, -1, -1});
}

IntMat g1_conj() {
  return IntMat(8, 3,
                {0, 1, 0,   //
                 1, 1, -1,  //
                 1, 1, 0,   //
                 0, 0, -1,  //
                 0, 0, 0,   //
                 0, 0, 0,   //
                 0, 0, 0,   //
                 0, 0, 0});
}

IntMat g2_conj() {
  return IntMat(3, 8,
                {-1, 1, 0, -1, 1, -1, 0, 1,   //
                 1, 1, -1, -1, 0, -1, -1, 1,  //
                 0, -1, 1, 0, -1, 0, 1, -1});
}

RatMat cyclic_rotation() {
  return RatMat(3, 3,
                {bigrat_t(0), bigrat_t(0), bigrat_t(1),  //
                 bigrat_t(1), bigrat_t(0), bigrat_t(0),  //
                 bigrat_t(0), bigrat_t(1), bigrat_t(0)});
}

RatMat diagonal_flip() {
  return RatMat(3, 3,
                {bigrat_t(1), bigrat_t(0), bigrat_t(0),   //
                 bigrat_t(0), bigrat_t(-1), bigrat_t(0),  //
                 bigrat_t(0), bigrat_t(0), bigrat_t(-1)});
}

RatMat minus_identity() {
  return RatMat(3, 3,
                {bigrat_t(-1), bigrat_t(0), bigrat_t(0),  //
                 bigrat_t(0), bigrat_t(-1), bigrat_t(0),  //
                 bigrat_t(0), bigrat_t(0), bigrat_t(-1)});
}

ComplexMat lift_matrix(const complex_t& b1, const complex_t& b2) {
  ComplexMat m(4, 4);
  m(0, 0) = complex_t(1);
  m(1, 1) = complex_t(1);
  m(2, 2) = b1;
  m(3, 2) = b2;
  return m;
}

}  // namespace minsurf::builtin
