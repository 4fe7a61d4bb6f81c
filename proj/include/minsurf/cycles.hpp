#pragma once

#include <string>
#include <vector>

#include "minsurf/arc.hpp"
#include "minsurf/curve.hpp"

namespace minsurf {

// Cube root of unity kept symbolic (exponent mod 3) so branch multipliers
// never accumulate representation error.
struct RootOfUnity {
  int k = 0;  // omega^k

  complex_t value() const { return unit_root3(k); }
  RootOfUnity times(const RootOfUnity& o) const { return {(k + o.k) % 3}; }
  RootOfUnity inverse() const { return {(3 - k % 3) % 3}; }
  RootOfUnity power(int e) const { return {(((k * e) % 3) + 3) % 3}; }
  bool operator==(const RootOfUnity& o) const { return ((k - o.k) % 3 + 3) % 3 == 0; }

  std::string str() const { return k % 3 == 0 ? "1" : (k % 3 == 1 ? "w" : "w2"); }
  static RootOfUnity parse(const std::string& s);
};

// One branch-tracked piece of a 1-cycle: an arc, the seeded sheet on it, and
// the exact cube-root-of-unity factor multiplying the seeded branch.
struct CycleSegment {
  Arc arc;
  RootOfUnity multiplier;
  real_t seed_t;
  complex_t seed_w;
};

struct Cycle {
  std::string name;
  std::vector<CycleSegment> segments;
};

// The eight cycles A1..A4, B1..B4 on w^3 = z^6 - 1. A2 = phi(A1), A3 = psi(A1),
// A4 = psi(A2), B2 = phi(B1), B3 = psi(B1), B4 = psi(B2) by construction.
// Throws WrongCurve unless the roots are the 6th roots of unity.
std::vector<Cycle> builtin_cycles(const TrigonalCurve& curve);

// Image of a cycle under a deck transformation. psi multiplies every segment
// multiplier by omega; phi shifts circle arcs by the plane rotation z -> wz
// (the curve's root set must be invariant, or the result leaves the curve).
Cycle deck_transform(const TrigonalCurve& curve, const Cycle& c, Deck kind,
                     const std::string& new_name);

// Closed-loop invariant: consecutive segments chain up (z endpoints match to
// z_tol; w values, after multipliers, match to w_tol just inside the
// junction, where all sheets of a branch-point junction are nearly equal).
struct CycleValidation {
  bool closed = true;
  real_t max_z_gap = 0;
  real_t max_w_gap = 0;
};
CycleValidation validate_cycle(const TrigonalCurve& curve, const Cycle& c);
void require_closed(const TrigonalCurve& curve, const Cycle& c);

}  // namespace minsurf
