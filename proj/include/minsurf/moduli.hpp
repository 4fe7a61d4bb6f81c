#pragma once

#include <string>

namespace minsurf {

enum class ComponentKind { holomorphic, hyperelliptic, trigonal, d_gonal };

// A component of the genus-g key space: kind plus the r (hyperelliptic) or
// d (d-gonal) parameter.
struct ComponentSpec {
  ComponentKind kind;
  long g = 0;
  long r = -1;
  long d = -1;
};

// g - (r+1)(g-d+r); requires r >= d - g.
long brill_noether(long g, long r, long d);

// trigonal: 2g+1; d-gonal: 2d+2g-5; hyperelliptic: 2g-1.
long gonal_locus_dimension(ComponentKind kind, long g, long d = -1);

struct DimensionReport {
  long locus_dim = 0;
  long bundle_choice_dim = 0;  // the unlabeled 0 summand: dimension of the series fiber
  long h0_L = 0;
  long h0_K_minus_L = 0;
  long section_terms = 0;  // 2 h0(L) + 2 h0(K-L) - 1
  long total = 0;
  std::string formula_trace;
  // Number of base-point-free pencils behind the genus-4 trigonal component:
  // one or two; undecidable from the invariants alone.
  std::string w13_points = "";
};

// Traced dimension count; every gonal/hyperelliptic kind sums to 4g,
// holomorphic is the quoted 5g-2 (no trace). Violated validity bounds raise
// RangeViolation naming the constraint.
DimensionReport component_dimension(const ComponentSpec& spec);

std::string kind_name(ComponentKind kind);
ComponentKind parse_kind(const std::string& name);

}  // namespace minsurf
