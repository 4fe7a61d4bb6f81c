#include "minsurf/moduli.hpp"

#include <sstream>

#include "minsurf/errors.hpp"

namespace minsurf {

long brill_noether(long g, long r, long d) {
  if (r < d - g) {
    std::ostringstream os;
    os << "Brill-Noether number needs r >= d - g (got r=" << r << ", d-g=" << d - g << ")";
    throw RangeViolation(os.str());
  }
  return g - (r + 1) * (g - d + r);
}

namespace {

void require(bool ok, const std::string& constraint) {
  if (!ok) throw RangeViolation("constraint violated: " + constraint);
}

}  // namespace

long gonal_locus_dimension(ComponentKind kind, long g, long d) {
  switch (kind) {
    case ComponentKind::trigonal:
      require(g >= 4, "trigonal requires g >= 4");
      return 2 * g + 1;
    case ComponentKind::d_gonal:
      require(d >= 2, "d-gonal requires d >= 2");
      require(g > 2 * (d - 1), "d-gonal requires g > 2(d-1)");
      return 2 * d + 2 * g - 5;
    case ComponentKind::hyperelliptic:
      require(g >= 2, "hyperelliptic requires g >= 2");
      return 2 * g - 1;
    case ComponentKind::holomorphic:
      break;
  }
  throw RangeViolation("no locus dimension for the holomorphic component");
}

DimensionReport component_dimension(const ComponentSpec& spec) {
  DimensionReport rep;
  require(spec.g >= 2, "genus must be at least 2");
  std::ostringstream trace;

  switch (spec.kind) {
    case ComponentKind::holomorphic: {
      rep.total = 5 * spec.g - 2;
      trace << "5*" << spec.g << " - 2 = " << rep.total;
      rep.formula_trace = trace.str();
      return rep;
    }
    case ComponentKind::hyperelliptic: {
      require(spec.r >= 0 && 2 * spec.r <= spec.g - 1, "hyperelliptic requires 0 <= 2r <= g-1");
      rep.locus_dim = gonal_locus_dimension(spec.kind, spec.g);
      // deg L = 2r, h0(L) = r + 1, h0(K - L) = g - deg L + h0(L) - 1
      rep.h0_L = spec.r + 1;
      rep.h0_K_minus_L = spec.g - 2 * spec.r + rep.h0_L - 1;
      break;
    }
    case ComponentKind::trigonal: {
      require(spec.g >= 4, "trigonal requires g >= 4");
      rep.locus_dim = gonal_locus_dimension(spec.kind, spec.g);
      // deg L = 3, h0(L) = 2
      rep.h0_L = 2;
      rep.h0_K_minus_L = spec.g - 3 + rep.h0_L - 1;
      if (spec.g == 4) rep.w13_points = "unknown";  // one or two pencils; not decided here
      break;
    }
    case ComponentKind::d_gonal: {
      rep.locus_dim = gonal_locus_dimension(spec.kind, spec.g, spec.d);
      // deg L = d, h0(L) = 2
      rep.h0_L = 2;
      rep.h0_K_minus_L = spec.g - spec.d + rep.h0_L - 1;
      break;
    }
  }

  rep.bundle_choice_dim = 0;  // the pencil is rigid in every case counted here
  rep.section_terms = 2 * rep.h0_L + 2 * rep.h0_K_minus_L - 1;
  rep.total = rep.locus_dim + rep.bundle_choice_dim + rep.section_terms;
  trace << rep.locus_dim << " + " << rep.bundle_choice_dim << " + 2*" << rep.h0_L << " + 2*"
        << rep.h0_K_minus_L << " - 1 = " << rep.total;
  rep.formula_trace = trace.str();
  return rep;
}

std::string kind_name(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::holomorphic:
      return "holomorphic";
    case ComponentKind::hyperelliptic:
      return "hyperelliptic";
    case ComponentKind::trigonal:
      return "trigonal";
    case ComponentKind::d_gonal:
      return "d_gonal";
  }
  return "?";
}

ComponentKind parse_kind(const std::string& name) {
  if (name == "holomorphic") return ComponentKind::holomorphic;
  if (name == "hyperelliptic") return ComponentKind::hyperelliptic;
  if (name == "trigonal") return ComponentKind::trigonal;
  if (name == "d_gonal" || name == "d-gonal") return ComponentKind::d_gonal;
  throw ConfigError("unknown component kind: " + name);
}

}  // namespace minsurf
