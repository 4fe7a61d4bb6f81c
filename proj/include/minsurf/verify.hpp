#pragma once

#include "minsurf/config.hpp"
#include "minsurf/periods.hpp"
#include "minsurf/report.hpp"

namespace minsurf {

// Runs the whole battery against the builtin example (or the config's
// overrides): curve checks, reference constants, both period patterns, the
// integer factorizations, associate-family linearity, the coprime-angle
// sweep, the cube-symmetry refutation, the holomorphy test and the moduli
// dimension table. Check failures are recorded in the report; only
// infrastructure errors throw.
VerificationReport run_paper_verification(const RunConfig& cfg, Exec exec = Exec::parallel);

}  // namespace minsurf
