#pragma once

#include <optional>
#include <vector>

#include "combsyz/constraints.hpp"
#include "combsyz/polarization.hpp"

namespace combsyz {

struct FeasibilityResult {
  enum class Status { Feasible, Infeasible };
  Status status = Status::Feasible;
  std::optional<Polarization> witness;       // set when Feasible
  std::vector<CertificateLine> certificate;  // set when Infeasible
};

// Exact Fourier-Motzkin decision over the open simplex.  The base weight is
// substituted out via sum w_i = 1, variables are eliminated in descending
// index order, and strictness propagates through every combination.  Each
// derived row carries the multipliers of the source constraints it combines,
// so an infeasible outcome returns a ready-made Farkas certificate; a
// feasible outcome back-substitutes interval midpoints into an exact
// interior witness.
//
// The system must contain the positivity facets (build_constraint_system
// always emits them); the witness is validated as a polarization.
FeasibilityResult decide(const std::vector<LinearConstraint>& system);

}  // namespace combsyz
