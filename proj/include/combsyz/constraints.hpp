#pragma once

#include <set>
#include <string>
#include <vector>

#include "combsyz/catalog.hpp"
#include "combsyz/curve.hpp"
#include "combsyz/rational.hpp"
#include "combsyz/sheaf.hpp"

namespace combsyz {

// Provenance atom for one source constraint: a catalog entry's slope
// inequality, or an open-simplex facet w_i > 0.
struct ConstraintTag {
  enum class Kind { Catalog, Positivity };
  Kind kind = Kind::Catalog;
  int component = 0;  // 0-based

  friend auto operator<=>(const ConstraintTag&, const ConstraintTag&) = default;

  std::string name() const;  // "C3" / "w3>0" (1-based display)
};

// One linear inequality  sum coeffs_i * w_i  (<= or <)  bound  over the
// polarization weights, with integer entries obtained by exact
// cross-multiplication.  The simplex equality sum w_i = 1 is implicit: the
// solver substitutes the base weight rather than carrying an equality row.
struct LinearConstraint {
  std::vector<Int> coeffs;
  Int bound;
  bool strict = false;
  std::set<ConstraintTag> provenance;
};

// The full feasibility system for "some polarization makes M catalog-
// semistable": per catalog entry on component i the cross-multiplied slope
// condition (-chi(M)) * w_i <= (l-r) * g_i  (base component bound
// (l-r)(g_n + n - 2)), kept with the common coefficient -chi(M) so the
// unit-multiplier summation certificate stays visible; plus the strict
// facets w_i > 0 for every component.
std::vector<LinearConstraint> build_constraint_system(
    const CombCurve& curve, const GeneratedPairData& pair,
    const std::vector<Destabilizer>& catalog);

// One line of an infeasibility certificate: a non-negative multiplier on the
// source constraint identified by its provenance set.
struct CertificateLine {
  std::set<ConstraintTag> provenance;
  Rat multiplier;
};

struct CertificateExpansion {
  std::vector<Rat> combined;    // w-space coefficients of the combination
  Rat bound;
  bool strict = false;
  bool coefficients_uniform = false;  // all combined coefficients equal
  // bound minus the common coefficient, i.e. the ground statement
  // "common <= bound" after substituting sum w_i = 1.
  Rat contradiction_gap;
  bool is_contradiction = false;
};

// Re-expands a certificate as the non-negative combination of its source
// constraints.  With the simplex equality it proves infeasibility exactly
// when the combined coefficients are uniform and the resulting ground
// statement is false (gap < 0, or gap <= 0 for a strict combination).
// Throws ValidationError for negative multipliers or unknown provenance.
CertificateExpansion expand_certificate(const std::vector<LinearConstraint>& system,
                                        const std::vector<CertificateLine>& certificate);

bool validate_certificate(const std::vector<LinearConstraint>& system,
                          const std::vector<CertificateLine>& certificate);

}  // namespace combsyz
