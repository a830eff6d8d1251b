#include "combsyz/constraints.hpp"

#include <string>

#include "combsyz/errors.hpp"

namespace combsyz {

std::string ConstraintTag::name() const {
  const std::string c = std::to_string(component + 1);
  return kind == Kind::Catalog ? "C" + c : "w" + c + ">0";
}

std::vector<LinearConstraint> build_constraint_system(
    const CombCurve& curve, const GeneratedPairData& pair,
    const std::vector<Destabilizer>& catalog) {
  const int n = curve.components();
  const std::size_t un = static_cast<std::size_t>(n);
  const MultiSheaf m = syzygy_multisheaf(curve, pair);
  const std::int64_t syzygy_rank = pair.syzygy_rank();

  std::vector<LinearConstraint> system;
  system.reserve(catalog.size() + un);

  for (const auto& entry : catalog) {
    const int i = entry.source_component;
    const std::int64_t t = entry.sheaf.multirank[static_cast<std::size_t>(i)];
    if (t <= 0) throw ValidationError("catalog entry with non-positive kernel rank");
    // mu_w(entry) <= mu_w(M):  chi_F/(t w_i) <= chi_M/(l-r).  Both
    // denominators are positive; cross-multiplying and cancelling t gives
    //   (-chi_M) * w_i <= (l-r) * (-chi_F / t)
    // with integer sides (chi_F is t times the per-unit twist chi).
    LinearConstraint row;
    row.coeffs.assign(un, 0);
    row.coeffs[static_cast<std::size_t>(i)] = Int(-m.chi);
    row.bound = Int(syzygy_rank) * Int(-entry.sheaf.chi / t);
    row.strict = false;
    row.provenance = {ConstraintTag{ConstraintTag::Kind::Catalog, i}};
    system.push_back(std::move(row));
  }

  for (int i = 0; i < n; ++i) {
    LinearConstraint row;
    row.coeffs.assign(un, 0);
    row.coeffs[static_cast<std::size_t>(i)] = -1;
    row.bound = 0;
    row.strict = true;  // open simplex: w_i > 0
    row.provenance = {ConstraintTag{ConstraintTag::Kind::Positivity, i}};
    system.push_back(std::move(row));
  }
  return system;
}

CertificateExpansion expand_certificate(const std::vector<LinearConstraint>& system,
                                        const std::vector<CertificateLine>& certificate) {
  if (system.empty()) throw ValidationError("certificate: empty constraint system");
  const std::size_t n = system.front().coeffs.size();

  CertificateExpansion out;
  out.combined.assign(n, Rat(0));
  out.bound = 0;

  for (const auto& line : certificate) {
    if (line.multiplier < 0) {
      throw ValidationError("certificate: negative multiplier " + rat_string(line.multiplier));
    }
    const LinearConstraint* source = nullptr;
    for (const auto& row : system) {
      if (row.provenance == line.provenance) {
        source = &row;
        break;
      }
    }
    if (source == nullptr) {
      throw ValidationError("certificate: no constraint with the given provenance");
    }
    if (line.multiplier == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      out.combined[j] += line.multiplier * source->coeffs[j];
    }
    out.bound += line.multiplier * source->bound;
    out.strict = out.strict || source->strict;
  }

  out.coefficients_uniform = true;
  for (std::size_t j = 1; j < n; ++j) {
    if (out.combined[j] != out.combined[0]) {
      out.coefficients_uniform = false;
      break;
    }
  }
  if (out.coefficients_uniform) {
    // Substituting sum w_i = 1 turns the combination into the ground
    // statement  combined[0] <= bound;  a contradiction is a false one.
    out.contradiction_gap = out.bound - out.combined[0];
    out.is_contradiction =
        out.strict ? out.contradiction_gap <= 0 : out.contradiction_gap < 0;
  }
  return out;
}

bool validate_certificate(const std::vector<LinearConstraint>& system,
                          const std::vector<CertificateLine>& certificate) {
  return expand_certificate(system, certificate).is_contradiction;
}

}  // namespace combsyz
