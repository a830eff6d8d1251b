#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "combsyz/catalog.hpp"
#include "combsyz/fourier_motzkin.hpp"
#include "combsyz/instance_io.hpp"
#include "combsyz/polarization.hpp"
#include "combsyz/rational.hpp"

#include "json.hpp"

namespace combsyz {

struct TheoremHypotheses {
  Rat degree_ratio;            // d / (l-r)
  std::int64_t threshold = 0;  // n - 1
  bool kernels_nonzero = false;

  bool satisfied() const { return kernels_nonzero && degree_ratio > threshold; }
};

// Outcome of the full feasibility question "is there any polarization under
// which no catalog entry destabilizes M".  Infeasible means strongly
// unstable (every catalog entry is a genuine subsheaf); feasible only means
// the catalog does not rule the witness out.
struct InstabilityReport {
  enum class Verdict { StronglyUnstable, NotDisprovedByCatalog };
  Verdict verdict = Verdict::NotDisprovedByCatalog;
  FeasibilityResult feasibility;
  TheoremHypotheses hypotheses;
  std::vector<LinearConstraint> system;
};

// Builds the constraint system, decides it, and evaluates the hypothesis
// flags.  When the hypotheses hold (all kernels nonzero and
// d/(l-r) > n-1) the verdict must come out StronglyUnstable; a feasible
// result in that regime throws std::logic_error.
InstabilityReport strong_instability_report(const CombCurve& curve,
                                            const GeneratedPairData& pair);

struct RestrictionRow {
  int component = 0;  // 0-based
  std::int64_t kernel_rank = 0;
  std::int64_t degree = 0;
  RestrictionVerdict verdict = RestrictionVerdict::Inconclusive;
  std::optional<Destabilizer> witness;  // the destabilizing subsheaf, when Unstable
};

struct GridCheck {
  std::int64_t denominator = 0;
  bool found = false;
  std::optional<Polarization> witness;
  // False only in the impossible event that the grid finds a witness on an
  // instance decide() called infeasible.
  bool consistent_with_decide = true;
};

struct AnalyzeOptions {
  std::optional<std::int64_t> oracle_denominator;
  bool include_certificate = false;
};

struct Report {
  explicit Report(ParsedInstance inst) : instance(std::move(inst)) {}

  ParsedInstance instance;
  std::int64_t arithmetic_genus = 0;
  std::int64_t chi_structure = 0;
  std::int64_t chi_bundle = 0;
  std::int64_t chi_syzygy = 0;
  std::int64_t syzygy_rank = 0;
  bool chi_syzygy_negative = false;  // boundary warning when false
  Rat degree_ratio;
  std::int64_t threshold = 0;
  std::vector<std::int64_t> kernel_ranks;
  std::optional<bool> lemma_kernels_nonzero;
  std::vector<RestrictionRow> restrictions;
  std::vector<Destabilizer> catalog;
  InstabilityReport instability;
  std::optional<Verdict> witness_verdict;  // verdict_at the feasible witness
  std::optional<GridCheck> grid;
};

Report run_analyze(const ParsedInstance& instance, const AnalyzeOptions& options);

// Machine form carries every number the human table shows (and the raw
// constraint system besides); rationals are "p/q" strings, never floats.
nlohmann::json report_to_json(const Report& report);

void print_report_table(std::ostream& out, const Report& report,
                        bool include_certificate);

// "1*C1 + 1*C2 => 5 <= 4" style one-liner for an infeasibility certificate.
std::string certificate_summary(const std::vector<LinearConstraint>& system,
                                const std::vector<CertificateLine>& certificate);

}  // namespace combsyz
