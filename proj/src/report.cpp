#include "combsyz/report.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "combsyz/grid.hpp"

namespace combsyz {

namespace {

using nlohmann::json;

const char* verdict_name(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::UnstableAt: return "UnstableAt";
    case Verdict::Kind::CatalogSemistableAt: return "CatalogSemistableAt";
    case Verdict::Kind::CatalogStableAt: return "CatalogStableAt";
  }
  return "?";
}

const char* kind_name(DestabilizerKind kind) {
  switch (kind) {
    case DestabilizerKind::KernelTwistNonBase: return "KernelTwistNonBase";
    case DestabilizerKind::KernelTwistBase: return "KernelTwistBase";
    case DestabilizerKind::RestrictionKernel: return "RestrictionKernel";
  }
  return "?";
}

json weights_json(const Polarization& w) {
  json arr = json::array();
  for (const auto& x : w.weights()) arr.push_back(rat_string(x));
  return arr;
}

json constraint_json(const LinearConstraint& row) {
  json coeffs = json::array();
  for (const auto& c : row.coeffs) coeffs.push_back(int_string(c));
  json tags = json::array();
  for (const auto& tag : row.provenance) tags.push_back(tag.name());
  return json{{"coefficients", coeffs},
              {"bound", int_string(row.bound)},
              {"relation", row.strict ? "<" : "<="},
              {"provenance", tags}};
}

std::string constraint_text(const LinearConstraint& row) {
  std::string lhs;
  for (std::size_t j = 0; j < row.coeffs.size(); ++j) {
    if (row.coeffs[j] == 0) continue;
    if (!lhs.empty()) lhs += " + ";
    lhs += int_string(row.coeffs[j]) + "*w" + std::to_string(j + 1);
  }
  if (lhs.empty()) lhs = "0";
  return lhs + (row.strict ? " < " : " <= ") + int_string(row.bound);
}

}  // namespace

std::string certificate_summary(const std::vector<LinearConstraint>& system,
                                const std::vector<CertificateLine>& certificate) {
  const CertificateExpansion ex = expand_certificate(system, certificate);
  std::string combo;
  for (const auto& line : certificate) {
    if (!combo.empty()) combo += " + ";
    std::string tags;
    for (const auto& tag : line.provenance) {
      if (!tags.empty()) tags += ",";
      tags += tag.name();
    }
    combo += rat_string(line.multiplier) + "*" + tags;
  }
  if (!ex.coefficients_uniform) return combo + " => (not a uniform combination)";
  return combo + " => " + rat_string(ex.combined.empty() ? Rat(0) : ex.combined[0]) +
         (ex.strict ? " < " : " <= ") + rat_string(ex.bound);
}

InstabilityReport strong_instability_report(const CombCurve& curve,
                                            const GeneratedPairData& pair) {
  InstabilityReport report;
  const auto catalog = build_catalog(curve, pair);
  report.system = build_constraint_system(curve, pair, catalog);
  report.feasibility = decide(report.system);

  report.hypotheses.degree_ratio = make_rat(pair.total_degree(), pair.syzygy_rank());
  report.hypotheses.threshold = curve.components() - 1;
  report.hypotheses.kernels_nonzero = true;
  for (int i = 0; i < curve.components(); ++i) {
    if (kernel_rank(pair, i) == 0) report.hypotheses.kernels_nonzero = false;
  }

  const bool infeasible =
      report.feasibility.status == FeasibilityResult::Status::Infeasible;
  report.verdict = infeasible ? InstabilityReport::Verdict::StronglyUnstable
                              : InstabilityReport::Verdict::NotDisprovedByCatalog;
  if (report.hypotheses.satisfied() && !infeasible) {
    throw std::logic_error(
        "instability hypotheses hold but the constraint system is feasible");
  }
  return report;
}

Report run_analyze(const ParsedInstance& instance, const AnalyzeOptions& options) {
  const CombCurve& curve = instance.curve;
  const GeneratedPairData& pair = instance.pair;

  Report report(instance);
  report.arithmetic_genus = arithmetic_genus(curve);
  report.chi_structure = chi_structure_sheaf(curve);
  report.chi_bundle = chi_bundle(curve, pair);
  const MultiSheaf m = syzygy_multisheaf(curve, pair);
  report.chi_syzygy = m.chi;
  report.chi_syzygy_negative = m.chi < 0;
  report.syzygy_rank = pair.syzygy_rank();
  report.degree_ratio = make_rat(pair.total_degree(), pair.syzygy_rank());
  report.threshold = curve.components() - 1;

  for (int i = 0; i < curve.components(); ++i) {
    report.kernel_ranks.push_back(kernel_rank(pair, i));
    RestrictionRow row{i, kernel_rank(pair, i), pair.degree(i),
                       restriction_slope_check(curve, pair, i), std::nullopt};
    if (row.verdict == RestrictionVerdict::Unstable) {
      row.witness = restriction_kernel_witness(curve, pair, i);
    }
    report.restrictions.push_back(std::move(row));
  }
  if (instance.intersection_dims) {
    report.lemma_kernels_nonzero = lemma_kernels_nonzero(*instance.intersection_dims);
  }

  report.catalog = build_catalog(curve, pair);
  report.instability = strong_instability_report(curve, pair);

  if (report.instability.feasibility.status == FeasibilityResult::Status::Feasible) {
    report.witness_verdict = verdict_at(*report.instability.feasibility.witness, curve,
                                        pair, report.catalog);
  }

  if (options.oracle_denominator) {
    GridCheck check;
    check.denominator = *options.oracle_denominator;
    check.witness = grid_oracle(curve, pair, report.catalog, check.denominator);
    check.found = check.witness.has_value();
    check.consistent_with_decide =
        !(check.found &&
          report.instability.feasibility.status == FeasibilityResult::Status::Infeasible);
    report.grid = std::move(check);
  }
  return report;
}

json report_to_json(const Report& report) {
  json j;
  j["schema_version"] = 1;
  j["instance"] = emit_instance(report.instance);

  json invariants;
  invariants["n"] = report.instance.curve.components();
  invariants["arithmetic_genus"] = report.arithmetic_genus;
  invariants["chi_structure_sheaf"] = report.chi_structure;
  invariants["chi_bundle"] = report.chi_bundle;
  invariants["chi_syzygy"] = report.chi_syzygy;
  invariants["chi_syzygy_negative"] = report.chi_syzygy_negative;
  invariants["syzygy_rank"] = report.syzygy_rank;
  invariants["degree_ratio"] = rat_string(report.degree_ratio);
  invariants["threshold"] = report.threshold;
  invariants["kernel_ranks"] = report.kernel_ranks;
  j["invariants"] = invariants;

  if (report.lemma_kernels_nonzero) {
    j["lemma_kernels_nonzero"] = *report.lemma_kernels_nonzero;
  }

  json restrictions = json::array();
  for (const auto& row : report.restrictions) {
    json entry = {
        {"component", row.component + 1},
        {"kernel_rank", row.kernel_rank},
        {"degree", row.degree},
        {"verdict",
         row.verdict == RestrictionVerdict::Unstable ? "Unstable" : "Inconclusive"}};
    if (row.witness) {
      entry["witness"] = {{"kind", kind_name(row.witness->kind)},
                          {"multirank", row.witness->sheaf.multirank},
                          {"chi", row.witness->sheaf.chi},
                          {"label", row.witness->sheaf.label}};
    }
    restrictions.push_back(std::move(entry));
  }
  j["restriction_checks"] = restrictions;

  json catalog = json::array();
  for (const auto& entry : report.catalog) {
    catalog.push_back({{"kind", kind_name(entry.kind)},
                       {"component", entry.source_component + 1},
                       {"multirank", entry.sheaf.multirank},
                       {"chi", entry.sheaf.chi},
                       {"label", entry.sheaf.label}});
  }
  j["catalog"] = catalog;

  json constraints = json::array();
  for (const auto& row : report.instability.system) constraints.push_back(constraint_json(row));
  j["constraints"] = constraints;

  json feasibility;
  const auto& fr = report.instability.feasibility;
  const bool feasible = fr.status == FeasibilityResult::Status::Feasible;
  feasibility["status"] = feasible ? "Feasible" : "Infeasible";
  if (feasible) {
    feasibility["witness"] = weights_json(*fr.witness);
    if (report.witness_verdict) {
      feasibility["witness_verdict"] = verdict_name(report.witness_verdict->kind);
    }
  } else {
    json cert = json::array();
    for (const auto& line : fr.certificate) {
      json tags = json::array();
      for (const auto& tag : line.provenance) tags.push_back(tag.name());
      cert.push_back({{"provenance", tags}, {"multiplier", rat_string(line.multiplier)}});
    }
    feasibility["certificate"] = cert;
    const CertificateExpansion ex = expand_certificate(report.instability.system, fr.certificate);
    feasibility["contradiction"] = {
        {"coefficient", rat_string(ex.combined.empty() ? Rat(0) : ex.combined[0])},
        {"bound", rat_string(ex.bound)},
        {"strict", ex.strict},
        {"statement", certificate_summary(report.instability.system, fr.certificate)}};
  }
  j["feasibility"] = feasibility;

  json theorem;
  theorem["degree_ratio"] = rat_string(report.instability.hypotheses.degree_ratio);
  theorem["threshold"] = report.instability.hypotheses.threshold;
  theorem["kernels_nonzero"] = report.instability.hypotheses.kernels_nonzero;
  theorem["hypotheses_satisfied"] = report.instability.hypotheses.satisfied();
  theorem["verdict"] =
      report.instability.verdict == InstabilityReport::Verdict::StronglyUnstable
          ? "StronglyUnstable"
          : "NotDisprovedByCatalog";
  j["theorem"] = theorem;

  if (report.grid) {
    json grid;
    grid["denominator"] = report.grid->denominator;
    grid["found"] = report.grid->found;
    if (report.grid->witness) grid["witness"] = weights_json(*report.grid->witness);
    grid["consistent_with_decide"] = report.grid->consistent_with_decide;
    j["grid_check"] = grid;
  }
  return j;
}

void print_report_table(std::ostream& out, const Report& report,
                        bool include_certificate) {
  const int n = report.instance.curve.components();
  out << "comb-like curve: n=" << n << ", genera (";
  for (int i = 0; i < n; ++i) {
    out << (i ? "," : "") << report.instance.curve.genus(i);
  }
  out << "), base C" << n << "\n";

  out << "invariants\n";
  out << "  p_a(C)            " << report.arithmetic_genus << "\n";
  out << "  chi(O_C)          " << report.chi_structure << "\n";
  out << "  chi(E)            " << report.chi_bundle << "\n";
  out << "  chi(M)            " << report.chi_syzygy
      << (report.chi_syzygy_negative ? "" : "   [warning: not negative]") << "\n";
  out << "  rank M = l-r      " << report.syzygy_rank << "\n";
  out << "  d/(l-r)           " << rat_string(report.degree_ratio)
      << "   threshold n-1 = " << report.threshold << "\n";
  out << "  kernel ranks t    (";
  for (std::size_t i = 0; i < report.kernel_ranks.size(); ++i) {
    out << (i ? "," : "") << report.kernel_ranks[i];
  }
  out << ")\n";
  if (report.lemma_kernels_nonzero) {
    out << "  two nonzero node intersections: "
        << (*report.lemma_kernels_nonzero ? "yes" : "no") << "\n";
  }

  out << "restriction checks\n";
  for (const auto& row : report.restrictions) {
    out << "  C" << row.component + 1 << ": t=" << row.kernel_rank
        << " d=" << row.degree << " -> "
        << (row.verdict == RestrictionVerdict::Unstable ? "Unstable" : "Inconclusive");
    if (row.witness) out << "  by " << row.witness->sheaf.label;
    out << "\n";
  }

  out << "catalog (" << report.catalog.size() << " entr"
      << (report.catalog.size() == 1 ? "y" : "ies") << ")\n";
  for (const auto& entry : report.catalog) {
    out << "  C" << entry.source_component + 1 << ": " << entry.sheaf.label
        << "  multirank (";
    for (std::size_t i = 0; i < entry.sheaf.multirank.size(); ++i) {
      out << (i ? "," : "") << entry.sheaf.multirank[i];
    }
    out << ")  chi " << entry.sheaf.chi << "\n";
  }

  if (include_certificate) {
    out << "constraints\n";
    for (const auto& row : report.instability.system) {
      std::string tags;
      for (const auto& tag : row.provenance) tags += tag.name();
      out << "  [" << tags << "] " << constraint_text(row) << "\n";
    }
  }

  const auto& fr = report.instability.feasibility;
  out << "feasibility\n";
  out << "  verdict: "
      << (report.instability.verdict == InstabilityReport::Verdict::StronglyUnstable
              ? "StronglyUnstable"
              : "NotDisprovedByCatalog")
      << "\n";
  out << "  hypotheses: d/(l-r) = " << rat_string(report.instability.hypotheses.degree_ratio)
      << (report.instability.hypotheses.satisfied() ? " > " : " vs ")
      << report.instability.hypotheses.threshold << ", kernels nonzero: "
      << (report.instability.hypotheses.kernels_nonzero ? "yes" : "no") << "\n";
  if (fr.status == FeasibilityResult::Status::Feasible) {
    out << "  witness: w = (";
    const auto& w = fr.witness->weights();
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << rat_string(w[i]);
    out << ")\n";
    if (report.witness_verdict) {
      out << "  verdict at witness: " << verdict_name(report.witness_verdict->kind) << "\n";
    }
  } else {
    out << "  certificate: "
        << certificate_summary(report.instability.system, fr.certificate) << "\n";
  }

  if (report.grid) {
    out << "grid check (D=" << report.grid->denominator << "): ";
    if (report.grid->found) {
      out << "witness (";
      const auto& w = report.grid->witness->weights();
      for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << rat_string(w[i]);
      out << ")";
    } else {
      out << "no witness";
    }
    out << (report.grid->consistent_with_decide ? ", consistent with decide"
                                                : ", INCONSISTENT with decide")
        << "\n";
  }
}

}  // namespace combsyz
