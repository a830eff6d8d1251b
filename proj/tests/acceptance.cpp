// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criterion 8 shells out to the CLI binary, whose path arrives as
// argv[1] or in COMBSYZ_CLI.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "combsyz/constraints.hpp"
#include "combsyz/fourier_motzkin.hpp"
#include "combsyz/grid.hpp"
#include "combsyz/instance_io.hpp"
#include "combsyz/report.hpp"
#include "testutil.hpp"

namespace {

using namespace combsyz;
using combsyz::testing::DegreePolicy;
using combsyz::testing::InstanceParams;
using combsyz::testing::random_instance;
using combsyz::testing::random_polarization;

struct Checker {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      detail = message;
    }
  }
  void note(const std::string& text) {
    if (ok) detail = text;
  }
};

double run_timed(const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string cli_path;

int run_cli(const std::string& args) {
  const std::string cmd = "'" + cli_path + "' " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// ---------------------------------------------------------------------------

Checker criterion1_theorem_reproduction() {
  Checker c;
  std::mt19937 rng(20260810);
  InstanceParams params;
  params.policy = DegreePolicy::Supercritical;
  params.force_kernels = true;
  int infeasible = 0;
  const double elapsed = run_timed([&] {
    for (int iter = 0; iter < 1000 && c.ok; ++iter) {
      const auto [curve, pair] = random_instance(rng, params);
      const auto catalog = build_catalog(curve, pair);
      const auto result = decide(build_constraint_system(curve, pair, catalog));
      c.require(result.status == FeasibilityResult::Status::Infeasible,
                "supercritical instance came out feasible");
      if (c.ok) ++infeasible;
    }
  });
  c.require(elapsed < 5.0, "exceeded the 5 second budget");
  c.note(std::to_string(infeasible) + "/1000 infeasible, " + std::to_string(elapsed) + "s");
  return c;
}

Checker criterion2_certificate_validity() {
  Checker c;
  std::mt19937 rng(20260810);  // same stream as criterion 1
  InstanceParams params;
  params.policy = DegreePolicy::Supercritical;
  params.force_kernels = true;
  int units = 0;
  for (int iter = 0; iter < 1000 && c.ok; ++iter) {
    const auto [curve, pair] = random_instance(rng, params);
    const auto catalog = build_catalog(curve, pair);
    const auto system = build_constraint_system(curve, pair, catalog);
    const auto result = decide(system);
    c.require(result.status == FeasibilityResult::Status::Infeasible,
              "expected an infeasible instance");
    if (!c.ok) break;
    c.require(validate_certificate(system, result.certificate),
              "returned certificate failed to expand to a contradiction");

    // every kernel is nonzero here, so the unit-multiplier summation over
    // all n catalog rows must itself be an accepted certificate
    std::vector<CertificateLine> unit;
    for (const auto& entry : catalog) {
      unit.push_back(
          {{ConstraintTag{ConstraintTag::Kind::Catalog, entry.source_component}}, Rat(1)});
    }
    c.require(static_cast<int>(unit.size()) == curve.components(),
              "catalog is missing a component row");
    c.require(validate_certificate(system, unit),
              "unit-multiplier summation certificate rejected");
    if (c.ok) ++units;
  }
  c.note(std::to_string(units) + "/1000 unit certificates accepted");
  return c;
}

Checker criterion3_witnesses_and_oracle() {
  Checker c;
  std::mt19937 rng(31415);
  int feasible = 0;
  int infeasible = 0;
  const double elapsed = run_timed([&] {
    for (int iter = 0; iter < 500 && c.ok; ++iter) {
      InstanceParams params;
      params.n_max = 4;
      // alternate so both outcomes are well represented
      params.policy = iter % 2 ? DegreePolicy::Supercritical : DegreePolicy::Free;
      params.force_kernels = iter % 2 == 1;
      const auto [curve, pair] = random_instance(rng, params);
      const auto catalog = build_catalog(curve, pair);
      const auto result = decide(build_constraint_system(curve, pair, catalog));
      if (result.status == FeasibilityResult::Status::Feasible) {
        ++feasible;
        c.require(verdict_at(*result.witness, curve, pair, catalog).kind !=
                      Verdict::Kind::UnstableAt,
                  "feasible witness is destabilized");
      } else {
        ++infeasible;
        c.require(!grid_oracle(curve, pair, catalog, 64).has_value(),
                  "grid found a witness on an infeasible instance");
      }
    }
  });
  c.require(feasible > 0 && infeasible > 0, "sampler failed to cover both outcomes");
  c.require(elapsed < 30.0, "exceeded the 30 second budget");
  c.note(std::to_string(feasible) + " feasible / " + std::to_string(infeasible) +
         " infeasible, " + std::to_string(elapsed) + "s");
  return c;
}

Checker criterion4_chi_identities() {
  Checker c;
  std::mt19937 rng(2718);
  InstanceParams params;
  for (int iter = 0; iter < 10000 && c.ok; ++iter) {
    const auto [curve, pair] = random_instance(rng, params);
    const std::int64_t chi_e = chi_bundle(curve, pair);  // both routes checked inside
    const MultiSheaf m = syzygy_multisheaf(curve, pair);
    const std::int64_t s = pair.syzygy_rank();
    const std::int64_t pa = arithmetic_genus(curve);
    const std::int64_t d = pair.total_degree();
    c.require(m.chi == s * (1 - pa) - d, "closed form for chi(M) broke");
    c.require(m.chi == pair.sections() * chi_structure_sheaf(curve) - chi_e,
              "chi(M) != l*chi(O_C) - chi(E)");
    // negativity, minus the documented boundary (d <= (l-r)(1-p_a)), where
    // the sheaf is only flagged
    const bool boundary = (pa == 0 && d <= s) || (pa == 1 && d == 0);
    if ((d > 0 || pa > 0) && !boundary) {
      c.require(m.chi < 0, "chi(M) failed to be negative off the boundary");
    }
    if (boundary) c.require(m.chi >= 0, "boundary flag mismatch");
  }
  c.note("10000 instances, exact");
  return c;
}

Checker criterion5_slope_constancy() {
  Checker c;
  std::mt19937 rng(1618);
  InstanceParams params;
  for (int inst = 0; inst < 25 && c.ok; ++inst) {
    const auto [curve, pair] = random_instance(rng, params);
    const MultiSheaf m = syzygy_multisheaf(curve, pair);
    const Rat expected = make_rat(m.chi, pair.syzygy_rank());
    for (int rep = 0; rep < 1000 && c.ok; ++rep) {
      const auto w = random_polarization(rng, curve.components(), 60);
      c.require(slope(m, w) == expected, "syzygy slope depends on the polarization");
    }
  }
  c.note("25 instances x 1000 polarizations, exact");
  return c;
}

Checker criterion6_restriction_sweep() {
  Checker c;
  const CombCurve curve({1, 1});
  for (std::int64_t d1 = 0; d1 <= 5 && c.ok; ++d1) {
    for (std::int64_t d2 = 0; d2 <= 5 && c.ok; ++d2) {
      for (std::int64_t t1 = 0; t1 <= 3 && c.ok; ++t1) {
        for (std::int64_t t2 = 0; t2 <= 3 && c.ok; ++t2) {
          const auto pair =
              GeneratedPairData::from_kernel_ranks(1, {d1, d2}, 5, {t1, t2});
          const bool u1 =
              restriction_slope_check(curve, pair, 0) == RestrictionVerdict::Unstable;
          const bool u2 =
              restriction_slope_check(curve, pair, 1) == RestrictionVerdict::Unstable;
          c.require(u1 == (t1 > 0 && d1 > 0), "component 1 verdict wrong");
          c.require(u2 == (t2 > 0 && d2 > 0), "component 2 verdict wrong");
        }
      }
    }
  }
  c.note("576 combinations, exhaustive");
  return c;
}

Checker criterion7_boundary_instance() {
  Checker c;
  const CombCurve curve({1, 1});
  const auto pair = GeneratedPairData::from_kernel_ranks(1, {1, 1}, 3, {1, 1});
  const auto catalog = build_catalog(curve, pair);
  const auto result = decide(build_constraint_system(curve, pair, catalog));
  c.require(result.status == FeasibilityResult::Status::Feasible,
            "boundary instance should be feasible");
  if (!c.ok) return c;
  const Polarization expected({make_rat(1, 2), make_rat(1, 2)});
  c.require(*result.witness == expected, "witness is not (1/2,1/2)");
  const auto verdict = verdict_at(*result.witness, curve, pair, catalog);
  c.require(verdict.kind == Verdict::Kind::CatalogSemistableAt,
            "equality boundary not reported as semistable");
  const auto grid = grid_oracle(curve, pair, catalog, 2);
  c.require(grid.has_value() && *grid == expected, "grid misses the boundary witness");
  c.note("witness (1/2,1/2), CatalogSemistableAt");
  return c;
}

Checker criterion8_cli_contract() {
  Checker c;
  if (cli_path.empty()) {
    c.require(false, "CLI path not provided (argv[1] or COMBSYZ_CLI)");
    return c;
  }

  const auto dir = std::filesystem::temp_directory_path() / "combsyz_acceptance";
  std::filesystem::create_directories(dir);

  // 20-file corpus: round-trip identity at both byte and object level
  std::mt19937 rng(97);
  InstanceParams params;
  std::vector<std::filesystem::path> files;
  for (int k = 0; k < 20; ++k) {
    auto [curve, pair] = random_instance(rng, params);
    ParsedInstance instance{std::move(curve), std::move(pair), std::nullopt, k % 2 == 0};
    if (instance.curve.components() == 2 && k % 3 == 0) {
      instance.intersection_dims =
          std::vector<std::int64_t>{kernel_rank(instance.pair, 1)};
    }
    const auto path = dir / ("instance_" + std::to_string(k) + ".json");
    const std::string bytes = emit_instance(instance).dump(2);
    std::ofstream(path) << bytes << "\n";
    files.push_back(path);

    const ParsedInstance reparsed = parse_instance(path);
    c.require(reparsed == instance, "round-trip object mismatch on file " + std::to_string(k));
    c.require(emit_instance(reparsed).dump(2) == bytes,
              "round-trip byte mismatch on file " + std::to_string(k));
  }

  // exit-code contract
  c.require(run_cli("analyze '" + files.front().string() + "'") == 0,
            "analyze on a valid file should exit 0");
  c.require(run_cli("analyze '" + files.front().string() +
                    "' --format machine --certificate --oracle-denominator 8") == 0,
            "machine-format analyze should exit 0");
  c.require(run_cli("feasibility '" + files.front().string() + "'") == 0,
            "feasibility should exit 0");
  c.require(run_cli("grid '" + files.front().string() + "' --denominator 8") == 0,
            "grid should exit 0");

  const auto broken = dir / "broken.json";
  std::ofstream(broken) << "{ this is not json";
  c.require(run_cli("analyze '" + broken.string() + "'") == 3,
            "malformed JSON should exit 3");

  const auto invalid = dir / "invalid.json";
  std::ofstream(invalid)
      << R"({"n":2,"genera":[1,1],"rank":3,"degrees":[2,1],"l":3,"kernel_ranks":[0,0]})";
  c.require(run_cli("analyze '" + invalid.string() + "'") == 2,
            "invariant violation should exit 2");

  const auto short_genera = dir / "short_genera.json";
  std::ofstream(short_genera)
      << R"({"n":3,"genera":[1,1],"rank":1,"degrees":[2,1,0],"l":3,"kernel_ranks":[1,0,1]})";
  c.require(run_cli("analyze '" + short_genera.string() + "'") == 2,
            "length mismatch should exit 2");

  c.require(run_cli("analyze '" + (dir / "missing.json").string() + "'") == 3,
            "unreadable file should exit 3");

  c.note("20-file corpus, exit codes 0/2/3");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) {
    cli_path = argv[1];
  } else if (const char* env = std::getenv("COMBSYZ_CLI")) {
    cli_path = env;
  }

  struct Entry {
    int id;
    const char* name;
    std::function<Checker()> run;
  };
  const std::vector<Entry> criteria = {
      {1, "strong instability reproduced on supercritical instances",
       criterion1_theorem_reproduction},
      {2, "infeasibility certificates expand to contradictions",
       criterion2_certificate_validity},
      {3, "feasible witnesses hold up and the grid never contradicts decide",
       criterion3_witnesses_and_oracle},
      {4, "Euler characteristic identities", criterion4_chi_identities},
      {5, "syzygy slope constancy", criterion5_slope_constancy},
      {6, "single-component restriction sweep", criterion6_restriction_sweep},
      {7, "equality boundary instance", criterion7_boundary_instance},
      {8, "instance round-trip and CLI exit codes", criterion8_cli_contract},
  };

  int failures = 0;
  for (const auto& entry : criteria) {
    Checker result;
    try {
      result = entry.run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    std::cout << (result.ok ? "[PASS]" : "[FAIL]") << " criterion " << entry.id << ": "
              << entry.name;
    if (!result.detail.empty()) std::cout << " (" << result.detail << ")";
    std::cout << "\n";
    if (!result.ok) ++failures;
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 8 criteria passed\n";
  return 0;
}
