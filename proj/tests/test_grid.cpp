#include <functional>
#include <random>

#include "doctest.h"

#include "combsyz/catalog.hpp"
#include "combsyz/errors.hpp"
#include "combsyz/grid.hpp"
#include "combsyz/polarization.hpp"
#include "testutil.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using combsyz::build_catalog;
using combsyz::CombCurve;
using combsyz::GeneratedPairData;
using combsyz::grid_oracle;
using combsyz::grid_search_parallel;
using combsyz::grid_search_serial;
using combsyz::make_rat;
using combsyz::Polarization;
using combsyz::Rat;
using combsyz::Verdict;
using combsyz::verdict_at;

namespace {

// Test-side reference: enumerate the compositions recursively and call the
// full rational verdict path at every point.  Independent of the integer
// kernel the grid scan uses.
std::optional<Polarization> reference_grid(const CombCurve& curve,
                                           const GeneratedPairData& pair,
                                           const std::vector<combsyz::Destabilizer>& catalog,
                                           std::int64_t D) {
  const int n = curve.components();
  std::vector<std::int64_t> a(static_cast<std::size_t>(n), 0);
  std::optional<Polarization> found;
  std::function<bool(int, std::int64_t)> walk = [&](int pos, std::int64_t left) {
    if (pos == n - 1) {
      a[static_cast<std::size_t>(pos)] = left;
      std::vector<Rat> w;
      for (const auto ai : a) w.push_back(make_rat(ai, D));
      Polarization p(std::move(w));
      if (verdict_at(p, curve, pair, catalog).kind != Verdict::Kind::UnstableAt) {
        found = std::move(p);
        return true;
      }
      return false;
    }
    for (std::int64_t v = 1; v + (n - pos - 2) < left; ++v) {
      a[static_cast<std::size_t>(pos)] = v;
      if (walk(pos + 1, left - v)) return true;
    }
    return false;
  };
  walk(0, D);
  return found;
}

}  // namespace

TEST_CASE("single grid point at the tie") {
  const CombCurve curve({1, 1});
  const auto pair = GeneratedPairData::from_kernel_ranks(1, {1, 1}, 3, {1, 1});
  const auto catalog = build_catalog(curve, pair);
  const auto hit = grid_search_serial(curve, pair, catalog, 2);
  REQUIRE(hit.has_value());
  CHECK(*hit == Polarization({make_rat(1, 2), make_rat(1, 2)}));
}

TEST_CASE("no witness exists on a supercritical instance") {
  const CombCurve curve({1, 1});
  const auto pair = GeneratedPairData::from_kernel_ranks(1, {2, 1}, 3, {1, 1});
  const auto catalog = build_catalog(curve, pair);
  for (const std::int64_t D : {2, 8, 64}) {
    CHECK_FALSE(grid_search_serial(curve, pair, catalog, D).has_value());
    CHECK_FALSE(grid_search_parallel(curve, pair, catalog, D).has_value());
  }
}

TEST_CASE("empty catalog accepts the first grid point") {
  const CombCurve curve({1, 1, 1});
  const auto pair = GeneratedPairData::from_kernel_ranks(1, {2, 1, 1}, 3, {0, 0, 0});
  const auto catalog = build_catalog(curve, pair);
  REQUIRE(catalog.empty());

  const auto hit = grid_oracle(curve, pair, catalog, 3);
  REQUIRE(hit.has_value());
  CHECK(*hit == Polarization::uniform(3));

  // lexicographically first composition of 4, not the centered one
  const CombCurve two({1, 1});
  const auto pair2 = GeneratedPairData::from_kernel_ranks(1, {2, 1}, 3, {0, 0});
  const auto hit2 = grid_oracle(two, pair2, build_catalog(two, pair2), 4);
  REQUIRE(hit2.has_value());
  CHECK(*hit2 == Polarization({make_rat(1, 4), make_rat(3, 4)}));
}

TEST_CASE("denominator must admit a grid point") {
  const CombCurve curve({1, 1, 1});
  const auto pair = GeneratedPairData::from_kernel_ranks(1, {2, 1, 1}, 3, {0, 0, 0});
  CHECK_THROWS_AS(grid_search_serial(curve, pair, {}, 2), combsyz::ValidationError);
  CHECK_THROWS_AS(grid_search_serial(curve, pair, {}, 1 << 20), combsyz::ValidationError);
}

TEST_CASE("integer scan matches the rational reference") {
  std::mt19937 rng(7040);
  combsyz::testing::InstanceParams params;
  params.n_max = 4;
  for (int iter = 0; iter < 60; ++iter) {
    const auto [curve, pair] = combsyz::testing::random_instance(rng, params);
    const auto catalog = build_catalog(curve, pair);
    const std::int64_t D =
        std::uniform_int_distribution<std::int64_t>(curve.components(), 12)(rng);
    CHECK(grid_search_serial(curve, pair, catalog, D) ==
          reference_grid(curve, pair, catalog, D));
  }
}

TEST_CASE("parallel scan returns the serial answer") {
  std::mt19937 rng(7041);
  combsyz::testing::InstanceParams params;
  params.n_max = 5;
#ifdef _OPENMP
  omp_set_num_threads(4);
#endif
  for (int iter = 0; iter < 80; ++iter) {
    const auto [curve, pair] = combsyz::testing::random_instance(rng, params);
    const auto catalog = build_catalog(curve, pair);
    const std::int64_t D =
        std::uniform_int_distribution<std::int64_t>(curve.components(), 32)(rng);
    const auto serial = grid_search_serial(curve, pair, catalog, D);
    const auto parallel = grid_search_parallel(curve, pair, catalog, D);
    CHECK(serial == parallel);
  }
}
