#include "combsyz/grid.hpp"

#include <atomic>
#include <limits>
#include <mutex>

#include "combsyz/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace combsyz {

namespace {

// Fixed data for testing one grid point in pure int64 arithmetic.  At
// w = a/D the syzygy sheaf has weighted rank (l-r) and catalog entry e on
// component c has weighted rank t_e * a_c / D, so
//   mu_w(e) > mu_w(M)  <=>  chi_e * (l-r) * D > chi_M * t_e * a_c.
// Magnitudes stay far below 2^63 for any practical denominator.
struct GridTest {
  std::vector<int> component;
  std::vector<std::int64_t> lhs;        // chi_e * (l-r) * D
  std::vector<std::int64_t> rhs_coeff;  // chi_M * t_e

  bool unstable(const std::vector<std::int64_t>& a) const {
    for (std::size_t e = 0; e < component.size(); ++e) {
      if (lhs[e] > rhs_coeff[e] * a[static_cast<std::size_t>(component[e])]) return true;
    }
    return false;
  }
};

GridTest make_grid_test(const CombCurve& curve, const GeneratedPairData& pair,
                        const std::vector<Destabilizer>& catalog, std::int64_t D) {
  const MultiSheaf m = syzygy_multisheaf(curve, pair);
  GridTest test;
  test.component.reserve(catalog.size());
  for (const auto& entry : catalog) {
    const int c = entry.source_component;
    const std::int64_t t = entry.sheaf.multirank[static_cast<std::size_t>(c)];
    test.component.push_back(c);
    test.lhs.push_back(entry.sheaf.chi * pair.syzygy_rank() * D);
    test.rhs_coeff.push_back(m.chi * t);
  }
  return test;
}

// Advances positions [first, n) through the compositions of `total` into
// n-first positive parts, lexicographically; the last position absorbs the
// remainder.  Returns false after the final composition.
bool next_suffix(std::vector<std::int64_t>& a, std::int64_t total, int first) {
  const int n = static_cast<int>(a.size());
  for (int j = n - 2; j >= first; --j) {
    std::int64_t prefix = 0;
    for (int k = first; k < j; ++k) prefix += a[static_cast<std::size_t>(k)];
    const std::int64_t rest_min = n - 2 - j;  // positions j+1..n-2 reset to 1
    if (prefix + a[static_cast<std::size_t>(j)] + 1 + rest_min <= total - 1) {
      a[static_cast<std::size_t>(j)] += 1;
      std::int64_t used = prefix + a[static_cast<std::size_t>(j)];
      for (int k = j + 1; k <= n - 2; ++k) {
        a[static_cast<std::size_t>(k)] = 1;
        used += 1;
      }
      a[static_cast<std::size_t>(n - 1)] = total - used;
      return true;
    }
  }
  return false;
}

void reset_suffix(std::vector<std::int64_t>& a, std::int64_t total, int first) {
  const int n = static_cast<int>(a.size());
  for (int k = first; k < n - 1; ++k) a[static_cast<std::size_t>(k)] = 1;
  a[static_cast<std::size_t>(n - 1)] = total - (n - 1 - first);
}

Polarization to_polarization(const std::vector<std::int64_t>& a, std::int64_t D) {
  std::vector<Rat> w;
  w.reserve(a.size());
  for (const auto ai : a) w.push_back(make_rat(ai, D));
  return Polarization(std::move(w));
}

constexpr std::int64_t kMaxDenominator = 65536;  // int64 headroom in GridTest

void validate_denominator(const CombCurve& curve, const GeneratedPairData& pair,
                          std::int64_t D) {
  if (curve.components() != pair.components()) {
    throw ValidationError("curve/pair component count mismatch");
  }
  if (D < curve.components()) {
    throw ValidationError("grid denominator must be at least n = " +
                          std::to_string(curve.components()) + ", got " +
                          std::to_string(D));
  }
  if (D > kMaxDenominator) {
    throw ValidationError("grid denominator exceeds the supported maximum " +
                          std::to_string(kMaxDenominator));
  }
}

}  // namespace

std::optional<Polarization> grid_search_serial(const CombCurve& curve,
                                               const GeneratedPairData& pair,
                                               const std::vector<Destabilizer>& catalog,
                                               std::int64_t denominator) {
  validate_denominator(curve, pair, denominator);
  const int n = curve.components();
  const GridTest test = make_grid_test(curve, pair, catalog, denominator);
  std::vector<std::int64_t> a(static_cast<std::size_t>(n));
  for (std::int64_t a0 = 1; a0 <= denominator - (n - 1); ++a0) {
    a[0] = a0;
    reset_suffix(a, denominator - a0, 1);
    do {
      if (!test.unstable(a)) return to_polarization(a, denominator);
    } while (next_suffix(a, denominator - a0, 1));
  }
  return std::nullopt;
}

std::optional<Polarization> grid_search_parallel(const CombCurve& curve,
                                                 const GeneratedPairData& pair,
                                                 const std::vector<Destabilizer>& catalog,
                                                 std::int64_t denominator) {
#ifndef _OPENMP
  return grid_search_serial(curve, pair, catalog, denominator);
#else
  validate_denominator(curve, pair, denominator);
  const int n = curve.components();
  const GridTest test = make_grid_test(curve, pair, catalog, denominator);
  const std::int64_t a0_max = denominator - (n - 1);

  std::atomic<std::int64_t> best_a0{std::numeric_limits<std::int64_t>::max()};
  std::vector<std::int64_t> best;
  std::mutex best_mutex;

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t a0 = 1; a0 <= a0_max; ++a0) {
    if (a0 >= best_a0.load(std::memory_order_relaxed)) continue;
    std::vector<std::int64_t> a(static_cast<std::size_t>(n));
    a[0] = a0;
    reset_suffix(a, denominator - a0, 1);
    do {
      if (a0 >= best_a0.load(std::memory_order_relaxed)) break;
      if (!test.unstable(a)) {
        // within one a0 the scan is sequential, so this is the lex-first
        // hit for that prefix; the smallest winning prefix wins overall
        std::lock_guard<std::mutex> lock(best_mutex);
        if (a0 < best_a0.load(std::memory_order_relaxed)) {
          best = a;
          best_a0.store(a0, std::memory_order_relaxed);
        }
        break;
      }
    } while (next_suffix(a, denominator - a0, 1));
  }

  if (best_a0.load() == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  return to_polarization(best, denominator);
#endif
}

std::optional<Polarization> grid_oracle(const CombCurve& curve,
                                        const GeneratedPairData& pair,
                                        const std::vector<Destabilizer>& catalog,
                                        std::int64_t denominator) {
#ifdef _OPENMP
  return grid_search_parallel(curve, pair, catalog, denominator);
#else
  return grid_search_serial(curve, pair, catalog, denominator);
#endif
}

}  // namespace combsyz
