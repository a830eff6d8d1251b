// Times the serial reference grid scan against the OpenMP kernel on a
// full-sweep workload (an infeasible instance, so no early exit).
//
//   bench_grid [n] [D_max]

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <vector>

#include "combsyz/catalog.hpp"
#include "combsyz/curve.hpp"
#include "combsyz/grid.hpp"
#include "combsyz/sheaf.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds_of(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 4;
  const std::int64_t d_max = argc > 2 ? std::atoll(argv[2]) : 160;
  if (n < 2 || d_max < n) {
    std::cerr << "usage: bench_grid [n>=2] [D_max>=n]\n";
    return 1;
  }

  // all genera 1, supercritical degree, every kernel rank 1: no witness
  // exists, so both scans visit the entire grid
  std::vector<std::int64_t> genera(static_cast<std::size_t>(n), 1);
  combsyz::CombCurve curve(genera);
  std::vector<std::int64_t> degrees(static_cast<std::size_t>(n), 0);
  degrees[0] = 3 * static_cast<std::int64_t>(n);
  std::vector<std::int64_t> kernels(static_cast<std::size_t>(n), 1);
  auto pair = combsyz::GeneratedPairData::from_kernel_ranks(1, degrees, 3, kernels);
  const auto catalog = combsyz::build_catalog(curve, pair);

#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (built without OpenMP)\n";
#endif
  std::cout << "n=" << n << ", full sweeps (no witness)\n";
  std::cout << "      D      points    serial[s]  parallel[s]   speedup\n";

  for (std::int64_t D = n * 8; D <= d_max; D *= 2) {
    // C(D-1, n-1) grid points
    double points = 1;
    for (int k = 1; k < n; ++k) points = points * static_cast<double>(D - k) / k;

    bool serial_found = false, parallel_found = false;
    const double ts = seconds_of([&] {
      serial_found = combsyz::grid_search_serial(curve, pair, catalog, D).has_value();
    });
    const double tp = seconds_of([&] {
      parallel_found = combsyz::grid_search_parallel(curve, pair, catalog, D).has_value();
    });
    if (serial_found != parallel_found) {
      std::cerr << "MISMATCH at D=" << D << "\n";
      return 1;
    }
    std::printf("%7lld %11.0f %12.4f %12.4f %9.2f\n", static_cast<long long>(D), points,
                ts, tp, tp > 0 ? ts / tp : 0.0);
  }
  return 0;
}
