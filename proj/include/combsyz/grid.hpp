#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "combsyz/catalog.hpp"
#include "combsyz/curve.hpp"
#include "combsyz/polarization.hpp"
#include "combsyz/sheaf.hpp"

namespace combsyz {

// Exhaustive scan of all polarizations w_i = a_i / D with integer a_i >= 1
// and sum a_i = D, in lexicographic order on (a_1,...,a_n); returns the
// first grid point whose verdict is not UnstableAt.  Slope comparisons at
// grid points reduce to small integer cross-products, so the scan needs no
// rational arithmetic until a witness is materialized.
//
// Serial reference implementation; kept as the ground truth the parallel
// kernel is tested against.
std::optional<Polarization> grid_search_serial(const CombCurve& curve,
                                               const GeneratedPairData& pair,
                                               const std::vector<Destabilizer>& catalog,
                                               std::int64_t denominator);

// OpenMP scan over the leading coordinate.  The lexicographically first hit
// wins regardless of thread schedule, so the result always equals the
// serial one.  Falls back to the serial scan when built without OpenMP.
std::optional<Polarization> grid_search_parallel(const CombCurve& curve,
                                                 const GeneratedPairData& pair,
                                                 const std::vector<Destabilizer>& catalog,
                                                 std::int64_t denominator);

// Default entry point used by reports and the CLI.
std::optional<Polarization> grid_oracle(const CombCurve& curve,
                                        const GeneratedPairData& pair,
                                        const std::vector<Destabilizer>& catalog,
                                        std::int64_t denominator);

}  // namespace combsyz
