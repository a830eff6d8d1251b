#pragma once

#include <cstdint>
#include <vector>

namespace combsyz {

// Comb-like curve of compact type: n >= 2 smooth components C_0..C_{n-1}
// where the base component C_{n-1} meets every other component C_i in
// exactly one node p_i, and non-base components are pairwise disjoint.
// Components are 0-indexed here; reports print 1-based labels.
//
// Immutable after construction.
class CombCurve {
 public:
  explicit CombCurve(std::vector<std::int64_t> genera);

  int components() const { return static_cast<int>(genera_.size()); }
  int base_index() const { return components() - 1; }
  std::int64_t node_count() const { return components() - 1; }
  std::int64_t genus(int i) const;
  const std::vector<std::int64_t>& genera() const { return genera_; }

  friend bool operator==(const CombCurve&, const CombCurve&) = default;

 private:
  std::vector<std::int64_t> genera_;
};

// p_a(C) = sum of the component genera.
std::int64_t arithmetic_genus(const CombCurve& curve);

// chi(O_C) = 1 - p_a(C).
std::int64_t chi_structure_sheaf(const CombCurve& curve);

}  // namespace combsyz
