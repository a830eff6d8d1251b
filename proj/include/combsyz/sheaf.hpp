#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "combsyz/curve.hpp"

namespace combsyz {

// Numerical type (r, d_i, l, l_i) of a generated pair (E, V) on a comb-like
// curve: rank r of E, component degrees d_i, dimension l of the generating
// space V, and the dimensions l_i of the component restrictions of V.
//
// The engine never computes cohomology; the l_i are caller-supplied data,
// validated for mutual consistency (r <= l_i <= l, so the kernel ranks
// t_i = l - l_i lie in [0, l-r]).
class GeneratedPairData {
 public:
  GeneratedPairData(std::int64_t rank, std::vector<std::int64_t> degrees,
                    std::int64_t sections, std::vector<std::int64_t> section_dims);

  // Same pair described by kernel ranks t_i = l - l_i instead of the l_i.
  static GeneratedPairData from_kernel_ranks(std::int64_t rank,
                                             std::vector<std::int64_t> degrees,
                                             std::int64_t sections,
                                             const std::vector<std::int64_t>& kernel_ranks);

  int components() const { return static_cast<int>(degrees_.size()); }
  std::int64_t rank() const { return rank_; }
  std::int64_t sections() const { return sections_; }
  std::int64_t syzygy_rank() const { return sections_ - rank_; }
  std::int64_t degree(int i) const;
  std::int64_t section_dim(int i) const;
  std::int64_t total_degree() const { return total_degree_; }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  const std::vector<std::int64_t>& section_dims() const { return section_dims_; }

  friend bool operator==(const GeneratedPairData&, const GeneratedPairData&) = default;

 private:
  std::int64_t rank_;
  std::vector<std::int64_t> degrees_;
  std::int64_t sections_;
  std::vector<std::int64_t> section_dims_;
  std::int64_t total_degree_;
};

// Numerical proxy for a pure sheaf of dimension one: per-component ranks and
// the Euler characteristic, which every construction here knows exactly.
struct MultiSheaf {
  std::vector<std::int64_t> multirank;
  std::int64_t chi = 0;
  std::string label;
};

// chi(E) = d + r(1 - p_a).  Also recomputed component-wise as
// sum(d_i + r(1 - g_i)) - r(n-1); the two routes must agree.
std::int64_t chi_bundle(const CombCurve& curve, const GeneratedPairData& pair);

// The syzygy sheaf M of the pair: constant multirank l-r and
// chi(M) = (l-r)(1 - p_a) - d.  chi(M) >= 0 happens only for degenerate
// invariant combinations (d <= (l-r)(1 - p_a)); callers treat that as a
// boundary warning, never an error.
MultiSheaf syzygy_multisheaf(const CombCurve& curve, const GeneratedPairData& pair);

// t_i = l - l_i.
std::int64_t kernel_rank(const GeneratedPairData& pair, int i);

// t_base = sum of the node intersection dimensions k_1..k_{n-1}.
std::int64_t base_kernel_from_intersections(const std::vector<std::int64_t>& intersection_dims);

// Checks sum(k_i) == l - l_base against independently supplied data.
void validate_base_kernel(const std::vector<std::int64_t>& intersection_dims,
                          std::int64_t sections, std::int64_t base_section_dim);

// True when at least two distinct non-base components have k_i > 0, which
// guarantees every restriction kernel can be taken nonzero.
bool lemma_kernels_nonzero(const std::vector<std::int64_t>& intersection_dims);

}  // namespace combsyz
