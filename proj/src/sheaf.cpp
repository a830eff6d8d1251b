#include "combsyz/sheaf.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "combsyz/errors.hpp"

namespace combsyz {

namespace {

// Same magnitude regime as the curve caps: keeps chi arithmetic and the
// grid scan exact in int64.
constexpr std::int64_t kMaxSections = 10000;
constexpr std::int64_t kMaxDegree = 10000;

void require_matching_components(const CombCurve& curve, const GeneratedPairData& pair) {
  if (curve.components() != pair.components()) {
    throw ValidationError("curve has " + std::to_string(curve.components()) +
                          " components but pair data has " +
                          std::to_string(pair.components()));
  }
}

}  // namespace

GeneratedPairData::GeneratedPairData(std::int64_t rank, std::vector<std::int64_t> degrees,
                                     std::int64_t sections,
                                     std::vector<std::int64_t> section_dims)
    : rank_(rank),
      degrees_(std::move(degrees)),
      sections_(sections),
      section_dims_(std::move(section_dims)) {
  if (rank_ < 1) throw ValidationError("rank: r >= 1 required, got " + std::to_string(rank_));
  if (sections_ <= rank_) {
    throw ValidationError("l > r required (l=" + std::to_string(sections_) +
                          ", r=" + std::to_string(rank_) + ")");
  }
  if (sections_ > kMaxSections) {
    throw ValidationError("l exceeds the supported maximum " + std::to_string(kMaxSections));
  }
  if (degrees_.size() < 2) {
    throw ValidationError("degrees: at least 2 components required");
  }
  if (section_dims_.size() != degrees_.size()) {
    throw ValidationError("section_dims: expected " + std::to_string(degrees_.size()) +
                          " entries, got " + std::to_string(section_dims_.size()));
  }
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (degrees_[i] < 0) {
      throw ValidationError("degrees[" + std::to_string(i + 1) +
                            "]: d_i >= 0 required, got " + std::to_string(degrees_[i]));
    }
    if (degrees_[i] > kMaxDegree) {
      throw ValidationError("degrees[" + std::to_string(i + 1) +
                            "] exceeds the supported maximum " + std::to_string(kMaxDegree));
    }
    if (section_dims_[i] < rank_ || section_dims_[i] > sections_) {
      throw ValidationError("section_dims[" + std::to_string(i + 1) + "]: r <= l_i <= l required, got l_i=" +
                            std::to_string(section_dims_[i]) + " with r=" +
                            std::to_string(rank_) + ", l=" + std::to_string(sections_));
    }
  }
  total_degree_ = std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0});
}

GeneratedPairData GeneratedPairData::from_kernel_ranks(
    std::int64_t rank, std::vector<std::int64_t> degrees, std::int64_t sections,
    const std::vector<std::int64_t>& kernel_ranks) {
  std::vector<std::int64_t> section_dims;
  section_dims.reserve(kernel_ranks.size());
  for (std::size_t i = 0; i < kernel_ranks.size(); ++i) {
    if (kernel_ranks[i] < 0) {
      throw ValidationError("kernel_ranks[" + std::to_string(i + 1) +
                            "]: t_i >= 0 required, got " + std::to_string(kernel_ranks[i]));
    }
    section_dims.push_back(sections - kernel_ranks[i]);
  }
  return GeneratedPairData(rank, std::move(degrees), sections, std::move(section_dims));
}

std::int64_t GeneratedPairData::degree(int i) const {
  if (i < 0 || i >= components()) throw std::out_of_range("component index " + std::to_string(i));
  return degrees_[static_cast<std::size_t>(i)];
}

std::int64_t GeneratedPairData::section_dim(int i) const {
  if (i < 0 || i >= components()) throw std::out_of_range("component index " + std::to_string(i));
  return section_dims_[static_cast<std::size_t>(i)];
}

std::int64_t chi_bundle(const CombCurve& curve, const GeneratedPairData& pair) {
  require_matching_components(curve, pair);
  const std::int64_t pa = arithmetic_genus(curve);
  const std::int64_t global = pair.total_degree() + pair.rank() * (1 - pa);
  std::int64_t componentwise = 0;
  for (int i = 0; i < curve.components(); ++i) {
    componentwise += pair.degree(i) + pair.rank() * (1 - curve.genus(i));
  }
  componentwise -= pair.rank() * curve.node_count();
  if (componentwise != global) {
    throw std::logic_error("chi(E): global and component-wise forms disagree");
  }
  return global;
}

MultiSheaf syzygy_multisheaf(const CombCurve& curve, const GeneratedPairData& pair) {
  require_matching_components(curve, pair);
  MultiSheaf m;
  m.multirank.assign(static_cast<std::size_t>(curve.components()), pair.syzygy_rank());
  m.chi = pair.syzygy_rank() * (1 - arithmetic_genus(curve)) - pair.total_degree();
  m.label = "M(E,V)";
  return m;
}

std::int64_t kernel_rank(const GeneratedPairData& pair, int i) {
  return pair.sections() - pair.section_dim(i);
}

std::int64_t base_kernel_from_intersections(const std::vector<std::int64_t>& intersection_dims) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < intersection_dims.size(); ++i) {
    if (intersection_dims[i] < 0) {
      throw ValidationError("intersection_dims[" + std::to_string(i + 1) +
                            "]: k_i >= 0 required, got " +
                            std::to_string(intersection_dims[i]));
    }
    sum += intersection_dims[i];
  }
  return sum;
}

void validate_base_kernel(const std::vector<std::int64_t>& intersection_dims,
                          std::int64_t sections, std::int64_t base_section_dim) {
  const std::int64_t from_intersections = base_kernel_from_intersections(intersection_dims);
  const std::int64_t from_sections = sections - base_section_dim;
  if (from_intersections != from_sections) {
    throw ValidationError("intersection_dims: sum k_i = " + std::to_string(from_intersections) +
                          " does not match the base kernel rank l - l_n = " +
                          std::to_string(from_sections));
  }
}

bool lemma_kernels_nonzero(const std::vector<std::int64_t>& intersection_dims) {
  if (intersection_dims.empty()) {
    throw ValidationError("intersection_dims: expected n-1 >= 1 entries");
  }
  int positive = 0;
  for (std::size_t i = 0; i < intersection_dims.size(); ++i) {
    if (intersection_dims[i] < 0) {
      throw ValidationError("intersection_dims[" + std::to_string(i + 1) +
                            "]: k_i >= 0 required, got " +
                            std::to_string(intersection_dims[i]));
    }
    if (intersection_dims[i] > 0) ++positive;
  }
  return positive >= 2;
}

}  // namespace combsyz
