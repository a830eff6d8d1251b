#include "combsyz/curve.hpp"

#include <numeric>
#include <string>

#include "combsyz/errors.hpp"

namespace combsyz {

namespace {

// Keeps every derived invariant (and the grid scan's integer cross products)
// comfortably inside int64.
constexpr std::int64_t kMaxComponents = 64;
constexpr std::int64_t kMaxGenus = 10000;

}  // namespace

CombCurve::CombCurve(std::vector<std::int64_t> genera) : genera_(std::move(genera)) {
  if (genera_.size() < 2) {
    throw ValidationError("comb-like curve needs at least 2 components, got " +
                          std::to_string(genera_.size()));
  }
  if (genera_.size() > kMaxComponents) {
    throw ValidationError("comb-like curve supports at most " +
                          std::to_string(kMaxComponents) + " components, got " +
                          std::to_string(genera_.size()));
  }
  for (std::size_t i = 0; i < genera_.size(); ++i) {
    if (genera_[i] < 0) {
      throw ValidationError("genus of component " + std::to_string(i + 1) +
                            " is negative: " + std::to_string(genera_[i]));
    }
    if (genera_[i] > kMaxGenus) {
      throw ValidationError("genus of component " + std::to_string(i + 1) +
                            " exceeds the supported maximum " + std::to_string(kMaxGenus));
    }
  }
}

std::int64_t CombCurve::genus(int i) const {
  if (i < 0 || i >= components()) {
    throw std::out_of_range("component index " + std::to_string(i));
  }
  return genera_[static_cast<std::size_t>(i)];
}

std::int64_t arithmetic_genus(const CombCurve& curve) {
  const auto& g = curve.genera();
  return std::accumulate(g.begin(), g.end(), std::int64_t{0});
}

std::int64_t chi_structure_sheaf(const CombCurve& curve) {
  return 1 - arithmetic_genus(curve);
}

}  // namespace combsyz
