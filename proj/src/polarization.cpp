#include "combsyz/polarization.hpp"

#include <stdexcept>
#include <string>

#include "combsyz/errors.hpp"

namespace combsyz {

namespace {

void require_nonzero(const MultiSheaf& sheaf) {
  bool positive = false;
  for (const auto r : sheaf.multirank) {
    if (r < 0) throw ValidationError("malformed sheaf: negative multirank entry");
    if (r > 0) positive = true;
  }
  if (!positive) throw ValidationError("malformed sheaf: zero multirank");
}

}  // namespace

Polarization::Polarization(std::vector<Rat> weights) : weights_(std::move(weights)) {
  if (weights_.size() < 2) {
    throw ValidationError("polarization: needs at least 2 weights");
  }
  Rat sum = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] <= 0 || weights_[i] >= 1) {
      throw ValidationError("polarization: w_" + std::to_string(i + 1) +
                            " must lie in the open interval (0,1), got " +
                            rat_string(weights_[i]));
    }
    sum += weights_[i];
  }
  if (sum != 1) {
    throw ValidationError("polarization: weights must sum to 1, got " + rat_string(sum));
  }
}

Polarization Polarization::uniform(int n) {
  std::vector<Rat> w(static_cast<std::size_t>(n), make_rat(1, n));
  return Polarization(std::move(w));
}

const Rat& Polarization::weight(int i) const {
  if (i < 0 || i >= components()) {
    throw std::out_of_range("component index " + std::to_string(i));
  }
  return weights_[static_cast<std::size_t>(i)];
}

Rat weighted_rank(const MultiSheaf& sheaf, const Polarization& w) {
  if (static_cast<int>(sheaf.multirank.size()) != w.components()) {
    throw ValidationError("sheaf multirank length does not match the polarization");
  }
  require_nonzero(sheaf);
  Rat sum = 0;
  for (int i = 0; i < w.components(); ++i) {
    sum += w.weight(i) * sheaf.multirank[static_cast<std::size_t>(i)];
  }
  return sum;
}

Rat slope(const MultiSheaf& sheaf, const Polarization& w) {
  return Rat(sheaf.chi) / weighted_rank(sheaf, w);
}

SlopeComparison compare_slopes(const MultiSheaf& a, const MultiSheaf& b,
                               const Polarization& w) {
  SlopeComparison cmp;
  cmp.left = a;
  cmp.right = b;
  // Both weighted ranks are positive, so cross-multiplication preserves the
  // order and avoids picking a division route.
  cmp.cross_product_gap = Rat(a.chi) * weighted_rank(b, w) - Rat(b.chi) * weighted_rank(a, w);
  const int s = sgn(cmp.cross_product_gap);
  cmp.relation = s > 0 ? SlopeOrder::Greater : (s < 0 ? SlopeOrder::Less : SlopeOrder::Equal);
  return cmp;
}

Verdict verdict_at(const Polarization& w, const CombCurve& curve,
                   const GeneratedPairData& pair,
                   const std::vector<Destabilizer>& catalog) {
  const MultiSheaf m = syzygy_multisheaf(curve, pair);
  bool tie = false;
  for (const auto& entry : catalog) {
    const SlopeComparison cmp = compare_slopes(entry.sheaf, m, w);
    if (cmp.relation == SlopeOrder::Greater) {
      return {Verdict::Kind::UnstableAt, entry};
    }
    if (cmp.relation == SlopeOrder::Equal) tie = true;
  }
  return {tie ? Verdict::Kind::CatalogSemistableAt : Verdict::Kind::CatalogStableAt,
          std::nullopt};
}

}  // namespace combsyz
