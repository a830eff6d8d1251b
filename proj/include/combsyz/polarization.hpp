#pragma once

#include <optional>
#include <vector>

#include "combsyz/catalog.hpp"
#include "combsyz/rational.hpp"
#include "combsyz/sheaf.hpp"

namespace combsyz {

// Rational weights w_i with 0 < w_i < 1 and sum exactly 1, one per component.
class Polarization {
 public:
  explicit Polarization(std::vector<Rat> weights);

  static Polarization uniform(int n);

  int components() const { return static_cast<int>(weights_.size()); }
  const Rat& weight(int i) const;
  const std::vector<Rat>& weights() const { return weights_; }

  friend bool operator==(const Polarization&, const Polarization&) = default;

 private:
  std::vector<Rat> weights_;
};

// sum w_i * r_i; positive for any nonzero sheaf.
Rat weighted_rank(const MultiSheaf& sheaf, const Polarization& w);

// mu_w(F) = chi(F) / sum(w_i r_i).
Rat slope(const MultiSheaf& sheaf, const Polarization& w);

enum class SlopeOrder { Less, Equal, Greater };

struct SlopeComparison {
  MultiSheaf left;
  MultiSheaf right;
  SlopeOrder relation = SlopeOrder::Equal;
  // chi_L * wr(R) - chi_R * wr(L); both weighted ranks are positive, so the
  // sign decides the relation without any division.
  Rat cross_product_gap;
};

SlopeComparison compare_slopes(const MultiSheaf& a, const MultiSheaf& b,
                               const Polarization& w);

struct Verdict {
  enum class Kind { UnstableAt, CatalogSemistableAt, CatalogStableAt };
  Kind kind = Kind::CatalogStableAt;
  std::optional<Destabilizer> witness;  // set exactly when UnstableAt
};

// Fixed-polarization verdict against the catalog.  UnstableAt reports the
// first entry (lowest component index, base last) whose slope strictly
// exceeds mu_w(M); an exact slope tie without any violation gives
// CatalogSemistableAt.  "Stable"/"semistable" are relative to the catalog,
// a necessary-condition check, not a full semistability proof.
Verdict verdict_at(const Polarization& w, const CombCurve& curve,
                   const GeneratedPairData& pair,
                   const std::vector<Destabilizer>& catalog);

}  // namespace combsyz
