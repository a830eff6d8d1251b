#include "combsyz/catalog.hpp"

#include <stdexcept>
#include <string>

#include "combsyz/errors.hpp"

namespace combsyz {

namespace {

std::string twist_label(int component, int n, bool base) {
  // 1-based display labels matching the node naming p_1..p_{n-1}
  std::string s = "ker(rho_" + std::to_string(component + 1) + "|V) (x) O_C" +
                  std::to_string(component + 1) + "(";
  if (base) {
    for (int k = 1; k < n; ++k) {
      s += "-p_" + std::to_string(k);
    }
  } else {
    s += "-p_" + std::to_string(component + 1);
  }
  s += ")";
  return s;
}

}  // namespace

std::vector<Destabilizer> build_catalog(const CombCurve& curve,
                                        const GeneratedPairData& pair) {
  if (curve.components() != pair.components()) {
    throw ValidationError("curve/pair component count mismatch");
  }
  const int n = curve.components();
  std::vector<Destabilizer> catalog;
  for (int i = 0; i < n; ++i) {
    const std::int64_t t = kernel_rank(pair, i);
    if (t == 0) continue;  // vacuous entries are dropped
    const bool base = (i == curve.base_index());
    // chi(O_{C_i}(-D)) = 1 - g_i - deg D, scaled by the kernel rank; the
    // twist is by one node for a tooth, by all n-1 nodes for the base.
    const std::int64_t twist_degree = base ? curve.node_count() : 1;
    MultiSheaf sheaf;
    sheaf.multirank.assign(static_cast<std::size_t>(n), 0);
    sheaf.multirank[static_cast<std::size_t>(i)] = t;
    sheaf.chi = t * (1 - curve.genus(i) - twist_degree);
    sheaf.label = twist_label(i, n, base);
    catalog.push_back({std::move(sheaf),
                       base ? DestabilizerKind::KernelTwistBase
                            : DestabilizerKind::KernelTwistNonBase,
                       i});
  }
  return catalog;
}

RestrictionVerdict restriction_slope_check(const CombCurve& curve,
                                           const GeneratedPairData& pair, int i) {
  if (curve.components() != pair.components()) {
    throw ValidationError("curve/pair component count mismatch");
  }
  if (i < 0 || i >= curve.components()) {
    throw std::out_of_range("component index " + std::to_string(i));
  }
  // mu(trivial kernel subbundle) = 0 must strictly beat -d_i/(l-r)
  if (kernel_rank(pair, i) > 0 && pair.degree(i) > 0) {
    return RestrictionVerdict::Unstable;
  }
  return RestrictionVerdict::Inconclusive;
}

Destabilizer restriction_kernel_witness(const CombCurve& curve,
                                        const GeneratedPairData& pair, int i) {
  if (i < 0 || i >= curve.components()) {
    throw std::out_of_range("component index " + std::to_string(i));
  }
  const std::int64_t t = kernel_rank(pair, i);
  if (t == 0) throw ValidationError("no kernel on component " + std::to_string(i + 1));
  MultiSheaf sheaf;
  sheaf.multirank.assign(static_cast<std::size_t>(curve.components()), 0);
  sheaf.multirank[static_cast<std::size_t>(i)] = t;
  sheaf.chi = t * (1 - curve.genus(i));
  sheaf.label = "ker(rho_" + std::to_string(i + 1) + "|V) (x) O_C" + std::to_string(i + 1);
  return {std::move(sheaf), DestabilizerKind::RestrictionKernel, i};
}

}  // namespace combsyz
