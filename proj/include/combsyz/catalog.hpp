#pragma once

#include <vector>

#include "combsyz/curve.hpp"
#include "combsyz/sheaf.hpp"

namespace combsyz {

enum class DestabilizerKind {
  KernelTwistNonBase,  // ker(rho_i|V) (x) O_{C_i}(-p_i), i non-base
  KernelTwistBase,     // ker(rho_n|V) (x) O_{C_n}(-p_1-...-p_{n-1})
  RestrictionKernel,   // ker(rho_i|V) (x) O_{C_i} inside M|_{C_i} (component check)
};

struct Destabilizer {
  MultiSheaf sheaf;
  DestabilizerKind kind;
  int source_component = 0;
};

// The closed list of candidate destabilizing subsheaves of the syzygy sheaf:
// one twisted kernel sheaf per component with t_i > 0, ascending component
// index (base last).  chi values come from component-wise Riemann-Roch on
// twists of the trivial bundle, chi(O_{C_i}(-D)) = 1 - g_i - deg D, scaled
// by the kernel rank.
std::vector<Destabilizer> build_catalog(const CombCurve& curve,
                                        const GeneratedPairData& pair);

enum class RestrictionVerdict { Unstable, Inconclusive };

// Classical slope check on a single component: the rank-t_i trivial kernel
// subbundle of M|_{C_i} has slope 0, against deg(M|_{C_i})/rk = -d_i/(l-r).
// Unstable exactly when t_i > 0 and d_i > 0.
RestrictionVerdict restriction_slope_check(const CombCurve& curve,
                                           const GeneratedPairData& pair, int i);

// The subsheaf behind an Unstable restriction verdict: the untwisted kernel
// sheaf ker(rho_i|V) (x) O_{C_i}, chi = t_i (1 - g_i).  Requires t_i > 0.
Destabilizer restriction_kernel_witness(const CombCurve& curve,
                                        const GeneratedPairData& pair, int i);

}  // namespace combsyz
