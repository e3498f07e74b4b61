#pragma once

#include <optional>

#include "zk/weylmod.hpp"

namespace zk {

// Young lattice c_λ·V^{<n>} for GSp(2g), n = a_g + ... + a_1, inside
// Γ^{row 1}(V) ⊗ Γ^{row 2}(V) ⊗ ... (row-symmetric tensors, orbit-sum basis).
//
// The sublattice "top" = U_Z(u_P⁻)·c_λ(W^{⊗n}) for the Lagrangian W spanned by
// the positive-weight basis vectors (P the Siegel parabolic) always satisfies
// min ⊆ top ⊆ Young ⊆ max, so [max : top] bounds [max : Young].  The Young
// lattice itself is computed from the contraction kernel when n ≤ exact_budget.
struct YoungData {
  Weight highest;
  std::size_t tensor_degree = 0;
  WeylLattice min;  // realized in the same ambient
  ContravariantForm form;
  RatMatrix top_in_min;
  std::optional<RatMatrix> young_in_min;
};

YoungData young_lattice(const LieAlgebraZ& g, const Weight& lambda, std::size_t exact_budget = 6);

// V^{<n>} ∩ (weight μ), as words in the letters 0..2g−1: rows of the kernel of
// all contractions (exposed for tests).
struct TensorWeightSpace {
  std::vector<std::vector<std::uint8_t>> words;
  IntMatrix kernel;  // rows, over the words
};
TensorWeightSpace contraction_kernel(const RootDatum& rd, std::size_t n, const Weight& mu);

}  // namespace zk
