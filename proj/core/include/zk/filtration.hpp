#pragma once

#include <cstdint>
#include <vector>

#include "zk/module.hpp"

namespace zk {

// F^k = span of the basis vectors of weight μ with f_I(μ − λ) ≥ k.  The
// filtration is by P⁻-submodules; its graded pieces are the level pieces.
struct LevelFiltration {
  std::vector<std::int64_t> levels;              // ascending, distinct
  std::vector<std::vector<std::size_t>> pieces;  // basis indices per level
  std::vector<std::int64_t> level_of;            // per basis vector

  std::size_t rank_from(std::int64_t k) const;  // rank F^k
};
LevelFiltration level_filtration(const WeightModule& v, const ParabolicData& pd, const Weight& lambda);

// One step 0 = F_0 ⊂ F_1 ⊂ ... of a filtration by P-stable lattices whose
// quotients F_k / F_{k−1} are Levi Weyl lattices V^L(top).
struct FiltrationStep {
  Weight top;
  std::size_t rank = 0;  // rank F_k
  Int torsion = 1;       // order of the torsion of M / F_k before saturation
};
struct PFiltration {
  std::vector<FiltrationStep> steps;
  std::vector<IntMatrix> terms;  // rows spanning F_k (saturated) in M's basis
};

// Filtration of a P-stable lattice M (root vectors of p and of the Levi's
// negative roots must act) with Levi Weyl quotients over Z_(p).  Throws
// InvalidInput when a weight ν of M violates ⟨ν+ρ, α∨⟩ ≤ p for some Levi root
// α, and ConsistencyError when a quotient acquires p-torsion.
PFiltration donkin_filtration(const WeightModule& m, const ParabolicData& pd, std::uint64_t p);

}  // namespace zk
