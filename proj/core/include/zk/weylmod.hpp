#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "zk/ambient.hpp"
#include "zk/chevalley.hpp"
#include "zk/module.hpp"

namespace zk {

enum class Flavor { Min, Max, Young };
const char* flavor_name(Flavor f);

// An admissible lattice in V_Q(λ) with its G-action.  `in_min` holds the basis
// rows in coordinates of the minimal lattice of the same construction.
struct WeylLattice {
  Weight highest;
  Flavor flavor = Flavor::Min;
  WeightModule module;
  RatMatrix in_min;

  std::size_t dim() const { return module.dim(); }
  std::size_t highest_index() const;  // basis vector spanning the λ-line
};

// Gram matrix of the contravariant form on a minimal lattice with
// ⟨v_λ, v_λ⟩ = 1, computed from the action alone: each weight vector is written
// through the generators f_α b (α simple) and ⟨f_α b, c⟩ = ⟨b, e_α c⟩.
struct ContravariantForm {
  IntMatrix gram;
  std::map<Weight, std::vector<std::size_t>> blocks;
};
ContravariantForm contravariant_gram(const WeightModule& min, const Weight& lambda);

// U_Z(n⁻)·v_λ inside the polynomial model.
WeylLattice minimal_lattice(const LieAlgebraZ& g, const Weight& lambda);
WeylLattice maximal_lattice(const WeylLattice& min, const ContravariantForm& form);
// Min and max flavors; Young is built by young_lattice.
WeylLattice build_weyl_lattice(const LieAlgebraZ& g, const Weight& lambda, Flavor flavor);

// Invariant factors of L/min and of max/L for min ⊆ L ⊆ max.
struct IndexDivisors {
  std::vector<Int> over_min;
  std::vector<Int> under_max;
};
IndexDivisors lattice_indices(const RatMatrix& in_min, const ContravariantForm& form);
// Invariant factors of max/min: the Smith form of the Gram matrix.
std::vector<Int> max_over_min(const ContravariantForm& form);

// Levi Weyl lattice V^L_Z(ξ): generated by the Levi's negative root vectors on a
// highest-weight vector of weight ξ + ζ, with ζ a Levi-central dominating twist
// that is removed again afterwards.  Only Levi roots act.
WeightModule levi_weyl_lattice(const LieAlgebraZ& g, const ParabolicData& pd, const Weight& xi);
Weight levi_dominating_twist(const ParabolicData& pd, const Weight& xi);
Weight fundamental_weight(const RootDatum& rd, int i);

}  // namespace zk
