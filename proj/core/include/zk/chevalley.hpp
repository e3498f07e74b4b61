#pragma once

#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "zk/rootdata.hpp"
#include "zk/zlinalg.hpp"

namespace zk {

// Chevalley Z-form of Lie(G) as integer matrices on the natural lattice.
// Basis order: a Z-basis of Lie(T) (E_ii for gl_n; D_1..D_g and the similitude
// element for gsp_2g), then X_β for every root id.  X_{−β} = ᵗX_β, so the
// transpose is the contravariant anti-involution τ.
class LieAlgebraZ {
 public:
  const RootDatum& datum() const { return *rd_; }
  std::shared_ptr<const RootDatum> datum_ptr() const { return rd_; }
  std::size_t dimension() const { return torus_.size() + roots_.size(); }
  std::size_t torus_rank() const { return torus_.size(); }
  std::size_t natural_dim() const { return rd_->natural_dim(); }

  const SmallMat& torus(std::size_t i) const { return torus_[i]; }
  const SmallMat& root_vector(std::size_t root_id) const { return roots_[root_id]; }
  const SmallMat& basis(std::size_t k) const;
  std::size_t basis_index_of_root(std::size_t root_id) const { return torus_.size() + root_id; }
  // ⟨μ, H⟩ for the i-th torus basis element
  std::int64_t torus_pairing(const Weight& mu, std::size_t i) const;
  // H_β = [X_β, X_{−β}] as a matrix (the coroot)
  SmallMat coroot_matrix(std::size_t root_id) const;

  // [X_a, X_b] = c X_{a+b}; nullopt when a+b is not a root (a ≠ −b)
  std::optional<std::pair<std::size_t, std::int64_t>> root_bracket(std::size_t a, std::size_t b) const;
  // Coordinates of a matrix in the basis; throws if it is not in the Z-span.
  std::vector<std::int64_t> decompose(const SmallMat& m) const;
  // Nonzero structure constants (i, j, k, c): [b_i, b_j] = Σ c b_k
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::int64_t>> structure_constants() const;

  friend LieAlgebraZ build_algebra(const RootDatum& rd);

 private:
  std::shared_ptr<const RootDatum> rd_;
  std::vector<SmallMat> torus_;
  std::vector<SmallMat> roots_;
  std::vector<std::pair<std::size_t, std::size_t>> anchor_;  // defining entry of each X_β
  std::vector<std::vector<std::optional<std::pair<std::size_t, std::int64_t>>>> table_;
};

LieAlgebraZ build_algebra(const RootDatum& rd);

SmallMat commutator(const SmallMat& a, const SmallMat& b);
SmallMat transpose(const SmallMat& a);
IntMatrix to_int_matrix(const SmallMat& a);

// Integral Lie ring on Z^dim given by its bracket table on basis vectors.
struct LieRing {
  std::size_t dim = 0;
  std::vector<std::vector<IntVector>> br;  // br[i][j] = coordinates of [x_i, x_j]

  IntVector bracket(const IntVector& a, const IntVector& b) const;
  bool jacobi_holds() const;
};

// g = p ⊕ u_P⁻ with u_P⁻ basis x_i = X_{−β_i}, β_i = pd.radical()[i] (level order).
struct ParabolicSplit {
  std::shared_ptr<const LieAlgebraZ> g;
  std::shared_ptr<const ParabolicData> pd;
  std::vector<std::size_t> p_basis;   // indices into g's basis
  std::vector<std::size_t> u_basis;   // X_β, β ∈ R⁺ \ R_L⁺
  std::vector<std::size_t> um_basis;  // X_{−β_i} in the level order
  std::vector<std::size_t> um_roots;  // root ids −β_i
  std::vector<std::int64_t> levels;   // ν(i)

  std::size_t rank() const { return um_roots.size(); }
  LieRing radical_ring() const;  // u_P⁻ in the basis x_i
  // [x_i, x_j] = c x_k, or nullopt if zero
  std::optional<std::pair<std::size_t, std::int64_t>> bracket(std::size_t i, std::size_t j) const;
};

ParabolicSplit parabolic_split(const LieAlgebraZ& g, const ParabolicData& pd);

// X^m / m! for a nilpotent X on a lattice; throws ConsistencyError when an
// entry is not integral (the lattice is then not admissible).
IntMatrix divided_power_action(const IntMatrix& x, unsigned m);

// Isolated lower central series C^(1) ⊃ C^(2) ⊃ ... ⊃ 0 of a nilpotent Lie ring.
struct IsolatedSeries {
  std::vector<Hermite> terms;        // C^(1), C^(2), ..., last is nonzero
  std::vector<std::size_t> gr_ranks;  // rank C^(i)/C^(i+1)
};
IsolatedSeries isolated_lcs(const LieRing& u);

}  // namespace zk
