#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "zk/character.hpp"
#include "zk/rootdata.hpp"
#include "zk/zlinalg.hpp"

namespace zk {

// Sparse integer vector keyed by basis index.
using SparseVec = std::map<std::size_t, Int>;

void axpy(SparseVec& y, const Int& a, const SparseVec& x);
bool exact_divide(SparseVec& v, unsigned long k);

// Column-sparse integer matrix: cols[j] is the image of basis vector j.
struct SparseOp {
  std::size_t rows = 0;
  std::vector<SparseVec> cols;

  SparseVec apply(const SparseVec& v) const;
  IntVector apply(const IntVector& v) const;
  IntMatrix dense() const;
  static SparseOp from_dense(const IntMatrix& m);
};

// A free Z-module with a weight on every basis vector and root vectors acting
// through `apply`.  Implemented by polynomial ambients and by finished modules.
class LinearSpace {
 public:
  virtual ~LinearSpace() = default;
  virtual Weight weight(std::size_t key) const = 0;
  virtual SparseVec apply(std::size_t root_id, const SparseVec& v) const = 0;
  virtual bool acts(std::size_t root_id) const = 0;
};

// Lattice with weight-graded basis and integral root-vector actions.
class WeightModule : public LinearSpace {
 public:
  WeightModule() = default;
  WeightModule(std::shared_ptr<const RootDatum> rd, std::vector<Weight> weights);

  const RootDatum& datum() const { return *rd_; }
  std::shared_ptr<const RootDatum> datum_ptr() const { return rd_; }
  std::size_t dim() const { return weights_.size(); }
  const std::vector<Weight>& weights() const { return weights_; }
  std::map<Weight, std::vector<std::size_t>> blocks() const;
  Character character() const;

  Weight weight(std::size_t key) const override { return weights_[key]; }
  SparseVec apply(std::size_t root_id, const SparseVec& v) const override;
  bool acts(std::size_t root_id) const override { return root_id < ops_.size() && ops_[root_id].has_value(); }

  void set_op(std::size_t root_id, SparseOp op);
  const SparseOp& op(std::size_t root_id) const;
  // X^(m) as a dense matrix; throws ConsistencyError if not integral.
  IntMatrix divided_power(std::size_t root_id, unsigned m) const;
  // exp(X) = Σ_m X^(m) (inverse when sign < 0)
  IntMatrix exp_action(std::size_t root_id, int sign = 1) const;

  // Contravariant dual on the dual basis: X_β acts by ᵗ(X_{−β}).
  WeightModule dual() const;
  // Same module with every weight shifted.
  WeightModule shifted(const Weight& by) const;
  // Throws ConsistencyError unless each X_β maps weight μ into μ+β.
  void check_weights() const;

 private:
  std::shared_ptr<const RootDatum> rd_;
  std::vector<Weight> weights_;
  std::vector<std::optional<SparseOp>> ops_;
};

// Sublattice of a LinearSpace, stored per weight as Hermite rows over the keys.
struct GradedLattice {
  struct Block {
    std::vector<std::size_t> keys;  // sorted
    Hermite h;
  };
  std::map<Weight, Block> blocks;

  std::size_t rank() const;
  void add(const LinearSpace& s, const std::vector<SparseVec>& vs);
  std::vector<SparseVec> vectors() const;  // basis, in weight order
};

// Z-span of all ordered products X_{r_1}^{(m_1)} ... X_{r_k}^{(m_k)} seed
// (rightmost factor applied first) for the given root ids.
GradedLattice generate(const LinearSpace& s, const std::vector<SparseVec>& seeds, const std::vector<std::size_t>& roots);

// Restrict the space to a stable lattice: basis = lattice.vectors(), actions of
// the listed roots solved integrally.  Throws ConsistencyError if not stable.
WeightModule restrict_to(const LinearSpace& s, const GradedLattice& lat, std::shared_ptr<const RootDatum> rd,
                         const std::vector<std::size_t>& roots);

// Root ids of the negative roots, in the order used for Weyl-lattice generation.
std::vector<std::size_t> negative_roots(const RootDatum& rd);
std::vector<std::size_t> levi_negative_roots(const ParabolicData& pd);
std::vector<std::size_t> all_roots(const RootDatum& rd);
std::vector<std::size_t> levi_roots(const ParabolicData& pd);

}  // namespace zk
