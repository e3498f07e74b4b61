#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "zk/chevalley.hpp"
#include "zk/module.hpp"

namespace zk {

using Monomial = std::vector<std::uint16_t>;

// Polynomial algebra Sym(W) or divided-power algebra Γ(W) on a lattice W with
// root vectors acting on W; they act on the algebra as derivations.  Monomials
// are interned on first use, so keys stay stable for the life of the object.
class PolynomialAmbient : public LinearSpace {
 public:
  enum class Kind { Symmetric, Divided };

  PolynomialAmbient(std::shared_ptr<const RootDatum> rd, Kind kind, std::vector<Weight> var_weights,
                    std::vector<SparseOp> var_action, Weight shift);

  Kind kind() const { return kind_; }
  std::size_t num_vars() const { return var_weights_.size(); }
  std::size_t key(const Monomial& m) const;
  const Monomial& monomial(std::size_t key) const { return monos_[key]; }

  Weight weight(std::size_t key) const override;
  SparseVec apply(std::size_t root_id, const SparseVec& v) const override;
  bool acts(std::size_t root_id) const override { return root_id < action_.size(); }

 private:
  std::shared_ptr<const RootDatum> rd_;
  Kind kind_;
  std::vector<Weight> var_weights_;
  std::vector<SparseOp> action_;  // per root id, on the variables
  Weight shift_;
  mutable std::vector<Monomial> monos_;
  mutable std::map<Monomial, std::size_t> index_;
};

// Action of every root vector on Λ^k of the natural lattice, in the basis of
// increasing k-subsets.
std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k);
SparseOp exterior_action(const SmallMat& x, std::size_t k);

// Sym^{m_1}(Λ^1) ⊗ ... ⊗ Sym^{m_k}(Λ^k) with the central twist, and the
// product of the highest exterior vectors: a highest-weight vector of weight λ
// (λ dominant).  For gl_n, m_i = λ_i − λ_{i+1} and the twist is det^{λ_n}; for
// gsp_2g, m_k = a_{k+1} − a_k (m_g = a_g) and the twist is a power of the
// similitude character.
struct AmbientSeed {
  std::shared_ptr<PolynomialAmbient> space;
  SparseVec highest;
};
AmbientSeed polynomial_model(const LieAlgebraZ& g, const Weight& lambda);

}  // namespace zk
