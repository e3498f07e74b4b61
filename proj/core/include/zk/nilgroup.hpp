#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "zk/chevalley.hpp"
#include "zk/module.hpp"

namespace zk {

// Mal'cev coordinates: x ↦ g_1^{x_1} g_2^{x_2} ... g_r^{x_r}.
using Coords = std::vector<std::int64_t>;

// Γ = U_P⁻(Z) with canonical generators g_i = exp(X_{−β_i}) on the natural
// lattice, ordered by level.  Every tail ⟨g_s, ..., g_r⟩ is normal.
class PolyZGroup {
 public:
  std::size_t rank() const { return order_.size(); }
  std::size_t natural_dim() const { return n_; }
  std::int64_t level(std::size_t i) const { return levels_[i]; }
  const std::vector<std::int64_t>& levels() const { return levels_; }
  std::int64_t nilpotency_class() const;
  // position in the parabolic split's radical order of generator i
  std::size_t split_index(std::size_t i) const { return order_[i]; }
  std::size_t root_id(std::size_t i) const { return roots_[i]; }
  const ParabolicSplit& split() const { return *split_; }
  const SmallMat& generator(std::size_t i) const { return gens_[i]; }
  bool abelian() const;

  Coords identity() const { return Coords(rank(), 0); }
  Coords unit(std::size_t i, std::int64_t k = 1) const;
  SmallMat element(const Coords& x) const;
  // Coordinates of a matrix of Γ; ConsistencyError if it is not in Γ.
  Coords collect(const SmallMat& m) const;
  Coords multiply(const Coords& x, const Coords& y) const;
  Coords inverse(const Coords& x) const;

  friend PolyZGroup build_group(const ParabolicSplit& s, std::vector<std::size_t> order);

 private:
  std::shared_ptr<const ParabolicSplit> split_;
  std::size_t n_ = 0;
  std::vector<std::size_t> order_, roots_;
  std::vector<std::int64_t> levels_;
  std::vector<SmallMat> gens_;
  std::vector<std::vector<SmallMat>> divided_;  // X_i^(m), m = 0..
  std::vector<std::pair<std::size_t, std::size_t>> anchor_;
  std::vector<std::int64_t> anchor_value_;
};

// `order` permutes the radical indices and must keep levels non-decreasing;
// empty means the split's own order.
PolyZGroup build_group(const ParabolicSplit& s, std::vector<std::size_t> order = {});

// Degree-two parts of the Hall polynomials: b[k][i][j] is the s·t
// coefficient of P_k(s e_i, t e_j).
struct HallData {
  std::vector<std::vector<std::vector<Rat>>> b;
  bool lower_vanishes = false;  // b_k(e_i, e_j) = 0 for i < j
  bool identities_ok = false;   // P(x, 0) = x, P(0, y) = y on the sample box
  bool ok() const { return lower_vanishes && identities_ok; }
};
HallData hall_data(const PolyZGroup& g, std::int64_t box = 5);

// Graded Lie ring of the isolated lower central series of Γ.
struct GradedLieTable {
  std::vector<std::int64_t> levels;
  // bracket[i][j] = coordinates of [ḡ_i, ḡ_j]
  std::vector<std::vector<std::map<std::size_t, Rat>>> bracket;
  std::vector<std::size_t> graded_ranks;  // by level 1..class
  bool matches_lie = false;               // equals the u_P⁻ structure constants
  bool ranks_match = false;               // equals the isolated series of u_P⁻
};
GradedLieTable gr_isol_group(const PolyZGroup& g);

// Hartley's basis of the isolator I^(n) inside ZΓ modulo I_Q^{d+1}, realized
// by x ↦ (∏ C(x_i, j_i))_{ν(j) ≤ d}.
struct HartleyReport {
  int n = 0, d = 0;
  std::size_t model_dim = 0;   // #{j : ν(j) ≤ d}
  bool powers_ok = false;      // φ(I_Q^k) = span{e_j : ν(j) ≥ k} for k ≤ d+1
  bool span_ok = false;        // span_Z{u(j) : ν(j) ≥ n} = φ(ZΓ) ∩ φ(I_Q^n)
  bool tail_vanishes = false;  // u(j) ↦ 0 when ν(j) > d
  bool ok() const { return powers_ok && span_ok && tail_vanishes; }
};
// Inconclusive unless d ≥ n · class.
HartleyReport hartley_basis_check(const PolyZGroup& g, int n, int d);

// Γ acting on a lattice, with the f_I-level filtration of its basis.
struct GammaModule {
  std::size_t dim = 0;
  std::vector<std::vector<IntMatrix>> divided;  // per generator X^(m), m ≥ 0
  std::vector<std::int64_t> level;              // per basis vector
  bool star_ok = true;

  // ρ(g_i^k) = Σ_m k^m X^(m)
  IntMatrix power(std::size_t i, std::int64_t k) const;
  IntMatrix rho(const Coords& x) const;
};
// Requires the module to carry the negative radical root actions.  Checks
// (g_i − 1)v − X v ∈ F^{k+ν(i)+1} for v ∈ F^k on every basis vector.
GammaModule gamma_action(const PolyZGroup& g, const WeightModule& v, const Weight& lambda);
GammaModule trivial_gamma_module(const PolyZGroup& g, std::size_t dim = 1);

}  // namespace zk
