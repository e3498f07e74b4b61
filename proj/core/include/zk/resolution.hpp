#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "zk/nilgroup.hpp"

namespace zk {

// Z-basis element γ·e_S of a free ZΓ-module with generators indexed by masks.
struct Cell {
  Coords g;
  std::uint32_t mask = 0;
  auto operator<=>(const Cell&) const = default;
};
using GChain = std::map<Cell, Int>;

void add_to(GChain& a, const GChain& b, const Int& c = 1);

// Free ZΓ-resolution of Z with ZΓ-rank C(r, n) in degree n.  Built from the
// trivial group upward along Γ_i = ⟨g_i, ..., g_r⟩: with t = g_i and
// N = Γ_{i+1}, the resolution of Γ_i is the mapping cone of T = R − 1 on
// P = ZΓ_i ⊗_N F, where R lifts γN ↦ γtN through the t-twisted chain map of F.
// Bit i of a mask marks the cone's shifted copy at stage i.  A Z-linear
// contracting homotopy H is carried along (D H + H D = 1 − σε, H_{−1} = σ).
class FreeResolution {
 public:
  explicit FreeResolution(const PolyZGroup& g);

  const PolyZGroup& group() const { return g_; }
  std::size_t length() const { return r_; }
  std::vector<std::uint32_t> generators(int n) const;  // masks with n bits, ascending
  // D(e_S) with group-ring coefficients
  const GChain& boundary(std::uint32_t mask) { return dgen(0, mask); }
  GChain d(const GChain& c) { return apply_d(0, c); }
  GChain homotopy(const GChain& c) { return apply_h(0, c); }
  Int augmentation(const GChain& c) const;

  struct Certificate {
    bool dd_zero = true;
    bool homotopy_ok = true;
    std::size_t checked = 0;  // cells checked, over all stages
    bool ok() const { return dd_zero && homotopy_ok; }
  };
  // Checks both identities on every generator of every stage, and on
  // `samples` translated generators γ·e_S per stage.
  Certificate certify(std::size_t samples = 0, std::uint64_t seed = 1);

 private:
  const GChain& dgen(std::size_t lvl, std::uint32_t mask);
  GChain apply_d(std::size_t lvl, const GChain& c);
  const GChain& cell_h(std::size_t lvl, const Cell& c);
  GChain apply_h(std::size_t lvl, const GChain& c);
  const GChain& phi(std::size_t lvl, std::uint32_t mask);
  GChain translate(const Coords& by, const GChain& c);
  GChain p_homotopy(std::size_t lvl, const GChain& c);
  GChain p_twist(std::size_t lvl, const GChain& c);  // T = R − 1

  Coords mul(const Coords& x, const Coords& y);

  PolyZGroup g_;
  std::size_t r_;
  std::vector<std::map<std::uint32_t, GChain>> dgen_, phi_;
  std::vector<std::map<Cell, GChain>> h_;
  std::map<std::pair<Coords, Coords>, Coords> mul_;
};

}  // namespace zk
