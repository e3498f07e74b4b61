#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zk/chain.hpp"
#include "zk/chevalley.hpp"
#include "zk/nilgroup.hpp"
#include "zk/resolution.hpp"

namespace zk {

// Koszul complex Λ^•(Z^r) ⊗ M with d(e_S ⊗ m) = Σ_a (−1)^a e_{S∖s_a} ⊗ (g_{s_a} − 1)m.
// Only valid for abelian Γ.
ChainComplexZ koszul_complex(const PolyZGroup& g, const GammaModule& m);
// M ⊗_{ZΓ} F for the free resolution F, with m·γ = γ⁻¹m.
ChainComplexZ coinvariant_complex(FreeResolution& f, const GammaModule& m);

struct GroupHomology {
  std::vector<HomologyResult> degrees;  // localized at p when given
  bool koszul = false;
  std::optional<FreeResolution::Certificate> certificate;  // cone path only
};
// Abelian groups use the Koszul complex unless `use_resolution` is set.
// ConsistencyError when the resolution certificates fail.
GroupHomology group_homology(const PolyZGroup& g, const GammaModule& m, std::optional<std::uint64_t> p,
                             bool use_resolution = false);

struct DegenerationDegree {
  int degree = 0;
  std::int64_t predicted = 0;      // Σ_{w∈W^L(n)} dim V^L(w·λ)
  std::size_t lie_rank = 0;        // E₁: free rank of H_n(u_P⁻, V)
  std::size_t group_rank = 0;      // abutment: free rank of H_n(Γ, V)
  std::size_t p_torsion_count = 0; // cyclic p-primary summands of H_n(Γ, V)
  std::size_t fp_dim = 0;          // dim_{F_p} H_n(Γ, V ⊗ F_p)
  bool rank_ok = false;
  bool p_torsion_free = false;
};

struct DegenerationReport {
  std::string group;
  std::string parabolic;
  Weight lambda;
  std::uint64_t prime = 0;
  bool p_small = false;
  std::size_t gamma_rank = 0;
  bool abelian = false;
  bool koszul = false;
  bool star_ok = false;
  bool cross_checked = false;  // Koszul and cone paths agree (abelian, small modules)
  std::optional<FreeResolution::Certificate> certificate;
  std::vector<DegenerationDegree> degrees;

  bool verdict() const;  // ranks match, no p-torsion, certificates hold
};

// One report per prime; the complexes are built once.  p-torsion in H_n is
// detected as rank_Fp d_{n+1} < rank_Q d_{n+1}.  λ must be dominant and the
// radical of rank ≤ 4 (InvalidInput otherwise); p-smallness is only recorded.
std::vector<DegenerationReport> degeneration_sweep(const LieAlgebraZ& g, const ParabolicData& pd,
                                                   const Weight& lambda, const std::vector<std::uint64_t>& primes);
DegenerationReport degeneration_check(const LieAlgebraZ& g, const ParabolicData& pd, const Weight& lambda,
                                      std::uint64_t p);

}  // namespace zk
