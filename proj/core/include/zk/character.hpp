#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "zk/rootdata.hpp"
#include "zk/zlinalg.hpp"

namespace zk {

// Formal character: weight -> multiplicity.
using Character = std::map<Weight, std::int64_t>;

Character operator+(Character a, const Character& b);
Character operator*(const Character& a, const Character& b);
std::int64_t degree(const Character& c);

// Conjugate of w under the Levi Weyl group that is Levi-dominant.
Weight levi_dominant_conjugate(const ParabolicData& pd, Weight w);
Weight dominant_conjugate(const RootDatum& rd, Weight w);

// Irreducible characters by Freudenthal's recursion.  The Levi version uses
// the Levi's positive roots; ξ must be Levi-dominant.
Character levi_character(const ParabolicData& pd, const Weight& xi);
Character weyl_character(const RootDatum& rd, const Weight& lambda);

// Weyl dimension formula ∏ ⟨ξ+ρ,α∨⟩/⟨ρ,α∨⟩ over the Levi's positive roots.
Int levi_dimension(const ParabolicData& pd, const Weight& xi);
Int weyl_dimension(const RootDatum& rd, const Weight& lambda);

// Highest weights of a decomposition of `c` into irreducible Levi characters,
// sorted.  Throws ConsistencyError if `c` is not a nonnegative combination.
std::vector<Weight> levi_decompose(const ParabolicData& pd, Character c);

// char Λ^i(u_P⁻): weights are sums of i distinct negative radical roots.
Character exterior_radical_character(const ParabolicData& pd, int i);

// Highest weights of the Levi composition factors of Λ^i(g/p) ⊗ V(λ).
std::vector<Weight> omega_multiset(const ParabolicData& pd, const Weight& lambda, int i);

// Σ_{w ∈ W^L(i)} char V^L(w·λ).
Character kostant_prediction(const ParabolicData& pd, const Weight& lambda, int i);

// Dominant weights of the datum in a standard sweep, central part fixed (last
// gl coordinate 0, gsp similitude coordinate 0 or 1), with dim V(λ) ≤ max_dim
// and the first coordinate ≤ max_first.
std::vector<Weight> dominant_weights_up_to(const RootDatum& rd, std::int64_t max_dim, std::int64_t max_first);

}  // namespace zk
