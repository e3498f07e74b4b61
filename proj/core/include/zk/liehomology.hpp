#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zk/chain.hpp"
#include "zk/character.hpp"
#include "zk/chevalley.hpp"
#include "zk/module.hpp"

namespace zk {

// A weight-graded complex stored as one small complex per weight.
struct GradedComplexZ {
  int top = 0;
  std::map<Weight, ChainComplexZ> blocks;

  std::vector<std::size_t> dims() const;
  ChainComplexZ flatten() const;  // block-diagonal, labelled
  void validate() const;
};

// H_i (or H^i for the transposed complex) of every block, merged.
HomologyResult graded_homology(const GradedComplexZ& c, int i, std::optional<std::uint64_t> p = {},
                               bool cohomology = false);

// Λ^k of a module; every root acting on v acts as a derivation.
WeightModule exterior_power(const WeightModule& v, std::size_t k);
// g/p with the adjoint action of p (Levi roots and positive radical roots);
// basis x_i = X_{−β_i} in the radical order.
WeightModule radical_quotient_module(const ParabolicSplit& s);

// Chevalley–Eilenberg complex Λ^•(u_P⁻) ⊗ V with basis (subset S, v) and
// d(x_1∧…∧x_k⊗v) = Σ_i (−1)^{i+1} x_1∧…x̂_i…∧x_k ⊗ x_i v
//                + Σ_{i<j} (−1)^{i+j+1} [x_i,x_j]∧x_1∧…x̂_i…x̂_j…∧x_k ⊗ v.
// This is the Koszul-resolution differential tensored with V viewed as a right
// module through v·x = −x v, up to an overall sign.
// V must carry the actions of all negative radical roots.
GradedComplexZ ce_complex(const ParabolicSplit& s, const WeightModule& v);

struct DegreeReport {
  int degree = 0;
  HomologyResult homology;  // integral, by weight
  Character computed;       // character of the free part
  Character predicted;      // Σ_{w∈W^L(i)} char V^L(w·λ)
  bool character_match = false;
  std::vector<std::uint64_t> torsion_primes;  // small primes dividing the torsion
  bool p_torsion_free = true;
};

struct KostantReport {
  std::string group;
  std::string parabolic;
  Weight lambda;
  std::optional<std::uint64_t> prime;
  bool p_small = false;
  bool cohomology = false;
  std::vector<DegreeReport> degrees;

  bool characters_match() const;
  bool torsion_free() const;  // no p-torsion (vacuous without a prime)
  bool verdict() const { return characters_match() && torsion_free(); }
};

// Homology of u_P⁻ with coefficients in the Weyl module V_Z(λ), computed over Z
// once; the prime only selects which torsion counts.
KostantReport kostant_check(const LieAlgebraZ& g, const ParabolicData& pd, const Weight& lambda,
                            std::optional<std::uint64_t> p);
// Cohomology H^i(u_P, V^τ) through the transposed complex.
KostantReport cohomology_check(const LieAlgebraZ& g, const ParabolicData& pd, const Weight& lambda,
                               std::optional<std::uint64_t> p);
// Re-evaluate an integral report at another prime.
KostantReport at_prime(KostantReport r, std::optional<std::uint64_t> p);

// Λ^i(g/p) as a sum of Levi Weyl lattices generated by highest-weight vectors
// of weights w·0, w ∈ W^L(i).
struct SplittingCertificate {
  int degree = 0;
  std::vector<Weight> tops;
  bool highest_lines_ok = false;  // each w·0 has a rank-one space of L-primitive vectors
  bool ranks_ok = false;          // generated ranks add up to C(r, i)
  Int index = 0;                  // [Λ^i : Σ pieces], 0 if not of full rank
  bool unit_at(std::uint64_t p) const;
};
SplittingCertificate exterior_splitting(const LieAlgebraZ& g, const ParabolicData& pd, int i);

struct BGGDegree {
  int degree = 0;
  std::vector<Weight> omega;      // all Levi composition factors
  std::vector<Weight> survivors;  // linked to λ
  std::vector<Weight> expected;   // {w·λ : w ∈ W^L(i)}
  bool multiplicity_one = false;
  bool match = false;
  std::optional<SplittingCertificate> splitting;  // abelian radical only
  bool splitting_ok = true;
};

struct BGGReport {
  std::string group;
  std::string parabolic;
  Weight lambda;
  std::uint64_t prime = 0;
  std::vector<BGGDegree> degrees;

  bool verdict() const;
};

// Requires λ dominant and p-small (InvalidInput otherwise).
BGGReport bgg_terms(const LieAlgebraZ& g, const ParabolicData& pd, const Weight& lambda, std::uint64_t p);

}  // namespace zk
