#pragma once

#include <map>
#include <optional>
#include <vector>

#include "zk/weight.hpp"
#include "zk/zlinalg.hpp"

namespace zk {

// Free Z-complex C_top -> ... -> C_0.  d[i] : C_i -> C_{i-1} is stored as a
// dim(C_{i-1}) x dim(C_i) matrix acting on column vectors; d[0] is 0 x dim(C_0).
struct ChainComplexZ {
  std::vector<std::size_t> dims;
  std::vector<IntMatrix> d;
  // Optional weight of every basis vector, per degree.
  std::vector<std::vector<Weight>> labels;

  int top() const { return static_cast<int>(dims.size()) - 1; }
  bool labelled() const { return !labels.empty(); }
  // Throws ConsistencyError unless every d_{i-1} d_i vanishes.
  void validate() const;
  // Throws InvalidInput if some differential entry joins different weights.
  void check_homogeneous() const;
};

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, divisibility chain

  bool operator==(const HomologyGroup&) const = default;
};

struct HomologyResult {
  int degree = 0;
  std::optional<std::uint64_t> prime;  // set when localized at p
  HomologyGroup total;
  std::map<Weight, HomologyGroup> by_weight;  // empty unless graded
};

// H_i = ker d_i / im d_{i+1}.  With p, torsion is reported as the p-parts only.
// With graded=true and labels present the computation runs per weight block.
HomologyResult homology_at(const ChainComplexZ& c, int i, std::optional<std::uint64_t> p = {},
                           bool graded = true);
std::vector<HomologyResult> homology_all(const ChainComplexZ& c, std::optional<std::uint64_t> p = {},
                                         bool graded = true);

// Homology at C_i (of rank dim) from d_i : C_i -> C_{i-1} and d_next : C_{i+1} -> C_i.
HomologyGroup homology_from(const IntMatrix& d_i, const IntMatrix& d_next, std::size_t dim,
                            std::optional<std::uint64_t> p);

// Merge invariant-factor lists of a direct sum back into a divisibility chain.
std::vector<Int> merge_invariant_factors(const std::vector<Int>& factors);

}  // namespace zk
