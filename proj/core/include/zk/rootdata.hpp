#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zk/weight.hpp"

namespace zk {

enum class Family { GL, GSp };

// Square integer matrix acting on weight coordinates (column convention).
using SmallMat = std::vector<std::vector<std::int64_t>>;

struct WeylElt {
  SmallMat mat;
  std::vector<int> word;  // w = s_{word[0]} s_{word[1]} ..., 0-based simple indices
  int length = 0;

  Weight apply(const Weight& x) const;
  bool operator==(const WeylElt& o) const { return mat == o.mat; }
};

WeylElt compose(const WeylElt& a, const WeylElt& b);  // a∘b, word/length recomputed by caller
SmallMat inverse_signed_perm(const SmallMat& m);

// Root datum of GL(n) or GSp(2g) in the standard coordinates.
//   GL(n):    X = Z^n, α_i = ε_i − ε_{i+1}, ρ = (n−1, …, 0).
//   GSp(2g):  X = {(a_g..a_1; c) : c ≡ Σa mod 2}, simple roots α_i = ε_{g−i+1} − ε_{g−i}
//             (i < g) and α_g = 2ε_1, ρ = (g, …, 1; 0).
// Positive roots are indexed 0..N−1; index N+i denotes the negative of root i.
class RootDatum {
 public:
  static RootDatum gl(int n);
  static RootDatum gsp(int two_g);
  // "gl:3", "gsp:4"
  static RootDatum parse(const std::string& spec);

  Family family() const { return family_; }
  // n for GL(n), g for GSp(2g)
  int n() const { return n_; }
  std::string name() const;
  std::size_t dim() const { return dim_; }  // length of weight vectors
  std::size_t rank() const { return simple_.size(); }
  std::size_t natural_dim() const;          // n or 2g
  std::size_t num_positive() const { return pos_.size(); }

  const std::vector<Weight>& simple_roots() const { return simple_; }
  const std::vector<Coweight>& simple_coroots() const { return simple_co_; }
  const std::vector<Weight>& positive_roots() const { return pos_; }
  const std::vector<Coweight>& positive_coroots() const { return pos_co_; }
  // all roots: 0..N−1 positive, N..2N−1 negative
  Weight root(std::size_t id) const;
  Coweight coroot(std::size_t id) const;
  std::size_t num_roots() const { return 2 * pos_.size(); }
  std::optional<std::size_t> root_index(const Weight& r) const;
  std::size_t negate(std::size_t id) const { return id < pos_.size() ? id + pos_.size() : id - pos_.size(); }
  bool is_positive(std::size_t id) const { return id < pos_.size(); }
  std::optional<std::size_t> simple_index_of(std::size_t id) const;

  std::vector<std::vector<std::int64_t>> cartan_matrix() const;  // C[i][j] = ⟨α_i, α_j∨⟩
  const Weight& rho() const { return rho_; }
  int coxeter_number() const { return h_; }
  const Coweight& highest_coroot() const { return highest_coroot_; }

  // Coefficients in the simple-root basis, or nullopt outside ZR.
  std::optional<std::vector<std::int64_t>> simple_coordinates(const Weight& v) const;
  std::int64_t height(const Weight& v) const;  // sum of simple coordinates; v must lie in ZR

  bool in_lattice(const Weight& w) const;  // parity for GSp
  void check_weight(const Weight& w) const;  // throws InvalidInput
  bool is_dominant(const Weight& w) const;
  // W-invariant inner product on the semisimple coordinates.
  std::int64_t inner(const Weight& a, const Weight& b) const;

  Weight reflect(const Weight& x, std::size_t root_id) const;
  const std::vector<WeylElt>& weyl_group() const { return *weyl_; }  // sorted by length
  const WeylElt& identity() const { return weyl_->front(); }
  const WeylElt& longest() const { return weyl_->back(); }
  std::size_t weyl_index(const SmallMat& m) const;
  int length_of(const SmallMat& m) const;

  // Weight of the natural representation's i-th basis vector.
  Weight natural_weight(std::size_t i) const;

 private:
  RootDatum() = default;
  void finish();

  Family family_ = Family::GL;
  int n_ = 0;
  std::size_t dim_ = 0;
  std::vector<Weight> simple_, pos_;
  std::vector<Coweight> simple_co_, pos_co_;
  Weight rho_;
  Coweight highest_coroot_;
  int h_ = 0;
  std::shared_ptr<const std::vector<WeylElt>> weyl_;
};

// Weyl group grouped by length; the group sizes form the Poincaré polynomial.
std::vector<std::vector<WeylElt>> enumerate_weyl(const RootDatum& rd);

Weight dot_action(const WeylElt& w, const Weight& lambda, const RootDatum& rd);

// ⟨λ+ρ, β∨⟩ ≤ p for all positive β.  Throws InvalidInput for non-dominant λ.
bool is_p_small(const Weight& lambda, std::uint64_t p, const RootDatum& rd);
// Smallest p with λ p-small (max over β>0 of ⟨λ+ρ,β∨⟩); λ dominant.
std::int64_t p_small_bound(const Weight& lambda, const RootDatum& rd);

struct AffineReflection {
  std::size_t root;      // positive root id
  std::int64_t level;    // wall ⟨x, β∨⟩ = level, here 0 or p
};
struct AlcoveResult {
  Weight rep;
  std::vector<AffineReflection> word;
};
AlcoveResult alcove_reduce(const Weight& xi, std::uint64_t p, const RootDatum& rd);
bool linked(const Weight& xi, const Weight& lambda, std::uint64_t p, const RootDatum& rd);

// Standard parabolic determined by the Levi simple roots (0-based indices).
class ParabolicData {
 public:
  ParabolicData(const RootDatum& rd, std::vector<int> levi_simple);
  // "levi=[1,2]", "[1]", "1,2", "[]" with 1-based indices; "all" for P = G.
  static ParabolicData parse(const RootDatum& rd, const std::string& spec);
  static std::vector<ParabolicData> all_standard(const RootDatum& rd);

  const RootDatum& datum() const { return *rd_; }
  std::shared_ptr<const RootDatum> datum_ptr() const { return rd_; }
  const std::vector<int>& levi_simple() const { return levi_; }
  const std::vector<int>& complement_simple() const { return compl_; }
  bool levi_contains_simple(int i) const;
  std::string name() const;  // "levi=[1]" with 1-based indices

  // positive root ids in R_L⁺
  const std::vector<std::size_t>& levi_positive() const { return levi_pos_; }
  bool in_levi(std::size_t root_id) const;
  // positive root ids β of R⁺ \ R_L⁺, ordered by level; u_P⁻ is spanned by X_{−β}
  const std::vector<std::size_t>& radical() const { return radical_; }
  std::size_t radical_rank() const { return radical_.size(); }
  // f_I on the root lattice: minus the sum of the I-coefficients
  std::int64_t f_I(const Weight& v) const;
  // ν(i) = f_I(−β_i) ≥ 1 for the i-th radical root
  std::int64_t nu(std::size_t i) const;

  bool is_levi_dominant(const Weight& xi) const;
  bool in_levi_weyl(const WeylElt& w) const;
  std::vector<WeylElt> levi_weyl() const;
  std::vector<WeylElt> coset_reps(int i) const;  // W^L(i)
  std::vector<std::vector<WeylElt>> coset_reps_all() const;
  bool abelian_radical() const;

 private:
  std::shared_ptr<const RootDatum> rd_;
  std::vector<int> levi_, compl_;
  std::vector<std::size_t> levi_pos_, radical_;
  std::vector<bool> in_levi_;
};

std::vector<WeylElt> coset_reps(const ParabolicData& pd, int i);

}  // namespace zk
