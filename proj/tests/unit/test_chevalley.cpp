#include "doctest.h"
#include "zk/chevalley.hpp"
#include "zk/error.hpp"

using namespace zk;

namespace {

SmallMat scale(const SmallMat& a, std::int64_t c) {
  SmallMat m = a;
  for (auto& row : m)
    for (auto& x : row) x *= c;
  return m;
}

bool is_zero(const SmallMat& a) {
  for (const auto& row : a)
    for (auto x : row)
      if (x) return false;
  return true;
}

}  // namespace

TEST_CASE("root brackets agree with matrix commutators") {
  for (const std::string name : {"gl:3", "gsp:4", "gsp:6"}) {
    const RootDatum rd = RootDatum::parse(name);
    const LieAlgebraZ g = build_algebra(rd);
    for (std::size_t a = 0; a < rd.num_roots(); ++a)
      for (std::size_t b = 0; b < rd.num_roots(); ++b) {
        const SmallMat c = commutator(g.root_vector(a), g.root_vector(b));
        if (b == rd.negate(a)) {
          CHECK(c == g.coroot_matrix(a));
          continue;
        }
        const auto br = g.root_bracket(a, b);
        if (!br) {
          CHECK(is_zero(c));
          continue;
        }
        CHECK(c == scale(g.root_vector(br->first), br->second));
        // Chevalley basis: |N_{a,b}| = q + 1 with q maximal such that b − q·a is a root
        int q = 0;
        while (rd.root_index(rd.root(b) - (q + 1) * rd.root(a))) ++q;
        CHECK(std::abs(br->second) == q + 1);
      }
  }
}

TEST_CASE("the Z-span of the basis is closed under brackets") {
  const LieAlgebraZ g = build_algebra(RootDatum::parse("gsp:4"));
  for (std::size_t i = 0; i < g.dimension(); ++i)
    for (std::size_t j = 0; j < g.dimension(); ++j) CHECK_NOTHROW(g.decompose(commutator(g.basis(i), g.basis(j))));
  CHECK(g.dimension() == 11);  // sp_4 ⊕ center
  CHECK(build_algebra(RootDatum::parse("gl:3")).dimension() == 9);
}

TEST_CASE("transpose is the contravariant involution") {
  const RootDatum rd = RootDatum::parse("gl:3");
  const LieAlgebraZ g = build_algebra(rd);
  for (std::size_t b = 0; b < rd.num_positive(); ++b) CHECK(transpose(g.root_vector(b)) == g.root_vector(rd.negate(b)));
}

TEST_CASE("radical of a parabolic") {
  const RootDatum rd = RootDatum::parse("gsp:4");
  const LieAlgebraZ g = build_algebra(rd);
  for (const auto& pd : ParabolicData::all_standard(rd)) {
    const ParabolicSplit s = parabolic_split(g, pd);
    CHECK(s.rank() == pd.radical_rank());
    const LieRing u = s.radical_ring();
    CHECK(u.jacobi_holds());
    for (std::size_t i = 0; i < s.rank(); ++i) CHECK(s.levels[i] == pd.nu(i));
    // brackets raise the level additively
    for (std::size_t i = 0; i < s.rank(); ++i)
      for (std::size_t j = 0; j < s.rank(); ++j)
        if (auto b = s.bracket(i, j)) CHECK(s.levels[b->first] == s.levels[i] + s.levels[j]);
    const IsolatedSeries iso = isolated_lcs(u);
    std::size_t total = 0;
    for (auto r : iso.gr_ranks) total += r;
    CHECK(total == s.rank());
  }
}

TEST_CASE("divided powers") {
  IntMatrix x(3, 3);
  x(1, 0) = 1;
  x(2, 1) = 2;
  const IntMatrix x2 = divided_power_action(x, 2);
  CHECK(x2(2, 0) == 1);
  CHECK(divided_power_action(x, 3).is_zero());
  IntMatrix y(2, 2);
  y(1, 0) = 1;
  y(0, 1) = 1;  // not nilpotent: y²/2 is not integral
  CHECK_THROWS_AS(divided_power_action(y, 2), ConsistencyError);
}
