#include <functional>

#include "doctest.h"
#include "oracles.hpp"
#include "zk/character.hpp"
#include "zk/error.hpp"
#include "zk/weylmod.hpp"
#include "zk/young.hpp"

using namespace zk;

namespace {

Int product(const std::vector<Int>& xs) {
  Int p = 1;
  for (const auto& x : xs) p *= x;
  return p;
}

// dimension of the sp_4 irreducible with highest weight (a, b), a ≥ b ≥ 0
std::int64_t sp4_dim(std::int64_t a, std::int64_t b) { return (a - b + 1) * (b + 1) * (a + 2) * (a + b + 3) / 6; }

// gl_n characters by counting semistandard tableaux (λ ≥ 0)
Character ssyt_character(const std::vector<std::int64_t>& lambda) {
  const std::size_t n = lambda.size();
  std::vector<std::size_t> row_len;
  for (auto l : lambda)
    if (l > 0) row_len.push_back(static_cast<std::size_t>(l));
  std::vector<std::vector<int>> t(row_len.size());
  for (std::size_t r = 0; r < row_len.size(); ++r) t[r].assign(row_len[r], 0);
  Character ch;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < row_len.size(); ++r)
    for (std::size_t c = 0; c < row_len[r]; ++c) cells.emplace_back(r, c);
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == cells.size()) {
      Weight w(n);
      for (const auto& row : t)
        for (int e : row) ++w[static_cast<std::size_t>(e)];
      ++ch[w];
      return;
    }
    const auto [r, c] = cells[k];
    int lo = 0;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int e = lo; e < static_cast<int>(n); ++e) {
      t[r][c] = e;
      fill(k + 1);
    }
  };
  fill(0);
  return ch;
}

}  // namespace

TEST_CASE("minimal lattices have the Weyl character") {
  const RootDatum rd = RootDatum::parse("gl:3");
  const LieAlgebraZ g = build_algebra(rd);
  for (const Weight& l : {Weight{0, 0, 0}, Weight{1, 0, 0}, Weight{2, 1, 0}, Weight{3, 1, 0}, Weight{2, 2, 0}}) {
    const WeylLattice v = minimal_lattice(g, l);
    CHECK(v.module.character() == ssyt_character(l.coords()));
    CHECK(v.module.character() == weyl_character(rd, l));
    CHECK_NOTHROW(v.module.check_weights());
    CHECK(v.module.weights()[v.highest_index()] == l);
  }
  const RootDatum rs = RootDatum::parse("gsp:4");
  const LieAlgebraZ gs = build_algebra(rs);
  for (const Weight& l : {Weight{1, 0, 1}, Weight{1, 1, 0}, Weight{2, 0, 0}, Weight{2, 1, 1}, Weight{3, 3, 0}}) {
    const WeylLattice v = minimal_lattice(gs, l);
    CHECK(static_cast<std::int64_t>(v.dim()) == sp4_dim(l[0], l[1]));
    CHECK(weyl_dimension(rs, l) == sp4_dim(l[0], l[1]));
    CHECK(v.module.character() == weyl_character(rs, l));
  }
}

TEST_CASE("divided powers of root vectors act integrally on the minimal lattice") {
  const RootDatum rd = RootDatum::parse("gsp:4");
  const LieAlgebraZ g = build_algebra(rd);
  const WeylLattice v = minimal_lattice(g, Weight{3, 1, 0});
  for (std::size_t r = 0; r < rd.num_roots(); ++r)
    for (unsigned m = 1; m <= 4; ++m) CHECK_NOTHROW(v.module.divided_power(r, m));
}

TEST_CASE("max over min for Sym^k of the natural gl2 lattice") {
  // the form is diagonal with entries C(k, j) on f^(j) v
  const LieAlgebraZ g = build_algebra(RootDatum::parse("gl:2"));
  for (std::int64_t k = 0; k <= 8; ++k) {
    const WeylLattice v = minimal_lattice(g, Weight{k, 0});
    const auto form = contravariant_gram(v.module, Weight{k, 0});
    Int expect = 1;
    IntMatrix diag(static_cast<std::size_t>(k + 1), static_cast<std::size_t>(k + 1));
    for (std::int64_t j = 0; j <= k; ++j) {
      expect *= oracle::binom(k, j);
      diag(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) = oracle::binom(k, j);
    }
    const auto divs = max_over_min(form);
    CHECK(product(divs) == expect);
    if (k <= 5) {
      auto want = oracle::invariant_factors(diag);
      std::erase(want, Int(1));
      auto got = divs;
      std::erase(got, Int(1));
      CHECK(got == want);
    }
  }
}

TEST_CASE("max over min for Sym^2 of the natural gl3 lattice") {
  const LieAlgebraZ g = build_algebra(RootDatum::parse("gl:3"));
  const WeylLattice v = minimal_lattice(g, Weight{2, 0, 0});
  auto divs = max_over_min(contravariant_gram(v.module, Weight{2, 0, 0}));
  std::erase(divs, Int(1));
  CHECK(divs == std::vector<Int>{2, 2, 2});
}

TEST_CASE("maximal lattice contains the minimal one with the Gram index") {
  const LieAlgebraZ g = build_algebra(RootDatum::parse("gl:3"));
  const Weight l{2, 1, 0};
  const WeylLattice min = minimal_lattice(g, l);
  const auto form = contravariant_gram(min.module, l);
  const WeylLattice max = maximal_lattice(min, form);
  CHECK(max.dim() == min.dim());
  CHECK_NOTHROW(max.module.check_weights());
  const auto idx = lattice_indices(max.in_min, form);
  CHECK(product(idx.over_min) == product(max_over_min(form)));
  CHECK(product(idx.under_max) == 1);
  const auto self = lattice_indices(RatMatrix::identity(min.dim()), form);
  CHECK(product(self.over_min) == 1);
}

TEST_CASE("Young lattice sits between min and max") {
  const LieAlgebraZ g = build_algebra(RootDatum::parse("gsp:4"));
  for (const Weight& l : {Weight{1, 0, 1}, Weight{1, 1, 0}, Weight{2, 1, 1}, Weight{2, 2, 0}, Weight{3, 1, 0}}) {
    const YoungData y = young_lattice(g, l);
    REQUIRE(y.young_in_min.has_value());
    const auto idx = lattice_indices(*y.young_in_min, y.form);
    CHECK(product(idx.over_min) * product(idx.under_max) == product(max_over_min(y.form)));
    const auto top = lattice_indices(y.top_in_min, y.form);
    // top ⊆ Young
    CHECK(product(top.under_max) % product(idx.under_max) == 0);
  }
}

TEST_CASE("non-dominant weights are rejected") {
  const LieAlgebraZ g = build_algebra(RootDatum::parse("gl:3"));
  CHECK_THROWS_AS(minimal_lattice(g, Weight{0, 1, 0}), InvalidInput);
}
