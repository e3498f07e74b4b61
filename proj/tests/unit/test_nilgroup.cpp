#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zk/error.hpp"
#include "zk/nilgroup.hpp"
#include "zk/weylmod.hpp"

using namespace zk;

namespace {

SmallMat matmul(const SmallMat& a, const SmallMat& b) {
  const std::size_t n = a.size();
  SmallMat c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

SmallMat eye(std::size_t n) {
  SmallMat m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// g_1^{x_1} ... g_r^{x_r} with non-negative exponents, by repeated multiplication
SmallMat word(const PolyZGroup& g, const Coords& x) {
  SmallMat m = eye(g.natural_dim());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::int64_t k = 0; k < x[i]; ++k) m = matmul(m, g.generator(i));
  return m;
}

struct Fixture {
  std::shared_ptr<LieAlgebraZ> g;
  std::shared_ptr<ParabolicData> pd;
  ParabolicSplit split;
  PolyZGroup gamma;
};

Fixture make(const std::string& group, const std::string& levi) {
  Fixture f;
  f.g = std::make_shared<LieAlgebraZ>(build_algebra(RootDatum::parse(group)));
  f.pd = std::make_shared<ParabolicData>(ParabolicData::parse(f.g->datum(), levi));
  f.split = parabolic_split(*f.g, *f.pd);
  f.gamma = build_group(f.split);
  return f;
}

}  // namespace

TEST_CASE("Mal'cev coordinates of the gl3 Heisenberg group") {
  const Fixture f = make("gl:3", "[]");
  const PolyZGroup& g = f.gamma;
  CHECK(g.rank() == 3);
  CHECK(g.nilpotency_class() == 2);
  CHECK_FALSE(g.abelian());
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> e(0, 4);
  for (int t = 0; t < 40; ++t) {
    Coords x(3), y(3);
    for (auto& v : x) v = e(rng);
    for (auto& v : y) v = e(rng);
    CHECK(g.element(x) == word(g, x));
    CHECK(g.collect(word(g, x)) == x);
    CHECK(g.element(g.multiply(x, y)) == matmul(word(g, x), word(g, y)));
    CHECK(g.multiply(x, g.inverse(x)) == g.identity());
  }
  // the commutator of the two simple generators is a generator of the center
  const SmallMat c = matmul(matmul(g.generator(0), g.generator(1)),
                            matmul(g.element(g.inverse(g.unit(0))), g.element(g.inverse(g.unit(1)))));
  const Coords cc = g.collect(c);
  CHECK(cc[0] == 0);
  CHECK(cc[1] == 0);
  CHECK(std::abs(cc[2]) == 1);
}

TEST_CASE("collection rejects matrices outside the group") {
  const Fixture f = make("gl:3", "[]");
  SmallMat m = eye(3);
  m[0][1] = 1;  // upper triangular, but Γ is lower
  CHECK_THROWS_AS(f.gamma.collect(m), ConsistencyError);
}

TEST_CASE("associativity") {
  for (const auto& [group, levi] : std::vector<std::pair<std::string, std::string>>{{"gsp:4", "[]"}, {"gl:4", "[2,3]"}}) {
    const Fixture f = make(group, levi);
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<std::int64_t> e(-3, 3);
    for (int t = 0; t < 30; ++t) {
      Coords x(f.gamma.rank()), y(f.gamma.rank()), z(f.gamma.rank());
      for (auto* v : {&x, &y, &z})
        for (auto& c : *v) c = e(rng);
      CHECK(f.gamma.multiply(f.gamma.multiply(x, y), z) == f.gamma.multiply(x, f.gamma.multiply(y, z)));
    }
  }
}

TEST_CASE("generator order must respect levels") {
  const Fixture f = make("gl:3", "[]");
  CHECK_THROWS_AS(build_group(f.split, {2, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(build_group(f.split, {0, 0, 1}), InvalidInput);
  CHECK_NOTHROW(build_group(f.split, {1, 0, 2}));
}

TEST_CASE("Hall polynomials and the graded Lie ring") {
  for (const auto& [group, levi] :
       std::vector<std::pair<std::string, std::string>>{{"gl:3", "[]"}, {"gsp:4", "[]"}, {"gsp:4", "[1]"}, {"gl:4", "[1,3]"}}) {
    const Fixture f = make(group, levi);
    const HallData h = hall_data(f.gamma);
    CHECK(h.ok());
    const GradedLieTable t = gr_isol_group(f.gamma);
    CHECK(t.matches_lie);
    CHECK(t.ranks_match);
    std::size_t total = 0;
    for (auto r : t.graded_ranks) total += r;
    CHECK(total == f.gamma.rank());
  }
}

TEST_CASE("abelianization of the gsp4 Borel group") {
  // H_1(Γ) = Z^r / span of the collected commutators [g_i, g_j]
  const Fixture f = make("gsp:4", "[]");
  const PolyZGroup& g = f.gamma;
  IntMatrix rel(0, g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t j = i + 1; j < g.rank(); ++j) {
      const Coords c = g.multiply(g.multiply(g.unit(i), g.unit(j)), g.inverse(g.multiply(g.unit(j), g.unit(i))));
      std::vector<Int> row(c.begin(), c.end());
      rel.append_row(row);
    }
  auto divs = oracle::invariant_factors(rel);
  std::erase(divs, Int(1));
  CHECK(g.rank() - oracle::rank(rel) == 2);
  CHECK(divs == std::vector<Int>{2});
}

TEST_CASE("Hartley basis") {
  const Fixture f = make("gl:3", "[]");
  for (int d = 0; d <= 4; ++d)
    for (int n = 0; 2 * n <= d; ++n) CHECK(hartley_basis_check(f.gamma, n, d).ok());
  CHECK_THROWS_AS(hartley_basis_check(f.gamma, 2, 3), Inconclusive);
  const Fixture a = make("gl:3", "[1]");
  CHECK(hartley_basis_check(a.gamma, 2, 3).ok());
}

TEST_CASE("Γ acts on Weyl lattices through exp of root vectors") {
  const Fixture f = make("gsp:4", "[]");
  const Weight lambda{2, 1, 1};
  const WeylLattice v = minimal_lattice(*f.g, lambda);
  const GammaModule m = gamma_action(f.gamma, v.module, lambda);
  CHECK(m.star_ok);
  CHECK(m.dim == v.dim());
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::int64_t> e(-2, 2);
  for (int t = 0; t < 15; ++t) {
    Coords x(f.gamma.rank()), y(f.gamma.rank());
    for (auto& c : x) c = e(rng);
    for (auto& c : y) c = e(rng);
    CHECK(m.rho(f.gamma.multiply(x, y)) == m.rho(x) * m.rho(y));
  }
  CHECK(m.power(0, 1) == v.module.exp_action(f.gamma.root_id(0)));
  const GammaModule triv = trivial_gamma_module(f.gamma, 2);
  CHECK(triv.rho(f.gamma.unit(1)) == IntMatrix::identity(2));
}
