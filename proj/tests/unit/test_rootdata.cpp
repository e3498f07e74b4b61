#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "zk/error.hpp"
#include "zk/rootdata.hpp"

using namespace zk;

namespace {

std::vector<std::size_t> length_counts(const RootDatum& rd) {
  std::vector<std::size_t> c(rd.num_positive() + 1, 0);
  for (const auto& w : rd.weyl_group()) ++c[w.length];
  return c;
}

// gl_n linkage: some permutation of ξ+ρ differs from λ+ρ by p·(sum-zero vector)
bool gl_linked(const Weight& xi, const Weight& lambda, std::int64_t p, const RootDatum& rd) {
  std::vector<std::int64_t> a = (xi + rd.rho()).coords(), b = (lambda + rd.rho()).coords();
  if (std::accumulate(a.begin(), a.end(), std::int64_t{0}) != std::accumulate(b.begin(), b.end(), std::int64_t{0}))
    return false;
  std::sort(a.begin(), a.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = ((a[i] - b[i]) % p) == 0;
    if (ok) return true;
  } while (std::next_permutation(a.begin(), a.end()));
  return false;
}

}  // namespace

TEST_CASE("root data of gl3 and gsp4") {
  const RootDatum gl3 = RootDatum::parse("gl:3");
  CHECK(gl3.num_positive() == 3);
  CHECK(gl3.weyl_group().size() == 6);
  CHECK(gl3.rho() == Weight{2, 1, 0});
  CHECK(gl3.coxeter_number() == 3);
  CHECK(length_counts(gl3) == std::vector<std::size_t>{1, 2, 2, 1});

  const RootDatum gsp4 = RootDatum::parse("gsp:4");
  CHECK(gsp4.num_positive() == 4);
  CHECK(gsp4.weyl_group().size() == 8);
  CHECK(gsp4.coxeter_number() == 4);
  CHECK(length_counts(gsp4) == std::vector<std::size_t>{1, 2, 2, 2, 1});
  CHECK(gsp4.in_lattice(Weight{1, 0, 1}));
  CHECK_FALSE(gsp4.in_lattice(Weight{1, 0, 0}));
  CHECK_THROWS_AS(gsp4.check_weight(Weight{1, 0, 0}), InvalidInput);
}

TEST_CASE("bad group specs are rejected") {
  CHECK_THROWS_AS(RootDatum::parse("gl:0"), InvalidInput);
  CHECK_THROWS_AS(RootDatum::parse("sp:4"), InvalidInput);
  CHECK_THROWS_AS(RootDatum::parse("gsp:3"), InvalidInput);
}

TEST_CASE("Cartan matrix of C2 is not symmetric") {
  const auto c = RootDatum::parse("gsp:4").cartan_matrix();
  CHECK(c[0][0] == 2);
  CHECK(c[1][1] == 2);
  CHECK(c[0][1] * c[1][0] == 2);
}

TEST_CASE("dot action agrees with permutations of λ+ρ for gl") {
  const RootDatum rd = RootDatum::parse("gl:4");
  const Weight lambda{3, 1, 1, -2};
  std::set<Weight> ours, theirs;
  for (const auto& w : rd.weyl_group()) ours.insert(dot_action(w, lambda, rd));
  std::vector<std::int64_t> x = (lambda + rd.rho()).coords();
  std::sort(x.begin(), x.end());
  do theirs.insert(Weight(x) - rd.rho());
  while (std::next_permutation(x.begin(), x.end()));
  CHECK(ours == theirs);
}

TEST_CASE("p-smallness") {
  const RootDatum gl2 = RootDatum::parse("gl:2");
  CHECK(is_p_small(Weight{3, 0}, 5, gl2));  // ⟨λ+ρ, α∨⟩ = 4
  CHECK_FALSE(is_p_small(Weight{3, 0}, 3, gl2));
  CHECK(p_small_bound(Weight{3, 0}, gl2) == 4);

  const RootDatum gsp4 = RootDatum::parse("gsp:4");
  CHECK(is_p_small(Weight{2, 1, 1}, 7, gsp4));
  CHECK_THROWS_AS(is_p_small(Weight{0, 1, 1}, 7, gsp4), InvalidInput);

  // gl_n: the bound is λ_1 − λ_n + n − 1
  const RootDatum gl4 = RootDatum::parse("gl:4");
  for (const Weight& l : {Weight{0, 0, 0, 0}, Weight{5, 2, 2, 0}, Weight{1, 1, 0, -3}})
    CHECK(p_small_bound(l, gl4) == l[0] - l[3] + 3);
}

TEST_CASE("alcove reduction lands in the closed alcove and respects linkage") {
  const RootDatum rd = RootDatum::parse("gl:3");
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-9, 9);
  for (std::uint64_t p : {3u, 5u, 7u}) {
    std::vector<Weight> ws;
    for (int s = 0; s < 40; ++s) ws.push_back(Weight{c(rng), c(rng), c(rng)});
    for (const auto& w : ws) {
      const auto red = alcove_reduce(w, p, rd);
      for (const auto& b : rd.positive_coroots()) {
        const auto v = pair(red.rep + rd.rho(), b);
        CHECK(v >= 0);
        CHECK(v <= static_cast<std::int64_t>(p));
      }
    }
    for (std::size_t i = 0; i + 1 < ws.size(); ++i)
      CHECK(linked(ws[i], ws[i + 1], p, rd) == gl_linked(ws[i], ws[i + 1], static_cast<std::int64_t>(p), rd));
    // translation by p(ε_1 − ε_3) stays in the linkage class
    const Weight lam{0, 0, 0};
    const Weight far = Weight{static_cast<std::int64_t>(p), 0, 0} + Weight{0, 0, -static_cast<std::int64_t>(p)};
    CHECK(linked(far, lam, p, rd));
  }
}

TEST_CASE("parabolic data and Kostant representatives") {
  const RootDatum rd = RootDatum::parse("gl:3");
  const ParabolicData borel = ParabolicData::parse(rd, "[]");
  CHECK(borel.radical_rank() == 3);
  CHECK(borel.levi_weyl().size() == 1);
  const ParabolicData p1 = ParabolicData::parse(rd, "levi=[1]");
  CHECK(p1.radical_rank() == 2);
  CHECK(p1.abelian_radical());
  CHECK_FALSE(borel.abelian_radical());
  const auto reps = p1.coset_reps_all();
  REQUIRE(reps.size() >= 3);
  CHECK(reps[0].size() == 1);
  CHECK(reps[1].size() == 1);
  CHECK(reps[2].size() == 1);
  CHECK(ParabolicData::parse(rd, "all").radical_rank() == 0);
  CHECK_THROWS_AS(ParabolicData::parse(rd, "[4]"), InvalidInput);
  CHECK_THROWS_AS(ParabolicData::parse(rd, "[1"), InvalidInput);

  // the minimal coset representatives of every parabolic cover W
  for (const std::string name : {"gl:3", "gsp:4", "gl:4"}) {
    const RootDatum d = RootDatum::parse(name);
    for (const auto& pd : ParabolicData::all_standard(d)) {
      std::size_t n = 0;
      for (const auto& level : pd.coset_reps_all()) n += level.size();
      CHECK(n * pd.levi_weyl().size() == d.weyl_group().size());
      for (std::size_t i = 0; i < pd.radical_rank(); ++i) CHECK(pd.nu(i) >= 1);
    }
  }
}
