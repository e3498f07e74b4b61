#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "zk/grouphom.hpp"
#include "zk/parallel.hpp"
#include "zk/resolution.hpp"
#include "zk/weylmod.hpp"

using namespace zk;

namespace {

PolyZGroup group_of(const std::string& group, const std::string& levi) {
  const LieAlgebraZ g = build_algebra(RootDatum::parse(group));
  return build_group(parabolic_split(g, ParabolicData::parse(g.datum(), levi)));
}

std::vector<HomologyGroup> trivial_homology(const PolyZGroup& g, bool cone = true) {
  std::vector<HomologyGroup> out;
  for (const auto& h : group_homology(g, trivial_gamma_module(g), std::nullopt, cone).degrees) out.push_back(h.total);
  return out;
}

HomologyGroup free_group(std::size_t r, std::vector<Int> t = {}) { return {r, std::move(t)}; }

}  // namespace

TEST_CASE("resolution certificates") {
  for (const auto& [group, levi] : std::vector<std::pair<std::string, std::string>>{
           {"gl:2", "[]"}, {"gl:3", "[]"}, {"gl:3", "[2]"}, {"gsp:4", "[1]"}, {"gsp:4", "[]"}}) {
    FreeResolution f(group_of(group, levi));
    const auto cert = f.certify(3, 5);
    CHECK(cert.ok());
    CHECK(cert.checked > 0);
    // ranks C(r, n)
    for (int n = 0; n <= static_cast<int>(f.length()); ++n)
      CHECK(f.generators(n).size() == oracle::binom(static_cast<long>(f.length()), n));
  }
}

TEST_CASE("integral homology of small unipotent groups") {
  // free abelian groups: exterior algebra
  const PolyZGroup ab = group_of("gl:3", "[1]");
  CHECK(trivial_homology(ab) == std::vector<HomologyGroup>{free_group(1), free_group(2), free_group(1)});
  CHECK(trivial_homology(ab, false) == trivial_homology(ab));
  // discrete Heisenberg group: Z, Z², Z², Z
  CHECK(trivial_homology(group_of("gl:3", "[]")) ==
        std::vector<HomologyGroup>{free_group(1), free_group(2), free_group(2), free_group(1)});
  // H_1 is the abelianization, which has a Z/2 for the gsp4 Borel
  const auto b = trivial_homology(group_of("gsp:4", "[]"));
  REQUIRE(b.size() == 5);
  CHECK(b[1] == free_group(2, {2}));
  CHECK(b[4] == free_group(1));
  // Poincaré duality for the 4-dimensional nilmanifold: the free ranks are palindromic
  CHECK(b[0].free_rank == b[4].free_rank);
  CHECK(b[1].free_rank == b[3].free_rank);
}

TEST_CASE("Koszul and cone complexes agree for abelian radicals") {
  const LieAlgebraZ g = build_algebra(RootDatum::parse("gl:3"));
  const ParabolicData pd = ParabolicData::parse(g.datum(), "[2]");
  const PolyZGroup gamma = build_group(parabolic_split(g, pd));
  const Weight lambda{2, 1, 0};
  const GammaModule m = gamma_action(gamma, minimal_lattice(g, lambda).module, lambda);
  const auto k = group_homology(gamma, m, std::nullopt, false);
  const auto c = group_homology(gamma, m, std::nullopt, true);
  CHECK(k.koszul);
  CHECK_FALSE(c.koszul);
  REQUIRE(c.certificate.has_value());
  CHECK(c.certificate->ok());
  REQUIRE(k.degrees.size() == c.degrees.size());
  for (std::size_t i = 0; i < k.degrees.size(); ++i) CHECK(k.degrees[i].total == c.degrees[i].total);
}

TEST_CASE("homology is unchanged by reordering generators within a level") {
  const LieAlgebraZ g = build_algebra(RootDatum::parse("gsp:4"));
  const ParabolicSplit s = parabolic_split(g, ParabolicData::parse(g.datum(), "[]"));
  const PolyZGroup a = build_group(s);
  std::vector<std::size_t> order(s.rank());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && s.levels[j] == s.levels[i]) ++j;
    std::reverse(order.begin() + static_cast<long>(i), order.begin() + static_cast<long>(j));
    i = j;
  }
  const PolyZGroup b = build_group(s, order);
  CHECK(trivial_homology(a) == trivial_homology(b));
  const Weight lambda{1, 0, 1};
  const WeylLattice v = minimal_lattice(g, lambda);
  const auto ha = group_homology(a, gamma_action(a, v.module, lambda), 3, true);
  const auto hb = group_homology(b, gamma_action(b, v.module, lambda), 3, true);
  for (std::size_t n = 0; n < ha.degrees.size(); ++n) CHECK(ha.degrees[n].total == hb.degrees[n].total);
}

TEST_CASE("group homology degenerates for p-small weights") {
  const LieAlgebraZ g = build_algebra(RootDatum::parse("gl:3"));
  for (const char* levi : {"[]", "[1]", "[2]"}) {
    const ParabolicData pd = ParabolicData::parse(g.datum(), levi);
    for (const auto& r : degeneration_sweep(g, pd, Weight{2, 1, 0}, {5, 7})) {
      CHECK(r.p_small);
      CHECK(r.verdict());
      for (const auto& d : r.degrees) CHECK(static_cast<std::int64_t>(d.group_rank) == d.predicted);
    }
  }
  const LieAlgebraZ gs = build_algebra(RootDatum::parse("gsp:4"));
  const DegenerationReport r = degeneration_check(gs, ParabolicData::parse(gs.datum(), "[1]"), Weight{2, 1, 1}, 7);
  CHECK(r.verdict());
  CHECK(r.cross_checked);
}

TEST_CASE("parallel_for visits every index once and rethrows") {
  std::vector<std::atomic<int>> hits(200);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) CHECK(h.load() == 1);
  CHECK_THROWS_AS(parallel_for(50, [](std::size_t i) {
                    if (i == 17) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
  CHECK(worker_count() >= 1);
}
