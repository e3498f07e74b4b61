#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zk/chain.hpp"
#include "zk/error.hpp"
#include "zk/zlinalg.hpp"

using namespace zk;

namespace {

IntMatrix random_matrix(std::size_t m, std::size_t n, std::mt19937_64& rng, int range = 6) {
  std::uniform_int_distribution<int> e(-range, range);
  IntMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = e(rng);
  return a;
}

}  // namespace

TEST_CASE("Smith form matches determinantal divisors") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> sz(1, 5);
  for (int t = 0; t < 60; ++t) {
    IntMatrix a = random_matrix(sz(rng), sz(rng), rng);
    if (t % 4 == 0 && a.rows() > 1)
      for (std::size_t j = 0; j < a.cols(); ++j) a(0, j) = 3 * a(1, j);  // force a rank drop
    const SmithForm sf = smith_form(a);
    CHECK(sf.divisors == oracle::invariant_factors(a));
    CHECK(smith_divisors(a) == sf.divisors);
    CHECK(abs(oracle::det(sf.U)) == 1);
    CHECK(abs(oracle::det(sf.V)) == 1);
    const IntMatrix d = sf.U * a * sf.V;
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        CHECK(d(i, j) == (i == j && i < sf.divisors.size() ? sf.divisors[i] : Int(0)));
  }
}

TEST_CASE("Smith form of matrices with large entries") {
  IntMatrix a(2, 2);
  a(0, 0) = Int("123456789012345678901234567890");
  a(0, 1) = 6;
  a(1, 0) = 10;
  a(1, 1) = 15;
  CHECK(smith_divisors(a) == oracle::invariant_factors(a));
  CHECK(smith_divisors(IntMatrix(3, 4)).empty());
}

TEST_CASE("local Smith valuations") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const IntMatrix a = random_matrix(4, 5, rng, 12);
    const auto divs = smith_divisors(a);
    for (std::uint64_t p : {2u, 3u, 5u}) {
      std::vector<unsigned> want;
      for (const auto& d : divs) want.push_back(valuation(d, p));
      CHECK(local_smith_valuations(a, p) == want);
    }
  }
}

TEST_CASE("Hermite form spans the row lattice") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const IntMatrix a = random_matrix(5, 4, rng);
    const Hermite h = hermite(a);
    CHECK(h.rank() == oracle::rank(a));
    for (std::size_t i = 0; i < a.rows(); ++i) CHECK(solve_in_lattice(h, a.row(i)).has_value());
    // same lattice: the stacked matrix has the same determinantal divisors
    IntMatrix stacked = h.basis;
    for (std::size_t i = 0; i < a.rows(); ++i) stacked.append_row(a.row(i));
    CHECK(smith_divisors(stacked) == smith_divisors(h.basis));
    for (std::size_t i = 0; i < h.rank(); ++i) {
      CHECK(h.basis(i, h.pivots[i]) > 0);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(h.basis(k, h.pivots[i]) >= 0);
        CHECK(h.basis(k, h.pivots[i]) < h.basis(i, h.pivots[i]));
      }
    }
  }
}

TEST_CASE("kernels are saturated") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    IntMatrix a = random_matrix(3, 6, rng);
    for (std::size_t j = 0; j < 6; ++j) a(2, j) = 2 * a(0, j) - a(1, j);
    const IntMatrix k = kernel_basis(a);
    CHECK(k.rows() == 6 - oracle::rank(a));
    CHECK((a * k.transpose()).is_zero());
    for (const auto& d : smith_divisors(k)) CHECK(d == 1);
  }
}

TEST_CASE("ranks and determinants") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    IntMatrix a = random_matrix(5, 5, rng, 4);
    if (t % 3 == 0)
      for (std::size_t j = 0; j < 5; ++j) a(4, j) = a(0, j) + 5 * a(1, j);
    CHECK(Rat(determinant(a)) == oracle::det(a));
    CHECK(rank_q(a) == oracle::rank(a));
    for (long p : {2L, 3L, 5L, 7L}) CHECK(rank_mod_p(a, static_cast<std::uint64_t>(p)) == oracle::rank(a, p));
  }
}

TEST_CASE("prime helpers") {
  CHECK(primes_up_to(31) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31});
  Int rest;
  CHECK(small_prime_factors(Int(2 * 2 * 3 * 1000003), 100, &rest) == std::vector<std::uint64_t>{2, 3});
  CHECK(rest == 1000003);
  CHECK(valuation(Int(48), 2) == 4);
  CHECK(merge_invariant_factors({2, 3}) == std::vector<Int>{6});
  CHECK(merge_invariant_factors({2, 4, 3}) == std::vector<Int>{2, 12});
}

TEST_CASE("homology obeys rank-nullity and universal coefficients") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> e(-2, 2), sc(0, 2);
  for (int t = 0; t < 25; ++t) {
    // C_2 -> C_1 -> C_0 with d_1 d_2 = 0 by construction
    ChainComplexZ c;
    c.dims = {4, 5, 4};
    const IntMatrix d1 = random_matrix(4, 5, rng, 3);
    const IntMatrix k = kernel_basis(d1);
    IntMatrix coef(k.rows(), 4);
    const int scale[] = {1, 2, 4};
    for (std::size_t i = 0; i < coef.rows(); ++i)
      for (std::size_t j = 0; j < 4; ++j) coef(i, j) = e(rng) * scale[sc(rng)];
    c.d = {IntMatrix(0, 4), d1, k.transpose() * coef};
    CHECK_NOTHROW(c.validate());
    const auto hs = homology_all(c, std::nullopt, false);
    const std::size_t r1 = oracle::rank(c.d[1]), r2 = oracle::rank(c.d[2]);
    CHECK(hs[0].total.free_rank == 4 - r1);
    CHECK(hs[1].total.free_rank == 5 - r1 - r2);
    CHECK(hs[2].total.free_rank == 4 - r2);
    for (long p : {2L, 3L}) {
      auto tors = [&](int deg) {
        std::size_t n = 0;
        for (const auto& x : hs[static_cast<std::size_t>(deg)].total.torsion)
          if (x % p == 0) ++n;
        return n;
      };
      const std::size_t f1 = oracle::rank(c.d[1], p), f2 = oracle::rank(c.d[2], p);
      CHECK(5 - f1 - f2 == hs[1].total.free_rank + tors(1) + tors(0));
      CHECK(4 - f2 == hs[2].total.free_rank + tors(2) + tors(1));
      // localized homology keeps only the p-parts
      const auto hp = homology_at(c, 1, static_cast<std::uint64_t>(p), false);
      CHECK(hp.total.free_rank == hs[1].total.free_rank);
      CHECK(hp.total.torsion.size() == tors(1));
    }
  }
  ChainComplexZ bad;
  bad.dims = {1, 1, 1};
  IntMatrix one(1, 1);
  one(0, 0) = 1;
  bad.d = {IntMatrix(0, 1), one, one};
  CHECK_THROWS_AS(bad.validate(), ConsistencyError);
}
