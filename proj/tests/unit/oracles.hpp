#pragma once

// Small independent reference computations used by the unit tests.  Nothing
// here calls into the library's linear algebra.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "zk/zlinalg.hpp"

namespace oracle {

using zk::Int;
using zk::IntMatrix;
using zk::Rat;

inline Rat det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
  Rat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

inline std::size_t rank(const IntMatrix& a, long p = 0) {
  std::vector<std::vector<Rat>> m(a.rows(), std::vector<Rat>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Int x = a(i, j);
      if (p) {
        x %= p;
        if (x < 0) x += p;
      }
      m[i][j] = x;
    }
  auto reduce = [&](Rat& x) {
    if (!p) return;
    // keep entries in 0..p−1 using the inverse modulo p
    Int num = x.get_num(), den = x.get_den(), inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), Int(p).get_mpz_t());
    Int r = num * inv % p;
    if (r < 0) r += p;
    x = r;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && m[piv][c] == 0) ++piv;
    if (piv == a.rows()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (m[i][c] == 0) continue;
      const Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < a.cols(); ++j) {
        m[i][j] -= f * m[r][j];
        reduce(m[i][j]);
      }
    }
    ++r;
  }
  return r;
}

// gcd of all k×k minors
inline Int minors_gcd(const IntMatrix& a, std::size_t k) {
  Int g = 0;
  std::vector<bool> rs(a.rows(), false), cs(a.cols(), false);
  std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
  do {
    std::fill(cs.begin(), cs.end(), false);
    std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
    std::vector<std::size_t> ri, ci;
    for (std::size_t i = 0; i < rs.size(); ++i)
      if (rs[i]) ri.push_back(i);
    do {
      ci.clear();
      for (std::size_t j = 0; j < cs.size(); ++j)
        if (cs[j]) ci.push_back(j);
      g = gcd(g, Int(det(a.select(ri, ci)).get_num()));
    } while (std::prev_permutation(cs.begin(), cs.end()));
  } while (std::prev_permutation(rs.begin(), rs.end()));
  return g;
}

// Invariant factors from determinantal divisors.
inline std::vector<Int> invariant_factors(const IntMatrix& a) {
  std::vector<Int> out;
  Int prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    const Int dk = minors_gcd(a, k);
    if (dk == 0) break;
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

inline Int binom(std::int64_t n, std::int64_t k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace oracle
