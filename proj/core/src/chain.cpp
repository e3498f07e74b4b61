#include "zk/chain.hpp"

#include <algorithm>

#include "zk/error.hpp"

namespace zk {

void ChainComplexZ::validate() const {
  if (d.size() != dims.size()) fail_consistency("chain complex: one differential per degree expected");
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const std::size_t below = i == 0 ? 0 : dims[i - 1];
    if (d[i].rows() != below || d[i].cols() != dims[i])
      fail_consistency("chain complex: differential " + std::to_string(i) + " has wrong shape");
  }
  for (std::size_t i = 2; i < dims.size(); ++i) {
    if (dims[i] == 0 || dims[i - 2] == 0 || dims[i - 1] == 0) continue;
    if (!(d[i - 1] * d[i]).is_zero())
      fail_consistency("chain complex: d_" + std::to_string(i - 1) + " d_" + std::to_string(i) + " != 0");
  }
}

void ChainComplexZ::check_homogeneous() const {
  if (!labelled()) return;
  for (std::size_t i = 1; i < dims.size(); ++i)
    for (std::size_t r = 0; r < d[i].rows(); ++r)
      for (std::size_t c = 0; c < d[i].cols(); ++c)
        if (d[i](r, c) != 0 && labels[i - 1][r] != labels[i][c])
          throw InvalidInput("chain complex: differential " + std::to_string(i) + " is not weight-homogeneous");
}

std::vector<Int> merge_invariant_factors(const std::vector<Int>& factors) {
  std::vector<Int> f;
  for (const auto& x : factors)
    if (abs(x) != 1) f.push_back(abs(x));
  // (a, b) -> (gcd, lcm) preserves the group; after all pairs the list is a chain.
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      Int g = gcd(f[i], f[j]);
      Int l = lcm(f[i], f[j]);
      f[i] = g;
      f[j] = l;
    }
  std::vector<Int> out;
  for (auto& x : f)
    if (x != 1) out.push_back(x);
  return out;
}

namespace {

Int p_part(const Int& d, std::uint64_t p) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, valuation(d, p));
  return r;
}

}  // namespace

HomologyGroup homology_from(const IntMatrix& d_i, const IntMatrix& d_next, std::size_t dim,
                            std::optional<std::uint64_t> p) {
  HomologyGroup h;
  const std::size_t r_out = d_i.empty() ? 0 : rank_q(d_i);
  std::size_t r_in = 0;
  if (!d_next.empty()) {
    if (p) {
      for (unsigned v : local_smith_valuations(d_next, *p)) {
        ++r_in;
        if (v > 0) {
          Int q;
          mpz_ui_pow_ui(q.get_mpz_t(), *p, v);
          h.torsion.push_back(q);
        }
      }
      r_in = rank_q(d_next);
    } else {
      for (const auto& x : smith_divisors(d_next)) {
        ++r_in;
        if (x != 1) h.torsion.push_back(x);
      }
    }
  }
  if (r_out + r_in > dim) fail_consistency("homology: rank d_i + rank d_{i+1} exceeds dim C_i");
  h.free_rank = dim - r_out - r_in;
  std::sort(h.torsion.begin(), h.torsion.end());
  return h;
}

HomologyResult homology_at(const ChainComplexZ& c, int i, std::optional<std::uint64_t> p, bool graded) {
  HomologyResult res;
  res.degree = i;
  res.prime = p;
  if (i < 0 || i > c.top()) return res;
  const std::size_t dim = c.dims[i];
  const IntMatrix empty;
  const IntMatrix& di = c.d[i];
  const IntMatrix& dn = i + 1 <= c.top() ? c.d[i + 1] : empty;

  if (!graded || !c.labelled()) {
    res.total = homology_from(di, dn, dim, p);
    return res;
  }
  c.check_homogeneous();
  std::map<Weight, std::vector<std::size_t>> here, below, above;
  for (std::size_t k = 0; k < dim; ++k) here[c.labels[i][k]].push_back(k);
  if (i > 0)
    for (std::size_t k = 0; k < c.dims[i - 1]; ++k) below[c.labels[i - 1][k]].push_back(k);
  if (i + 1 <= c.top())
    for (std::size_t k = 0; k < c.dims[i + 1]; ++k) above[c.labels[i + 1][k]].push_back(k);
  std::vector<Int> all_torsion;
  for (const auto& [w, idx] : here) {
    IntMatrix bi, bn;
    if (auto it = below.find(w); it != below.end()) bi = di.select(it->second, idx);
    if (auto it = above.find(w); it != above.end()) bn = dn.select(idx, it->second);
    HomologyGroup g = homology_from(bi, bn, idx.size(), p);
    if (g.free_rank == 0 && g.torsion.empty()) continue;
    res.total.free_rank += g.free_rank;
    all_torsion.insert(all_torsion.end(), g.torsion.begin(), g.torsion.end());
    res.by_weight.emplace(w, std::move(g));
  }
  res.total.torsion = merge_invariant_factors(all_torsion);
  if (p)
    for (auto& t : res.total.torsion) t = p_part(t, *p);
  return res;
}

std::vector<HomologyResult> homology_all(const ChainComplexZ& c, std::optional<std::uint64_t> p, bool graded) {
  std::vector<HomologyResult> out;
  for (int i = 0; i <= c.top(); ++i) out.push_back(homology_at(c, i, p, graded));
  return out;
}

}  // namespace zk
