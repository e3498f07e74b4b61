#include "zk/liehomology.hpp"

#include <algorithm>
#include <bit>

#include "zk/ambient.hpp"
#include "zk/error.hpp"
#include "zk/weylmod.hpp"

namespace zk {

std::vector<std::size_t> GradedComplexZ::dims() const {
  std::vector<std::size_t> out(top + 1, 0);
  for (const auto& [w, c] : blocks)
    for (int i = 0; i <= top; ++i) out[i] += c.dims[i];
  return out;
}

ChainComplexZ GradedComplexZ::flatten() const {
  ChainComplexZ f;
  f.dims = dims();
  f.labels.assign(top + 1, {});
  f.d.resize(top + 1);
  for (int i = 0; i <= top; ++i) f.d[i] = IntMatrix(i == 0 ? 0 : f.dims[i - 1], f.dims[i]);
  std::vector<std::size_t> off(top + 1, 0);
  for (const auto& [w, c] : blocks) {
    for (int i = 0; i <= top; ++i) {
      for (std::size_t k = 0; k < c.dims[i]; ++k) f.labels[i].push_back(w);
      if (i == 0) continue;
      for (std::size_t r = 0; r < c.d[i].rows(); ++r)
        for (std::size_t s = 0; s < c.d[i].cols(); ++s)
          if (c.d[i](r, s) != 0) f.d[i](off[i - 1] + r, off[i] + s) = c.d[i](r, s);
    }
    for (int i = 0; i <= top; ++i) off[i] += c.dims[i];
  }
  return f;
}

void GradedComplexZ::validate() const {
  for (const auto& [w, c] : blocks) c.validate();
}

HomologyResult graded_homology(const GradedComplexZ& c, int i, std::optional<std::uint64_t> p, bool cohomology) {
  HomologyResult res;
  res.degree = i;
  res.prime = p;
  if (i < 0 || i > c.top) return res;
  const IntMatrix none;
  std::vector<Int> torsion;
  for (const auto& [w, b] : c.blocks) {
    if (b.dims[i] == 0) continue;
    IntMatrix out, in;
    if (!cohomology) {
      if (i >= 1) out = b.d[i];
      if (i + 1 <= c.top) in = b.d[i + 1];
    } else {
      if (i + 1 <= c.top) out = b.d[i + 1].transpose();
      if (i >= 1) in = b.d[i].transpose();
    }
    HomologyGroup h = homology_from(out, in, b.dims[i], p);
    if (h.free_rank == 0 && h.torsion.empty()) continue;
    res.total.free_rank += h.free_rank;
    torsion.insert(torsion.end(), h.torsion.begin(), h.torsion.end());
    res.by_weight.emplace(w, std::move(h));
  }
  res.total.torsion = merge_invariant_factors(torsion);
  if (p)
    for (auto& t : res.total.torsion) {
      Int q;
      mpz_ui_pow_ui(q.get_mpz_t(), *p, valuation(t, *p));
      t = q;
    }
  std::erase_if(res.total.torsion, [](const Int& x) { return x == 1; });
  return res;
}

// ---- modules built from the radical ------------------------------------------

WeightModule exterior_power(const WeightModule& v, std::size_t k) {
  const RootDatum& rd = v.datum();
  const std::size_t n = v.dim();
  const auto subsets = k_subsets(n, k);
  std::map<std::vector<std::size_t>, std::size_t> idx;
  std::vector<Weight> weights;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    idx[subsets[i]] = i;
    Weight w(rd.dim());
    for (auto t : subsets[i]) w = w + v.weights()[t];
    weights.push_back(w);
  }
  WeightModule out(v.datum_ptr(), weights);
  for (std::size_t r = 0; r < rd.num_roots(); ++r) {
    if (!v.acts(r)) continue;
    const SparseOp& x = v.op(r);
    SparseOp op;
    op.rows = subsets.size();
    op.cols.resize(subsets.size());
    for (std::size_t j = 0; j < subsets.size(); ++j) {
      const auto& s = subsets[j];
      for (std::size_t pos = 0; pos < k; ++pos)
        for (const auto& [u, c] : x.cols[s[pos]]) {
          if (u != s[pos] && std::find(s.begin(), s.end(), u) != s.end()) continue;
          std::vector<std::size_t> ns = s;
          ns[pos] = u;
          int sign = 1;
          for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
              if (ns[a] > ns[b]) sign = -sign;
          std::sort(ns.begin(), ns.end());
          const std::size_t t = idx.at(ns);
          Int& e = op.cols[j][t];
          e += sign * c;
          if (e == 0) op.cols[j].erase(t);
        }
    }
    out.set_op(r, std::move(op));
  }
  return out;
}

WeightModule radical_quotient_module(const ParabolicSplit& s) {
  const LieAlgebraZ& g = *s.g;
  const RootDatum& rd = g.datum();
  std::vector<Weight> weights;
  for (auto id : s.um_roots) weights.push_back(rd.root(id));
  WeightModule m(g.datum_ptr(), weights);
  for (std::size_t r = 0; r < rd.num_roots(); ++r) {
    if (!(rd.is_positive(r) || s.pd->in_levi(r))) continue;
    SparseOp op;
    op.rows = s.rank();
    op.cols.resize(s.rank());
    for (std::size_t j = 0; j < s.rank(); ++j) {
      auto b = g.root_bracket(r, s.um_roots[j]);
      if (!b) continue;  // zero, or lands in the torus (inside p)
      for (std::size_t k = 0; k < s.rank(); ++k)
        if (s.um_roots[k] == b->first) op.cols[j][k] = static_cast<long>(b->second);
    }
    m.set_op(r, std::move(op));
  }
  return m;
}

// ---- Chevalley–Eilenberg complex ---------------------------------------------

GradedComplexZ ce_complex(const ParabolicSplit& s, const WeightModule& v) {
  const RootDatum& rd = v.datum();
  const std::size_t r = s.rank(), n = v.dim();
  if (r > 20) throw InvalidInput("radical too large for the Chevalley–Eilenberg complex");
  for (auto id : s.um_roots)
    if (!v.acts(id)) throw InvalidInput("module lacks the action of a negative radical root");

  GradedComplexZ c;
  c.top = static_cast<int>(r);
  const std::uint32_t full = 1u << r;
  // local position of (mask, v) inside its weight block
  std::vector<std::size_t> local(static_cast<std::size_t>(full) * n);
  std::vector<Weight> mask_weight(full, Weight(rd.dim()));
  for (std::uint32_t m = 0; m < full; ++m)
    for (std::size_t i = 0; i < r; ++i)
      if (m >> i & 1) mask_weight[m] = mask_weight[m] + rd.root(s.um_roots[i]);
  auto block_of = [&](std::uint32_t m, std::size_t b) -> ChainComplexZ& {
    auto& blk = c.blocks[mask_weight[m] + v.weights()[b]];
    if (blk.dims.empty()) blk.dims.assign(r + 1, 0);
    return blk;
  };
  for (std::uint32_t m = 0; m < full; ++m) {
    const int k = std::popcount(m);
    for (std::size_t b = 0; b < n; ++b) local[m * n + b] = block_of(m, b).dims[k]++;
  }
  for (auto& [w, blk] : c.blocks) {
    blk.d.resize(r + 1);
    for (std::size_t k = 0; k <= r; ++k) blk.d[k] = IntMatrix(k == 0 ? 0 : blk.dims[k - 1], blk.dims[k]);
  }

  std::vector<std::optional<std::pair<std::size_t, std::int64_t>>> br(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) br[i * r + j] = s.bracket(i, j);

  std::vector<std::size_t> elems;
  for (std::uint32_t m = 1; m < full; ++m) {
    const int k = std::popcount(m);
    elems.clear();
    for (std::size_t i = 0; i < r; ++i)
      if (m >> i & 1) elems.push_back(i);
    for (std::size_t b = 0; b < n; ++b) {
      ChainComplexZ& blk = block_of(m, b);
      IntMatrix& d = blk.d[k];
      const std::size_t col = local[m * n + b];
      for (std::size_t a = 0; a < elems.size(); ++a) {
        const std::uint32_t rest = m & ~(1u << elems[a]);
        const long sign = a % 2 == 0 ? 1 : -1;
        for (const auto& [t, x] : v.op(s.um_roots[elems[a]]).cols[b]) d(local[rest * n + t], col) += sign * x;
      }
      for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t bb = a + 1; bb < elems.size(); ++bb) {
          const auto& e = br[elems[a] * r + elems[bb]];
          if (!e) continue;
          const std::uint32_t rest = m & ~(1u << elems[a]) & ~(1u << elems[bb]);
          if (rest >> e->first & 1) continue;
          // moving x_k into sorted position past the smaller elements of rest
          const int before = std::popcount(rest & ((1u << e->first) - 1));
          long sign = (a + bb) % 2 == 0 ? -1 : 1;
          if (before % 2) sign = -sign;
          const std::uint32_t tgt = rest | (1u << e->first);
          d(local[tgt * n + b], col) += sign * e->second;
        }
    }
  }
  c.validate();
  return c;
}

// ---- Kostant reports -----------------------------------------------------------

bool KostantReport::characters_match() const {
  for (const auto& d : degrees)
    if (!d.character_match) return false;
  return true;
}

bool KostantReport::torsion_free() const {
  for (const auto& d : degrees)
    if (!d.p_torsion_free) return false;
  return true;
}

KostantReport at_prime(KostantReport r, std::optional<std::uint64_t> p) {
  r.prime = p;
  const RootDatum rd = RootDatum::parse(r.group);
  r.p_small = p ? is_p_small(r.lambda, *p, rd) : false;
  for (auto& d : r.degrees) {
    d.p_torsion_free = true;
    if (!p) continue;
    for (const auto& t : d.homology.total.torsion)
      if (mpz_divisible_ui_p(t.get_mpz_t(), *p)) d.p_torsion_free = false;
  }
  return r;
}

namespace {

KostantReport run_kostant(const LieAlgebraZ& g, const ParabolicData& pd, const Weight& lambda,
                          std::optional<std::uint64_t> p, bool cohomology) {
  const RootDatum& rd = g.datum();
  rd.check_weight(lambda);
  if (!rd.is_dominant(lambda)) throw InvalidInput("weight " + lambda.str() + " is not dominant");
  const ParabolicSplit split = parabolic_split(g, pd);
  const WeylLattice v = minimal_lattice(g, lambda);
  const GradedComplexZ c = ce_complex(split, v.module);

  KostantReport rep;
  rep.group = rd.name();
  rep.parabolic = pd.name();
  rep.lambda = lambda;
  rep.cohomology = cohomology;
  for (int i = 0; i <= c.top; ++i) {
    DegreeReport d;
    d.degree = i;
    d.homology = graded_homology(c, i, std::nullopt, cohomology);
    for (const auto& [w, h] : d.homology.by_weight)
      if (h.free_rank) d.computed[w] = static_cast<std::int64_t>(h.free_rank);
    d.predicted = kostant_prediction(pd, lambda, i);
    std::erase_if(d.predicted, [](const auto& kv) { return kv.second == 0; });
    d.character_match = d.computed == d.predicted;
    for (const auto& t : d.homology.total.torsion) {
      Int rest;
      for (auto q : small_prime_factors(t, 1000000, &rest))
        if (std::find(d.torsion_primes.begin(), d.torsion_primes.end(), q) == d.torsion_primes.end())
          d.torsion_primes.push_back(q);
      if (rest != 1 && rest.fits_ulong_p()) d.torsion_primes.push_back(rest.get_ui());
    }
    std::sort(d.torsion_primes.begin(), d.torsion_primes.end());
    rep.degrees.push_back(std::move(d));
  }
  return at_prime(std::move(rep), p);
}

}  // namespace

KostantReport kostant_check(const LieAlgebraZ& g, const ParabolicData& pd, const Weight& lambda,
                            std::optional<std::uint64_t> p) {
  return run_kostant(g, pd, lambda, p, false);
}

KostantReport cohomology_check(const LieAlgebraZ& g, const ParabolicData& pd, const Weight& lambda,
                               std::optional<std::uint64_t> p) {
  return run_kostant(g, pd, lambda, p, true);
}

// ---- BGG terms -----------------------------------------------------------------

bool SplittingCertificate::unit_at(std::uint64_t p) const {
  return highest_lines_ok && ranks_ok && index != 0 && !mpz_divisible_ui_p(index.get_mpz_t(), p);
}

SplittingCertificate exterior_splitting(const LieAlgebraZ& g, const ParabolicData& pd, int i) {
  const RootDatum& rd = g.datum();
  const ParabolicSplit split = parabolic_split(g, pd);
  const WeightModule ext = exterior_power(radical_quotient_module(split), static_cast<std::size_t>(i));
  const auto blocks = ext.blocks();
  const auto lowering = levi_negative_roots(pd);

  SplittingCertificate cert;
  cert.degree = i;
  cert.highest_lines_ok = true;
  GradedLattice sum;
  std::size_t generated = 0;
  for (const WeylElt& w : pd.coset_reps(i)) {
    const Weight xi = dot_action(w, Weight(rd.dim()), rd);
    cert.tops.push_back(xi);
    auto it = blocks.find(xi);
    if (it == blocks.end()) {
      cert.highest_lines_ok = false;
      continue;
    }
    const auto& idx = it->second;
    // L-primitive vectors: common kernel of the Levi raising operators
    IntMatrix raise(0, idx.size());
    for (std::size_t a : pd.levi_positive()) {
      const SparseOp& op = ext.op(a);
      std::map<std::size_t, std::size_t> row_of;
      std::vector<IntVector> rows;
      for (std::size_t j = 0; j < idx.size(); ++j)
        for (const auto& [t, x] : op.cols[idx[j]]) {
          auto [pos, fresh] = row_of.emplace(t, rows.size());
          if (fresh) rows.emplace_back(idx.size());
          rows[pos->second][j] = x;
        }
      for (auto& row : rows) raise.append_row(row);
    }
    const IntMatrix ker = raise.rows() == 0 ? IntMatrix::identity(idx.size()) : kernel_basis(raise);
    if (ker.rows() != 1) {
      cert.highest_lines_ok = false;
      continue;
    }
    SparseVec v;
    for (std::size_t j = 0; j < idx.size(); ++j)
      if (ker(0, j) != 0) v[idx[j]] = ker(0, j);
    GradedLattice piece = generate(ext, {v}, lowering);
    if (Int(static_cast<unsigned long>(piece.rank())) != levi_dimension(pd, xi)) cert.highest_lines_ok = false;
    generated += piece.rank();
    sum.add(ext, piece.vectors());
  }
  cert.ranks_ok = generated == ext.dim() && sum.rank() == ext.dim();
  if (!cert.ranks_ok) return cert;
  cert.index = 1;
  for (const auto& [w, b] : sum.blocks) {
    if (b.keys.size() != b.h.rank()) {
      cert.index = 0;
      return cert;
    }
    cert.index *= abs(determinant(b.h.basis));
  }
  return cert;
}

bool BGGReport::verdict() const {
  for (const auto& d : degrees)
    if (!d.match || !d.multiplicity_one || !d.splitting_ok) return false;
  return true;
}

BGGReport bgg_terms(const LieAlgebraZ& g, const ParabolicData& pd, const Weight& lambda, std::uint64_t p) {
  const RootDatum& rd = g.datum();
  rd.check_weight(lambda);
  if (!is_p_small(lambda, p, rd)) throw InvalidInput("weight " + lambda.str() + " is not p-small for p = " + std::to_string(p));
  BGGReport rep;
  rep.group = rd.name();
  rep.parabolic = pd.name();
  rep.lambda = lambda;
  rep.prime = p;
  const bool abelian = pd.abelian_radical();
  for (int i = 0; i <= static_cast<int>(pd.radical_rank()); ++i) {
    BGGDegree d;
    d.degree = i;
    d.omega = omega_multiset(pd, lambda, i);
    for (const auto& xi : d.omega)
      if (linked(xi, lambda, p, rd)) d.survivors.push_back(xi);
    std::sort(d.survivors.begin(), d.survivors.end());
    for (const WeylElt& w : pd.coset_reps(i)) d.expected.push_back(dot_action(w, lambda, rd));
    std::sort(d.expected.begin(), d.expected.end());
    d.multiplicity_one = std::adjacent_find(d.survivors.begin(), d.survivors.end()) == d.survivors.end();
    d.match = d.survivors == d.expected;
    if (abelian) {
      d.splitting = exterior_splitting(g, pd, i);
      d.splitting_ok = d.splitting->unit_at(p);
    }
    rep.degrees.push_back(std::move(d));
  }
  return rep;
}

}  // namespace zk
