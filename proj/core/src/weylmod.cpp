#include "zk/weylmod.hpp"

#include <algorithm>

#include "zk/chain.hpp"
#include "zk/error.hpp"

namespace zk {

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Min: return "min";
    case Flavor::Max: return "max";
    case Flavor::Young: return "young";
  }
  return "?";
}

std::size_t WeylLattice::highest_index() const {
  for (std::size_t i = 0; i < module.dim(); ++i)
    if (module.weights()[i] == highest) return i;
  fail_consistency("lattice has no vector of its highest weight");
}

WeylLattice minimal_lattice(const LieAlgebraZ& g, const Weight& lambda) {
  AmbientSeed seed = polynomial_model(g, lambda);
  const RootDatum& rd = g.datum();
  GradedLattice lat = generate(*seed.space, {seed.highest}, negative_roots(rd));
  WeylLattice w;
  w.highest = lambda;
  w.flavor = Flavor::Min;
  w.module = restrict_to(*seed.space, lat, g.datum_ptr(), all_roots(rd));
  w.in_min = RatMatrix::identity(w.module.dim());
  return w;
}

namespace {

// Indices of a maximal set of linearly independent rows.
std::vector<std::size_t> independent_rows(const RatMatrix& m) {
  std::vector<std::size_t> chosen;
  std::vector<RatVector> reduced;  // echelon rows
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    RatVector v = m.row(r);
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      const Rat f = v[pivots[k]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * reduced[k][j];
    }
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) continue;
    const Rat inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      const Rat f = reduced[k][p];
      if (f == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) reduced[k][j] -= f * v[j];
    }
    reduced.push_back(v);
    pivots.push_back(p);
    chosen.push_back(r);
    if (chosen.size() == m.cols()) break;
  }
  return chosen;
}

}  // namespace

ContravariantForm contravariant_gram(const WeightModule& min, const Weight& lambda) {
  const RootDatum& rd = min.datum();
  ContravariantForm f;
  f.blocks = min.blocks();
  f.gram = IntMatrix(min.dim(), min.dim());
  std::vector<std::pair<std::int64_t, Weight>> order;
  for (const auto& [w, idx] : f.blocks) {
    auto sc = rd.simple_coordinates(lambda - w);
    if (!sc) fail_consistency("weight " + w.str() + " is not below the highest weight");
    std::int64_t h = 0;
    for (auto x : *sc) h += x;
    order.emplace_back(h, w);
  }
  std::sort(order.begin(), order.end());
  std::vector<std::size_t> simple_ids;
  for (const auto& a : rd.simple_roots()) simple_ids.push_back(*rd.root_index(a));

  std::vector<std::size_t> local(min.dim());
  for (const auto& [w, idx] : f.blocks)
    for (std::size_t k = 0; k < idx.size(); ++k) local[idx[k]] = k;

  for (const auto& [h, mu] : order) {
    const auto& I = f.blocks.at(mu);
    if (h == 0) {
      if (I.size() != 1) fail_consistency("highest weight space is not a line");
      f.gram(I[0], I[0]) = 1;
      continue;
    }
    // rows f_α b' for b' of weight μ+α, and the matching pairings ⟨b', e_α b_j⟩
    RatMatrix rows(0, I.size());
    std::vector<RatVector> pairing;
    for (std::size_t s = 0; s < simple_ids.size(); ++s) {
      const std::size_t a = simple_ids[s];
      auto it = f.blocks.find(mu + rd.root(a));
      if (it == f.blocks.end()) continue;
      const auto& J = it->second;
      const SparseOp& lower = min.op(rd.negate(a));
      const SparseOp& raise = min.op(a);
      for (std::size_t bp : J) {
        RatVector row(I.size());
        for (const auto& [i, x] : lower.cols[bp]) row[local[i]] = x;
        rows.append_row(row);
        RatVector pr(I.size());
        for (std::size_t j = 0; j < I.size(); ++j)
          for (const auto& [t, x] : raise.cols[I[j]]) pr[j] += Rat(f.gram(bp, t)) * Rat(x);
        pairing.push_back(pr);
      }
    }
    const auto sel = independent_rows(rows);
    if (sel.size() != I.size()) fail_consistency("weight space " + mu.str() + " is not generated from above");
    RatMatrix S(I.size(), I.size());
    for (std::size_t r = 0; r < sel.size(); ++r) S.set_row(r, rows.row(sel[r]));
    const RatMatrix Sinv = inverse(S);
    for (std::size_t i = 0; i < I.size(); ++i)
      for (std::size_t j = 0; j < I.size(); ++j) {
        Rat v = 0;
        for (std::size_t r = 0; r < sel.size(); ++r) v += Sinv(i, r) * pairing[sel[r]][j];
        if (v.get_den() != 1) fail_consistency("contravariant form is not integral on the minimal lattice");
        f.gram(I[i], I[j]) = v.get_num();
      }
    for (std::size_t i = 0; i < I.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (f.gram(I[i], I[j]) != f.gram(I[j], I[i])) fail_consistency("contravariant form is not symmetric");
  }
  return f;
}

WeylLattice maximal_lattice(const WeylLattice& min, const ContravariantForm& form) {
  WeylLattice w;
  w.highest = min.highest;
  w.flavor = Flavor::Max;
  w.module = min.module.dual();
  w.in_min = RatMatrix(min.dim(), min.dim());
  for (const auto& [mu, idx] : form.blocks) {
    RatMatrix inv = inverse(to_rational(form.gram.select(idx, idx)));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) w.in_min(idx[i], idx[j]) = inv(i, j);
  }
  return w;
}

WeylLattice build_weyl_lattice(const LieAlgebraZ& g, const Weight& lambda, Flavor flavor) {
  WeylLattice min = minimal_lattice(g, lambda);
  if (flavor == Flavor::Min) return min;
  if (flavor == Flavor::Max) return maximal_lattice(min, contravariant_gram(min.module, lambda));
  throw InvalidInput("the Young lattice is built by young_lattice");
}

std::vector<Int> max_over_min(const ContravariantForm& form) {
  std::vector<Int> all;
  for (const auto& [mu, idx] : form.blocks) {
    auto d = smith_divisors(form.gram.select(idx, idx));
    if (d.size() != idx.size()) fail_consistency("contravariant form is degenerate");
    all.insert(all.end(), d.begin(), d.end());
  }
  return merge_invariant_factors(all);
}

IndexDivisors lattice_indices(const RatMatrix& in_min, const ContravariantForm& form) {
  IndexDivisors out;
  std::vector<Int> a, b;
  for (const auto& [mu, idx] : form.blocks) {
    RatMatrix R = in_min.select(idx, idx);
    auto d1 = smith_divisors(to_integral(inverse(R), "lattice does not contain the minimal lattice"));
    auto d2 = smith_divisors(to_integral(R * to_rational(form.gram.select(idx, idx)), "lattice is not inside the maximal lattice"));
    a.insert(a.end(), d1.begin(), d1.end());
    b.insert(b.end(), d2.begin(), d2.end());
  }
  out.over_min = merge_invariant_factors(a);
  out.under_max = merge_invariant_factors(b);
  return out;
}

Weight fundamental_weight(const RootDatum& rd, int i) {
  Weight w(rd.dim());
  for (int k = 0; k <= i; ++k) w[k] = 1;
  if (rd.family() == Family::GSp) w[rd.dim() - 1] = i + 1;
  return w;
}

Weight levi_dominating_twist(const ParabolicData& pd, const Weight& xi) {
  const RootDatum& rd = pd.datum();
  std::int64_t n = 0;
  for (int i : pd.complement_simple()) n = std::max(n, -pair(xi, rd.simple_coroots()[i]));
  Weight z(rd.dim());
  for (int i : pd.complement_simple()) z = z + n * fundamental_weight(rd, i);
  return z;
}

WeightModule levi_weyl_lattice(const LieAlgebraZ& g, const ParabolicData& pd, const Weight& xi) {
  const RootDatum& rd = g.datum();
  rd.check_weight(xi);
  if (!pd.is_levi_dominant(xi)) throw InvalidInput("weight " + xi.str() + " is not Levi-dominant");
  const Weight z = levi_dominating_twist(pd, xi);
  AmbientSeed seed = polynomial_model(g, xi + z);
  GradedLattice lat = generate(*seed.space, {seed.highest}, levi_negative_roots(pd));
  return restrict_to(*seed.space, lat, g.datum_ptr(), levi_roots(pd)).shifted(-z);
}

}  // namespace zk
