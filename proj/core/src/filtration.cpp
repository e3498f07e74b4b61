#include "zk/filtration.hpp"

#include <algorithm>

#include "zk/error.hpp"

namespace zk {

std::size_t LevelFiltration::rank_from(std::int64_t k) const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < levels.size(); ++i)
    if (levels[i] >= k) r += pieces[i].size();
  return r;
}

LevelFiltration level_filtration(const WeightModule& v, const ParabolicData& pd, const Weight& lambda) {
  LevelFiltration f;
  std::map<std::int64_t, std::vector<std::size_t>> by;
  f.level_of.resize(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const std::int64_t k = pd.f_I(v.weights()[i] - lambda);
    if (k < 0) fail_consistency("weight above the highest weight in the level filtration");
    f.level_of[i] = k;
    by[k].push_back(i);
  }
  for (auto& [k, idx] : by) {
    f.levels.push_back(k);
    f.pieces.push_back(std::move(idx));
  }
  return f;
}

namespace {

IntMatrix block_rows(const GradedLattice::Block& b, const std::vector<std::size_t>& keys) {
  IntMatrix s(b.h.rank(), keys.size());
  for (std::size_t j = 0; j < b.keys.size(); ++j) {
    const auto pos = std::lower_bound(keys.begin(), keys.end(), b.keys[j]) - keys.begin();
    for (std::size_t r = 0; r < b.h.rank(); ++r) s(r, pos) = b.h.basis(r, j);
  }
  return s;
}

}  // namespace

PFiltration donkin_filtration(const WeightModule& m, const ParabolicData& pd, std::uint64_t p) {
  const RootDatum& rd = m.datum();
  const auto blocks = m.blocks();
  const auto bound = static_cast<std::int64_t>(p);
  for (const auto& [nu, idx] : blocks)
    for (std::size_t id : pd.levi_positive()) {
      const std::int64_t x = pair(nu + rd.rho(), rd.coroot(id));
      if (x > bound || -x > bound)
        throw InvalidInput("weight " + nu.str() + " violates the Levi weight bound for p = " + std::to_string(p));
    }

  std::vector<std::size_t> p_roots;
  for (std::size_t id = 0; id < rd.num_roots(); ++id)
    if (m.acts(id) && (rd.is_positive(id) || pd.in_levi(rd.negate(id)))) p_roots.push_back(id);
  const auto lowering = levi_negative_roots(pd);

  PFiltration out;
  GradedLattice F;
  std::size_t have = 0;
  while (have < m.dim()) {
    // a weight of M/F that is maximal for ⟨·, ρ⟩
    const Weight* best = nullptr;
    std::int64_t best_phi = 0;
    for (const auto& [mu, idx] : blocks) {
      auto it = F.blocks.find(mu);
      const std::size_t r = it == F.blocks.end() ? 0 : it->second.h.rank();
      if (r == idx.size()) continue;
      const std::int64_t phi = rd.inner(mu, rd.rho());
      if (!best || phi > best_phi || (phi == best_phi && mu > *best)) {
        best = &mu;
        best_phi = phi;
      }
    }
    if (!best) fail_consistency("Donkin filtration: rank bookkeeping");
    const Weight mu = *best;
    const auto& keys = blocks.at(mu);

    // primitive vector of M_μ modulo the saturated F_μ
    SparseVec v;
    auto it = F.blocks.find(mu);
    if (it == F.blocks.end() || it->second.h.rank() == 0) {
      v[keys[0]] = 1;
    } else {
      const IntMatrix s = block_rows(it->second, keys);
      const SmithForm sf = smith_form(s);
      for (std::size_t j = 0; j < keys.size(); ++j)
        if (sf.V(j, s.rows()) != 0) v[keys[j]] = sf.V(j, s.rows());
    }

    GradedLattice span = generate(m, {v}, lowering);
    GradedLattice next = F;
    next.add(m, span.vectors());

    // the new piece must carry exactly the Levi character of μ
    Character got;
    for (const auto& [w, b] : next.blocks) {
      auto old = F.blocks.find(w);
      const std::size_t before = old == F.blocks.end() ? 0 : old->second.h.rank();
      if (b.h.rank() > before) got[w] = static_cast<std::int64_t>(b.h.rank() - before);
    }
    if (got != levi_character(pd, mu))
      fail_consistency("Donkin filtration: piece generated at " + mu.str() + " is not a Levi Weyl lattice");

    for (const SparseVec& u : next.vectors())
      for (std::size_t r : p_roots) {
        SparseVec y = m.apply(r, u);
        if (y.empty()) continue;
        const Weight tw = m.weight(y.begin()->first);
        auto tb = next.blocks.find(tw);
        bool ok = tb != next.blocks.end();
        if (ok) {
          RatVector yv(tb->second.keys.size());
          for (const auto& [k, x] : y) {
            auto pos = std::lower_bound(tb->second.keys.begin(), tb->second.keys.end(), k);
            if (pos == tb->second.keys.end() || *pos != k) {
              ok = false;
              break;
            }
            yv[pos - tb->second.keys.begin()] = Rat(x);
          }
          ok = ok && solve_in_span(tb->second.h, yv).has_value();
        }
        if (!ok) fail_consistency("Donkin filtration: a step is not P-stable");
      }

    FiltrationStep step;
    step.top = mu;
    for (auto& [w, b] : next.blocks) {
      const auto& full = blocks.at(w);
      const IntMatrix rows = block_rows(b, full);
      for (const auto& d : smith_divisors(rows)) step.torsion *= d;
      b.keys = full;
      b.h = saturate(rows);
    }
    if (mpz_divisible_ui_p(step.torsion.get_mpz_t(), p))
      fail_consistency("Donkin filtration: quotient at " + mu.str() + " has p-torsion");
    F = std::move(next);
    have = F.rank();
    step.rank = have;
    IntMatrix term(have, m.dim());
    std::size_t r = 0;
    for (const SparseVec& u : F.vectors()) {
      for (const auto& [k, x] : u) term(r, k) = x;
      ++r;
    }
    out.terms.push_back(std::move(term));
    out.steps.push_back(std::move(step));
  }
  return out;
}

}  // namespace zk
