#include "zk/grouphom.hpp"

#include <bit>

#include "zk/character.hpp"
#include "zk/error.hpp"
#include "zk/liehomology.hpp"
#include "zk/weylmod.hpp"

namespace zk {

namespace {

void add_block(IntMatrix& d, std::size_t r0, std::size_t c0, const IntMatrix& b, const Int& coef) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (b(i, j) != 0) d(r0 + i, c0 + j) += coef * b(i, j);
}

std::vector<std::vector<std::uint32_t>> masks_by_degree(std::size_t r) {
  std::vector<std::vector<std::uint32_t>> out(r + 1);
  for (std::uint32_t m = 0; m < (1u << r); ++m) out[std::popcount(m)].push_back(m);
  return out;
}

ChainComplexZ empty_complex(const std::vector<std::vector<std::uint32_t>>& masks, std::size_t dim) {
  ChainComplexZ c;
  for (std::size_t n = 0; n < masks.size(); ++n) {
    c.dims.push_back(masks[n].size() * dim);
    c.d.emplace_back(n == 0 ? 0 : masks[n - 1].size() * dim, masks[n].size() * dim);
  }
  return c;
}

std::size_t position(const std::vector<std::uint32_t>& v, std::uint32_t m) {
  return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), m) - v.begin());
}

}  // namespace

ChainComplexZ koszul_complex(const PolyZGroup& g, const GammaModule& m) {
  if (!g.abelian()) throw InvalidInput("Koszul complex needs an abelian group");
  const std::size_t r = g.rank(), dim = m.dim;
  const auto masks = masks_by_degree(r);
  ChainComplexZ c = empty_complex(masks, dim);
  std::vector<IntMatrix> ops;
  for (std::size_t i = 0; i < r; ++i) ops.push_back(m.power(i, 1) - IntMatrix::identity(dim));
  for (std::size_t n = 1; n <= r; ++n)
    for (std::size_t col = 0; col < masks[n].size(); ++col) {
      const std::uint32_t s = masks[n][col];
      int a = 0;
      for (std::size_t i = 0; i < r; ++i) {
        if (!(s >> i & 1)) continue;
        const std::size_t row = position(masks[n - 1], s & ~(1u << i));
        add_block(c.d[n], row * dim, col * dim, ops[i], a % 2 ? -1 : 1);
        ++a;
      }
    }
  c.validate();
  return c;
}

ChainComplexZ coinvariant_complex(FreeResolution& f, const GammaModule& m) {
  const PolyZGroup& g = f.group();
  const std::size_t r = g.rank(), dim = m.dim;
  const auto masks = masks_by_degree(r);
  ChainComplexZ c = empty_complex(masks, dim);
  std::map<Coords, IntMatrix> rho_inv;
  for (std::size_t n = 1; n <= r; ++n)
    for (std::size_t col = 0; col < masks[n].size(); ++col)
      for (const auto& [cell, x] : f.boundary(masks[n][col])) {
        auto it = rho_inv.find(cell.g);
        if (it == rho_inv.end()) it = rho_inv.emplace(cell.g, m.rho(g.inverse(cell.g))).first;
        add_block(c.d[n], position(masks[n - 1], cell.mask) * dim, col * dim, it->second, x);
      }
  c.validate();
  return c;
}

GroupHomology group_homology(const PolyZGroup& g, const GammaModule& m, std::optional<std::uint64_t> p,
                             bool use_resolution) {
  GroupHomology out;
  ChainComplexZ c;
  if (g.abelian() && !use_resolution) {
    out.koszul = true;
    c = koszul_complex(g, m);
  } else {
    FreeResolution f(g);
    out.certificate = f.certify();
    if (!out.certificate->ok()) fail_consistency("free resolution certificates failed");
    c = coinvariant_complex(f, m);
  }
  out.degrees = homology_all(c, p, false);
  return out;
}

bool DegenerationReport::verdict() const {
  if (!star_ok || (certificate && !certificate->ok()) || (koszul && certificate && !cross_checked)) return false;
  for (const auto& d : degrees)
    if (!d.rank_ok || !d.p_torsion_free) return false;
  return true;
}

std::vector<DegenerationReport> degeneration_sweep(const LieAlgebraZ& g, const ParabolicData& pd,
                                                   const Weight& lambda, const std::vector<std::uint64_t>& primes) {
  const RootDatum& rd = g.datum();
  rd.check_weight(lambda);
  if (!rd.is_dominant(lambda)) throw InvalidInput("weight " + lambda.str() + " is not dominant");
  const ParabolicSplit split = parabolic_split(g, pd);
  if (split.rank() > 4) throw InvalidInput("group homology is limited to radicals of rank at most 4");
  const PolyZGroup gamma = build_group(split);
  const WeylLattice v = minimal_lattice(g, lambda);
  const GammaModule m = gamma_action(gamma, v.module, lambda);

  DegenerationReport base;
  base.group = rd.name();
  base.parabolic = pd.name();
  base.lambda = lambda;
  base.gamma_rank = gamma.rank();
  base.abelian = gamma.abelian();
  base.star_ok = m.star_ok;

  ChainComplexZ c;
  if (base.abelian) {
    base.koszul = true;
    c = koszul_complex(gamma, m);
    if (m.dim <= 40) {
      FreeResolution f(gamma);
      base.certificate = f.certify();
      const ChainComplexZ cone = coinvariant_complex(f, m);
      base.cross_checked = true;
      for (int n = 0; n <= c.top(); ++n)
        if (homology_at(c, n, std::nullopt, false).total != homology_at(cone, n, std::nullopt, false).total)
          base.cross_checked = false;
    }
  } else {
    FreeResolution f(gamma);
    base.certificate = f.certify();
    c = coinvariant_complex(f, m);
  }

  const KostantReport lie = kostant_check(g, pd, lambda, std::nullopt);
  const int top = c.top();
  std::vector<std::size_t> rank_q_of(top + 2, 0);
  for (int n = 1; n <= top; ++n) rank_q_of[n] = rank_q(c.d[n]);
  std::vector<std::int64_t> predicted(top + 1, 0);
  for (int n = 0; n <= top; ++n)
    for (const auto& w : pd.coset_reps(n)) predicted[n] += levi_dimension(pd, dot_action(w, lambda, rd)).get_si();

  std::vector<DegenerationReport> out;
  for (auto p : primes) {
    DegenerationReport rep = base;
    rep.prime = p;
    rep.p_small = is_p_small(lambda, p, rd);
    std::vector<std::size_t> rank_p(top + 2, 0);
    for (int n = 1; n <= top; ++n) rank_p[n] = rank_mod_p(c.d[n], p);
    for (int n = 0; n <= top; ++n) {
      DegenerationDegree d;
      d.degree = n;
      d.predicted = predicted[n];
      d.lie_rank = lie.degrees[n].homology.total.free_rank;
      d.group_rank = c.dims[n] - rank_q_of[n] - rank_q_of[n + 1];
      d.p_torsion_count = rank_q_of[n + 1] - rank_p[n + 1];
      d.fp_dim = c.dims[n] - rank_p[n] - rank_p[n + 1];
      d.rank_ok = static_cast<std::int64_t>(d.group_rank) == d.predicted &&
                  static_cast<std::int64_t>(d.lie_rank) == d.predicted;
      d.p_torsion_free = d.p_torsion_count == 0;
      rep.degrees.push_back(d);
    }
    out.push_back(std::move(rep));
  }
  return out;
}

DegenerationReport degeneration_check(const LieAlgebraZ& g, const ParabolicData& pd, const Weight& lambda,
                                      std::uint64_t p) {
  return degeneration_sweep(g, pd, lambda, {p}).front();
}

}  // namespace zk
