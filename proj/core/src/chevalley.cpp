#include "zk/chevalley.hpp"

#include "zk/error.hpp"

namespace zk {

SmallMat commutator(const SmallMat& a, const SmallMat& b) {
  const std::size_t n = a.size();
  SmallMat c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
      if (b[i][k])
        for (std::size_t j = 0; j < n; ++j) c[i][j] -= b[i][k] * a[k][j];
    }
  return c;
}

SmallMat transpose(const SmallMat& a) {
  const std::size_t n = a.size();
  SmallMat t(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
  return t;
}

IntMatrix to_int_matrix(const SmallMat& a) {
  IntMatrix m(a.size(), a.empty() ? 0 : a[0].size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = static_cast<long>(a[i][j]);
  return m;
}

namespace {

SmallMat zero(std::size_t n) { return SmallMat(n, std::vector<std::int64_t>(n, 0)); }

bool is_zero(const SmallMat& m) {
  for (const auto& r : m)
    for (auto x : r)
      if (x) return false;
  return true;
}

// the symplectic form: J e_i = −e_i*, J e_i* = e_i in the ordering (e_g..e_1, e_1*..e_g*)
SmallMat symplectic_j(std::size_t g) {
  SmallMat j = zero(2 * g);
  for (std::size_t r = 0; r < g; ++r) {
    j[r][2 * g - 1 - r] = 1;
    j[2 * g - 1 - r][r] = -1;
  }
  return j;
}

SmallMat mul(const SmallMat& a, const SmallMat& b) {
  const std::size_t n = a.size();
  SmallMat c = zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

const SmallMat& LieAlgebraZ::basis(std::size_t k) const {
  return k < torus_.size() ? torus_[k] : roots_[k - torus_.size()];
}

std::int64_t LieAlgebraZ::torus_pairing(const Weight& mu, std::size_t i) const {
  if (rd_->family() == Family::GL) return mu[i];
  const std::size_t g = static_cast<std::size_t>(rd_->n());
  if (i < g) return mu[i];
  std::int64_t s = mu[g];
  for (std::size_t a = 0; a < g; ++a) s -= mu[a];
  return s / 2;
}

SmallMat LieAlgebraZ::coroot_matrix(std::size_t id) const {
  const Coweight c = rd_->coroot(id);
  SmallMat h = zero(natural_dim());
  for (std::size_t a = 0; a < c.size(); ++a) {
    if (!c[a]) continue;
    for (std::size_t k = 0; k < natural_dim(); ++k) h[k][k] += c[a] * rd_->natural_weight(k)[a];
  }
  return h;
}

std::optional<std::pair<std::size_t, std::int64_t>> LieAlgebraZ::root_bracket(std::size_t a, std::size_t b) const {
  return table_[a][b];
}

std::vector<std::int64_t> LieAlgebraZ::decompose(const SmallMat& m0) const {
  SmallMat m = m0;
  std::vector<std::int64_t> c(dimension(), 0);
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    auto [r, s] = anchor_[k];
    std::int64_t v = m[r][s] / roots_[k][r][s];
    if (v * roots_[k][r][s] != m[r][s]) throw InvalidInput("decompose: not in the Chevalley lattice");
    if (!v) continue;
    c[torus_.size() + k] = v;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) m[i][j] -= v * roots_[k][i][j];
  }
  const std::size_t n = natural_dim();
  if (rd_->family() == Family::GL) {
    for (std::size_t i = 0; i < n; ++i) c[i] = m[i][i];
  } else {
    const std::size_t g = static_cast<std::size_t>(rd_->n());
    for (std::size_t a = 0; a < g; ++a) c[a] = m[a][a];
    c[g] = m[2 * g - 1][2 * g - 1] + m[0][0];
  }
  SmallMat rec = zero(n);
  for (std::size_t k = 0; k < torus_.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) rec[i][i] += c[k] * torus_[k][i][i];
  if (rec != m) throw InvalidInput("decompose: matrix is not in the Lie algebra");
  return c;
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::int64_t>> LieAlgebraZ::structure_constants() const {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::int64_t>> out;
  for (std::size_t i = 0; i < dimension(); ++i)
    for (std::size_t j = i + 1; j < dimension(); ++j) {
      auto c = decompose(commutator(basis(i), basis(j)));
      for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k]) out.emplace_back(i, j, k, c[k]);
    }
  return out;
}

LieAlgebraZ build_algebra(const RootDatum& rd) {
  LieAlgebraZ L;
  L.rd_ = std::make_shared<RootDatum>(rd);
  const std::size_t n = rd.natural_dim();
  if (rd.family() == Family::GL) {
    for (std::size_t i = 0; i < n; ++i) {
      SmallMat t = zero(n);
      t[i][i] = 1;
      L.torus_.push_back(t);
    }
  } else {
    const std::size_t g = static_cast<std::size_t>(rd.n());
    for (std::size_t a = 0; a < g; ++a) {
      SmallMat t = zero(n);
      t[a][a] = 1;
      t[2 * g - 1 - a][2 * g - 1 - a] = -1;
      L.torus_.push_back(t);
    }
    SmallMat z = zero(n);
    for (std::size_t k = g; k < n; ++k) z[k][k] = 1;
    L.torus_.push_back(z);
  }

  const std::size_t N = rd.num_positive();
  L.roots_.assign(2 * N, SmallMat{});
  L.anchor_.assign(2 * N, {0, 0});
  SmallMat J;
  if (rd.family() == Family::GSp) J = symplectic_j(static_cast<std::size_t>(rd.n()));
  for (std::size_t b = 0; b < N; ++b) {
    const Weight beta = rd.positive_roots()[b];
    bool found = false;
    for (std::size_t r = 0; r < n && !found; ++r)
      for (std::size_t s = 0; s < n && !found; ++s) {
        if (rd.natural_weight(r) - rd.natural_weight(s) != beta) continue;
        SmallMat m = zero(n);
        m[r][s] = 1;
        SmallMat x = m;
        if (rd.family() == Family::GSp) {
          // σ(M) = −J⁻¹ ᵗM J = J ᵗM J is the involution fixing sp
          SmallMat sm = mul(mul(J, transpose(m)), J);
          if (sm != m)
            for (std::size_t i = 0; i < n; ++i)
              for (std::size_t j = 0; j < n; ++j) x[i][j] += sm[i][j];
        }
        L.roots_[b] = x;
        L.anchor_[b] = {r, s};
        L.roots_[b + N] = transpose(x);
        L.anchor_[b + N] = {s, r};
        found = true;
      }
    if (!found) fail_consistency("no matrix unit of weight " + beta.str());
  }

  L.table_.assign(2 * N, std::vector<std::optional<std::pair<std::size_t, std::int64_t>>>(2 * N));
  for (std::size_t a = 0; a < 2 * N; ++a)
    for (std::size_t b = 0; b < 2 * N; ++b) {
      auto k = rd.root_index(rd.root(a) + rd.root(b));
      SmallMat c = commutator(L.roots_[a], L.roots_[b]);
      if (!k) {
        if (b != rd.negate(a) && !is_zero(c)) fail_consistency("bracket of root vectors outside a root space");
        continue;
      }
      auto [r, s] = L.anchor_[*k];
      std::int64_t v = c[r][s] / L.roots_[*k][r][s];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (c[i][j] != v * L.roots_[*k][i][j]) fail_consistency("root bracket is not a multiple of a root vector");
      if (v) L.table_[a][b] = std::make_pair(*k, v);
    }
  return L;
}

// ---- Lie rings -----------------------------------------------------------

IntVector LieRing::bracket(const IntVector& a, const IntVector& b) const {
  IntVector out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      Int f = a[i] * b[j];
      for (std::size_t k = 0; k < dim; ++k)
        if (br[i][j][k] != 0) out[k] += f * br[i][j][k];
    }
  }
  return out;
}

bool LieRing::jacobi_holds() const {
  auto unit = [&](std::size_t i) {
    IntVector v(dim);
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k)
        if (br[i][j][k] + br[j][i][k] != 0) return false;
      for (std::size_t k = 0; k < dim; ++k) {
        IntVector s = bracket(unit(i), br[j][k]);
        IntVector t = bracket(unit(j), br[k][i]);
        IntVector u = bracket(unit(k), br[i][j]);
        for (std::size_t q = 0; q < dim; ++q)
          if (s[q] + t[q] + u[q] != 0) return false;
      }
    }
  return true;
}

ParabolicSplit parabolic_split(const LieAlgebraZ& g, const ParabolicData& pd) {
  ParabolicSplit s;
  s.g = std::make_shared<LieAlgebraZ>(g);
  s.pd = std::make_shared<ParabolicData>(pd);
  const RootDatum& rd = g.datum();
  for (std::size_t i = 0; i < g.torus_rank(); ++i) s.p_basis.push_back(i);
  for (std::size_t id = 0; id < rd.num_roots(); ++id)
    if (rd.is_positive(id) || pd.in_levi(id)) s.p_basis.push_back(g.basis_index_of_root(id));
  for (std::size_t i = 0; i < pd.radical_rank(); ++i) {
    std::size_t b = pd.radical()[i];
    s.u_basis.push_back(g.basis_index_of_root(b));
    s.um_roots.push_back(rd.negate(b));
    s.um_basis.push_back(g.basis_index_of_root(rd.negate(b)));
    s.levels.push_back(pd.nu(i));
  }
  return s;
}

std::optional<std::pair<std::size_t, std::int64_t>> ParabolicSplit::bracket(std::size_t i, std::size_t j) const {
  auto b = g->root_bracket(um_roots[i], um_roots[j]);
  if (!b) return std::nullopt;
  for (std::size_t k = 0; k < um_roots.size(); ++k)
    if (um_roots[k] == b->first) return std::make_pair(k, b->second);
  fail_consistency("u_P⁻ is not closed under the bracket");
}

LieRing ParabolicSplit::radical_ring() const {
  LieRing u;
  u.dim = rank();
  u.br.assign(u.dim, std::vector<IntVector>(u.dim, IntVector(u.dim)));
  for (std::size_t i = 0; i < u.dim; ++i)
    for (std::size_t j = 0; j < u.dim; ++j)
      if (auto b = bracket(i, j)) u.br[i][j][b->first] = static_cast<long>(b->second);
  return u;
}

IntMatrix divided_power_action(const IntMatrix& x, unsigned m) {
  IntMatrix p = IntMatrix::identity(x.rows());
  for (unsigned k = 1; k <= m; ++k) {
    p = p * x;
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < p.cols(); ++j) {
        Int& e = p(i, j);
        if (e == 0) continue;
        if (!mpz_divisible_ui_p(e.get_mpz_t(), k))
          fail_consistency("divided power X^(" + std::to_string(m) + ") is not integral: lattice not admissible");
        mpz_divexact_ui(e.get_mpz_t(), e.get_mpz_t(), k);
      }
  }
  return p;
}

IsolatedSeries isolated_lcs(const LieRing& u) {
  IsolatedSeries s;
  if (u.dim == 0) return s;
  Hermite cur = hermite(IntMatrix::identity(u.dim));
  auto unit = [&](std::size_t i) {
    IntVector v(u.dim);
    v[i] = 1;
    return v;
  };
  for (;;) {
    s.terms.push_back(cur);
    IntMatrix gens(0, u.dim);
    for (std::size_t a = 0; a < u.dim; ++a)
      for (std::size_t r = 0; r < cur.rank(); ++r) {
        IntVector b = u.bracket(unit(a), cur.basis.row(r));
        bool nz = false;
        for (auto& x : b) nz = nz || x != 0;
        if (nz) gens.append_row(b);
      }
    Hermite next = saturate(gens);
    if (next.rank() == cur.rank()) throw InvalidInput("isolated_lcs: Lie ring is not nilpotent");
    s.gr_ranks.push_back(cur.rank() - next.rank());
    if (next.rank() == 0) break;
    cur = next;
  }
  return s;
}

}  // namespace zk
