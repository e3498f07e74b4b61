#include "zk/nilgroup.hpp"

#include <algorithm>
#include <numeric>

#include "zk/error.hpp"

namespace zk {

namespace {

std::int64_t cmul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Inconclusive("64-bit overflow in group arithmetic");
  return r;
}

std::int64_t cadd(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Inconclusive("64-bit overflow in group arithmetic");
  return r;
}

SmallMat identity_mat(std::size_t n) {
  SmallMat m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

SmallMat mat_mul(const SmallMat& a, const SmallMat& b) {
  const std::size_t n = a.size();
  SmallMat c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b[k][j] != 0) c[i][j] = cadd(c[i][j], cmul(a[i][k], b[k][j]));
    }
  return c;
}

bool is_zero_mat(const SmallMat& a) {
  for (const auto& row : a)
    for (auto x : row)
      if (x != 0) return false;
  return true;
}

Int binom(std::int64_t x, std::int64_t j) {
  Int out;
  mpz_bin_ui(out.get_mpz_t(), Int(static_cast<long>(x)).get_mpz_t(), static_cast<unsigned long>(j));
  return out;
}

}  // namespace

// ---- group ---------------------------------------------------------------------

std::int64_t PolyZGroup::nilpotency_class() const {
  return levels_.empty() ? 0 : *std::max_element(levels_.begin(), levels_.end());
}

bool PolyZGroup::abelian() const {
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i + 1; j < rank(); ++j)
      if (split_->bracket(order_[i], order_[j])) return false;
  return true;
}

Coords PolyZGroup::unit(std::size_t i, std::int64_t k) const {
  Coords x(rank(), 0);
  x[i] = k;
  return x;
}

SmallMat PolyZGroup::element(const Coords& x) const {
  SmallMat m = identity_mat(n_);
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    SmallMat p = identity_mat(n_);
    std::int64_t xm = 1;
    for (std::size_t k = 1; k < divided_[i].size(); ++k) {
      xm = cmul(xm, x[i]);
      for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
          if (divided_[i][k][a][b] != 0) p[a][b] = cadd(p[a][b], cmul(xm, divided_[i][k][a][b]));
    }
    m = mat_mul(m, p);
  }
  return m;
}

Coords PolyZGroup::collect(const SmallMat& m0) const {
  SmallMat m = m0;
  Coords x(rank(), 0);
  for (std::size_t i = 0; i < rank(); ++i) {
    const auto [a, b] = anchor_[i];
    if (m[a][b] % anchor_value_[i] != 0) fail_consistency("collection: anchor entry not divisible");
    x[i] = m[a][b] / anchor_value_[i];
    if (x[i] != 0) m = mat_mul(element(unit(i, -x[i])), m);
  }
  if (m != identity_mat(n_)) fail_consistency("collection: matrix is not in the group");
  return x;
}

Coords PolyZGroup::multiply(const Coords& x, const Coords& y) const {
  return collect(mat_mul(element(x), element(y)));
}

Coords PolyZGroup::inverse(const Coords& x) const {
  SmallMat m = identity_mat(n_);
  for (std::size_t i = rank(); i-- > 0;)
    if (x[i] != 0) m = mat_mul(m, element(unit(i, -x[i])));
  return collect(m);
}

PolyZGroup build_group(const ParabolicSplit& s, std::vector<std::size_t> order) {
  PolyZGroup g;
  g.split_ = std::make_shared<ParabolicSplit>(s);
  g.n_ = s.g->natural_dim();
  if (order.empty()) {
    order.resize(s.rank());
    std::iota(order.begin(), order.end(), 0);
  }
  {
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i || sorted.size() != s.rank()) throw InvalidInput("generator order is not a permutation");
  }
  g.order_ = order;
  for (std::size_t i = 0; i < order.size(); ++i) {
    g.levels_.push_back(s.levels[order[i]]);
    if (i > 0 && g.levels_[i] < g.levels_[i - 1]) throw InvalidInput("generator order must keep levels non-decreasing");
    const std::size_t root = s.um_roots[order[i]];
    g.roots_.push_back(root);
    const SmallMat& x = s.g->root_vector(root);
    std::vector<SmallMat> div{identity_mat(g.n_), x};
    for (std::int64_t m = 2;; ++m) {
      SmallMat next = mat_mul(div.back(), x);
      if (is_zero_mat(next)) break;
      for (auto& row : next)
        for (auto& e : row) {
          if (e % m != 0) fail_consistency("divided power of a root vector is not integral");
          e /= m;
        }
      div.push_back(std::move(next));
    }
    g.divided_.push_back(std::move(div));
    std::optional<std::pair<std::size_t, std::size_t>> anchor;
    for (std::size_t a = 0; a < g.n_ && !anchor; ++a)
      for (std::size_t b = 0; b < g.n_; ++b)
        if (x[a][b] != 0) {
          anchor = {a, b};
          break;
        }
    if (!anchor) fail_consistency("zero root vector");
    g.anchor_.push_back(*anchor);
    g.anchor_value_.push_back(x[anchor->first][anchor->second]);
    g.gens_.push_back(g.element(g.unit(i)));
  }
  return g;
}

// ---- Hall polynomials ----------------------------------------------------------

HallData hall_data(const PolyZGroup& g, std::int64_t box) {
  const std::size_t r = g.rank();
  const std::int64_t c = std::max<std::int64_t>(g.nilpotency_class(), 1);
  HallData h;
  h.b.assign(r, std::vector<std::vector<Rat>>(r, std::vector<Rat>(r)));
  // [s^1] C(s, a) = (−1)^{a−1}/a
  auto lin = [](std::int64_t a) { return Rat(a % 2 ? 1 : -1, a); };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<std::vector<Coords>> f(c + 1, std::vector<Coords>(c + 1));
      for (std::int64_t s = 0; s <= c; ++s)
        for (std::int64_t t = 0; t <= c; ++t) f[s][t] = g.multiply(g.unit(i, s), g.unit(j, t));
      for (std::size_t k = 0; k < r; ++k) {
        Rat coeff = 0;
        for (std::int64_t a = 1; a <= c; ++a)
          for (std::int64_t b = 1; b <= c; ++b) {
            Int delta = 0;
            for (std::int64_t u = 0; u <= a; ++u)
              for (std::int64_t v = 0; v <= b; ++v) {
                Int term = binom(a, u) * binom(b, v) * Int(static_cast<long>(f[u][v][k]));
                if ((a - u + b - v) % 2) delta -= term;
                else delta += term;
              }
            coeff += Rat(delta) * lin(a) * lin(b);
          }
        coeff.canonicalize();
        h.b[k][i][j] = coeff;
      }
    }
  h.lower_vanishes = true;
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        if (h.b[k][i][j] != 0) h.lower_vanishes = false;

  h.identities_ok = true;
  const Coords zero = g.identity();
  Coords x(r, -box);
  std::size_t budget = 20000;
  while (budget-- > 0) {
    if (g.multiply(x, zero) != x || g.multiply(zero, x) != x) h.identities_ok = false;
    std::size_t pos = 0;
    while (pos < r && x[pos] == box) x[pos++] = -box;
    if (pos == r) break;
    ++x[pos];
  }
  return h;
}

GradedLieTable gr_isol_group(const PolyZGroup& g) {
  const std::size_t r = g.rank();
  const HallData h = hall_data(g);
  GradedLieTable t;
  t.levels = g.levels();
  t.bracket.assign(r, std::vector<std::map<std::size_t, Rat>>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        if (g.level(k) != g.level(i) + g.level(j)) continue;
        Rat c = h.b[k][i][j] - h.b[k][j][i];
        if (c != 0) t.bracket[i][j][k] = c;
      }
  std::vector<std::size_t> pos(r);
  for (std::size_t i = 0; i < r; ++i) pos[g.split_index(i)] = i;
  t.matches_lie = true;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      std::map<std::size_t, Rat> expect;
      if (auto b = g.split().bracket(g.split_index(i), g.split_index(j)))
        expect[pos[b->first]] = Rat(static_cast<long>(b->second));
      if (expect != t.bracket[i][j]) t.matches_lie = false;
    }
  const std::int64_t c = g.nilpotency_class();
  t.graded_ranks.assign(c, 0);
  for (auto l : t.levels) ++t.graded_ranks[l - 1];
  t.ranks_match = isolated_lcs(g.split().radical_ring()).gr_ranks == t.graded_ranks;
  return t;
}

// ---- Hartley basis -------------------------------------------------------------

namespace {

using GroupRingElt = std::map<Coords, Int>;

struct MonomialModel {
  std::vector<Coords> index;  // exponent vectors j with ν(j) ≤ d
  std::vector<std::int64_t> weight;

  IntVector phi(const Coords& x) const {
    IntVector v(index.size());
    for (std::size_t a = 0; a < index.size(); ++a) {
      Int p = 1;
      for (std::size_t i = 0; i < x.size() && p != 0; ++i)
        if (index[a][i]) p *= binom(x[i], index[a][i]);
      v[a] = p;
    }
    return v;
  }
  IntVector phi(const GroupRingElt& e) const {
    IntVector v(index.size());
    for (const auto& [x, c] : e) {
      IntVector w = phi(x);
      for (std::size_t a = 0; a < v.size(); ++a) v[a] += c * w[a];
    }
    return v;
  }
};

void enumerate_exponents(const std::vector<std::int64_t>& levels, std::int64_t lo, std::int64_t hi, std::size_t i,
                         Coords& cur, std::int64_t w, std::vector<Coords>& out, std::vector<std::int64_t>& wts) {
  if (i == levels.size()) {
    if (w >= lo) {
      out.push_back(cur);
      wts.push_back(w);
    }
    return;
  }
  for (std::int64_t m = 0; w + m * levels[i] <= hi; ++m) {
    cur[i] = m;
    enumerate_exponents(levels, lo, hi, i + 1, cur, w + m * levels[i], out, wts);
  }
  cur[i] = 0;
}

// u(j) = ∏ g_i^{−⌊(j_i+1)/2⌋} (g_i − 1)^{j_i}, expanded over the coordinates
GroupRingElt hartley_monomial(const Coords& j) {
  GroupRingElt e{{Coords(j.size(), 0), Int(1)}};
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i] == 0) continue;
    const std::int64_t shift = (j[i] + 1) / 2;
    GroupRingElt next;
    for (const auto& [x, c] : e)
      for (std::int64_t k = 0; k <= j[i]; ++k) {
        Coords y = x;
        y[i] = k - shift;
        Int term = c * binom(j[i], k);
        if ((j[i] - k) % 2) term = -term;
        next[y] += term;
      }
    e = std::move(next);
  }
  return e;
}

IntMatrix rows_of(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

}  // namespace

HartleyReport hartley_basis_check(const PolyZGroup& g, int n, int d) {
  const std::int64_t c = g.nilpotency_class();
  if (n < 0 || d < 0) throw InvalidInput("Hartley check needs n, d ≥ 0");
  if (static_cast<std::int64_t>(d) < n * c)
    throw Inconclusive("truncation degree " + std::to_string(d) + " is below n·class = " + std::to_string(n * c));
  const std::size_t r = g.rank();
  HartleyReport rep;
  rep.n = n;
  rep.d = d;
  MonomialModel model;
  {
    Coords cur(r, 0);
    enumerate_exponents(g.levels(), 0, d, 0, cur, 0, model.index, model.weight);
  }
  const std::size_t dim = model.index.size();
  rep.model_dim = dim;

  // Basis points g(j'), j' ∈ J: their images form a unitriangular matrix.
  IntMatrix basis_rows(0, dim);
  for (const auto& j : model.index) basis_rows.append_row(model.phi(j));
  const RatMatrix basis_inv = inverse(to_rational(basis_rows));
  const IntMatrix binv = to_integral(basis_inv, "Hartley model basis inverse");

  // left multiplication by g_i^{±1} on the model
  std::vector<IntMatrix> left;
  for (std::size_t i = 0; i < r; ++i)
    for (int sgn : {1, -1}) {
      IntMatrix moved(0, dim);
      for (const auto& j : model.index) moved.append_row(model.phi(g.multiply(g.unit(i, sgn), j)));
      IntMatrix m = binv * moved;
      for (std::size_t a = 0; a < dim; ++a) m(a, a) -= 1;
      left.push_back(std::move(m));  // s − 1
    }

  rep.powers_ok = true;
  IntMatrix w(0, dim);
  for (std::size_t a = 0; a < dim; ++a) {
    IntVector row = basis_rows.row(a);
    row[0] -= 1;  // φ(g(j')) − φ(1); coordinate 0 is the constant monomial
    w.append_row(row);
  }
  for (int k = 1; k <= d + 1; ++k) {
    Hermite h = hermite(w);
    std::size_t expect = 0;
    for (auto x : model.weight)
      if (x >= k) ++expect;
    if (h.rank() != expect) rep.powers_ok = false;
    for (std::size_t a = 0; a < h.rank(); ++a)
      for (std::size_t b = 0; b < dim; ++b)
        if (model.weight[b] < k && h.basis(a, b) != 0) rep.powers_ok = false;
    if (!rep.powers_ok || h.rank() == 0) break;
    IntMatrix next(0, dim);
    for (const auto& m : left) {
      IntMatrix prod = h.basis * m;
      for (std::size_t a = 0; a < prod.rows(); ++a) next.append_row(prod.row(a));
    }
    w = std::move(next);
  }

  // columns with ν(j) < n first, so the HNF exhibits the intersection
  std::vector<std::size_t> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_partition(perm.begin(), perm.end(), [&](std::size_t a) { return model.weight[a] < n; });
  std::size_t low = 0;
  for (auto x : model.weight)
    if (x < n) ++low;
  auto permuted = [&](const IntVector& v) {
    IntVector out(dim);
    for (std::size_t a = 0; a < dim; ++a) out[a] = v[perm[a]];
    return out;
  };
  std::vector<IntVector> ring_rows;
  for (std::size_t a = 0; a < dim; ++a) ring_rows.push_back(permuted(basis_rows.row(a)));
  const Hermite ring = hermite(rows_of(ring_rows, dim));
  IntMatrix inter(0, dim);
  for (std::size_t a = 0; a < ring.rank(); ++a)
    if (ring.pivots[a] >= low) inter.append_row(ring.basis.row(a));

  std::vector<IntVector> u_rows;
  for (std::size_t a = 0; a < dim; ++a)
    if (model.weight[a] >= n) u_rows.push_back(permuted(model.phi(hartley_monomial(model.index[a]))));
  const Hermite span = hermite(rows_of(u_rows, dim));
  rep.span_ok = span.basis.rows() == inter.rows() && (inter.rows() == 0 || span.basis.data() == inter.data());

  rep.tail_vanishes = true;
  std::vector<Coords> tail;
  std::vector<std::int64_t> tail_w;
  Coords cur(r, 0);
  enumerate_exponents(g.levels(), d + 1, d + c, 0, cur, 0, tail, tail_w);
  for (const auto& j : tail) {
    IntVector v = model.phi(hartley_monomial(j));
    for (const auto& x : v)
      if (x != 0) rep.tail_vanishes = false;
  }
  return rep;
}

// ---- Γ-modules -----------------------------------------------------------------

IntMatrix GammaModule::power(std::size_t i, std::int64_t k) const {
  IntMatrix out = IntMatrix::identity(dim);
  Int km = 1;
  for (std::size_t m = 1; m < divided[i].size(); ++m) {
    km *= static_cast<long>(k);
    if (km == 0) break;
    IntMatrix t = divided[i][m];
    t *= km;
    out = out + t;
  }
  return out;
}

IntMatrix GammaModule::rho(const Coords& x) const {
  IntMatrix out = IntMatrix::identity(dim);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) out = out * power(i, x[i]);
  return out;
}

GammaModule gamma_action(const PolyZGroup& g, const WeightModule& v, const Weight& lambda) {
  const ParabolicData& pd = *g.split().pd;
  GammaModule m;
  m.dim = v.dim();
  for (std::size_t b = 0; b < v.dim(); ++b) m.level.push_back(pd.f_I(v.weights()[b] - lambda));
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const std::size_t root = g.root_id(i);
    if (!v.acts(root)) throw InvalidInput("module lacks the action of a negative radical root");
    std::vector<IntMatrix> div{IntMatrix::identity(v.dim())};
    for (unsigned k = 1;; ++k) {
      IntMatrix x = v.divided_power(root, k);
      if (x.is_zero()) break;
      div.push_back(std::move(x));
    }
    m.divided.push_back(std::move(div));
  }
  // (*): the divided-power tail X^(m), m ≥ 2, lands at least ν(i)+1 levels lower
  for (std::size_t i = 0; i < g.rank(); ++i) {
    IntMatrix tail = m.power(i, 1) - IntMatrix::identity(m.dim);
    if (m.divided[i].size() > 1) tail = tail - m.divided[i][1];
    for (std::size_t b = 0; b < m.dim; ++b)
      for (std::size_t a = 0; a < m.dim; ++a)
        if (tail(a, b) != 0 && m.level[a] < m.level[b] + g.level(i) + 1) m.star_ok = false;
  }
  return m;
}

GammaModule trivial_gamma_module(const PolyZGroup& g, std::size_t dim) {
  GammaModule m;
  m.dim = dim;
  m.level.assign(dim, 0);
  m.divided.assign(g.rank(), std::vector<IntMatrix>{IntMatrix::identity(dim)});
  return m;
}

}  // namespace zk
