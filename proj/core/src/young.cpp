#include "zk/young.hpp"

#include <algorithm>
#include <functional>

#include "zk/error.hpp"

namespace zk {

namespace {

struct Tableau {
  std::vector<std::size_t> rows;       // row lengths (nonzero)
  std::vector<std::size_t> row_start;  // row-major filling
  std::size_t n = 0;
};

Tableau tableau_of(const RootDatum& rd, const Weight& lambda) {
  Tableau t;
  for (std::size_t i = 0; i < static_cast<std::size_t>(rd.n()); ++i)
    if (lambda[i] > 0) {
      t.row_start.push_back(t.n);
      t.rows.push_back(static_cast<std::size_t>(lambda[i]));
      t.n += static_cast<std::size_t>(lambda[i]);
    }
  return t;
}

// Γ^{row_1}(V) ⊗ ... as a divided-power algebra in one block of 2g variables per row.
std::shared_ptr<PolynomialAmbient> row_ambient(const LieAlgebraZ& g, const Tableau& t, const Weight& lambda) {
  const RootDatum& rd = g.datum();
  const std::size_t n = rd.natural_dim();
  std::vector<Weight> vw;
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t i = 0; i < n; ++i) vw.push_back(rd.natural_weight(i));
  std::vector<SparseOp> act(rd.num_roots());
  for (std::size_t b = 0; b < rd.num_roots(); ++b) {
    const SmallMat& x = g.root_vector(b);
    act[b].rows = vw.size();
    act[b].cols.resize(vw.size());
    for (std::size_t r = 0; r < t.rows.size(); ++r)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
          if (x[i][j]) act[b].cols[r * n + j][r * n + i] = x[i][j];
  }
  Weight shift(rd.dim());
  shift[rd.dim() - 1] = lambda[rd.dim() - 1] - static_cast<std::int64_t>(t.n);
  return std::make_shared<PolynomialAmbient>(g.datum_ptr(), PolynomialAmbient::Kind::Divided, vw, std::move(act), shift);
}

std::uint64_t factorial(unsigned k) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

// c_λ = a_λ b_λ applied to a combination of words, landing in the row ambient.
class YoungSymmetrizer {
 public:
  YoungSymmetrizer(const Tableau& t, std::size_t letters, const PolynomialAmbient& space)
      : t_(t), letters_(letters), space_(space) {
    for (std::size_t c = 0; c < (t.rows.empty() ? 0 : t.rows[0]); ++c) {
      std::vector<std::size_t> col;
      for (std::size_t r = 0; r < t.rows.size(); ++r)
        if (t.rows[r] > c) col.push_back(t.row_start[r] + c);
      columns_.push_back(col);
    }
  }

  void apply(const std::vector<std::uint8_t>& word, const Int& coef, SparseVec& out) const {
    std::vector<std::uint8_t> w = word;
    column_rec(0, w, coef, out);
  }

 private:
  // signed sum over the column group, one column at a time
  void column_rec(std::size_t c, std::vector<std::uint8_t>& w, const Int& coef, SparseVec& out) const {
    if (c == columns_.size()) {
      emit(w, coef, out);
      return;
    }
    const auto& col = columns_[c];
    std::vector<std::size_t> perm(col.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::vector<std::uint8_t> orig(col.size());
    for (std::size_t i = 0; i < col.size(); ++i) orig[i] = w[col[i]];
    do {
      int sign = 1;
      for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
          if (perm[a] > perm[b]) sign = -sign;
      for (std::size_t i = 0; i < col.size(); ++i) w[col[i]] = orig[perm[i]];
      column_rec(c + 1, w, sign > 0 ? coef : Int(-coef), out);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::size_t i = 0; i < col.size(); ++i) w[col[i]] = orig[i];
  }

  // row symmetrizer: a word becomes |stabilizer| times its orbit sum
  void emit(const std::vector<std::uint8_t>& w, const Int& coef, SparseVec& out) const {
    Monomial m(t_.rows.size() * letters_, 0);
    Int c = coef;
    for (std::size_t r = 0; r < t_.rows.size(); ++r) {
      for (std::size_t k = 0; k < t_.rows[r]; ++k) ++m[r * letters_ + w[t_.row_start[r] + k]];
    }
    for (auto e : m) c *= static_cast<unsigned long>(factorial(e));
    auto it = out.try_emplace(space_.key(m), 0).first;
    it->second += c;
    if (it->second == 0) out.erase(it);
  }

  Tableau t_;
  std::size_t letters_;
  const PolynomialAmbient& space_;
  std::vector<std::vector<std::size_t>> columns_;
};

void words_of_weight(const RootDatum& rd, std::size_t n, const Weight& mu, std::vector<std::vector<std::uint8_t>>& out) {
  const std::size_t letters = rd.natural_dim();
  const std::size_t g = static_cast<std::size_t>(rd.n());
  std::vector<std::uint8_t> w(n);
  std::vector<std::int64_t> need(g);
  for (std::size_t a = 0; a < g; ++a) need[a] = mu[a];
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    std::int64_t slack = 0;
    for (auto x : need) slack += std::abs(x);
    if (slack > static_cast<std::int64_t>(n - pos) || (static_cast<std::int64_t>(n - pos) - slack) % 2) return;
    if (pos == n) {
      out.push_back(w);
      return;
    }
    for (std::size_t l = 0; l < letters; ++l) {
      const Weight lw = rd.natural_weight(l);
      for (std::size_t a = 0; a < g; ++a) need[a] -= lw[a];
      w[pos] = static_cast<std::uint8_t>(l);
      rec(pos + 1);
      for (std::size_t a = 0; a < g; ++a) need[a] += lw[a];
    }
  };
  rec(0);
}

}  // namespace

TensorWeightSpace contraction_kernel(const RootDatum& rd, std::size_t n, const Weight& mu) {
  if (rd.family() != Family::GSp) throw InvalidInput("contractions are defined for gsp only");
  TensorWeightSpace ts;
  words_of_weight(rd, n, mu, ts.words);
  const std::size_t letters = rd.natural_dim();
  const std::size_t g = static_cast<std::size_t>(rd.n());
  // ω(e_a, e_b) = ᵗe_a J e_b with J e_i = −e_i*, J e_i* = e_i
  auto omega = [&](std::size_t a, std::size_t b) -> int {
    if (a + b != letters - 1) return 0;
    return a < g ? 1 : -1;
  };
  std::map<std::pair<std::size_t, std::vector<std::uint8_t>>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, int>>> entries(ts.words.size());
  for (std::size_t c = 0; c < ts.words.size(); ++c) {
    const auto& w = ts.words[c];
    std::size_t pair_id = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++pair_id) {
        const int o = omega(w[i], w[j]);
        if (!o) continue;
        std::vector<std::uint8_t> rest;
        for (std::size_t k = 0; k < n; ++k)
          if (k != i && k != j) rest.push_back(w[k]);
        auto [it, fresh] = row_of.try_emplace({pair_id, rest}, row_of.size());
        entries[c].emplace_back(it->second, o);
      }
  }
  IntMatrix a(row_of.size(), ts.words.size());
  for (std::size_t c = 0; c < entries.size(); ++c)
    for (auto [r, o] : entries[c]) a(r, c) += o;
  if (row_of.empty()) {
    ts.kernel = IntMatrix::identity(ts.words.size());
  } else {
    ts.kernel = kernel_basis(a);
  }
  return ts;
}

YoungData young_lattice(const LieAlgebraZ& g, const Weight& lambda, std::size_t exact_budget) {
  const RootDatum& rd = g.datum();
  if (rd.family() != Family::GSp) throw InvalidInput("the Young lattice is defined for gsp only");
  rd.check_weight(lambda);
  if (!rd.is_dominant(lambda)) throw InvalidInput("weight " + lambda.str() + " is not dominant");
  const Tableau t = tableau_of(rd, lambda);
  auto space = row_ambient(g, t, lambda);
  const std::size_t letters = rd.natural_dim();
  const std::size_t gg = static_cast<std::size_t>(rd.n());
  YoungSymmetrizer cl(t, letters, *space);

  YoungData out;
  out.highest = lambda;
  out.tensor_degree = t.n;

  // c_λ(W^{⊗n}) for the Lagrangian W = span of letters 0..g−1
  std::vector<SparseVec> gens;
  {
    std::vector<std::uint8_t> w(t.n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      if (pos == t.n) {
        SparseVec v;
        cl.apply(w, 1, v);
        if (!v.empty()) gens.push_back(std::move(v));
        return;
      }
      for (std::size_t l = 0; l < gg; ++l) {
        w[pos] = static_cast<std::uint8_t>(l);
        rec(pos + 1);
      }
    };
    rec(0);
  }
  std::vector<int> siegel;
  for (int i = 0; i + 1 < rd.n(); ++i) siegel.push_back(i);
  const ParabolicData pd(rd, siegel);
  std::vector<std::size_t> um;
  for (auto b : pd.radical()) um.push_back(rd.negate(b));
  const GradedLattice top = generate(*space, gens, um);

  auto line = top.blocks.find(lambda);
  if (line == top.blocks.end() || line->second.h.rank() != 1) fail_consistency("Young image has no highest-weight line");
  SparseVec v;
  for (std::size_t j = 0; j < line->second.keys.size(); ++j)
    if (line->second.h.basis(0, j) != 0) v[line->second.keys[j]] = line->second.h.basis(0, j);
  const GradedLattice min = generate(*space, {v}, negative_roots(rd));
  out.min.highest = lambda;
  out.min.flavor = Flavor::Min;
  out.min.module = restrict_to(*space, min, g.datum_ptr(), all_roots(rd));
  out.min.in_min = RatMatrix::identity(out.min.dim());
  out.form = contravariant_gram(out.min.module, lambda);

  auto express = [&](const GradedLattice& l) {
    RatMatrix r(out.min.dim(), out.min.dim());
    std::size_t row0 = 0;
    for (const auto& [mu, b] : min.blocks) {
      auto it = l.blocks.find(mu);
      if (it == l.blocks.end() || it->second.h.rank() != b.h.rank()) fail_consistency("lattice ranks differ at weight " + mu.str());
      const auto& keys = b.keys;
      for (std::size_t i = 0; i < it->second.h.rank(); ++i) {
        RatVector y(keys.size());
        for (std::size_t j = 0; j < it->second.keys.size(); ++j) {
          const Int& x = it->second.h.basis(i, j);
          if (x == 0) continue;
          auto pos = std::lower_bound(keys.begin(), keys.end(), it->second.keys[j]);
          if (pos == keys.end() || *pos != it->second.keys[j]) fail_consistency("lattice leaves the rational span of V(λ)");
          y[pos - keys.begin()] = x;
        }
        auto c = solve_in_span(b.h, y);
        if (!c) fail_consistency("lattice leaves the rational span of V(λ)");
        for (std::size_t k = 0; k < c->size(); ++k) r(row0 + i, row0 + k) = (*c)[k];
      }
      row0 += b.h.rank();
    }
    return r;
  };
  if (top.rank() != out.min.dim()) fail_consistency("U(u_P⁻)·c_λ(W^n) does not have full rank");
  out.top_in_min = express(top);

  if (t.n <= exact_budget) {
    std::vector<SparseVec> ygens;
    for (const auto& [mu, b] : min.blocks) {
      Weight amu = mu;
      TensorWeightSpace ts = contraction_kernel(rd, t.n, amu);
      for (std::size_t r = 0; r < ts.kernel.rows(); ++r) {
        SparseVec y;
        for (std::size_t c = 0; c < ts.words.size(); ++c)
          if (ts.kernel(r, c) != 0) cl.apply(ts.words[c], ts.kernel(r, c), y);
        if (!y.empty()) ygens.push_back(std::move(y));
      }
    }
    GradedLattice young;
    young.add(*space, ygens);
    out.young_in_min = express(young);
  }
  return out;
}

}  // namespace zk
