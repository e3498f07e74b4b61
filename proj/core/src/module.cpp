#include "zk/module.hpp"

#include <algorithm>

#include "zk/chevalley.hpp"
#include "zk/error.hpp"

namespace zk {

void axpy(SparseVec& y, const Int& a, const SparseVec& x) {
  if (a == 0) return;
  for (const auto& [k, v] : x) {
    auto it = y.try_emplace(k, 0).first;
    it->second += a * v;
    if (it->second == 0) y.erase(it);
  }
}

bool exact_divide(SparseVec& v, unsigned long k) {
  for (auto& [i, x] : v) {
    if (!mpz_divisible_ui_p(x.get_mpz_t(), k)) return false;
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), k);
  }
  return true;
}

// ---- SparseOp --------------------------------------------------------------

SparseVec SparseOp::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [j, x] : v) axpy(out, x, cols[j]);
  return out;
}

IntVector SparseOp::apply(const IntVector& v) const {
  IntVector out(rows);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (v[j] == 0) continue;
    for (const auto& [i, x] : cols[j]) out[i] += x * v[j];
  }
  return out;
}

IntMatrix SparseOp::dense() const {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, x] : cols[j]) m(i, j) = x;
  return m;
}

SparseOp SparseOp::from_dense(const IntMatrix& m) {
  SparseOp op;
  op.rows = m.rows();
  op.cols.resize(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) op.cols[j][i] = m(i, j);
  return op;
}

// ---- WeightModule ----------------------------------------------------------

WeightModule::WeightModule(std::shared_ptr<const RootDatum> rd, std::vector<Weight> weights)
    : rd_(std::move(rd)), weights_(std::move(weights)), ops_(rd_->num_roots()) {}

std::map<Weight, std::vector<std::size_t>> WeightModule::blocks() const {
  std::map<Weight, std::vector<std::size_t>> b;
  for (std::size_t i = 0; i < weights_.size(); ++i) b[weights_[i]].push_back(i);
  return b;
}

Character WeightModule::character() const {
  Character c;
  for (const auto& w : weights_) c[w] += 1;
  return c;
}

SparseVec WeightModule::apply(std::size_t root_id, const SparseVec& v) const { return op(root_id).apply(v); }

void WeightModule::set_op(std::size_t root_id, SparseOp op) {
  if (op.rows != dim() || op.cols.size() != dim()) fail_consistency("module operator has the wrong size");
  ops_.at(root_id) = std::move(op);
}

const SparseOp& WeightModule::op(std::size_t root_id) const {
  if (!acts(root_id)) fail_consistency("root " + std::to_string(root_id) + " does not act on this module");
  return *ops_[root_id];
}

IntMatrix WeightModule::divided_power(std::size_t root_id, unsigned m) const {
  return divided_power_action(op(root_id).dense(), m);
}

IntMatrix WeightModule::exp_action(std::size_t root_id, int sign) const {
  const IntMatrix x = op(root_id).dense();
  IntMatrix total = IntMatrix::identity(dim());
  IntMatrix term = total;
  for (unsigned m = 1; m <= dim() + 1; ++m) {
    term = term * x;
    for (std::size_t i = 0; i < term.rows(); ++i)
      for (std::size_t j = 0; j < term.cols(); ++j) {
        Int& e = term(i, j);
        if (e == 0) continue;
        if (!mpz_divisible_ui_p(e.get_mpz_t(), m)) fail_consistency("exp(X) is not integral on this lattice");
        mpz_divexact_ui(e.get_mpz_t(), e.get_mpz_t(), m);
      }
    if (term.is_zero()) return total;
    if (sign < 0 && m % 2) {
      total = total - term;
    } else {
      total = total + term;
    }
  }
  fail_consistency("root vector does not act nilpotently");
}

WeightModule WeightModule::dual() const {
  WeightModule d(rd_, weights_);
  for (std::size_t b = 0; b < ops_.size(); ++b) {
    const std::size_t nb = rd_->negate(b);
    if (!acts(nb)) continue;
    SparseOp t;
    t.rows = dim();
    t.cols.resize(dim());
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [i, x] : ops_[nb]->cols[j]) t.cols[i][j] = x;
    d.ops_[b] = std::move(t);
  }
  return d;
}

WeightModule WeightModule::shifted(const Weight& by) const {
  WeightModule s = *this;
  for (auto& w : s.weights_) w = w + by;
  return s;
}

void WeightModule::check_weights() const {
  for (std::size_t b = 0; b < ops_.size(); ++b) {
    if (!ops_[b]) continue;
    const Weight r = rd_->root(b);
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [i, x] : ops_[b]->cols[j])
        if (weights_[i] != weights_[j] + r) fail_consistency("root vector does not shift weights by its root");
  }
}

// ---- lattice generation ----------------------------------------------------

std::size_t GradedLattice::rank() const {
  std::size_t r = 0;
  for (const auto& [w, b] : blocks) r += b.h.rank();
  return r;
}

void GradedLattice::add(const LinearSpace& s, const std::vector<SparseVec>& vs) {
  std::map<Weight, std::vector<const SparseVec*>> by;
  for (const auto& v : vs) {
    if (v.empty()) continue;
    const Weight w = s.weight(v.begin()->first);
    by[w].push_back(&v);
  }
  for (auto& [w, list] : by) {
    Block& b = blocks[w];
    std::vector<std::size_t> keys = b.keys;
    for (const SparseVec* v : list)
      for (const auto& [k, x] : *v) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    auto col = [&](std::size_t k) { return static_cast<std::size_t>(std::lower_bound(keys.begin(), keys.end(), k) - keys.begin()); };
    IntMatrix m(b.h.rank() + list.size(), keys.size());
    std::size_t r = 0;
    for (; r < b.h.rank(); ++r)
      for (std::size_t j = 0; j < b.keys.size(); ++j)
        if (b.h.basis(r, j) != 0) m(r, col(b.keys[j])) = b.h.basis(r, j);
    for (const SparseVec* v : list) {
      for (const auto& [k, x] : *v) {
        if (s.weight(k) != w) fail_consistency("vector mixes weights");
        m(r, col(k)) = x;
      }
      ++r;
    }
    b.keys = std::move(keys);
    b.h = hermite(m);
  }
}

std::vector<SparseVec> GradedLattice::vectors() const {
  std::vector<SparseVec> out;
  for (const auto& [w, b] : blocks)
    for (std::size_t r = 0; r < b.h.rank(); ++r) {
      SparseVec v;
      for (std::size_t j = 0; j < b.keys.size(); ++j)
        if (b.h.basis(r, j) != 0) v[b.keys[j]] = b.h.basis(r, j);
      out.push_back(std::move(v));
    }
  return out;
}

GradedLattice generate(const LinearSpace& s, const std::vector<SparseVec>& seeds, const std::vector<std::size_t>& roots) {
  GradedLattice lat;
  lat.add(s, seeds);
  for (std::size_t idx = roots.size(); idx-- > 0;) {
    const std::size_t r = roots[idx];
    std::vector<SparseVec> fresh;
    for (const SparseVec& v : lat.vectors()) {
      SparseVec w = v;
      for (unsigned long m = 1;; ++m) {
        w = s.apply(r, w);
        if (w.empty()) break;
        if (!exact_divide(w, m)) fail_consistency("divided power is not integral on the ambient lattice");
        fresh.push_back(w);
        if (m > 10000) fail_consistency("root vector does not act nilpotently");
      }
    }
    lat.add(s, fresh);
  }
  return lat;
}

WeightModule restrict_to(const LinearSpace& s, const GradedLattice& lat, std::shared_ptr<const RootDatum> rd,
                         const std::vector<std::size_t>& roots) {
  std::vector<Weight> weights;
  std::map<Weight, std::size_t> offset;
  for (const auto& [w, b] : lat.blocks) {
    offset[w] = weights.size();
    for (std::size_t r = 0; r < b.h.rank(); ++r) weights.push_back(w);
  }
  const std::vector<SparseVec> basis = lat.vectors();
  WeightModule m(rd, weights);
  for (std::size_t root : roots) {
    SparseOp op;
    op.rows = basis.size();
    op.cols.resize(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      SparseVec y = s.apply(root, basis[j]);
      if (y.empty()) continue;
      const Weight tw = weights[j] + rd->root(root);
      auto it = lat.blocks.find(tw);
      if (it == lat.blocks.end()) fail_consistency("lattice is not stable under a root vector (weight " + tw.str() + ")");
      const auto& keys = it->second.keys;
      IntVector yv(keys.size());
      for (const auto& [k, x] : y) {
        auto pos = std::lower_bound(keys.begin(), keys.end(), k);
        if (pos == keys.end() || *pos != k) fail_consistency("lattice is not stable under a root vector");
        yv[pos - keys.begin()] = x;
      }
      auto c = solve_in_lattice(it->second.h, yv);
      if (!c) fail_consistency("lattice is not stable under a root vector");
      for (std::size_t k = 0; k < c->size(); ++k)
        if ((*c)[k] != 0) op.cols[j][offset[tw] + k] = (*c)[k];
    }
    m.set_op(root, std::move(op));
  }
  return m;
}

std::vector<std::size_t> negative_roots(const RootDatum& rd) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rd.num_positive(); ++i) out.push_back(rd.negate(i));
  return out;
}

std::vector<std::size_t> levi_negative_roots(const ParabolicData& pd) {
  std::vector<std::size_t> out;
  for (auto id : pd.levi_positive()) out.push_back(pd.datum().negate(id));
  return out;
}

std::vector<std::size_t> all_roots(const RootDatum& rd) {
  std::vector<std::size_t> out(rd.num_roots());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

std::vector<std::size_t> levi_roots(const ParabolicData& pd) {
  std::vector<std::size_t> out;
  for (auto id : pd.levi_positive()) {
    out.push_back(id);
    out.push_back(pd.datum().negate(id));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zk
