#include "zk/ambient.hpp"

#include <algorithm>

#include "zk/error.hpp"

namespace zk {

PolynomialAmbient::PolynomialAmbient(std::shared_ptr<const RootDatum> rd, Kind kind, std::vector<Weight> var_weights,
                                     std::vector<SparseOp> var_action, Weight shift)
    : rd_(std::move(rd)),
      kind_(kind),
      var_weights_(std::move(var_weights)),
      action_(std::move(var_action)),
      shift_(std::move(shift)) {}

std::size_t PolynomialAmbient::key(const Monomial& m) const {
  auto [it, fresh] = index_.try_emplace(m, monos_.size());
  if (fresh) monos_.push_back(m);
  return it->second;
}

Weight PolynomialAmbient::weight(std::size_t key) const {
  Weight w = shift_;
  const Monomial& m = monos_[key];
  for (std::size_t j = 0; j < m.size(); ++j)
    if (m[j]) w = w + static_cast<std::int64_t>(m[j]) * var_weights_[j];
  return w;
}

SparseVec PolynomialAmbient::apply(std::size_t root_id, const SparseVec& v) const {
  const SparseOp& a = action_.at(root_id);
  SparseVec out;
  for (const auto& [k, c] : v) {
    const Monomial src = monos_[k];
    for (std::size_t j = 0; j < src.size(); ++j) {
      if (!src[j]) continue;
      for (const auto& [l, x] : a.cols[j]) {
        Monomial t = src;
        --t[j];
        ++t[l];
        Int coef = c * x;
        if (kind_ == Kind::Symmetric)
          coef *= static_cast<unsigned long>(src[j]);
        else
          coef *= static_cast<unsigned long>(t[l]);
        auto it = out.try_emplace(key(t), 0).first;
        it->second += coef;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

SparseOp exterior_action(const SmallMat& x, std::size_t k) {
  const std::size_t n = x.size();
  const auto subsets = k_subsets(n, k);
  std::map<std::vector<std::size_t>, std::size_t> idx;
  for (std::size_t i = 0; i < subsets.size(); ++i) idx[subsets[i]] = i;
  SparseOp op;
  op.rows = subsets.size();
  op.cols.resize(subsets.size());
  for (std::size_t j = 0; j < subsets.size(); ++j) {
    const auto& s = subsets[j];
    for (std::size_t pos = 0; pos < k; ++pos) {
      const std::size_t t = s[pos];
      for (std::size_t u = 0; u < n; ++u) {
        if (!x[u][t]) continue;
        if (u != t && std::find(s.begin(), s.end(), u) != s.end()) continue;
        std::vector<std::size_t> ns = s;
        ns[pos] = u;
        // sort with sign
        int sign = 1;
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = a + 1; b < k; ++b)
            if (ns[a] > ns[b]) sign = -sign;
        std::sort(ns.begin(), ns.end());
        Int& e = op.cols[j][idx.at(ns)];
        e += sign * x[u][t];
        if (e == 0) op.cols[j].erase(idx.at(ns));
      }
    }
  }
  return op;
}

AmbientSeed polynomial_model(const LieAlgebraZ& g, const Weight& lambda) {
  const RootDatum& rd = g.datum();
  rd.check_weight(lambda);
  if (!rd.is_dominant(lambda)) throw InvalidInput("weight " + lambda.str() + " is not dominant");
  const std::size_t n = rd.natural_dim();
  std::vector<std::int64_t> mult;  // m_k for k = 1..K
  Weight shift(rd.dim());
  if (rd.family() == Family::GL) {
    for (std::size_t i = 0; i + 1 < n; ++i) mult.push_back(lambda[i] - lambda[i + 1]);
    for (std::size_t i = 0; i < n; ++i) shift[i] = lambda[n - 1];
  } else {
    const std::size_t gg = static_cast<std::size_t>(rd.n());
    std::int64_t csum = 0;
    for (std::size_t k = 1; k <= gg; ++k) {
      const std::int64_t m = k < gg ? lambda[k - 1] - lambda[k] : lambda[gg - 1];
      mult.push_back(m);
      csum += static_cast<std::int64_t>(k) * m;
    }
    shift[gg] = lambda[gg] - csum;  // even by the parity rule
  }

  std::vector<Weight> vw;
  std::vector<std::size_t> first_var;
  std::vector<std::vector<std::vector<std::size_t>>> subsets;
  for (std::size_t k = 1; k <= mult.size(); ++k) {
    first_var.push_back(vw.size());
    subsets.push_back(k_subsets(n, k));
    for (const auto& s : subsets.back()) {
      Weight w(rd.dim());
      for (auto i : s) w = w + rd.natural_weight(i);
      vw.push_back(w);
    }
  }
  std::vector<SparseOp> act(rd.num_roots());
  for (std::size_t r = 0; r < rd.num_roots(); ++r) {
    SparseOp& a = act[r];
    a.rows = vw.size();
    a.cols.resize(vw.size());
    for (std::size_t k = 1; k <= mult.size(); ++k) {
      SparseOp e = exterior_action(g.root_vector(r), k);
      const std::size_t off = first_var[k - 1];
      for (std::size_t j = 0; j < e.cols.size(); ++j)
        for (const auto& [i, x] : e.cols[j]) a.cols[off + j][off + i] = x;
    }
  }
  auto space = std::make_shared<PolynomialAmbient>(g.datum_ptr(), PolynomialAmbient::Kind::Symmetric, vw, std::move(act), shift);
  Monomial top(vw.size(), 0);
  for (std::size_t k = 1; k <= mult.size(); ++k) {
    if (mult[k - 1] > 65535) throw InvalidInput("weight too large for the polynomial model");
    top[first_var[k - 1]] = static_cast<std::uint16_t>(mult[k - 1]);  // subset {0..k-1} comes first
  }
  AmbientSeed seed{space, {}};
  seed.highest[space->key(top)] = 1;
  if (space->weight(seed.highest.begin()->first) != lambda) fail_consistency("polynomial model has the wrong highest weight");
  return seed;
}

}  // namespace zk
