#include "zk/character.hpp"

#include <algorithm>
#include <deque>
#include <bit>
#include <functional>
#include <set>

#include "zk/error.hpp"
#include "zk/zlinalg.hpp"

namespace zk {

Character operator+(Character a, const Character& b) {
  for (const auto& [w, m] : b) {
    auto& x = a[w];
    x += m;
    if (x == 0) a.erase(w);
  }
  return a;
}

Character operator*(const Character& a, const Character& b) {
  Character c;
  for (const auto& [u, m] : a)
    for (const auto& [v, n] : b) c[u + v] += m * n;
  std::erase_if(c, [](const auto& kv) { return kv.second == 0; });
  return c;
}

std::int64_t degree(const Character& c) {
  std::int64_t s = 0;
  for (const auto& [w, m] : c) s += m;
  return s;
}

Weight levi_dominant_conjugate(const ParabolicData& pd, Weight w) {
  const RootDatum& rd = pd.datum();
  for (bool moved = true; moved;) {
    moved = false;
    for (int i : pd.levi_simple()) {
      std::int64_t v = pair(w, rd.simple_coroots()[i]);
      if (v < 0) {
        w = w - v * rd.simple_roots()[i];
        moved = true;
      }
    }
  }
  return w;
}

Weight dominant_conjugate(const RootDatum& rd, Weight w) {
  std::vector<int> all(rd.rank());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return levi_dominant_conjugate(ParabolicData(rd, all), std::move(w));
}

namespace {

// ξ − μ ∈ N·Δ_L
bool levi_below(const ParabolicData& pd, const Weight& mu, const Weight& xi) {
  auto sc = pd.datum().simple_coordinates(xi - mu);
  if (!sc) return false;
  for (std::size_t i = 0; i < sc->size(); ++i) {
    if ((*sc)[i] < 0) return false;
    if ((*sc)[i] != 0 && !pd.levi_contains_simple(static_cast<int>(i))) return false;
  }
  return true;
}

}  // namespace

Character levi_character(const ParabolicData& pd, const Weight& xi) {
  const RootDatum& rd = pd.datum();
  rd.check_weight(xi);
  if (!pd.is_levi_dominant(xi)) throw InvalidInput("weight " + xi.str() + " is not Levi-dominant");

  // all weights, by BFS along simple Levi roots
  std::map<Weight, std::int64_t> depth;
  std::deque<Weight> q{xi};
  depth[xi] = 0;
  while (!q.empty()) {
    Weight mu = q.front();
    q.pop_front();
    for (int i : pd.levi_simple()) {
      Weight nu = mu - rd.simple_roots()[i];
      if (depth.count(nu)) continue;
      if (!levi_below(pd, levi_dominant_conjugate(pd, nu), xi)) continue;
      depth[nu] = depth[mu] + 1;
      q.push_back(nu);
    }
  }
  std::vector<Weight> order;
  for (const auto& [w, d] : depth) order.push_back(w);
  std::stable_sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) { return depth[a] < depth[b]; });

  std::vector<Weight> lroots;
  for (auto id : pd.levi_positive()) lroots.push_back(rd.root(id));
  const Weight& rho = rd.rho();
  const std::int64_t top = rd.inner(xi + rho, xi + rho);

  std::map<Weight, std::int64_t> dom;  // multiplicities of Levi-dominant weights
  auto mult = [&](const Weight& mu) -> std::int64_t {
    if (!depth.count(mu)) return 0;
    auto it = dom.find(levi_dominant_conjugate(pd, mu));
    if (it == dom.end()) fail_consistency("Freudenthal: conjugate processed out of order");
    return it->second;
  };
  Character ch;
  for (const Weight& mu : order) {
    Weight d = levi_dominant_conjugate(pd, mu);
    if (d != mu) continue;
    if (mu == xi) {
      dom[mu] = 1;
      continue;
    }
    std::int64_t num = 0;
    for (const Weight& a : lroots)
      for (std::int64_t k = 1;; ++k) {
        Weight nu = mu + k * a;
        if (!depth.count(nu)) break;
        num += rd.inner(nu, a) * mult(nu);
      }
    num *= 2;
    const std::int64_t den = top - rd.inner(mu + rho, mu + rho);
    if (den <= 0 || num % den) fail_consistency("Freudenthal recursion produced a non-integral multiplicity");
    dom[mu] = num / den;
  }
  for (const Weight& mu : order) {
    std::int64_t m = mult(mu);
    if (m) ch[mu] = m;
  }
  return ch;
}

Character weyl_character(const RootDatum& rd, const Weight& lambda) {
  std::vector<int> all(rd.rank());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return levi_character(ParabolicData(rd, all), lambda);
}

Int levi_dimension(const ParabolicData& pd, const Weight& xi) {
  const RootDatum& rd = pd.datum();
  Rat d = 1;
  for (auto id : pd.levi_positive()) {
    const Coweight c = rd.coroot(id);
    d *= Rat(pair(xi + rd.rho(), c), pair(rd.rho(), c));
  }
  d.canonicalize();
  if (d.get_den() != 1) fail_consistency("Weyl dimension formula is not integral");
  return d.get_num();
}

Int weyl_dimension(const RootDatum& rd, const Weight& lambda) {
  Rat d = 1;
  for (const auto& c : rd.positive_coroots()) d *= Rat(pair(lambda + rd.rho(), c), pair(rd.rho(), c));
  d.canonicalize();
  if (d.get_den() != 1) fail_consistency("Weyl dimension formula is not integral");
  return d.get_num();
}

std::vector<Weight> levi_decompose(const ParabolicData& pd, Character c) {
  const RootDatum& rd = pd.datum();
  Coweight two_rho_l(rd.dim());
  for (auto id : pd.levi_positive()) two_rho_l = two_rho_l + rd.coroot(id);
  std::vector<Weight> out;
  while (!c.empty()) {
    const Weight* best = nullptr;
    std::int64_t bv = 0;
    for (const auto& [w, m] : c) {
      if (m < 0) fail_consistency("character has a negative multiplicity at " + w.str());
      std::int64_t v = pair(w, two_rho_l);
      if (!best || v > bv || (v == bv && *best < w)) {
        best = &w;
        bv = v;
      }
    }
    const Weight xi = *best;
    if (!pd.is_levi_dominant(xi)) fail_consistency("leading weight " + xi.str() + " is not Levi-dominant");
    const std::int64_t k = c.at(xi);
    Character sub = levi_character(pd, xi);
    for (auto& [w, m] : sub) m *= -k;
    c = c + sub;
    for (std::int64_t j = 0; j < k; ++j) out.push_back(xi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Character exterior_radical_character(const ParabolicData& pd, int i) {
  const RootDatum& rd = pd.datum();
  const std::size_t r = pd.radical_rank();
  Character c;
  if (i < 0 || static_cast<std::size_t>(i) > r) return c;
  for (std::uint32_t s = 0; s < (1u << r); ++s) {
    if (std::popcount(s) != i) continue;
    Weight w(rd.dim());
    for (std::size_t k = 0; k < r; ++k)
      if (s >> k & 1) w = w - rd.positive_roots()[pd.radical()[k]];
    c[w] += 1;
  }
  return c;
}

std::vector<Weight> omega_multiset(const ParabolicData& pd, const Weight& lambda, int i) {
  return levi_decompose(pd, exterior_radical_character(pd, i) * weyl_character(pd.datum(), lambda));
}

Character kostant_prediction(const ParabolicData& pd, const Weight& lambda, int i) {
  Character c;
  if (i < 0 || static_cast<std::size_t>(i) > pd.radical_rank()) return c;
  for (const auto& w : pd.coset_reps(i)) c = c + levi_character(pd, dot_action(w, lambda, pd.datum()));
  return c;
}

std::vector<Weight> dominant_weights_up_to(const RootDatum& rd, std::int64_t max_dim, std::int64_t max_first) {
  std::vector<Weight> out;
  const std::size_t k = rd.family() == Family::GL ? rd.dim() - 1 : static_cast<std::size_t>(rd.n());
  // enumerate by fundamental coordinates m_i ≥ 0; x_i = m_i + ... + m_{k-1}.
  // Every factor of the Weyl dimension formula is nondecreasing in each m_i.
  std::vector<std::int64_t> m(k, 0);
  auto weight_of = [&]() {
    Weight w(rd.dim());
    std::int64_t s = 0, tot = 0;
    for (std::size_t i = k; i-- > 0;) {
      s += m[i];
      w[i] = s;
      tot += s;
    }
    if (rd.family() == Family::GSp) w[k] = tot % 2;
    return w;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == k) {
      Weight w = weight_of();
      if (w.size() && (k == 0 || w[0] <= max_first)) out.push_back(w);
      return;
    }
    for (m[pos] = 0;; ++m[pos]) {
      Weight w = weight_of();
      if (weyl_dimension(rd, w) > max_dim || (k && w[0] > max_first)) break;
      rec(pos + 1);
    }
    m[pos] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zk
