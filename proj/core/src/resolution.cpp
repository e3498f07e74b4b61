#include "zk/resolution.hpp"

#include <bit>
#include <random>

#include "zk/error.hpp"

namespace zk {

void add_to(GChain& a, const GChain& b, const Int& c) {
  for (const auto& [cell, x] : b) {
    Int& e = a[cell];
    e += c * x;
    if (e == 0) a.erase(cell);
  }
}

namespace {

void add_cell(GChain& a, const Cell& cell, const Int& c) {
  Int& e = a[cell];
  e += c;
  if (e == 0) a.erase(cell);
}

}  // namespace

FreeResolution::FreeResolution(const PolyZGroup& g) : g_(g), r_(g.rank()) {
  if (r_ > 20) throw InvalidInput("group rank too large for a resolution");
  dgen_.resize(r_ + 1);
  phi_.resize(r_ + 1);
  h_.resize(r_ + 1);
}

std::vector<std::uint32_t> FreeResolution::generators(int n) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << r_); ++m)
    if (std::popcount(m) == n) out.push_back(m);
  return out;
}

Int FreeResolution::augmentation(const GChain& c) const {
  Int s = 0;
  for (const auto& [cell, x] : c)
    if (cell.mask == 0) s += x;
  return s;
}

Coords FreeResolution::mul(const Coords& x, const Coords& y) {
  auto key = std::make_pair(x, y);
  auto it = mul_.find(key);
  if (it != mul_.end()) return it->second;
  Coords z = g_.multiply(x, y);
  mul_.emplace(std::move(key), z);
  return z;
}

GChain FreeResolution::translate(const Coords& by, const GChain& c) {
  GChain out;
  for (const auto& [cell, x] : c) add_cell(out, Cell{mul(by, cell.g), cell.mask}, x);
  return out;
}

const GChain& FreeResolution::dgen(std::size_t lvl, std::uint32_t mask) {
  auto it = dgen_[lvl].find(mask);
  if (it != dgen_[lvl].end()) return it->second;
  GChain out;
  if (lvl < r_) {
    const std::uint32_t bit = 1u << lvl;
    if (!(mask & bit)) {
      out = dgen(lvl + 1, mask);
    } else {
      // D(0, b) = (T b, −d b)
      const std::uint32_t rest = mask & ~bit;
      out = p_twist(lvl, GChain{{Cell{g_.identity(), rest}, Int(1)}});
      for (const auto& [cell, x] : dgen(lvl + 1, rest)) add_cell(out, Cell{cell.g, cell.mask | bit}, -x);
    }
  }
  return dgen_[lvl].emplace(mask, std::move(out)).first->second;
}

GChain FreeResolution::apply_d(std::size_t lvl, const GChain& c) {
  GChain out;
  for (const auto& [cell, x] : c) add_to(out, translate(cell.g, dgen(lvl, cell.mask)), x);
  return out;
}

// t-twisted chain map of the stage below: φ(n y) = (t⁻¹ n t) φ(y)
const GChain& FreeResolution::phi(std::size_t lvl, std::uint32_t mask) {
  auto it = phi_[lvl].find(mask);
  if (it != phi_[lvl].end()) return it->second;
  GChain out;
  if (mask == 0) {
    out[Cell{g_.identity(), 0}] = 1;
  } else {
    const Coords t = g_.unit(lvl, 1), tinv = g_.unit(lvl, -1);
    GChain acc;
    const GChain boundary = dgen(lvl + 1, mask);
    for (const auto& [cell, x] : boundary) {
      const GChain& below = phi(lvl, cell.mask);
      add_to(acc, translate(mul(mul(tinv, cell.g), t), below), x);
    }
    out = apply_h(lvl + 1, acc);
  }
  return phi_[lvl].emplace(mask, std::move(out)).first->second;
}

GChain FreeResolution::p_twist(std::size_t lvl, const GChain& c) {
  const Coords t = g_.unit(lvl, 1);
  GChain out;
  for (const auto& [cell, x] : c) {
    add_to(out, translate(mul(cell.g, t), phi(lvl, cell.mask)), x);
    add_cell(out, cell, -x);
  }
  return out;
}

// h_P(t^k n ⊗ y) = t^k h_F(n ⊗ y)
GChain FreeResolution::p_homotopy(std::size_t lvl, const GChain& c) {
  GChain out;
  for (const auto& [cell, x] : c) {
    Coords n = cell.g;
    const std::int64_t k = n[lvl];
    n[lvl] = 0;
    const GChain& below = cell_h(lvl + 1, Cell{n, cell.mask});
    add_to(out, k == 0 ? below : translate(g_.unit(lvl, k), below), x);
  }
  return out;
}

const GChain& FreeResolution::cell_h(std::size_t lvl, const Cell& c) {
  auto it = h_[lvl].find(c);
  if (it != h_[lvl].end()) return it->second;
  GChain out;
  if (lvl < r_) {
    const std::uint32_t bit = 1u << lvl;
    const int n = std::popcount(c.mask);
    GChain z{{c, Int(1)}};
    if (n == 0) add_cell(z, Cell{g_.identity(), 0}, -1);
    else add_to(z, apply_h(lvl, apply_d(lvl, z)), -1);
    // fill the cycle z = (a, b) of the cone
    GChain a, b, b2;
    for (const auto& [cell, x] : z) {
      if (cell.mask & bit) b[Cell{cell.g, cell.mask & ~bit}] = x;
      else a[cell] = x;
    }
    if (n == 0) {
      // b' = σ s ε_P(a), where (t − 1) s(f) = f on augmentation-zero f
      for (const auto& [cell, x] : a) {
        const std::int64_t k = cell.g[lvl];
        if (k > 0)
          for (std::int64_t j = 0; j < k; ++j) add_cell(b2, Cell{g_.unit(lvl, j), 0}, x);
        else
          for (std::int64_t j = k; j < 0; ++j) add_cell(b2, Cell{g_.unit(lvl, j), 0}, -x);
      }
    } else {
      add_to(b2, p_homotopy(lvl, b), -1);
    }
    add_to(a, p_twist(lvl, b2), -1);
    out = p_homotopy(lvl, a);
    for (const auto& [cell, x] : b2) add_cell(out, Cell{cell.g, cell.mask | bit}, x);
  }
  return h_[lvl].emplace(c, std::move(out)).first->second;
}

GChain FreeResolution::apply_h(std::size_t lvl, const GChain& c) {
  GChain out;
  for (const auto& [cell, x] : c) {
    const GChain h = cell_h(lvl, cell);
    add_to(out, h, x);
  }
  return out;
}

FreeResolution::Certificate FreeResolution::certify(std::size_t samples, std::uint64_t seed) {
  Certificate cert;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-2, 2);
  for (std::size_t lvl = 0; lvl < r_; ++lvl) {
    std::vector<Coords> translates{g_.identity()};
    for (std::size_t s = 0; s < samples; ++s) {
      Coords x = g_.identity();
      for (std::size_t i = lvl; i < r_; ++i) x[i] = coord(rng);
      translates.push_back(x);
    }
    for (std::uint32_t m = 0; m < (1u << r_); ++m) {
      if (m & ((1u << lvl) - 1)) continue;
      for (const auto& gamma : translates) {
        const Cell cell{gamma, m};
        const GChain x{{cell, Int(1)}};
        const GChain dx = apply_d(lvl, x);
        if (!apply_d(lvl, dx).empty()) cert.dd_zero = false;
        GChain lhs = apply_d(lvl, apply_h(lvl, x));
        if (m == 0) add_cell(lhs, Cell{g_.identity(), 0}, augmentation(x));
        else add_to(lhs, apply_h(lvl, dx));
        if (lhs != x) cert.homotopy_ok = false;
        ++cert.checked;
      }
    }
  }
  return cert;
}

}  // namespace zk
