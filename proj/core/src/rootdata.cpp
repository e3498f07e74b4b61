#include "zk/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "zk/error.hpp"
#include "zk/zlinalg.hpp"

namespace zk {

// ---- Weight --------------------------------------------------------------

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}
Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}
Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}
bool Weight::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x == 0; });
}
std::string Weight::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}
std::ostream& operator<<(std::ostream& os, const Weight& w) {
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  return os << ")";
}
std::int64_t pair(const Weight& w, const Coweight& c) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * c[i];
  return s;
}

// ---- Weyl elements -------------------------------------------------------

Weight WeylElt::apply(const Weight& x) const {
  Weight y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += mat[i][j] * x[j];
    y[i] = s;
  }
  return y;
}

static SmallMat matmul(const SmallMat& a, const SmallMat& b) {
  const std::size_t n = a.size();
  SmallMat c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

WeylElt compose(const WeylElt& a, const WeylElt& b) {
  WeylElt c;
  c.mat = matmul(a.mat, b.mat);
  return c;
}

// W acts by integer matrices of finite order; the inverse is found by powering.
SmallMat inverse_signed_perm(const SmallMat& m) {
  SmallMat id(m.size(), std::vector<std::int64_t>(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i) id[i][i] = 1;
  SmallMat prev = id, cur = m;
  for (int k = 0; k < 10000; ++k) {
    if (cur == id) return prev;
    prev = cur;
    cur = matmul(cur, m);
  }
  fail_consistency("Weyl element of unexpectedly large order");
}

// ---- RootDatum -----------------------------------------------------------

RootDatum RootDatum::gl(int n) {
  if (n < 1) throw InvalidInput("gl:n needs n >= 1");
  RootDatum rd;
  rd.family_ = Family::GL;
  rd.n_ = n;
  rd.dim_ = n;
  for (int i = 0; i + 1 < n; ++i) {
    Weight a(n);
    a[i] = 1;
    a[i + 1] = -1;
    rd.simple_.push_back(a);
    rd.simple_co_.push_back(a);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Weight a(n);
      a[i] = 1;
      a[j] = -1;
      rd.pos_.push_back(a);
      rd.pos_co_.push_back(a);
    }
  rd.rho_ = Weight(n);
  for (int i = 0; i < n; ++i) rd.rho_[i] = n - 1 - i;
  rd.finish();
  return rd;
}

RootDatum RootDatum::gsp(int two_g) {
  if (two_g < 2 || two_g % 2) throw InvalidInput("gsp:2g needs an even size >= 2");
  const int g = two_g / 2;
  RootDatum rd;
  rd.family_ = Family::GSp;
  rd.n_ = g;
  rd.dim_ = g + 1;
  auto unit = [&](int a) {
    Weight w(g + 1);
    w[a] = 1;
    return w;
  };
  for (int k = 1; k < g; ++k) {
    Weight a = unit(k - 1) - unit(k);
    rd.simple_.push_back(a);
    rd.simple_co_.push_back(a);
  }
  rd.simple_.push_back(2 * unit(g - 1));
  rd.simple_co_.push_back(unit(g - 1));
  for (int a = 0; a < g; ++a)
    for (int b = a + 1; b < g; ++b) {
      rd.pos_.push_back(unit(a) - unit(b));
      rd.pos_co_.push_back(unit(a) - unit(b));
      rd.pos_.push_back(unit(a) + unit(b));
      rd.pos_co_.push_back(unit(a) + unit(b));
    }
  for (int a = 0; a < g; ++a) {
    rd.pos_.push_back(2 * unit(a));
    rd.pos_co_.push_back(unit(a));
  }
  rd.rho_ = Weight(g + 1);
  for (int a = 0; a < g; ++a) rd.rho_[a] = g - a;
  rd.finish();
  return rd;
}

RootDatum RootDatum::parse(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw InvalidInput("group spec '" + spec + "': expected gl:n or gsp:2g");
  std::string fam = spec.substr(0, colon), num = spec.substr(colon + 1);
  int k = 0;
  try {
    std::size_t used = 0;
    k = std::stoi(num, &used);
    if (used != num.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw InvalidInput("group spec '" + spec + "': column " + std::to_string(colon + 2) + ": expected an integer");
  }
  if (fam == "gl") return gl(k);
  if (fam == "gsp") return gsp(k);
  throw InvalidInput("group spec '" + spec + "': column 1: unknown family '" + fam + "'");
}

std::string RootDatum::name() const {
  return family_ == Family::GL ? "gl:" + std::to_string(n_) : "gsp:" + std::to_string(2 * n_);
}

std::size_t RootDatum::natural_dim() const { return family_ == Family::GL ? n_ : 2 * n_; }

void RootDatum::finish() {
  // order R⁺ by height, then by simple coordinates (α_1 first)
  std::vector<std::size_t> idx(pos_.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<std::vector<std::int64_t>> sc(pos_.size());
  for (std::size_t i = 0; i < pos_.size(); ++i) sc[i] = *simple_coordinates(pos_[i]);
  auto ht = [&](std::size_t i) {
    std::int64_t s = 0;
    for (auto x : sc[i]) s += x;
    return s;
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (ht(a) != ht(b)) return ht(a) < ht(b);
    return sc[a] > sc[b];
  });
  std::vector<Weight> p2;
  std::vector<Coweight> c2;
  for (auto i : idx) {
    p2.push_back(pos_[i]);
    c2.push_back(pos_co_[i]);
  }
  pos_ = std::move(p2);
  pos_co_ = std::move(c2);

  std::int64_t best = -1;
  for (std::size_t i = 0; i < pos_.size(); ++i) {
    std::int64_t v = pair(rho_, pos_co_[i]);
    if (v > best) {
      best = v;
      highest_coroot_ = pos_co_[i];
    }
  }
  if (pos_.empty()) highest_coroot_ = Coweight(dim_);
  h_ = static_cast<int>(1 + std::max<std::int64_t>(best, 0));

  // Weyl group by closure under simple reflections
  std::vector<SmallMat> gens;
  for (std::size_t i = 0; i < simple_.size(); ++i) {
    SmallMat s(dim_, std::vector<std::int64_t>(dim_, 0));
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) s[r][c] = (r == c ? 1 : 0) - simple_[i][r] * simple_co_[i][c];
    gens.push_back(s);
  }
  SmallMat id(dim_, std::vector<std::int64_t>(dim_, 0));
  for (std::size_t i = 0; i < dim_; ++i) id[i][i] = 1;
  std::set<SmallMat> seen{id};
  std::vector<SmallMat> order{id};
  for (std::size_t k = 0; k < order.size(); ++k)
    for (const auto& s : gens) {
      SmallMat m = matmul(order[k], s);
      if (seen.insert(m).second) order.push_back(m);
    }
  auto elts = std::make_shared<std::vector<WeylElt>>();
  for (const auto& m : order) {
    WeylElt w;
    w.mat = m;
    w.length = length_of(m);
    // greedy descent: if w(α_i) < 0 then w = (w s_i) s_i with ℓ(w s_i) = ℓ(w) − 1
    SmallMat cur = m;
    std::vector<int> rev;
    while (length_of(cur) > 0) {
      bool stepped = false;
      for (std::size_t i = 0; i < simple_.size(); ++i) {
        WeylElt tmp;
        tmp.mat = cur;
        Weight img = tmp.apply(simple_[i]);
        auto id2 = root_index(img);
        if (id2 && !is_positive(*id2)) {
          rev.push_back(static_cast<int>(i));
          cur = matmul(cur, gens[i]);
          stepped = true;
          break;
        }
      }
      if (!stepped) fail_consistency("greedy descent found no descent");
    }
    w.word.assign(rev.rbegin(), rev.rend());
    if (static_cast<int>(w.word.size()) != w.length) fail_consistency("reduced word length mismatch");
    elts->push_back(std::move(w));
  }
  std::stable_sort(elts->begin(), elts->end(), [](const WeylElt& a, const WeylElt& b) { return a.length < b.length; });
  weyl_ = elts;
}

Weight RootDatum::root(std::size_t id) const { return id < pos_.size() ? pos_[id] : -pos_[id - pos_.size()]; }
Coweight RootDatum::coroot(std::size_t id) const {
  return id < pos_.size() ? pos_co_[id] : -pos_co_[id - pos_.size()];
}

std::optional<std::size_t> RootDatum::root_index(const Weight& r) const {
  for (std::size_t i = 0; i < pos_.size(); ++i) {
    if (pos_[i] == r) return i;
    if (pos_[i] == -r) return i + pos_.size();
  }
  return std::nullopt;
}

std::optional<std::size_t> RootDatum::simple_index_of(std::size_t id) const {
  if (id >= pos_.size()) return std::nullopt;
  for (std::size_t i = 0; i < simple_.size(); ++i)
    if (simple_[i] == pos_[id]) return i;
  return std::nullopt;
}

std::vector<std::vector<std::int64_t>> RootDatum::cartan_matrix() const {
  std::vector<std::vector<std::int64_t>> c(rank(), std::vector<std::int64_t>(rank()));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) c[i][j] = pair(simple_[i], simple_co_[j]);
  return c;
}

std::optional<std::vector<std::int64_t>> RootDatum::simple_coordinates(const Weight& v) const {
  const std::size_t r = rank();
  std::vector<std::int64_t> n(r, 0);
  if (family_ == Family::GL) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < dim_; ++k) {
      s += v[k];
      if (k < r) n[k] = s;
    }
    if (s != 0) return std::nullopt;
    return n;
  }
  const std::size_t g = static_cast<std::size_t>(n_);
  if (v[g] != 0) return std::nullopt;
  std::int64_t s = 0;
  for (std::size_t k = 0; k < g; ++k) {
    s += v[k];
    if (k + 1 < g) n[k] = s;
  }
  if (s % 2) return std::nullopt;
  n[g - 1] = s / 2;
  return n;
}

std::int64_t RootDatum::height(const Weight& v) const {
  auto c = simple_coordinates(v);
  if (!c) throw InvalidInput("height: " + v.str() + " is not in the root lattice");
  std::int64_t s = 0;
  for (auto x : *c) s += x;
  return s;
}

bool RootDatum::in_lattice(const Weight& w) const {
  if (w.size() != dim_) return false;
  if (family_ == Family::GL) return true;
  std::int64_t s = 0;
  for (int a = 0; a < n_; ++a) s += w[a];
  return ((s - w[n_]) % 2) == 0;
}

void RootDatum::check_weight(const Weight& w) const {
  if (w.size() != dim_)
    throw InvalidInput("weight " + w.str() + " has " + std::to_string(w.size()) + " coordinates, " + name() +
                       " needs " + std::to_string(dim_));
  if (!in_lattice(w)) throw InvalidInput("weight " + w.str() + " violates the parity rule c = a_g+...+a_1 mod 2");
}

bool RootDatum::is_dominant(const Weight& w) const {
  for (const auto& c : simple_co_)
    if (pair(w, c) < 0) return false;
  return true;
}

std::int64_t RootDatum::inner(const Weight& a, const Weight& b) const {
  const std::size_t m = family_ == Family::GL ? dim_ : static_cast<std::size_t>(n_);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < m; ++i) s += a[i] * b[i];
  return s;
}

Weight RootDatum::reflect(const Weight& x, std::size_t id) const {
  return x - pair(x, coroot(id)) * root(id);
}

std::size_t RootDatum::weyl_index(const SmallMat& m) const {
  for (std::size_t i = 0; i < weyl_->size(); ++i)
    if ((*weyl_)[i].mat == m) return i;
  fail_consistency("matrix is not a Weyl group element");
}

int RootDatum::length_of(const SmallMat& m) const {
  WeylElt w;
  w.mat = m;
  int l = 0;
  for (const auto& b : pos_) {
    auto id = root_index(w.apply(b));
    if (!id) fail_consistency("Weyl element does not permute roots");
    if (!is_positive(*id)) ++l;
  }
  return l;
}

Weight RootDatum::natural_weight(std::size_t i) const {
  Weight w(dim_);
  if (family_ == Family::GL) {
    w[i] = 1;
    return w;
  }
  const std::size_t g = static_cast<std::size_t>(n_);
  if (i < g)
    w[i] = 1;
  else
    w[2 * g - 1 - i] = -1;
  w[g] = 1;
  return w;
}

std::vector<std::vector<WeylElt>> enumerate_weyl(const RootDatum& rd) {
  std::vector<std::vector<WeylElt>> out(rd.num_positive() + 1);
  for (const auto& w : rd.weyl_group()) out[w.length].push_back(w);
  return out;
}

Weight dot_action(const WeylElt& w, const Weight& lambda, const RootDatum& rd) {
  return w.apply(lambda + rd.rho()) - rd.rho();
}

std::int64_t p_small_bound(const Weight& lambda, const RootDatum& rd) {
  rd.check_weight(lambda);
  if (!rd.is_dominant(lambda)) throw InvalidInput("p-smallness needs a dominant weight, got " + lambda.str());
  std::int64_t m = 0;
  for (const auto& c : rd.positive_coroots()) m = std::max(m, pair(lambda + rd.rho(), c));
  return m;
}

bool is_p_small(const Weight& lambda, std::uint64_t p, const RootDatum& rd) {
  return p_small_bound(lambda, rd) <= static_cast<std::int64_t>(p);
}

AlcoveResult alcove_reduce(const Weight& xi, std::uint64_t p, const RootDatum& rd) {
  if (!is_prime(p)) throw InvalidInput("alcove_reduce: p = " + std::to_string(p) + " is not prime");
  const auto P = static_cast<std::int64_t>(p);
  AlcoveResult res;
  Weight x = xi + rd.rho();
  for (std::size_t iter = 0;; ++iter) {
    if (iter > 1000000) fail_consistency("alcove_reduce did not terminate");
    bool moved = false;
    for (std::size_t b = 0; b < rd.num_positive(); ++b) {
      std::int64_t v = pair(x, rd.positive_coroots()[b]);
      if (v < 0) {
        x = x - v * rd.positive_roots()[b];
        res.word.push_back({b, 0});
        moved = true;
        break;
      }
      if (v > P) {
        x = x - (v - P) * rd.positive_roots()[b];
        res.word.push_back({b, P});
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  res.rep = x - rd.rho();
  return res;
}

bool linked(const Weight& xi, const Weight& lambda, std::uint64_t p, const RootDatum& rd) {
  return alcove_reduce(xi, p, rd).rep == alcove_reduce(lambda, p, rd).rep;
}

// ---- ParabolicData -------------------------------------------------------

ParabolicData::ParabolicData(const RootDatum& rd, std::vector<int> levi) : rd_(std::make_shared<RootDatum>(rd)) {
  std::sort(levi.begin(), levi.end());
  levi.erase(std::unique(levi.begin(), levi.end()), levi.end());
  for (int i : levi)
    if (i < 0 || i >= static_cast<int>(rd.rank()))
      throw InvalidInput("Levi index " + std::to_string(i + 1) + " out of range 1.." + std::to_string(rd.rank()));
  levi_ = levi;
  for (int i = 0; i < static_cast<int>(rd.rank()); ++i)
    if (!std::binary_search(levi_.begin(), levi_.end(), i)) compl_.push_back(i);
  in_levi_.assign(rd.num_roots(), false);
  std::vector<std::pair<std::int64_t, std::size_t>> rad;
  for (std::size_t b = 0; b < rd.num_positive(); ++b) {
    auto sc = *rd.simple_coordinates(rd.positive_roots()[b]);
    std::int64_t lvl = 0;
    for (int i : compl_) lvl += sc[i];
    if (lvl == 0) {
      levi_pos_.push_back(b);
      in_levi_[b] = in_levi_[rd.negate(b)] = true;
    } else {
      rad.emplace_back(lvl, b);
    }
  }
  std::stable_sort(rad.begin(), rad.end(), [](auto& a, auto& b) { return a.first < b.first; });
  for (auto& [l, b] : rad) radical_.push_back(b);
}

ParabolicData ParabolicData::parse(const RootDatum& rd, const std::string& spec0) {
  std::string spec = spec0;
  std::size_t offset = 0;
  if (spec.rfind("levi=", 0) == 0) {
    spec = spec.substr(5);
    offset = 5;
  }
  if (spec == "all") {
    std::vector<int> all;
    for (std::size_t i = 0; i < rd.rank(); ++i) all.push_back(static_cast<int>(i));
    return ParabolicData(rd, all);
  }
  std::vector<int> idx;
  std::size_t i = 0;
  bool bracket = !spec.empty() && spec[0] == '[';
  if (bracket) ++i;
  std::size_t end = spec.size();
  if (bracket) {
    if (spec.back() != ']')
      throw InvalidInput("levi spec '" + spec0 + "': column " + std::to_string(offset + spec.size() + 1) +
                         ": expected ']'");
    --end;
  }
  while (i < end) {
    while (i < end && spec[i] == ' ') ++i;
    if (i >= end) break;
    std::size_t j = i;
    while (j < end && std::isdigit(static_cast<unsigned char>(spec[j]))) ++j;
    if (j == i)
      throw InvalidInput("levi spec '" + spec0 + "': column " + std::to_string(offset + i + 1) +
                         ": expected a simple-root index");
    int v = std::stoi(spec.substr(i, j - i));
    if (v < 1) throw InvalidInput("levi spec '" + spec0 + "': indices are 1-based");
    idx.push_back(v - 1);
    i = j;
    while (i < end && spec[i] == ' ') ++i;
    if (i < end) {
      if (spec[i] != ',')
        throw InvalidInput("levi spec '" + spec0 + "': column " + std::to_string(offset + i + 1) + ": expected ','");
      ++i;
    }
  }
  return ParabolicData(rd, idx);
}

std::vector<ParabolicData> ParabolicData::all_standard(const RootDatum& rd) {
  std::vector<ParabolicData> out;
  const std::size_t r = rd.rank();
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    std::vector<int> levi;
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (std::size_t{1} << i)) levi.push_back(static_cast<int>(i));
    out.emplace_back(rd, levi);
  }
  return out;
}

bool ParabolicData::levi_contains_simple(int i) const { return std::binary_search(levi_.begin(), levi_.end(), i); }

std::string ParabolicData::name() const {
  std::string s = "levi=[";
  for (std::size_t i = 0; i < levi_.size(); ++i) s += (i ? "," : "") + std::to_string(levi_[i] + 1);
  return s + "]";
}

bool ParabolicData::in_levi(std::size_t id) const { return in_levi_[id]; }

std::int64_t ParabolicData::f_I(const Weight& v) const {
  auto sc = rd_->simple_coordinates(v);
  if (!sc) throw InvalidInput("f_I: " + v.str() + " is not in the root lattice");
  std::int64_t s = 0;
  for (int i : compl_) s += (*sc)[i];
  return -s;
}

std::int64_t ParabolicData::nu(std::size_t i) const { return f_I(-rd_->positive_roots()[radical_[i]]); }

bool ParabolicData::is_levi_dominant(const Weight& xi) const {
  for (int i : levi_)
    if (pair(xi, rd_->simple_coroots()[i]) < 0) return false;
  return true;
}

bool ParabolicData::in_levi_weyl(const WeylElt& w) const {
  for (int s : w.word)
    if (!levi_contains_simple(s)) return false;
  return true;
}

std::vector<WeylElt> ParabolicData::levi_weyl() const {
  std::vector<WeylElt> out;
  for (const auto& w : rd_->weyl_group())
    if (in_levi_weyl(w)) out.push_back(w);
  return out;
}

std::vector<WeylElt> ParabolicData::coset_reps(int i) const {
  std::vector<WeylElt> out;
  for (const auto& w : rd_->weyl_group()) {
    if (w.length != i) continue;
    WeylElt winv;
    winv.mat = inverse_signed_perm(w.mat);
    bool ok = true;
    for (auto b : levi_pos_) {
      auto id = rd_->root_index(winv.apply(rd_->positive_roots()[b]));
      if (!id || !rd_->is_positive(*id)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(w);
  }
  return out;
}

std::vector<std::vector<WeylElt>> ParabolicData::coset_reps_all() const {
  std::vector<std::vector<WeylElt>> out;
  for (int i = 0; i <= static_cast<int>(rd_->num_positive()); ++i) out.push_back(coset_reps(i));
  return out;
}

bool ParabolicData::abelian_radical() const {
  for (auto a : radical_)
    for (auto b : radical_)
      if (rd_->root_index(rd_->positive_roots()[a] + rd_->positive_roots()[b])) return false;
  return true;
}

std::vector<WeylElt> coset_reps(const ParabolicData& pd, int i) { return pd.coset_reps(i); }

}  // namespace zk
