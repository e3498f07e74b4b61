#include "zk/zlinalg.hpp"

#include <algorithm>
#include <cmath>

#include "zk/error.hpp"

namespace zk {

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << "]";
  }
  return os << "]";
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

IntMatrix to_integral(const RatMatrix& m, const char* context) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat& x = m(i, j);
      if (x.get_den() != 1) fail_consistency(std::string(context) + ": non-integral entry " + x.get_str());
      r(i, j) = x.get_num();
    }
  return r;
}

namespace {

// row_i -= q * row_k on columns [from, cols)
void row_submul(IntMatrix& a, std::size_t i, std::size_t k, const Int& q, std::size_t from) {
  for (std::size_t j = from; j < a.cols(); ++j)
    if (a(k, j) != 0) mpz_submul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(k, j).get_mpz_t());
}

// Echelon form of the rows, pivoting only in columns < limit.  Returns the
// pivot columns; rows past the last pivot are zero on columns < limit.
std::vector<std::size_t> echelon(IntMatrix& a, std::size_t limit) {
  const std::size_t m = a.rows();
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  Int q;
  for (std::size_t col = 0; col < limit && r < m; ++col) {
    bool found = false;
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (a(i, col) != 0 && (best == m || cmpabs(a(i, col), a(best, col)) < 0)) best = i;
      if (best == m) break;
      found = true;
      a.swap_rows(best, r);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a(i, col) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(r, col).get_mpz_t());
        row_submul(a, i, r, q, col);
        if (a(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (a(r, col) < 0)
      for (std::size_t j = col; j < a.cols(); ++j) a(r, j) = -a(r, j);
    piv.push_back(col);
    ++r;
  }
  return piv;
}

}  // namespace

Hermite hermite(const IntMatrix& rows) {
  IntMatrix a = rows;
  auto piv = echelon(a, a.cols());
  const std::size_t r = piv.size();
  Int q;
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < k; ++i) {
      if (a(i, piv[k]) == 0) continue;
      mpz_fdiv_q(q.get_mpz_t(), a(i, piv[k]).get_mpz_t(), a(k, piv[k]).get_mpz_t());
      if (q != 0) row_submul(a, i, k, q, piv[k]);
    }
  Hermite h;
  h.basis = a.block(0, 0, r, a.cols());
  h.pivots = std::move(piv);
  return h;
}

std::optional<IntVector> solve_in_lattice(const Hermite& h, const IntVector& y) {
  IntVector rem = y;
  IntVector c(h.rank());
  for (std::size_t k = 0; k < h.rank(); ++k) {
    const Int& pv = h.basis(k, h.pivots[k]);
    if (!mpz_divisible_p(rem[h.pivots[k]].get_mpz_t(), pv.get_mpz_t())) return std::nullopt;
    mpz_divexact(c[k].get_mpz_t(), rem[h.pivots[k]].get_mpz_t(), pv.get_mpz_t());
    if (c[k] == 0) continue;
    for (std::size_t j = h.pivots[k]; j < rem.size(); ++j)
      if (h.basis(k, j) != 0) mpz_submul(rem[j].get_mpz_t(), c[k].get_mpz_t(), h.basis(k, j).get_mpz_t());
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return c;
}

std::optional<RatVector> solve_in_span(const Hermite& h, const RatVector& y) {
  RatVector rem = y;
  RatVector c(h.rank());
  for (std::size_t k = 0; k < h.rank(); ++k) {
    c[k] = rem[h.pivots[k]] / Rat(h.basis(k, h.pivots[k]));
    if (c[k] == 0) continue;
    for (std::size_t j = h.pivots[k]; j < rem.size(); ++j)
      if (h.basis(k, j) != 0) rem[j] -= c[k] * h.basis(k, j);
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return c;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix aug(n, m + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug(i, j) = a(j, i);
    aug(i, m + i) = 1;
  }
  auto piv = echelon(aug, m);
  IntMatrix k = aug.block(piv.size(), m, n - piv.size(), n);
  return hermite(k).basis;
}

Hermite saturate(const IntMatrix& rows) {
  if (rows.rows() == 0) return Hermite{IntMatrix(0, rows.cols()), {}};
  IntMatrix orth = kernel_basis(rows);
  if (orth.rows() == 0) return hermite(IntMatrix::identity(rows.cols()));
  return hermite(kernel_basis(orth));
}

// ---- ranks ---------------------------------------------------------------

namespace {

std::size_t rank_bareiss(IntMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t r = 0;
  Int prev = 1, t;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t piv = m;
    for (std::size_t i = r; i < m; ++i)
      if (a(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv == m) continue;
    a.swap_rows(piv, r);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        t = a(r, col) * a(i, j);
        mpz_submul(t.get_mpz_t(), a(i, col).get_mpz_t(), a(r, j).get_mpz_t());
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, col) = 0;
    }
    prev = a(r, col);
    ++r;
  }
  return r;
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }
u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::vector<u64> reduce_mod(const IntMatrix& a, u64 p) {
  std::vector<u64> m(a.rows() * a.cols());
  Int r;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Int& x = a(i, j);
      if (x == 0) continue;
      if (x.fits_slong_p()) {
        long v = x.get_si() % static_cast<long>(p);
        m[i * a.cols() + j] = v < 0 ? static_cast<u64>(v + static_cast<long>(p)) : static_cast<u64>(v);
      } else {
        mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
        m[i * a.cols() + j] = r.get_ui();
      }
    }
  return m;
}

std::size_t rank_mod_p_vec(std::vector<u64> m, std::size_t rows, std::size_t cols, u64 p) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i * cols + col]) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = col; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
    u64 inv = powmod(m[r * cols + col], p - 2, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      u64 f = m[i * cols + col];
      if (!f) continue;
      f = mulmod(f, inv, p);
      for (std::size_t j = col; j < cols; ++j) {
        u64 s = m[r * cols + j];
        if (!s) continue;
        u64 sub = mulmod(f, s, p);
        u64& x = m[i * cols + j];
        x = x >= sub ? x - sub : x + p - sub;
      }
    }
    ++r;
  }
  return r;
}

// Certified multimodular rank.  Every prime used gives rank_p <= rank_Q; once
// the product of the primes exceeds a Hadamard bound for (r+1)-minors, no
// (r+1)-minor can be nonzero, so r is the rational rank.
std::size_t rank_multimodular(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  const bool use_rows = m <= n;
  std::vector<double> lognorm;
  const std::size_t count = use_rows ? m : n;
  for (std::size_t i = 0; i < count; ++i) {
    Int s = 0;
    const std::size_t len = use_rows ? n : m;
    for (std::size_t j = 0; j < len; ++j) {
      const Int& x = use_rows ? a(i, j) : a(j, i);
      if (x != 0) s += x * x;
    }
    if (s == 0) continue;
    long e;
    double d = mpz_get_d_2exp(&e, s.get_mpz_t());
    lognorm.push_back(0.5 * (std::log2(d) + static_cast<double>(e)));
  }
  std::sort(lognorm.rbegin(), lognorm.rend());
  std::size_t best = 0;
  double logprod = 0;
  u64 p = (u64{1} << 62);
  const std::size_t cap = std::min(m, n);
  for (;;) {
    do --p;
    while (!is_prime(p));
    best = std::max(best, rank_mod_p_vec(reduce_mod(a, p), m, n, p));
    logprod += std::log2(static_cast<double>(p));
    if (best >= cap || best >= lognorm.size()) return best;
    double bound = 0;
    for (std::size_t i = 0; i <= best; ++i) bound += std::max(0.0, lognorm[i]);
    if (logprod > bound + 1.0) return best;
  }
}

}  // namespace

std::size_t rank_q(const IntMatrix& a) {
  if (a.empty()) return 0;
  if (a.rows() * a.cols() <= 6400) return rank_bareiss(a);
  return rank_multimodular(a);
}

std::size_t rank_mod_p(const IntMatrix& a, std::uint64_t p) {
  if (a.empty()) return 0;
  return rank_mod_p_vec(reduce_mod(a, p), a.rows(), a.cols(), p);
}

Int determinant(const IntMatrix& in) {
  if (in.rows() != in.cols()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = in.rows();
  if (n == 0) return 1;
  IntMatrix a = in;
  Int prev = 1, t;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv == n) return 0;
      a.swap_rows(piv, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = a(k, k) * a(i, j);
        mpz_submul(t.get_mpz_t(), a(i, k).get_mpz_t(), a(k, j).get_mpz_t());
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RatMatrix inverse(const RatMatrix& in) {
  const std::size_t n = in.rows();
  if (n != in.cols()) throw InvalidInput("inverse of a non-square matrix");
  RatMatrix a = in, inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == n) throw InvalidInput("inverse of a singular matrix");
    a.swap_rows(piv, c);
    inv.swap_rows(piv, c);
    Rat s = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (a(c, j) != 0) a(i, j) -= f * a(c, j);
        if (inv(c, j) != 0) inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// ---- primes --------------------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while (!(d & 1)) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k <= n; ++k)
    if (is_prime(k)) out.push_back(k);
  return out;
}

unsigned valuation(const Int& n, std::uint64_t p) {
  if (n == 0) return ~0u;
  Int m = abs(n);
  unsigned v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

std::vector<std::uint64_t> small_prime_factors(const Int& n, std::uint64_t bound, Int* rest) {
  std::vector<std::uint64_t> out;
  Int m = abs(n);
  for (std::uint64_t q = 2; q < bound && m > 1; ++q) {
    if (!mpz_divisible_ui_p(m.get_mpz_t(), q)) continue;
    out.push_back(q);
    while (mpz_divisible_ui_p(m.get_mpz_t(), q)) mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
  }
  if (rest) *rest = m;
  return out;
}

}  // namespace zk
