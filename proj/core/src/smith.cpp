#include <algorithm>

#include "zk/error.hpp"
#include "zk/zlinalg.hpp"

namespace zk {

namespace {

// s·a + u·b = g with x = a/g, y = b/g; a plain subtraction when a | b, which
// keeps the pivot in place and guarantees progress.
void gcd_move_impl(const Int& a, const Int& b, Int& g, Int& s, Int& u, Int& x, Int& y) {
  if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    g = a;
    s = 1;
    u = 0;
    x = 1;
    mpz_divexact(y.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    return;
  }
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_divexact(x.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(y.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
}

struct NoTrack {
  void rows2(std::size_t, std::size_t, const Int&, const Int&, const Int&, const Int&) {}
  void cols2(std::size_t, std::size_t, const Int&, const Int&, const Int&, const Int&) {}
  void swap_rows(std::size_t, std::size_t) {}
  void swap_cols(std::size_t, std::size_t) {}
  void neg_row(std::size_t) {}
};

// U accumulates row operations, V column operations, so that U·A·V = D.
struct Track {
  IntMatrix U, V;
  // (row_t, row_i) <- (s row_t + u row_i, c row_t + e row_i)
  void rows2(std::size_t t, std::size_t i, const Int& s, const Int& u, const Int& c, const Int& e) {
    for (std::size_t j = 0; j < U.cols(); ++j) {
      Int p = U(t, j), q = U(i, j);
      U(t, j) = s * p + u * q;
      U(i, j) = c * p + e * q;
    }
  }
  void cols2(std::size_t t, std::size_t j, const Int& s, const Int& u, const Int& c, const Int& e) {
    for (std::size_t i = 0; i < V.rows(); ++i) {
      Int p = V(i, t), q = V(i, j);
      V(i, t) = s * p + u * q;
      V(i, j) = c * p + e * q;
    }
  }
  void swap_rows(std::size_t i, std::size_t k) { U.swap_rows(i, k); }
  void swap_cols(std::size_t j, std::size_t k) { V.swap_cols(j, k); }
  void neg_row(std::size_t i) {
    for (std::size_t j = 0; j < U.cols(); ++j) U(i, j) = -U(i, j);
  }
  void neg_col(std::size_t j) {
    for (std::size_t i = 0; i < V.rows(); ++i) V(i, j) = -V(i, j);
  }
};

// Pivot-by-pivot elimination with extended-gcd 2×2 moves.
template <class T>
std::vector<Int> smith_impl(IntMatrix a, T& track) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<Int> d;
  Int g, s, u, x, y, ny, tmp;
  const Int zero = 0, one = 1;
  auto gcd_move = [&](const Int& p, const Int& q) { gcd_move_impl(p, q, g, s, u, x, y); };
  auto combine_rows = [&](std::size_t t, std::size_t i) {
    gcd_move(a(t, t), a(i, t));
    ny = -y;
    for (std::size_t j = t; j < n; ++j) {
      Int& p = a(t, j);
      Int& q = a(i, j);
      if (p == 0 && q == 0) continue;
      tmp = s * p + u * q;
      q = x * q - y * p;
      p = tmp;
    }
    track.rows2(t, i, s, u, ny, x);
  };
  auto combine_cols = [&](std::size_t t, std::size_t j) {
    gcd_move(a(t, t), a(t, j));
    ny = -y;
    for (std::size_t i = t; i < m; ++i) {
      Int& p = a(i, t);
      Int& q = a(i, j);
      if (p == 0 && q == 0) continue;
      tmp = s * p + u * q;
      q = x * q - y * p;
      p = tmp;
    }
    track.cols2(t, j, s, u, ny, x);
  };
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a(i, j) != 0 && (bi == m || cmpabs(a(i, j), a(bi, bj)) < 0)) {
          bi = i;
          bj = j;
        }
    if (bi == m) break;
    a.swap_rows(t, bi);
    track.swap_rows(t, bi);
    a.swap_cols(t, bj);
    track.swap_cols(t, bj);
    for (;;) {
      for (std::size_t i = t + 1; i < m; ++i)
        if (a(i, t) != 0) combine_rows(t, i);
      for (std::size_t j = t + 1; j < n; ++j)
        if (a(t, j) != 0) combine_cols(t, j);
      bool dirty = false;
      for (std::size_t i = t + 1; i < m && !dirty; ++i) dirty = a(i, t) != 0;
      if (dirty) continue;
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      for (std::size_t j = t + 1; j < n; ++j) a(t, j) += a(bad, j);
      track.rows2(t, bad, one, one, zero, one);
    }
    if (a(t, t) < 0) {
      a(t, t) = -a(t, t);
      track.neg_row(t);
    }
    d.push_back(a(t, t));
  }
  return d;
}

// Row-style Hermite pass: rows are inserted one at a time into an echelon
// block and everything is reduced modulo the pivots after each insertion, so
// entries stay bounded by the pivots.  T receives the same row operations.
void hermite_pass(IntMatrix& a, Track& t, bool rows) {
  auto r2 = [&](std::size_t i, std::size_t k, const Int& s, const Int& u, const Int& c, const Int& e) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Int p = a(i, j), q = a(k, j);
      a(i, j) = s * p + u * q;
      a(k, j) = c * p + e * q;
    }
    if (rows) t.rows2(i, k, s, u, c, e);
    else t.cols2(i, k, s, u, c, e);
  };
  auto swap = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    a.swap_rows(i, k);
    if (rows) t.swap_rows(i, k);
    else t.swap_cols(i, k);
  };
  auto negate = [&](std::size_t i) {
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = -a(i, j);
    if (rows) t.neg_row(i);
    else t.neg_col(i);
  };
  auto lead = [&](std::size_t i) {
    std::size_t j = 0;
    while (j < a.cols() && a(i, j) == 0) ++j;
    return j;
  };
  const Int zero = 0, one = 1;
  Int g, s, u, x, y, q;
  std::vector<std::size_t> piv;  // pivot column of rows 0..r−1
  for (std::size_t next = 0; next < a.rows(); ++next) {
    const std::size_t r = piv.size();
    swap(r, next);
    // row i reduced against pivot rows from..r−1, in column order
    auto reduce = [&](std::size_t i, std::size_t from) {
      for (std::size_t k = from; k < r; ++k) {
        if (a(i, piv[k]) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(i, piv[k]).get_mpz_t(), a(k, piv[k]).get_mpz_t());
        if (q != 0) r2(i, k, one, -q, zero, one);
      }
    };
    reduce(r, 0);
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t c = piv[k];
      if (a(r, c) == 0) continue;
      if (lead(r) < c) break;  // new pivot left of this one
      gcd_move_impl(a(k, c), a(r, c), g, s, u, x, y);
      r2(k, r, s, u, -y, x);
      reduce(k, k + 1);
      reduce(r, k + 1);
    }
    const std::size_t c = lead(r);
    if (c == a.cols()) continue;
    if (a(r, c) < 0) negate(r);
    // move the new row to its sorted position
    std::size_t pos = r;
    while (pos > 0 && piv[pos - 1] > c) {
      swap(pos - 1, pos);
      --pos;
    }
    piv.insert(piv.begin() + static_cast<long>(pos), c);
    for (std::size_t k = 0; k < piv.size(); ++k) {
      if (a(k, piv[k]) < 0) negate(k);
      for (std::size_t i = 0; i < k; ++i) {
        if (a(i, piv[k]) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(i, piv[k]).get_mpz_t(), a(k, piv[k]).get_mpz_t());
        if (q != 0) r2(i, k, one, -q, zero, one);
      }
    }
  }
}

bool is_diagonal(const IntMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j && a(i, j) != 0) return false;
  return true;
}

}  // namespace

SmithForm smith_form(const IntMatrix& a0) {
  const std::size_t m = a0.rows(), n = a0.cols();
  Track tr{IntMatrix::identity(m), IntMatrix::identity(n)};
  IntMatrix a = a0;
  // alternate row and column Hermite passes until diagonal
  for (bool rows = true; !is_diagonal(a); rows = !rows) {
    if (rows) {
      hermite_pass(a, tr, true);
    } else {
      IntMatrix at = a.transpose();
      hermite_pass(at, tr, false);
      a = at.transpose();
    }
  }
  // divisibility chain: diag(d_i, d_j) -> diag(gcd, lcm)
  const std::size_t r = std::min(m, n);
  Int g, s, u, x, y;
  const Int zero = 0, one = 1;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      if (a(j, j) == 0) continue;
      if (a(i, i) == 0) {
        a.swap_rows(i, j);
        tr.swap_rows(i, j);
        a.swap_cols(i, j);
        tr.swap_cols(i, j);
        continue;
      }
      if (mpz_divisible_p(a(j, j).get_mpz_t(), a(i, i).get_mpz_t())) continue;
      const Int di = a(i, i), dj = a(j, j);
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), di.get_mpz_t(), dj.get_mpz_t());
      tr.rows2(i, j, one, one, zero, one);                // row_i += row_j
      tr.cols2(i, j, s, u, -(dj / g), di / g);            // [di dj; 0 dj] -> [g 0; u dj, dj di/g]
      tr.rows2(j, i, one, -(u * (dj / g)), zero, one);    // clear below the pivot
      a(i, i) = g;
      a(j, j) = di / g * dj;
    }
  SmithForm out;
  for (std::size_t i = 0; i < r; ++i) {
    if (a(i, i) == 0) break;
    if (a(i, i) < 0) {
      a(i, i) = -a(i, i);
      tr.neg_row(i);
    }
    out.divisors.push_back(a(i, i));
  }
  out.U = std::move(tr.U);
  out.V = std::move(tr.V);
  return out;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = static_cast<u64>((u128)r * a % p);
    a = static_cast<u64>((u128)a * a % p);
    e >>= 1;
  }
  return r;
}

// Rows and columns of a nonsingular r×r minor, found by elimination mod p.
// Returns false when p loses rank.
bool independent_minor(const IntMatrix& a, std::size_t r, u64 p, std::vector<std::size_t>& rows,
                       std::vector<std::size_t>& cols) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<u64> v(m * n);
  Int t;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) != 0) v[i * n + j] = mpz_fdiv_r_ui(t.get_mpz_t(), a(i, j).get_mpz_t(), p);
  std::vector<std::size_t> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = i;
  rows.clear();
  cols.clear();
  std::size_t k = 0;
  for (std::size_t c = 0; c < n && k < m; ++c) {
    std::size_t piv = m;
    for (std::size_t i = k; i < m; ++i)
      if (v[i * n + c]) {
        piv = i;
        break;
      }
    if (piv == m) continue;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(v[piv * n + j], v[k * n + j]);
      std::swap(perm[piv], perm[k]);
    }
    const u64 inv = powmod(v[k * n + c], p - 2, p);
    for (std::size_t i = k + 1; i < m; ++i) {
      u64 f = v[i * n + c];
      if (!f) continue;
      f = static_cast<u64>((u128)f * inv % p);
      for (std::size_t j = c; j < n; ++j) {
        const u64 s = v[k * n + j];
        if (!s) continue;
        const u64 sub = static_cast<u64>((u128)f * s % p);
        u64& x = v[i * n + j];
        x = x >= sub ? x - sub : x + p - sub;
      }
    }
    rows.push_back(perm[k]);
    cols.push_back(c);
    ++k;
  }
  return k == r;
}

// Elimination over Z/M where M is a multiple of every nonzero invariant
// factor.  The column lattice is enlarged by M·Z^m, which leaves those factors
// unchanged and lets every entry be reduced mod M.
std::vector<Int> smith_mod(IntMatrix a, std::size_t r, const Int& M) {
  const std::size_t m = a.rows(), n = a.cols();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) mpz_fdiv_r(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), M.get_mpz_t());
  std::vector<Int> d;
  Int g, s, u, x, y, tmp, g0;
  auto red = [&](Int& e) { mpz_fdiv_r(e.get_mpz_t(), e.get_mpz_t(), M.get_mpz_t()); };
  auto gcd_move = [&](const Int& p, const Int& q) { gcd_move_impl(p, q, g, s, u, x, y); };
  // (row_t, row_i) <- (s row_t + u row_i, −b/g row_t + a/g row_i)
  auto combine_rows = [&](std::size_t t, std::size_t i, std::size_t from) {
    gcd_move(a(t, t), a(i, t));
    for (std::size_t j = from; j < n; ++j) {
      Int& p = a(t, j);
      Int& q = a(i, j);
      if (p == 0 && q == 0) continue;
      tmp = s * p + u * q;
      q = x * q - y * p;
      p = tmp;
      red(p);
      red(q);
    }
  };
  auto combine_cols = [&](std::size_t t, std::size_t j, std::size_t from) {
    gcd_move(a(t, t), a(t, j));
    for (std::size_t i = from; i < m; ++i) {
      Int& p = a(i, t);
      Int& q = a(i, j);
      if (p == 0 && q == 0) continue;
      tmp = s * p + u * q;
      q = x * q - y * p;
      p = tmp;
      red(p);
      red(q);
    }
  };
  for (std::size_t t = 0; t < std::min(m, n) && d.size() < r; ++t) {
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a(i, j) != 0 && (bi == m || cmpabs(a(i, j), a(bi, bj)) < 0)) {
          bi = i;
          bj = j;
        }
    if (bi == m) break;
    a.swap_rows(t, bi);
    a.swap_cols(t, bj);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i)
        if (a(i, t) != 0) combine_rows(t, i, t);
      for (std::size_t j = t + 1; j < n; ++j)
        if (a(t, j) != 0) combine_cols(t, j, t);
      for (std::size_t i = t + 1; i < m && !dirty; ++i) dirty = a(i, t) != 0;
      if (dirty) continue;
      mpz_gcd(g0.get_mpz_t(), a(t, t).get_mpz_t(), M.get_mpz_t());
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), g0.get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      for (std::size_t j = t + 1; j < n; ++j) {
        a(t, j) += a(bad, j);
        red(a(t, j));
      }
    }
    d.push_back(g0);
  }
  while (d.size() < r) d.push_back(M);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::vector<Int> smith_divisors(const IntMatrix& a) {
  const std::size_t r = rank_q(a);
  if (r == 0) return {};
  // tiny inputs: plain elimination has nothing to blow up
  if (a.rows() * a.cols() <= 16) {
    NoTrack tr;
    return smith_impl(a, tr);
  }
  std::vector<std::size_t> rows, cols;
  u64 p = (u64{1} << 62);
  for (;;) {
    do --p;
    while (!is_prime(p));
    if (independent_minor(a, r, p, rows, cols)) break;
  }
  Int M = abs(determinant(a.select(rows, cols)));
  if (M == 0) fail_consistency("Smith form: selected minor is singular");
  if (M == 1) return std::vector<Int>(r, Int(1));
  return smith_mod(a, r, M);
}

std::vector<unsigned> local_smith_valuations(const IntMatrix& a0, std::uint64_t p) {
  const std::size_t R = rank_q(a0);
  if (R == 0) return {};
  const std::size_t m = a0.rows(), n = a0.cols();
  for (unsigned K = 4;; K *= 2) {
    Int mod;
    mpz_ui_pow_ui(mod.get_mpz_t(), p, K);
    IntMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) mpz_fdiv_r(a(i, j).get_mpz_t(), a0(i, j).get_mpz_t(), mod.get_mpz_t());
    std::vector<unsigned> vals;
    Int f, inv, pv;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      std::size_t bi = m, bj = n;
      unsigned bv = K;
      for (std::size_t i = t; i < m && bv > 0; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (a(i, j) == 0) continue;
          unsigned v = valuation(a(i, j), p);
          if (v < bv) {
            bv = v;
            bi = i;
            bj = j;
            if (v == 0) break;
          }
        }
      if (bi == m) break;
      a.swap_rows(t, bi);
      a.swap_cols(t, bj);
      mpz_ui_pow_ui(pv.get_mpz_t(), p, bv);
      Int unit;
      mpz_divexact(unit.get_mpz_t(), a(t, t).get_mpz_t(), pv.get_mpz_t());
      if (!mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t()))
        fail_consistency("local Smith form: pivot unit not invertible");
      for (std::size_t j = t; j < n; ++j) {
        a(t, j) *= inv;
        mpz_fdiv_r(a(t, j).get_mpz_t(), a(t, j).get_mpz_t(), mod.get_mpz_t());
      }
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        mpz_divexact(f.get_mpz_t(), a(i, t).get_mpz_t(), pv.get_mpz_t());
        for (std::size_t j = t; j < n; ++j) {
          if (a(t, j) == 0) continue;
          mpz_submul(a(i, j).get_mpz_t(), f.get_mpz_t(), a(t, j).get_mpz_t());
          mpz_fdiv_r(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), mod.get_mpz_t());
        }
      }
      // column clearing only touches row t once column t is cleared below
      for (std::size_t j = t + 1; j < n; ++j) a(t, j) = 0;
      vals.push_back(bv);
    }
    if (vals.size() == R) {
      std::sort(vals.begin(), vals.end());
      return vals;
    }
    if (vals.size() > R) fail_consistency("local Smith form: more pivots than the rational rank");
  }
}

}  // namespace zk
