#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

namespace zk {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_row(std::size_t i, const std::vector<T>& v) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }
  void append_row(const std::vector<T>& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
  }
  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }
  Matrix select(const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci) const {
    Matrix b(ri.size(), ci.size());
    for (std::size_t i = 0; i < ri.size(); ++i)
      for (std::size_t j = 0; j < ci.size(); ++j) b(i, j) = (*this)(ri[i], ci[j]);
    return b;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) c(i, j) += x * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  const std::vector<T>& data() const { return a_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

inline int cmpabs(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

RatMatrix to_rational(const IntMatrix& m);
// Throws ConsistencyError if some entry is not an integer.
IntMatrix to_integral(const RatMatrix& m, const char* context);

// ---- Hermite normal form -------------------------------------------------

// Row-style HNF of the lattice spanned by the rows: echelon, positive pivots,
// entries above a pivot reduced into [0, pivot). Zero rows are dropped.
struct Hermite {
  IntMatrix basis;
  std::vector<std::size_t> pivots;  // pivot column of each basis row
  std::size_t rank() const { return basis.rows(); }
};
Hermite hermite(const IntMatrix& rows);

// Coordinates c with c·basis = y, or nullopt if y is not in the lattice.
std::optional<IntVector> solve_in_lattice(const Hermite& h, const IntVector& y);
// Rational coordinates; nullopt if y is outside the rational span.
std::optional<RatVector> solve_in_span(const Hermite& h, const RatVector& y);

// Rows spanning {x ∈ Z^cols : A x = 0}; the result is a saturated lattice.
IntMatrix kernel_basis(const IntMatrix& a);
// Q-span of the rows intersected with Z^n, in Hermite form.
Hermite saturate(const IntMatrix& rows);

// ---- ranks, determinants -------------------------------------------------

std::size_t rank_q(const IntMatrix& a);
std::size_t rank_mod_p(const IntMatrix& a, std::uint64_t p);
Int determinant(const IntMatrix& a);
// Exact inverse of a nonsingular integer or rational square matrix.
RatMatrix inverse(const RatMatrix& a);

// ---- Smith normal form ---------------------------------------------------

struct SmithForm {
  std::vector<Int> divisors;  // nonzero invariant factors, d1 | d2 | ...
  IntMatrix U, V;             // U·A·V = diag(divisors) padded with zeros
};
SmithForm smith_form(const IntMatrix& a);
// Divisors only; cheaper because no transforms are tracked.
std::vector<Int> smith_divisors(const IntMatrix& a);

// p-adic valuations of the nonzero invariant factors, computed over Z/p^K
// with K raised until the number of units-times-p^v pivots equals rank_q.
std::vector<unsigned> local_smith_valuations(const IntMatrix& a, std::uint64_t p);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);
// Prime factors of |n| below `bound` (trial division); the cofactor is returned
// through `rest`.
std::vector<std::uint64_t> small_prime_factors(const Int& n, std::uint64_t bound, Int* rest = nullptr);
unsigned valuation(const Int& n, std::uint64_t p);

}  // namespace zk
