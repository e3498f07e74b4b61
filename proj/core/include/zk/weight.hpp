#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace zk {

// A character of the diagonal torus, in the standard coordinates of X(T):
// (λ_1..λ_n) for gl_n, (a_g..a_1; c) for gsp_2g.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t n) : c_(n, 0) {}
  Weight(std::initializer_list<std::int64_t> l) : c_(l) {}
  explicit Weight(std::vector<std::int64_t> v) : c_(std::move(v)) {}

  std::size_t size() const { return c_.size(); }
  std::int64_t& operator[](std::size_t i) { return c_[i]; }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  const std::vector<std::int64_t>& coords() const { return c_; }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight operator-() const;
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(std::int64_t k, Weight a) {
    for (auto& x : a.c_) x *= k;
    return a;
  }
  bool is_zero() const;

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;

  std::string str() const;

 private:
  std::vector<std::int64_t> c_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

// Coweights share the coordinate space; pairing is the plain dot product.
using Coweight = Weight;
std::int64_t pair(const Weight& w, const Coweight& c);

}  // namespace zk
