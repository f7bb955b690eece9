#pragma once

#include "hecke/arith.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

struct CoweightTag {};
struct WeightTag {};

/// A coordinate vector in one of the two dual lattices X_*(T), X^*(T). The tag
/// keeps cocharacters and characters from being mixed up; pairing is the only
/// operation that takes one of each.
template <class Tag, class T = std::int64_t>
class LatticeVector {
 public:
  using value_type = T;

  LatticeVector() = default;
  explicit LatticeVector(std::size_t n) : coords_(n, T(0)) {}
  LatticeVector(std::initializer_list<T> il) : coords_(il) {}
  explicit LatticeVector(std::vector<T> v) : coords_(std::move(v)) {}

  std::size_t size() const { return coords_.size(); }
  const T& operator[](std::size_t i) const { return coords_[i]; }
  T& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  const std::vector<T>& coords() const { return coords_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const T& x) { return x == T(0); });
  }

  LatticeVector& operator+=(const LatticeVector& o) {
    check_size(o);
    for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    check_size(o);
    for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  LatticeVector& operator*=(const T& s) {
    for (auto& x : coords_) x *= s;
    return *this;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) {
    return a += b;
  }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) {
    return a -= b;
  }
  friend LatticeVector operator*(const T& s, LatticeVector a) { return a *= s; }
  friend LatticeVector operator-(LatticeVector a) {
    for (auto& x : a.coords_) x = -x;
    return a;
  }
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const LatticeVector& a, const LatticeVector& b) {
    return !(a == b);
  }
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ < b.coords_;
  }
  friend bool operator>(const LatticeVector& a, const LatticeVector& b) {
    return b < a;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) s += ",";
      if constexpr (std::is_same_v<T, Rational>)
        s += hecke::to_string(coords_[i]);
      else
        s += std::to_string(coords_[i]);
    }
    return s + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
    return os << v.to_string();
  }

 private:
  void check_size(const LatticeVector& o) const {
    if (o.size() != size())
      throw std::invalid_argument("lattice vector length mismatch");
  }
  std::vector<T> coords_;
};

using Cocharacter = LatticeVector<CoweightTag>;
using Character = LatticeVector<WeightTag>;
using RationalCocharacter = LatticeVector<CoweightTag, Rational>;

inline RationalCocharacter to_rational(const Cocharacter& x) {
  std::vector<Rational> v(x.begin(), x.end());
  return RationalCocharacter(std::move(v));
}

/// Standard dot product; throws on length mismatch.
inline std::int64_t pair(const Character& chi, const Cocharacter& x) {
  if (chi.size() != x.size())
    throw std::invalid_argument("pairing length mismatch");
  return std::inner_product(chi.begin(), chi.end(), x.begin(), std::int64_t{0});
}

inline Rational pair(const Character& chi, const RationalCocharacter& x) {
  if (chi.size() != x.size())
    throw std::invalid_argument("pairing length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += Rational(chi[i]) * x[i];
  return s;
}

/// Dense row-major integer matrix acting on column vectors.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }
  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    IntMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows) {
      if (r.size() != m.cols_) throw std::invalid_argument("ragged matrix");
      m.a_.insert(m.a_.end(), r.begin(), r.end());
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  std::vector<std::vector<std::int64_t>> to_rows() const {
    std::vector<std::vector<std::int64_t>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      out[i].assign(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
    return c;
  }

  template <class Tag, class T>
  LatticeVector<Tag, T> apply(const LatticeVector<Tag, T>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix/vector mismatch");
    LatticeVector<Tag, T> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      T s(0);
      for (std::size_t j = 0; j < cols_; ++j)
        if (const auto aij = (*this)(i, j)) s += T(aij) * x[j];
      y[i] = s;
    }
    return y;
  }

  IntMatrix power(long k) const {
    IntMatrix r = identity(rows_), b = *this;
    while (k > 0) {
      if (k & 1) r = r * b;
      b = b * b;
      k >>= 1;
    }
    return r;
  }

  bool is_identity() const { return *this == identity(rows_); }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator<(const IntMatrix& a, const IntMatrix& b) {
    return std::tie(a.rows_, a.cols_, a.a_) < std::tie(b.rows_, b.cols_, b.a_);
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> a_;
};

}  // namespace hecke
