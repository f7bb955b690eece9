#pragma once

#include "hecke/arith.hpp"
#include "hecke/lattice_vector.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hecke {

using BigMatrix = std::vector<std::vector<Integer>>;

inline BigMatrix big_identity(std::size_t n) {
  BigMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... .
/// Uinv is kept alongside U so lifts need no inversion afterwards.
struct SmithDecomposition {
  BigMatrix U, Uinv, V, D;
  std::vector<Integer> diagonal;  // the nonzero invariant factors, in order
};

namespace detail {

class SmithWorker {
 public:
  explicit SmithWorker(BigMatrix a)
      : m_(a.size()), n_(a.empty() ? 0 : a.front().size()), D_(std::move(a)),
        U_(big_identity(m_)), Uinv_(big_identity(m_)), V_(big_identity(n_)) {}

  SmithDecomposition run() {
    std::size_t t = 0;
    for (; t < std::min(m_, n_); ++t) {
      if (!pick_pivot(t)) break;
      for (;;) {
        clear_column(t);
        clear_row(t);
        if (!column_dirty(t) && !row_dirty(t) && !fix_divisibility(t)) break;
      }
      if (D_[t][t] < 0) negate_row(t);
    }
    SmithDecomposition out{U_, Uinv_, V_, D_, {}};
    for (std::size_t i = 0; i < t; ++i) out.diagonal.push_back(D_[i][i]);
    return out;
  }

 private:
  bool pick_pivot(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < m_; ++i)
      for (std::size_t j = t; j < n_; ++j)
        if (D_[i][j] != 0 &&
            (!best || abs(D_[i][j]) < abs(D_[best->first][best->second])))
          best = {i, j};
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }

  bool column_dirty(std::size_t t) const {
    for (std::size_t i = t + 1; i < m_; ++i)
      if (D_[i][t] != 0) return true;
    return false;
  }
  bool row_dirty(std::size_t t) const {
    for (std::size_t j = t + 1; j < n_; ++j)
      if (D_[t][j] != 0) return true;
    return false;
  }

  void clear_column(std::size_t t) {
    for (;;) {
      bool moved = false;
      for (std::size_t i = t + 1; i < m_; ++i) {
        if (D_[i][t] == 0) continue;
        Integer q = D_[i][t] / D_[t][t];
        add_row(i, t, -q);
        if (D_[i][t] != 0) {
          swap_rows(i, t);
          moved = true;
        }
      }
      if (!moved) return;
    }
  }
  void clear_row(std::size_t t) {
    for (;;) {
      bool moved = false;
      for (std::size_t j = t + 1; j < n_; ++j) {
        if (D_[t][j] == 0) continue;
        Integer q = D_[t][j] / D_[t][t];
        add_col(j, t, -q);
        if (D_[t][j] != 0) {
          swap_cols(j, t);
          moved = true;
        }
      }
      if (!moved) return;
    }
  }
  // Returns true if a row was folded into the pivot row (pivot must be redone).
  bool fix_divisibility(std::size_t t) {
    for (std::size_t i = t + 1; i < m_; ++i)
      for (std::size_t j = t + 1; j < n_; ++j)
        if (D_[i][j] % D_[t][t] != 0) {
          add_row(t, i, 1);
          return true;
        }
    return false;
  }

  // row_i += q * row_t
  void add_row(std::size_t i, std::size_t t, const Integer& q) {
    for (std::size_t j = 0; j < n_; ++j) D_[i][j] += q * D_[t][j];
    for (std::size_t j = 0; j < m_; ++j) U_[i][j] += q * U_[t][j];
    for (std::size_t r = 0; r < m_; ++r) Uinv_[r][t] -= q * Uinv_[r][i];
  }
  // col_j += q * col_t
  void add_col(std::size_t j, std::size_t t, const Integer& q) {
    for (std::size_t i = 0; i < m_; ++i) D_[i][j] += q * D_[i][t];
    for (std::size_t i = 0; i < n_; ++i) V_[i][j] += q * V_[i][t];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(D_[a], D_[b]);
    std::swap(U_[a], U_[b]);
    for (std::size_t r = 0; r < m_; ++r) std::swap(Uinv_[r][a], Uinv_[r][b]);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m_; ++i) std::swap(D_[i][a], D_[i][b]);
    for (std::size_t i = 0; i < n_; ++i) std::swap(V_[i][a], V_[i][b]);
  }
  void negate_row(std::size_t t) {
    for (auto& x : D_[t]) x = -x;
    for (auto& x : U_[t]) x = -x;
    for (std::size_t r = 0; r < m_; ++r) Uinv_[r][t] = -Uinv_[r][t];
  }

  std::size_t m_, n_;
  BigMatrix D_, U_, Uinv_, V_;
};

}  // namespace detail

/// Smith normal form of an m x n integer matrix.
inline SmithDecomposition smith_normal_form(const BigMatrix& a) {
  return detail::SmithWorker(a).run();
}

/// Columns are the generators.
inline BigMatrix generator_matrix(std::size_t ambient_rank,
                                  const std::vector<Cocharacter>& generators) {
  BigMatrix a(ambient_rank, std::vector<Integer>(generators.size(), 0));
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].size() != ambient_rank)
      throw std::invalid_argument("generator length does not match lattice rank");
    for (std::size_t i = 0; i < ambient_rank; ++i) a[i][j] = generators[j][i];
  }
  return a;
}

/// Quotient coordinates: the free part first, then one coordinate per
/// invariant factor, reduced into [0, d).
using QuotientClass = std::vector<std::int64_t>;

/// Dot product in int64; false on overflow.
inline bool dot_fits(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                     std::int64_t& out) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    std::int64_t t;
    if (__builtin_mul_overflow(a[j], b[j], &t) || __builtin_add_overflow(s, t, &s)) return false;
  }
  out = s;
  return true;
}

/// Z^n / L presented as Z^free_rank + sum Z/torsion[i].
struct FiniteAbelianPresentation {
  std::size_t ambient_rank = 0;
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;
  // (free_rank + torsion.size()) x ambient_rank
  std::vector<std::vector<std::int64_t>> projection;
  // ambient_rank x (free_rank + torsion.size()); projection * section = id
  std::vector<std::vector<std::int64_t>> section;

  std::size_t quotient_dim() const { return free_rank + torsion.size(); }

  QuotientClass class_of(const Cocharacter& x) const {
    if (x.size() != ambient_rank)
      throw std::invalid_argument("class_of: length mismatch");
    QuotientClass q(quotient_dim(), 0);
    for (std::size_t r = 0; r < q.size(); ++r) {
      std::int64_t s = 0;
      if (!dot_fits(projection[r], x.coords(), s)) {
        Integer big = 0;
        for (std::size_t j = 0; j < ambient_rank; ++j) big += Integer(projection[r][j]) * x[j];
        if (r >= free_rank) big = floor_mod(big, torsion[r - free_rank]);
        q[r] = to_int64(big);
        continue;
      }
      if (r >= free_rank) {
        const std::int64_t t = torsion[r - free_rank];
        s %= t;
        if (s < 0) s += t;
      }
      q[r] = s;
    }
    return q;
  }

  bool same_class(const Cocharacter& x, const Cocharacter& y) const {
    return class_of(x) == class_of(y);
  }

  /// A lattice element whose class is q.
  Cocharacter lift(const QuotientClass& q) const {
    if (q.size() != quotient_dim())
      throw std::invalid_argument("lift: wrong number of quotient coordinates");
    Cocharacter x(ambient_rank);
    for (std::size_t i = 0; i < ambient_rank; ++i) {
      std::int64_t s = 0;
      if (dot_fits(section[i], q, s)) {
        x[i] = s;
        continue;
      }
      Integer big = 0;
      for (std::size_t r = 0; r < q.size(); ++r) big += Integer(section[i][r]) * q[r];
      x[i] = to_int64(big);
    }
    return x;
  }

  /// Sum of |projection[r][j]| over j; bounds |class_of(x)[r]| by this times max|x_j|.
  std::int64_t row_abs_sum(std::size_t r) const {
    std::int64_t s = 0;
    for (auto v : projection[r]) s += v < 0 ? -v : v;
    return s;
  }
};

/// Presentation of Z^ambient_rank modulo the span of the generators.
inline FiniteAbelianPresentation quotient(std::size_t ambient_rank,
                                          const std::vector<Cocharacter>& generators) {
  FiniteAbelianPresentation p;
  p.ambient_rank = ambient_rank;
  if (generators.empty()) {
    p.free_rank = ambient_rank;
    for (std::size_t i = 0; i < ambient_rank; ++i) {
      std::vector<std::int64_t> row(ambient_rank, 0);
      row[i] = 1;
      p.projection.push_back(row);
    }
    p.section = p.projection;
    return p;
  }
  auto snf = smith_normal_form(generator_matrix(ambient_rank, generators));
  const std::size_t s = snf.diagonal.size();
  std::vector<std::size_t> rows;
  for (std::size_t i = s; i < ambient_rank; ++i) rows.push_back(i);
  p.free_rank = rows.size();
  for (std::size_t i = 0; i < s; ++i)
    if (snf.diagonal[i] != 1) {
      rows.push_back(i);
      p.torsion.push_back(to_int64(snf.diagonal[i]));
    }
  for (auto r : rows) {
    std::vector<std::int64_t> row;
    for (std::size_t j = 0; j < ambient_rank; ++j) row.push_back(to_int64(snf.U[r][j]));
    p.projection.push_back(std::move(row));
  }
  p.section.assign(ambient_rank, std::vector<std::int64_t>(rows.size(), 0));
  for (std::size_t i = 0; i < ambient_rank; ++i)
    for (std::size_t k = 0; k < rows.size(); ++k)
      p.section[i][k] = to_int64(snf.Uinv[i][rows[k]]);
  return p;
}

struct MembershipResult {
  bool member = false;
  // x = sum coefficients[j] * generators[j] when member
  std::vector<std::int64_t> coefficients;
};

/// Membership in a fixed sublattice; the Smith decomposition is computed once.
class SublatticeSolver {
 public:
  SublatticeSolver(std::size_t ambient_rank, std::vector<Cocharacter> generators)
      : n_(ambient_rank), k_(generators.size()) {
    if (k_ > 0) snf_ = smith_normal_form(generator_matrix(n_, generators));
  }

  /// x in span_Z(generators), with the combination when it is.
  MembershipResult solve(const Cocharacter& x) const {
    MembershipResult res;
    if (x.size() != n_) throw std::invalid_argument("in_sublattice: length mismatch");
    if (k_ == 0) {
      res.member = x.is_zero();
      return res;
    }
    std::vector<Integer> z(k_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      Integer y = 0;
      for (std::size_t j = 0; j < n_; ++j) y += snf_.U[i][j] * x[j];
      if (i < snf_.diagonal.size()) {
        if (y % snf_.diagonal[i] != 0) return res;
        z[i] = y / snf_.diagonal[i];
      } else if (y != 0) {
        return res;
      }
    }
    res.member = true;
    res.coefficients.assign(k_, 0);
    for (std::size_t i = 0; i < k_; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < k_; ++j) s += snf_.V[i][j] * z[j];
      res.coefficients[i] = to_int64(s);
    }
    return res;
  }

 private:
  std::size_t n_, k_;
  SmithDecomposition snf_;
};

/// Decides x in span_Z(generators), returning the combination when it is.
inline MembershipResult in_sublattice(const std::vector<Cocharacter>& generators,
                                      const Cocharacter& x) {
  return SublatticeSolver(x.size(), generators).solve(x);
}

/// Columns (sigma - 1) e_j, generating (sigma - 1) X_*(T).
inline std::vector<Cocharacter> sigma_minus_one_generators(const IntMatrix& sigma) {
  std::vector<Cocharacter> gens;
  for (std::size_t j = 0; j < sigma.cols(); ++j) {
    Cocharacter c(sigma.rows());
    for (std::size_t i = 0; i < sigma.rows(); ++i)
      c[i] = sigma(i, j) - (i == j ? 1 : 0);
    if (!c.is_zero()) gens.push_back(c);
  }
  return gens;
}

/// Rank of an integer matrix given by its rows.
inline std::size_t integer_rank(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return 0;
  BigMatrix a;
  for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
  return smith_normal_form(a).diagonal.size();
}

}  // namespace hecke
