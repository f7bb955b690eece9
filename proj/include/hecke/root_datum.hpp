#pragma once

#include "hecke/arith.hpp"
#include "hecke/lattice.hpp"
#include "hecke/lattice_vector.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

class DatumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raw input: simple roots live in X^*(T) = Z^rank, simple coroots and sigma in
/// X_*(T) = Z^rank, with the standard pairing.
struct BasedRootDatum {
  std::size_t rank = 0;
  std::vector<Character> simple_roots;
  std::vector<Cocharacter> simple_coroots;
  IntMatrix sigma;
  std::string name;
};

struct WeylElement {
  IntMatrix matrix;       // action on X_*(T)
  std::vector<int> word;  // reduced word in simple reflections (0-based)
};

/// A standard Levi: the simple-root indices it keeps.
struct LeviDatum {
  std::vector<int> subset;  // sorted

  bool contains(const LeviDatum& other) const {
    return std::includes(subset.begin(), subset.end(), other.subset.begin(),
                         other.subset.end());
  }
  friend bool operator==(const LeviDatum& a, const LeviDatum& b) {
    return a.subset == b.subset;
  }
};

struct ValidationReport {
  bool valid = false;
  std::string diagnostic;
  std::size_t weyl_order = 0;
  std::size_t sigma_order = 0;
};

inline constexpr std::size_t kWeylOrderCap = 10'000'000;
inline constexpr std::size_t kRootCountCap = 100'000;

/// Validated datum with the Weyl group, positive roots and 2rho precomputed.
/// Immutable after construction.
class RootDatum {
 public:
  explicit RootDatum(BasedRootDatum raw) : raw_(std::move(raw)) { build(); }

  const BasedRootDatum& raw() const { return raw_; }
  std::size_t rank() const { return raw_.rank; }
  std::size_t semisimple_rank() const { return raw_.simple_roots.size(); }
  const std::string& name() const { return raw_.name; }
  const std::vector<Character>& simple_roots() const { return raw_.simple_roots; }
  const std::vector<Cocharacter>& simple_coroots() const { return raw_.simple_coroots; }
  const IntMatrix& sigma() const { return raw_.sigma; }
  const IntMatrix& sigma_inverse() const { return sigma_inv_; }
  std::size_t sigma_order() const { return sigma_order_; }
  /// sigma(alpha_i^vee) = alpha_{perm[i]}^vee
  const std::vector<int>& sigma_permutation() const { return perm_; }
  const std::vector<std::vector<std::int64_t>>& cartan() const { return cartan_; }
  const std::vector<Character>& positive_roots() const { return positive_roots_; }
  const Character& two_rho() const { return two_rho_; }
  const std::vector<WeylElement>& weyl_group() const { return weyl_; }
  const std::vector<WeylElement>& sigma_fixed_weyl_group() const { return weyl_sigma_; }

  Cocharacter apply_sigma(const Cocharacter& x, long k = 1) const {
    long kk = k % static_cast<long>(sigma_order_);
    if (kk < 0) kk += static_cast<long>(sigma_order_);
    Cocharacter y = x;
    for (long i = 0; i < kk; ++i) y = raw_.sigma.apply(y);
    return y;
  }
  RationalCocharacter apply_sigma(const RationalCocharacter& x, long k = 1) const {
    long kk = k % static_cast<long>(sigma_order_);
    if (kk < 0) kk += static_cast<long>(sigma_order_);
    RationalCocharacter y = x;
    for (long i = 0; i < kk; ++i) y = raw_.sigma.apply(y);
    return y;
  }

  /// s_i(y) = y - <alpha_i, y> alpha_i^vee
  template <class T>
  LatticeVector<CoweightTag, T> reflect(int i, LatticeVector<CoweightTag, T> y) const {
    const auto& a = raw_.simple_roots[i];
    const auto& c = raw_.simple_coroots[i];
    T s(0);
    for (std::size_t k = 0; k < y.size(); ++k) s += T(a[k]) * y[k];
    for (std::size_t k = 0; k < y.size(); ++k) y[k] -= s * T(c[k]);
    return y;
  }

  template <class T>
  T pair_simple(int i, const LatticeVector<CoweightTag, T>& y) const {
    T s(0);
    for (std::size_t k = 0; k < y.size(); ++k) s += T(raw_.simple_roots[i][k]) * y[k];
    return s;
  }

  /// <rho, x> computed as <2rho, x>/2.
  Rational pair_rho(const Cocharacter& x) const {
    return Rational(pair(two_rho_, x)) / 2;
  }
  Rational pair_rho(const RationalCocharacter& x) const {
    return pair(two_rho_, x) / 2;
  }

  template <class T>
  bool is_dominant(const LatticeVector<CoweightTag, T>& x) const {
    for (std::size_t i = 0; i < semisimple_rank(); ++i)
      if (pair_simple(static_cast<int>(i), x) < T(0)) return false;
    return true;
  }

  /// Pairs to zero with every root.
  template <class T>
  bool is_central(const LatticeVector<CoweightTag, T>& x) const {
    for (std::size_t i = 0; i < semisimple_rank(); ++i)
      if (pair_simple(static_cast<int>(i), x) != T(0)) return false;
    return true;
  }

  bool is_minuscule(const Cocharacter& mu) const {
    for (const auto& a : positive_roots_) {
      auto v = pair(a, mu);
      if (v > 1 || v < -1) return false;
    }
    return true;
  }

  /// Every cocharacter of the form (sigma - 1) e_j that is nonzero.
  std::vector<Cocharacter> sigma_minus_one() const {
    return sigma_minus_one_generators(raw_.sigma);
  }

  bool commutes_with_sigma(const IntMatrix& w) const {
    return w * raw_.sigma == raw_.sigma * w;
  }

  bool is_sigma_stable(const LeviDatum& m) const {
    for (int i : m.subset)
      if (!std::binary_search(m.subset.begin(), m.subset.end(), perm_[i])) return false;
    return true;
  }

  LeviDatum full_levi() const {
    LeviDatum g;
    for (std::size_t i = 0; i < semisimple_rank(); ++i) g.subset.push_back(static_cast<int>(i));
    return g;
  }

  /// Elements of W_M, generated by the reflections in m.subset.
  std::vector<WeylElement> levi_weyl_group(const LeviDatum& m) const {
    return generate_group(m.subset);
  }
  /// W_M intersected with W^sigma.
  std::vector<WeylElement> levi_sigma_fixed_weyl_group(const LeviDatum& m) const {
    std::vector<WeylElement> out;
    for (auto& w : generate_group(m.subset))
      if (commutes_with_sigma(w.matrix)) out.push_back(std::move(w));
    return out;
  }

  /// Sum of the positive roots of M.
  Character two_rho_levi(const LeviDatum& m) const {
    Character s(rank());
    for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
      bool inside = true;
      for (std::size_t i = 0; i < semisimple_rank(); ++i)
        if (positive_root_coords_[k][i] != 0 &&
            !std::binary_search(m.subset.begin(), m.subset.end(), static_cast<int>(i)))
          inside = false;
      if (inside) s += positive_roots_[k];
    }
    return s;
  }

  /// Coroots of M as generators of the coroot lattice of M.
  std::vector<Cocharacter> levi_coroots(const LeviDatum& m) const {
    std::vector<Cocharacter> out;
    for (int i : m.subset) out.push_back(raw_.simple_coroots[i]);
    return out;
  }

 private:
  void build();
  std::vector<WeylElement> generate_group(const std::vector<int>& gens) const;

  BasedRootDatum raw_;
  IntMatrix sigma_inv_;
  std::size_t sigma_order_ = 1;
  std::vector<int> perm_;
  std::vector<std::vector<std::int64_t>> cartan_;
  std::vector<Character> positive_roots_;
  std::vector<std::vector<std::int64_t>> positive_root_coords_;
  Character two_rho_;
  std::vector<WeylElement> weyl_;
  std::vector<WeylElement> weyl_sigma_;
};

namespace detail {

inline IntMatrix reflection_matrix(const Character& a, const Cocharacter& c) {
  const std::size_t n = a.size();
  IntMatrix s = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= c[i] * a[j];
  return s;
}

inline std::string vec_str(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

inline std::size_t factorial_cap(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n && f < 1'000'000; ++k) f *= k;
  return std::min<std::size_t>(f, 1'000'000);
}

}  // namespace detail

inline void RootDatum::build() {
  const std::size_t n = raw_.rank;
  const std::size_t l = raw_.simple_roots.size();
  if (n == 0) throw DatumError("rank must be positive");
  if (raw_.simple_coroots.size() != l)
    throw DatumError("simple_roots and simple_coroots have different lengths (" +
                     std::to_string(l) + " vs " +
                     std::to_string(raw_.simple_coroots.size()) + ")");
  for (std::size_t i = 0; i < l; ++i) {
    if (raw_.simple_roots[i].size() != n)
      throw DatumError("simple root " + std::to_string(i + 1) + " has length " +
                       std::to_string(raw_.simple_roots[i].size()) + ", expected " +
                       std::to_string(n));
    if (raw_.simple_coroots[i].size() != n)
      throw DatumError("simple coroot " + std::to_string(i + 1) + " has length " +
                       std::to_string(raw_.simple_coroots[i].size()) + ", expected " +
                       std::to_string(n));
  }
  if (raw_.sigma.rows() == 0 && raw_.sigma.cols() == 0) raw_.sigma = IntMatrix::identity(n);
  if (raw_.sigma.rows() != n || raw_.sigma.cols() != n)
    throw DatumError("sigma must be a " + std::to_string(n) + "x" + std::to_string(n) +
                     " matrix");

  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      if (raw_.simple_roots[i] == raw_.simple_roots[j] ||
          raw_.simple_coroots[i] == raw_.simple_coroots[j])
        throw DatumError("degenerate root system: simple root " + std::to_string(i + 1) +
                         " is listed twice (also as " + std::to_string(j + 1) + ")");

  cartan_.assign(l, std::vector<std::int64_t>(l, 0));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      cartan_[i][j] = pair(raw_.simple_roots[i], raw_.simple_coroots[j]);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      const auto a = cartan_[i][j];
      const std::string where = "<alpha_" + std::to_string(i + 1) + ", alpha_" +
                                std::to_string(j + 1) + "^vee> = " + std::to_string(a);
      if (i == j && a != 2) throw DatumError("non-Cartan pairing: " + where + ", expected 2");
      if (i != j && a > 0) throw DatumError("non-Cartan pairing: " + where + " is positive");
      if (i != j && (a == 0) != (cartan_[j][i] == 0))
        throw DatumError("non-Cartan pairing: " + where + " but the transposed entry is " +
                         std::to_string(cartan_[j][i]));
    }
  {
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& a : raw_.simple_roots) rows.push_back(a.coords());
    if (integer_rank(rows) != l)
      throw DatumError("degenerate root system: simple roots are linearly dependent");
    rows.clear();
    for (const auto& c : raw_.simple_coroots) rows.push_back(c.coords());
    if (integer_rank(rows) != l)
      throw DatumError("degenerate root system: simple coroots are linearly dependent");
  }

  // sigma: finite order, then permutation of simple coroots and roots
  {
    const std::size_t bound = 2 * detail::factorial_cap(std::max<std::size_t>(n, 2));
    IntMatrix p = raw_.sigma;
    std::size_t k = 1;
    while (!p.is_identity()) {
      if (++k > bound)
        throw DatumError("sigma has infinite order or order beyond " + std::to_string(bound));
      p = p * raw_.sigma;
    }
    sigma_order_ = k;
    sigma_inv_ = raw_.sigma.power(static_cast<long>(k) - 1);
  }
  const IntMatrix sigma_on_characters = sigma_inv_.transpose();
  perm_.assign(l, -1);
  for (std::size_t i = 0; i < l; ++i) {
    auto img = raw_.sigma.apply(raw_.simple_coroots[i]);
    for (std::size_t j = 0; j < l; ++j)
      if (raw_.simple_coroots[j] == img) perm_[i] = static_cast<int>(j);
    if (perm_[i] < 0)
      throw DatumError("sigma does not permute the simple coroots: sigma(alpha_" +
                       std::to_string(i + 1) + "^vee) = " + img.to_string());
    auto rimg = sigma_on_characters.apply(raw_.simple_roots[i]);
    if (rimg != raw_.simple_roots[perm_[i]])
      throw DatumError("sigma does not permute the simple roots compatibly: alpha_" +
                       std::to_string(i + 1) + " maps to " + rimg.to_string());
  }

  // positive roots by reflecting simple roots, tracked in simple-root coordinates
  {
    std::set<std::vector<std::int64_t>> seen;
    std::deque<std::vector<std::int64_t>> queue;
    for (std::size_t i = 0; i < l; ++i) {
      std::vector<std::int64_t> e(l, 0);
      e[i] = 1;
      seen.insert(e);
      queue.push_back(e);
    }
    while (!queue.empty()) {
      auto c = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < l; ++i) {
        std::int64_t s = 0;  // <beta, alpha_i^vee>
        for (std::size_t j = 0; j < l; ++j) s += c[j] * cartan_[j][i];
        auto d = c;
        d[i] -= s;
        if (seen.insert(d).second) {
          if (seen.size() > kRootCountCap)
            throw DatumError("infinite Weyl group: root system exceeds " +
                             std::to_string(kRootCountCap) + " roots");
          queue.push_back(d);
        }
      }
    }
    two_rho_ = Character(n);
    for (const auto& c : seen) {
      if (!std::all_of(c.begin(), c.end(), [](auto v) { return v >= 0; })) continue;
      Character a(n);
      for (std::size_t j = 0; j < l; ++j) a += c[j] * raw_.simple_roots[j];
      positive_roots_.push_back(a);
      positive_root_coords_.push_back(c);
      two_rho_ += a;
    }
  }

  std::vector<int> all(l);
  std::iota(all.begin(), all.end(), 0);
  weyl_ = generate_group(all);
  for (const auto& w : weyl_)
    if (commutes_with_sigma(w.matrix)) weyl_sigma_.push_back(w);
}

inline std::vector<WeylElement> RootDatum::generate_group(const std::vector<int>& gens) const {
  const std::size_t n = raw_.rank;
  std::vector<IntMatrix> refl;
  for (int i : gens)
    refl.push_back(detail::reflection_matrix(raw_.simple_roots[i], raw_.simple_coroots[i]));
  std::vector<WeylElement> out{{IntMatrix::identity(n), {}}};
  std::set<IntMatrix> seen{out.front().matrix};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      IntMatrix m = refl[g] * out[head].matrix;
      if (!seen.insert(m).second) continue;
      if (seen.size() > kWeylOrderCap)
        throw DatumError("infinite Weyl group: order exceeds " + std::to_string(kWeylOrderCap));
      auto word = out[head].word;
      word.insert(word.begin(), gens[g]);
      out.push_back({std::move(m), std::move(word)});
    }
  }
  return out;
}

inline ValidationReport validate(const BasedRootDatum& d) {
  ValidationReport r;
  try {
    RootDatum rd(d);
    r.valid = true;
    r.weyl_order = rd.weyl_group().size();
    r.sigma_order = rd.sigma_order();
  } catch (const DatumError& e) {
    r.diagnostic = e.what();
  }
  return r;
}

/// Orbit under the simple reflections, sorted.
template <class T>
std::vector<LatticeVector<CoweightTag, T>> weyl_orbit(const RootDatum& d,
                                                      const LatticeVector<CoweightTag, T>& x) {
  std::set<LatticeVector<CoweightTag, T>> seen{x};
  std::deque<LatticeVector<CoweightTag, T>> queue{x};
  while (!queue.empty()) {
    auto y = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < d.semisimple_rank(); ++i) {
      auto z = d.reflect(static_cast<int>(i), y);
      if (seen.insert(z).second) queue.push_back(z);
    }
  }
  return {seen.begin(), seen.end()};
}

/// Unique dominant element of the Weyl orbit.
template <class T>
LatticeVector<CoweightTag, T> dominant_rep(const RootDatum& d, LatticeVector<CoweightTag, T> x) {
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i < d.semisimple_rank(); ++i)
      if (d.pair_simple(static_cast<int>(i), x) < T(0)) {
        x = d.reflect(static_cast<int>(i), x);
        changed = true;
      }
    if (!changed) return x;
  }
}

/// Smallest n >= 1 with sigma^n(mu) in W mu.
inline int reflex_degree(const RootDatum& d, const Cocharacter& mu) {
  const auto dom = dominant_rep(d, mu);
  for (std::size_t k = 1; k <= d.sigma_order(); ++k)
    if (dominant_rep(d, d.apply_sigma(mu, static_cast<long>(k))) == dom)
      return static_cast<int>(k);
  throw std::logic_error("reflex degree exceeds sigma order");
}

/// {i : <alpha_i, nu> = 0} for dominant nu.
template <class T>
LeviDatum levi_centralizer(const RootDatum& d, const LatticeVector<CoweightTag, T>& nu) {
  LeviDatum m;
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i)
    if (d.pair_simple(static_cast<int>(i), nu) == T(0)) m.subset.push_back(static_cast<int>(i));
  return m;
}

/// Exact rational pairing <chi, x>; with halve set, chi is read as 2*rho-style and halved.
inline Rational pair_exact(const Character& chi, const RationalCocharacter& x,
                           bool halve = false) {
  Rational v = pair(chi, x);
  return halve ? Rational(v / 2) : v;
}

inline Cocharacter negate(const Cocharacter& x) { return -x; }

inline std::string levi_to_string(const LeviDatum& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.subset.size(); ++i)
    s += (i ? "," : "") + std::to_string(m.subset[i] + 1);
  return s + "}";
}

}  // namespace hecke
