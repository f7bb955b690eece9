#pragma once

#include "hecke/arith.hpp"
#include "hecke/lattice_vector.hpp"
#include "hecke/root_datum.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

/// Laurent polynomial in the formal symbol p with rational coefficients.
class LaurentP {
 public:
  LaurentP() = default;
  LaurentP(std::int64_t c) { if (c != 0) terms_[0] = c; }  // NOLINT: implicit by design
  static LaurentP monomial(const Rational& c, std::int64_t k) {
    LaurentP r;
    if (c != 0) r.terms_[k] = c;
    return r;
  }
  static LaurentP p_power(std::int64_t k) { return monomial(1, k); }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const std::map<std::int64_t, Rational>& terms() const { return terms_; }

  LaurentP& operator+=(const LaurentP& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LaurentP& operator-=(const LaurentP& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend LaurentP operator+(LaurentP a, const LaurentP& b) { return a += b; }
  friend LaurentP operator-(LaurentP a, const LaurentP& b) { return a -= b; }
  friend LaurentP operator-(LaurentP a) {
    for (auto& [k, c] : a.terms_) c = -c;
    return a;
  }
  friend LaurentP operator*(const LaurentP& a, const LaurentP& b) {
    LaurentP r;
    for (const auto& [i, x] : a.terms_)
      for (const auto& [j, y] : b.terms_) r.add_term(i + j, x * y);
    return r;
  }
  friend bool operator==(const LaurentP& a, const LaurentP& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentP& a, const LaurentP& b) { return !(a == b); }

  /// Leading (highest-exponent) coefficient is negative.
  bool leads_negative() const { return !terms_.empty() && terms_.rbegin()->second < 0; }

  Rational evaluate(const Integer& p) const {
    Rational s = 0;
    for (const auto& [k, c] : terms_) {
      Integer pk = boost::multiprecision::pow(p, static_cast<unsigned>(k < 0 ? -k : k));
      s += k < 0 ? Rational(c / Rational(pk)) : Rational(c * pk);
    }
    return s;
  }

  /// Highest power first, e.g. "3/2*p^2 - p^-1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto k = it->first;
      Rational a = it->second;
      const bool neg = a < 0;
      if (neg) a = -a;
      if (first)
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      first = false;
      std::string pk = k == 1 ? "p" : "p^" + std::to_string(k);
      if (k == 0)
        out += hecke::to_string(a);
      else if (a == 1)
        out += pk;
      else
        out += hecke::to_string(a) + "*" + pk;
    }
    return out;
  }

  /// Inverse of to_string; whitespace is ignored.
  static LaurentP parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty Laurent polynomial");
    LaurentP r;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("malformed Laurent polynomial '" + std::string(text) +
                                  "': " + why);
    };
    auto read_digits = [&]() {
      std::size_t b = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      return s.substr(b, i - b);
    };
    bool first = true;
    while (i < s.size()) {
      bool neg = false;
      if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Rational c = 1;
      std::string num = read_digits();
      bool have_coeff = !num.empty();
      if (have_coeff) {
        std::string q = num;
        if (i < s.size() && s[i] == '/') {
          ++i;
          std::string den = read_digits();
          if (den.empty()) fail("missing denominator");
          q += "/" + den;
        }
        c = parse_rational(q);
      }
      std::int64_t k = 0;
      bool have_p = false;
      if (have_coeff && i < s.size() && s[i] == '*') {
        ++i;
        if (i >= s.size() || s[i] != 'p') fail("expected 'p' after '*'");
      }
      if (i < s.size() && s[i] == 'p') {
        have_p = true;
        ++i;
        k = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          bool eneg = false;
          if (i < s.size() && s[i] == '-') {
            eneg = true;
            ++i;
          }
          std::string e = read_digits();
          if (e.empty()) fail("missing exponent");
          k = std::stoll(e);
          if (eneg) k = -k;
        }
      }
      if (!have_coeff && !have_p) fail("empty term");
      r.add_term(k, neg ? Rational(-c) : c);
    }
    return r;
  }

 private:
  void add_term(std::int64_t k, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  std::map<std::int64_t, Rational> terms_;
};

/// Element of the group algebra over Q[p, p^-1] on X_*(T): sum c_nu h_nu.
class SpecializedElement;

class TorusAlgebraElement {
 public:
  explicit TorusAlgebraElement(std::size_t rank = 0) : rank_(rank) {}

  static TorusAlgebraElement basis(const Cocharacter& nu, const LaurentP& c = LaurentP(1)) {
    TorusAlgebraElement e(nu.size());
    if (!c.is_zero()) e.terms_[nu] = c;
    return e;
  }
  static TorusAlgebraElement unit(std::size_t rank) { return basis(Cocharacter(rank)); }

  std::size_t rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Cocharacter, LaurentP>& terms() const { return terms_; }

  LaurentP coefficient(const Cocharacter& nu) const {
    auto it = terms_.find(nu);
    return it == terms_.end() ? LaurentP() : it->second;
  }

  TorusAlgebraElement& operator+=(const TorusAlgebraElement& o) {
    check_rank(o);
    for (const auto& [nu, c] : o.terms_) add_term(nu, c);
    return *this;
  }
  TorusAlgebraElement& operator-=(const TorusAlgebraElement& o) {
    check_rank(o);
    for (const auto& [nu, c] : o.terms_) add_term(nu, -c);
    return *this;
  }
  friend TorusAlgebraElement operator+(TorusAlgebraElement a, const TorusAlgebraElement& b) {
    return a += b;
  }
  friend TorusAlgebraElement operator-(TorusAlgebraElement a, const TorusAlgebraElement& b) {
    return a -= b;
  }
  friend TorusAlgebraElement operator-(TorusAlgebraElement a) {
    for (auto& [nu, c] : a.terms_) c = -c;
    return a;
  }
  friend TorusAlgebraElement operator*(const TorusAlgebraElement& a,
                                       const TorusAlgebraElement& b) {
    a.check_rank(b);
    TorusAlgebraElement r(a.rank_);
    for (const auto& [x, c] : a.terms_)
      for (const auto& [y, d] : b.terms_) r.add_term(x + y, c * d);
    return r;
  }
  friend TorusAlgebraElement operator*(const LaurentP& s, const TorusAlgebraElement& a) {
    TorusAlgebraElement r(a.rank_);
    for (const auto& [x, c] : a.terms_) r.add_term(x, s * c);
    return r;
  }
  friend bool operator==(const TorusAlgebraElement& a, const TorusAlgebraElement& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TorusAlgebraElement& a, const TorusAlgebraElement& b) {
    return !(a == b);
  }

  /// Printed sign of the first displayed term.
  bool leads_negative() const {
    return !terms_.empty() && terms_.rbegin()->second.leads_negative();
  }
  bool is_single_term() const { return terms_.size() == 1; }

  /// Terms in descending lexicographic order of exponent, e.g.
  /// "h(0,-1) + p*h(-1,0)". h(0,...,0) is the unit and prints as its coefficient.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      LaurentP c = it->second;
      const bool neg = c.leads_negative();
      if (neg) c = -c;
      if (first)
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      first = false;
      const std::string h = "h" + it->first.to_string();
      const std::string cs = c.to_string();
      if (it->first.is_zero())
        out += c.is_monomial() ? cs : "(" + cs + ")";
      else if (cs == "1")
        out += h;
      else if (c.is_monomial())
        out += cs + "*" + h;
      else
        out += "(" + cs + ")*" + h;
    }
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
      terms.push_back({{"exponent", it->first.coords()}, {"coeff", it->second.to_string()}});
    return {{"rank", rank_}, {"terms", terms}};
  }

  static TorusAlgebraElement from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
      throw std::invalid_argument("torus element: expected an object with a 'terms' array");
    std::optional<std::size_t> rank;
    if (j.contains("rank")) rank = j.at("rank").get<std::size_t>();
    TorusAlgebraElement e(rank.value_or(0));
    bool have_rank = rank.has_value();
    for (const auto& t : j.at("terms")) {
      auto nu = Cocharacter(t.at("exponent").get<std::vector<std::int64_t>>());
      if (!have_rank) {
        e.rank_ = nu.size();
        have_rank = true;
      }
      if (nu.size() != e.rank_) throw std::invalid_argument("torus element: exponent length");
      e.add_term(nu, LaurentP::parse(t.at("coeff").get<std::string>()));
    }
    return e;
  }

  SpecializedElement specialize(const Integer& p) const;

 private:
  void check_rank(const TorusAlgebraElement& o) const {
    if (o.rank_ != rank_) throw std::invalid_argument("torus element rank mismatch");
  }
  void add_term(const Cocharacter& nu, const LaurentP& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(nu, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::size_t rank_;
  std::map<Cocharacter, LaurentP> terms_;
};

/// Image of a torus element with p replaced by a number.
class SpecializedElement {
 public:
  explicit SpecializedElement(std::size_t rank = 0) : rank_(rank) {}
  std::size_t rank() const { return rank_; }
  const std::map<Cocharacter, Rational>& terms() const { return terms_; }

  void add_term(const Cocharacter& nu, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(nu, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  friend SpecializedElement operator+(SpecializedElement a, const SpecializedElement& b) {
    for (const auto& [nu, c] : b.terms_) a.add_term(nu, c);
    return a;
  }
  friend SpecializedElement operator*(const SpecializedElement& a, const SpecializedElement& b) {
    SpecializedElement r(a.rank_);
    for (const auto& [x, c] : a.terms_)
      for (const auto& [y, d] : b.terms_) r.add_term(x + y, c * d);
    return r;
  }
  friend bool operator==(const SpecializedElement& a, const SpecializedElement& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Rational c = it->second;
      const bool neg = c < 0;
      if (neg) c = -c;
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      const std::string cs = hecke::to_string(c);
      if (it->first.is_zero())
        out += cs;
      else
        out += (cs == "1" ? "" : cs + "*") + "h" + it->first.to_string();
    }
    return out;
  }
  nlohmann::json to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
      terms.push_back({{"exponent", it->first.coords()}, {"coeff", hecke::to_string(it->second)}});
    return {{"rank", rank_}, {"terms", terms}};
  }

 private:
  std::size_t rank_;
  std::map<Cocharacter, Rational> terms_;
};

inline SpecializedElement TorusAlgebraElement::specialize(const Integer& p) const {
  SpecializedElement s(rank_);
  for (const auto& [nu, c] : terms_) s.add_term(nu, c.evaluate(p));
  return s;
}

/// Polynomial in x over the torus algebra, lowest degree first.
class HeckePolynomial {
 public:
  explicit HeckePolynomial(std::size_t rank = 0) : rank_(rank) {}
  explicit HeckePolynomial(std::vector<TorusAlgebraElement> coeffs)
      : rank_(coeffs.empty() ? 0 : coeffs.front().rank()), coeffs_(std::move(coeffs)) {
    normalize();
  }

  static HeckePolynomial constant(const TorusAlgebraElement& c) { return HeckePolynomial({c}); }
  static HeckePolynomial one(std::size_t rank) {
    return constant(TorusAlgebraElement::unit(rank));
  }
  /// x^m - c
  static HeckePolynomial binomial(std::size_t m, const TorusAlgebraElement& c) {
    std::vector<TorusAlgebraElement> v(m + 1, TorusAlgebraElement(c.rank()));
    v[m] = TorusAlgebraElement::unit(c.rank());
    v[0] = v[0] - c;
    return HeckePolynomial(std::move(v));
  }

  std::size_t rank() const { return rank_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<TorusAlgebraElement>& coefficients() const { return coeffs_; }
  TorusAlgebraElement coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : TorusAlgebraElement(rank_);
  }
  bool is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == TorusAlgebraElement::unit(rank_);
  }

  friend HeckePolynomial operator+(const HeckePolynomial& a, const HeckePolynomial& b) {
    const std::size_t rank = a.rank_ ? a.rank_ : b.rank_;
    std::vector<TorusAlgebraElement> v(std::max(a.coeffs_.size(), b.coeffs_.size()),
                                       TorusAlgebraElement(rank));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    HeckePolynomial r(rank);
    r.coeffs_ = std::move(v);
    r.normalize();
    return r;
  }
  friend HeckePolynomial operator-(const HeckePolynomial& a) {
    HeckePolynomial r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend HeckePolynomial operator-(const HeckePolynomial& a, const HeckePolynomial& b) {
    return a + (-b);
  }
  friend HeckePolynomial operator*(const HeckePolynomial& a, const HeckePolynomial& b) {
    const std::size_t rank = a.rank_ ? a.rank_ : b.rank_;
    HeckePolynomial r(rank);
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, TorusAlgebraElement(rank));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.normalize();
    return r;
  }
  friend bool operator==(const HeckePolynomial& a, const HeckePolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const HeckePolynomial& a, const HeckePolynomial& b) { return !(a == b); }

  /// Horner evaluation at an element of the coefficient ring.
  TorusAlgebraElement evaluate(const TorusAlgebraElement& x) const {
    TorusAlgebraElement acc(rank_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Highest degree first, e.g. "x^2 - (h(0,-1) + p*h(-1,0))*x + p*h(-1,-1)".
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
      TorusAlgebraElement c = coeffs_[k];
      if (c.is_zero()) continue;
      const bool neg = c.leads_negative();
      if (neg) c = -c;
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      const std::string xk = k == 1 ? "x" : "x^" + std::to_string(k);
      const std::string cs = c.to_string();
      if (k == 0)
        out += cs;
      else if (cs == "1")
        out += xk;
      else if (c.is_single_term() && c.terms().begin()->second.is_monomial())
        out += cs + "*" + xk;
      else
        out += "(" + cs + ")*" + xk;
    }
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : coeffs_) cs.push_back(c.to_json());
    return {{"rank", rank_}, {"coefficients", cs}};
  }
  static HeckePolynomial from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("coefficients"))
      throw std::invalid_argument("polynomial: expected an object with 'coefficients'");
    std::vector<TorusAlgebraElement> v;
    for (const auto& c : j.at("coefficients")) v.push_back(TorusAlgebraElement::from_json(c));
    HeckePolynomial r(j.value("rank", v.empty() ? std::size_t{0} : v.front().rank()));
    r.coeffs_ = std::move(v);
    r.normalize();
    return r;
  }

  std::vector<SpecializedElement> specialize(const Integer& p) const {
    std::vector<SpecializedElement> out;
    for (const auto& c : coeffs_) out.push_back(c.specialize(p));
    return out;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::size_t rank_;
  std::vector<TorusAlgebraElement> coeffs_;
};

inline HeckePolynomial poly_mul(const HeckePolynomial& a, const HeckePolynomial& b) {
  return a * b;
}

struct DivisionResult {
  bool exact = false;
  HeckePolynomial quotient;
  HeckePolynomial remainder;
  long obstructing_degree = -1;  // highest nonzero remainder degree when not exact
};

/// Long division by a monic polynomial.
inline DivisionResult poly_exact_divide(const HeckePolynomial& a, const HeckePolynomial& b) {
  if (!b.is_monic()) throw std::invalid_argument("poly_exact_divide: divisor is not monic");
  const std::size_t rank = a.rank() ? a.rank() : b.rank();
  DivisionResult res;
  const long m = b.degree();
  std::vector<TorusAlgebraElement> r = a.coefficients();
  std::vector<TorusAlgebraElement> q(a.degree() >= m ? a.degree() - m + 1 : 0,
                                     TorusAlgebraElement(rank));
  for (long k = a.degree(); k >= m; --k) {
    const TorusAlgebraElement c = r[k];
    if (c.is_zero()) continue;
    q[k - m] = c;
    for (long j = 0; j <= m; ++j) r[k - m + j] -= c * b.coefficients()[j];
  }
  res.quotient = HeckePolynomial(rank);
  if (!q.empty()) res.quotient = HeckePolynomial(std::move(q));
  r.resize(static_cast<std::size_t>(std::max<long>(0, std::min<long>(m, a.degree() + 1))),
           TorusAlgebraElement(rank));
  res.remainder = r.empty() ? HeckePolynomial(rank) : HeckePolynomial(std::move(r));
  res.exact = res.remainder.is_zero();
  res.obstructing_degree = res.exact ? -1 : res.remainder.degree();
  return res;
}

/// w . h_nu = p^{<rho, nu - w nu>} h_{w nu}, with rho given as 2rho.
inline TorusAlgebraElement dot_act(const Character& two_rho, const IntMatrix& w,
                                   const TorusAlgebraElement& e) {
  TorusAlgebraElement out(e.rank());
  for (const auto& [nu, c] : e.terms()) {
    const Cocharacter wnu = w.apply(nu);
    const std::int64_t twice = pair(two_rho, nu - wnu);
    if (twice % 2 != 0)
      throw std::domain_error("dot action exponent is not an integer at h" + nu.to_string());
    out += TorusAlgebraElement::basis(wnu, LaurentP::p_power(twice / 2) * c);
  }
  return out;
}

/// Datum form; w must commute with sigma.
inline TorusAlgebraElement dot_act(const RootDatum& d, const WeylElement& w,
                                   const TorusAlgebraElement& e) {
  if (!d.commutes_with_sigma(w.matrix))
    throw std::invalid_argument("dot_act: Weyl element does not commute with sigma");
  return dot_act(d.two_rho(), w.matrix, e);
}

inline HeckePolynomial dot_act(const Character& two_rho, const IntMatrix& w,
                               const HeckePolynomial& f) {
  std::vector<TorusAlgebraElement> v;
  for (const auto& c : f.coefficients()) v.push_back(dot_act(two_rho, w, c));
  return v.empty() ? HeckePolynomial(f.rank()) : HeckePolynomial(std::move(v));
}

/// Greedy generating set of a finite matrix group, shortest words first.
inline std::vector<WeylElement> generating_set(std::vector<WeylElement> group) {
  std::stable_sort(group.begin(), group.end(), [](const auto& a, const auto& b) {
    return a.word.size() < b.word.size();
  });
  std::vector<WeylElement> gens;
  if (group.empty()) return gens;
  const std::size_t n = group.front().matrix.rows();
  std::set<IntMatrix> closure{IntMatrix::identity(n)};
  for (const auto& g : group) {
    if (closure.count(g.matrix)) continue;
    gens.push_back(g);
    std::vector<IntMatrix> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      std::vector<IntMatrix> next;
      for (const auto& x : frontier)
        for (const auto& h : gens) {
          IntMatrix y = h.matrix * x;
          if (closure.insert(y).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
  }
  return gens;
}

struct InvarianceReport {
  bool invariant = true;
  long coefficient_degree = -1;   // which x^k failed, for polynomials
  std::vector<int> witness_word;  // failing generator, 0-based simple reflections
  std::string witness_image;      // its dot image of the failing coefficient
};

inline InvarianceReport is_dot_invariant(const Character& two_rho,
                                         const std::vector<WeylElement>& generators,
                                         const TorusAlgebraElement& e) {
  InvarianceReport r;
  for (const auto& g : generators) {
    auto img = dot_act(two_rho, g.matrix, e);
    if (img != e) {
      r.invariant = false;
      r.witness_word = g.word;
      r.witness_image = img.to_string();
      return r;
    }
  }
  return r;
}

inline InvarianceReport is_dot_invariant(const Character& two_rho,
                                         const std::vector<WeylElement>& generators,
                                         const HeckePolynomial& f) {
  for (std::size_t k = 0; k < f.coefficients().size(); ++k) {
    auto r = is_dot_invariant(two_rho, generators, f.coefficients()[k]);
    if (!r.invariant) {
      r.coefficient_degree = static_cast<long>(k);
      return r;
    }
  }
  return {};
}

/// Invariance under W^sigma of the datum, checked on generators.
template <class E>
InvarianceReport is_dot_invariant(const RootDatum& d, const E& e) {
  return is_dot_invariant(d.two_rho(), generating_set(d.sigma_fixed_weyl_group()), e);
}

/// Invariance under W_M^sigma.
template <class E>
InvarianceReport is_dot_invariant(const RootDatum& d, const LeviDatum& m, const E& e) {
  return is_dot_invariant(d.two_rho(), generating_set(d.levi_sigma_fixed_weyl_group(m)), e);
}

inline std::string word_to_string(const std::vector<int>& word) {
  if (word.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i)
    s += (i ? "*" : "") + std::string("s") + std::to_string(word[i] + 1);
  return s;
}

}  // namespace hecke
