#pragma once

#include "hecke/root_datum.hpp"
#include "hecke/torus_algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

class NotMinusculeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require_minuscule(const RootDatum& d, const Cocharacter& mu) {
  if (mu.size() != d.rank())
    throw std::invalid_argument("cocharacter has length " + std::to_string(mu.size()) +
                                ", expected rank " + std::to_string(d.rank()));
  if (!d.is_minuscule(mu))
    throw NotMinusculeError("cocharacter " + mu.to_string() + " is not minuscule");
}

/// One factor x^m - p^e h_{norm} per <sigma^n>-orbit in W mu^{-1}.
struct OrbitFactor {
  Cocharacter rep;
  std::vector<Cocharacter> members;  // sorted
  std::size_t size = 0;
  std::int64_t exponent = 0;
  Cocharacter norm;
  HeckePolynomial factor;
};

using RepresentativeChooser = std::function<Cocharacter(const std::vector<Cocharacter>&)>;

/// {sigma^{nk} nu : k >= 0}, sorted.
inline std::vector<Cocharacter> sigma_power_orbit(const RootDatum& d, const Cocharacter& nu,
                                                  int n) {
  std::set<Cocharacter> s{nu};
  Cocharacter y = d.apply_sigma(nu, n);
  while (y != nu) {
    s.insert(y);
    y = d.apply_sigma(y, n);
  }
  return {s.begin(), s.end()};
}

/// sum_{j=from}^{to} sigma^j(x)
inline Cocharacter sigma_sum(const RootDatum& d, const Cocharacter& x, long from, long to) {
  Cocharacter s(x.size());
  Cocharacter y = d.apply_sigma(x, from);
  for (long j = from; j <= to; ++j) {
    s += y;
    y = d.apply_sigma(y);
  }
  return s;
}

/// Factor for the <sigma^n>-orbit of rep: x^m - p^{n m <rho, mu - rep>} h_{sum_{j=1}^{nm} sigma^j rep}.
/// Only the W-orbit of mu matters; its dominant member is used.
inline OrbitFactor make_orbit_factor(const RootDatum& d, const Cocharacter& mu, int n,
                                     const Cocharacter& rep) {
  const Cocharacter mu_dom = dominant_rep(d, mu);
  OrbitFactor f;
  f.rep = rep;
  f.members = sigma_power_orbit(d, rep, n);
  f.size = f.members.size();
  const long nm = static_cast<long>(n) * static_cast<long>(f.size);
  const Rational e = Rational(nm) * d.pair_rho(mu_dom - rep);
  f.exponent = to_int64(e);
  f.norm = sigma_sum(d, rep, 1, nm);
  f.factor = HeckePolynomial::binomial(
      f.size, TorusAlgebraElement::basis(f.norm, LaurentP::p_power(f.exponent)));
  return f;
}

inline Cocharacter lex_greatest(const std::vector<Cocharacter>& v) {
  return *std::max_element(v.begin(), v.end());
}

inline std::vector<OrbitFactor> orbit_factors(const RootDatum& d, const Cocharacter& mu,
                                              const RepresentativeChooser& choose = {}) {
  require_minuscule(d, mu);
  const int n = reflex_degree(d, mu);
  std::set<Cocharacter> remaining;
  for (const auto& x : weyl_orbit(d, Cocharacter(-mu))) remaining.insert(x);
  std::vector<OrbitFactor> out;
  while (!remaining.empty()) {
    auto orbit = sigma_power_orbit(d, *remaining.begin(), n);
    for (const auto& x : orbit) remaining.erase(x);
    const Cocharacter rep = choose ? choose(orbit) : lex_greatest(orbit);
    if (!std::binary_search(orbit.begin(), orbit.end(), rep))
      throw std::invalid_argument("representative chooser returned a non-member");
    auto f = make_orbit_factor(d, mu, n, rep);
    if (f.exponent < 0) throw std::logic_error("negative orbit exponent at " + rep.to_string());
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const OrbitFactor& a, const OrbitFactor& b) {
    if (a.exponent != b.exponent) return a.exponent < b.exponent;
    return lex_greatest(a.members) > lex_greatest(b.members);
  });
  return out;
}

inline HeckePolynomial product(const std::vector<OrbitFactor>& factors, std::size_t rank) {
  HeckePolynomial h = HeckePolynomial::one(rank);
  for (const auto& f : factors) h = h * f.factor;
  return h;
}

inline HeckePolynomial hecke_polynomial(const RootDatum& d, const Cocharacter& mu) {
  return product(orbit_factors(d, mu), d.rank());
}

/// The polynomial viewed over the W_M^sigma-invariants; identity on the value.
struct SatakeView {
  bool ok = true;
  LeviDatum levi;
  InvarianceReport invariance;
  HeckePolynomial value;
};

inline SatakeView satake_view(const RootDatum& d, const HeckePolynomial& f, const LeviDatum& m) {
  SatakeView v;
  v.levi = m;
  v.value = f;
  v.invariance = is_dot_invariant(d, m, f);
  v.ok = v.invariance.invariant;
  return v;
}

inline SatakeView satake_view(const RootDatum& d, const TorusAlgebraElement& e,
                              const LeviDatum& m) {
  return satake_view(d, HeckePolynomial::constant(e), m);
}

struct DominantFactorReport {
  Cocharacter lambda;        // dominant rep of mu^{-1}
  Cocharacter lambda_tilde;  // sum_{j<n} sigma^j lambda
  Cocharacter full_norm;     // sum over nm terms
  std::size_t m = 1;
  int n = 1;
  std::int64_t exponent = 0;
  HeckePolynomial factor;
  bool divides = false;
  HeckePolynomial quotient;
  LeviDatum levi;
  bool levi_invariant = false;
  bool ok() const { return divides && levi_invariant; }
};

/// The factor attached to the dominant weight of mu^{-1} divides H and is
/// invariant for the Levi centralizing its norm.
inline DominantFactorReport dominant_factor_check(const RootDatum& d, const Cocharacter& mu) {
  require_minuscule(d, mu);
  DominantFactorReport r;
  r.n = reflex_degree(d, mu);
  r.lambda = dominant_rep(d, Cocharacter(-mu));
  r.lambda_tilde = sigma_sum(d, r.lambda, 0, r.n - 1);
  auto f = make_orbit_factor(d, mu, r.n, r.lambda);
  r.m = f.size;
  r.exponent = f.exponent;
  r.full_norm = f.norm;
  r.factor = f.factor;
  auto div = poly_exact_divide(hecke_polynomial(d, mu), r.factor);
  r.divides = div.exact;
  r.quotient = div.quotient;
  r.levi = levi_centralizer(d, r.full_norm);
  r.levi_invariant = is_dot_invariant(d, r.levi, r.factor).invariant;
  return r;
}

}  // namespace hecke
